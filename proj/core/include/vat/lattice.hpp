#pragma once

#include <complex>
#include <vector>

namespace vat {

/// Geometry, material and thermal parameters of the 2-D phonon membrane.
/// All quantities SI.
struct LatticeSpec {
    int nx = 0;                   // mode count along x (N)
    int ny = 0;                   // mode count along y (L)
    double atom_mass = 0.0;       // kg, per-site mass m
    double spacing = 0.0;         // m, lattice constant
    double sound_speed = 0.0;     // m/s, c_S
    double debye_frequency = 0.0; // rad/s, omega_D
    double temperature = 0.0;     // K

    int mode_sites() const { return nx * ny; }

    /// Throws std::invalid_argument on nx/ny < 2, non-positive physical
    /// quantities or negative temperature. omega_D, c_S and the spacing are
    /// independent inputs; no cross-constraint is enforced.
    void validate() const;
};

/// One lattice mode. Linear dispersion on the discrete Brillouin zone:
///   omega = omega_D * sqrt((n/N)^2 + (l/L)^2)
///   kx    = (omega_D / c_S) * n / N,   ky analogous
struct Mode {
    int n = 0;
    int l = 0;
    double omega = 0.0; // rad/s
    double kx = 0.0;    // 1/m
    double ky = 0.0;    // 1/m
    std::complex<double> f; // coherent amplitude, dimensionless
};

/// All modes with n in [-N/2, N/2) and l in [-L/2, L/2) except the rigid
/// translation (0,0), whose omega^(-1/2) weight is singular and carries no
/// thermal weight. Exactly N*L - 1 modes, coherent amplitudes zeroed.
/// Iteration order (n outer, l inner, ascending) is part of the
/// determinism contract: samplers consume randomness in this order.
std::vector<Mode> build_mode_grid(const LatticeSpec& spec);

} // namespace vat
