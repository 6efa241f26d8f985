#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "vat/lattice.hpp"
#include "vat/trace.hpp"

namespace vat {

/// One sampled microstate of the heat bath: the coherent amplitudes f_nl
/// plus their exact regrouping at the trigger site,
///
///   Phibar0(t) = sqrt(2 hbar / (m N L)) * sum_nl omega^(-1/2)
///                * Re( f_nl e^{-i k.s0} e^{i omega t} )
///              = sum_j A_j cos(omega_j t + phi_j)
///
/// with every weight folded into A_j (meters). The struct-of-arrays layout
/// of the reduced form is what the trace synthesizer iterates over.
struct CoherentBath {
    LatticeSpec spec;
    std::array<int, 2> trigger_site{0, 0}; // lattice coordinates of s0
    std::vector<Mode> modes;               // with sampled f

    // reduced per-mode representation at the trigger site
    std::vector<double> amplitude; // A_j, m (>= 0)
    std::vector<double> phase;     // phi_j, rad
    std::vector<double> omega;     // omega_j, rad/s
};

/// Draw every f_nl as a circularly symmetric complex Gaussian with
/// E[|f_nl|^2] = kB*T / (hbar*omega_nl), matching the Boltzmann weight
/// exp(-hbar*omega/(kB*T) |f|^2). Deterministic in (modes order, seed):
/// one Box-Muller pair per mode. temperature = 0 zeroes every amplitude.
CoherentBath sample_coherent_amplitudes(const LatticeSpec& spec, std::vector<Mode> modes,
                                        double temperature, std::uint64_t seed,
                                        std::array<int, 2> trigger_site = {0, 0});

/// build_mode_grid + sample_coherent_amplitudes at spec.temperature.
CoherentBath sample_bath(const LatticeSpec& spec, std::uint64_t seed,
                         std::array<int, 2> trigger_site = {0, 0});

/// Synthesize Phibar0 on a uniform grid: values[i] = sum_j A_j cos(omega_j (t0 + i dt) + phi_j).
/// Inner loop runs per-mode phasor rotations with an exact trigonometric
/// resync every 512 samples, bounding drift to ~1e-13 relative.
Trace elongation_trace(const CoherentBath& bath, double t0, double dt, std::size_t steps);

/// Closed-form stationary deviation of Phibar0 under the thermal sampling law:
///   sigma0 = sqrt( sum_modes kB*T / (m N L omega^2) ).
double analytic_sigma0(const LatticeSpec& spec);

/// Vacuum fluctuation of the trigger-site elongation operator:
///   sum_modes hbar / (2 m N L omega)   [m^2].
/// This is the exact, f-independent first factor of the coherent-state
/// tunnel matrix element (see tunneling.hpp).
double vacuum_variance(const LatticeSpec& spec);

/// Thermal inner product sum_modes hbar |f_nl|^2 / (2 m N L omega) [m^2]:
/// the |f|^2-weighted counterpart of vacuum_variance, expectation sigma0^2/2.
double thermal_inner_product(const CoherentBath& bath);

} // namespace vat
