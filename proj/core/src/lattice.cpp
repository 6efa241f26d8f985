#include "vat/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vat {

void LatticeSpec::validate() const {
    auto fail = [](const std::string& what) { throw std::invalid_argument("LatticeSpec: " + what); };
    if (nx < 2 || ny < 2) fail("mode counts must be >= 2");
    if (!(atom_mass > 0.0)) fail("atom_mass must be positive");
    if (!(spacing > 0.0)) fail("spacing must be positive");
    if (!(sound_speed > 0.0)) fail("sound_speed must be positive");
    if (!(debye_frequency > 0.0)) fail("debye_frequency must be positive");
    if (!(temperature >= 0.0)) fail("temperature must be non-negative");
}

std::vector<Mode> build_mode_grid(const LatticeSpec& spec) {
    spec.validate();
    const int n_lo = -(spec.nx / 2);
    const int n_hi = spec.nx + n_lo; // exclusive
    const int l_lo = -(spec.ny / 2);
    const int l_hi = spec.ny + l_lo;

    std::vector<Mode> modes;
    modes.reserve(static_cast<std::size_t>(spec.nx) * spec.ny - 1);
    const double k_scale = spec.debye_frequency / spec.sound_speed;
    for (int n = n_lo; n < n_hi; ++n) {
        for (int l = l_lo; l < l_hi; ++l) {
            if (n == 0 && l == 0) continue;
            const double fx = static_cast<double>(n) / spec.nx;
            const double fy = static_cast<double>(l) / spec.ny;
            Mode mode;
            mode.n = n;
            mode.l = l;
            mode.omega = spec.debye_frequency * std::sqrt(fx * fx + fy * fy);
            mode.kx = k_scale * fx;
            mode.ky = k_scale * fy;
            modes.push_back(mode);
        }
    }
    return modes;
}

} // namespace vat
