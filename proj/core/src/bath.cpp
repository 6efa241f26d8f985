#include "vat/bath.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vat/constants.hpp"
#include "vat/rng.hpp"

namespace vat {

CoherentBath sample_coherent_amplitudes(const LatticeSpec& spec, std::vector<Mode> modes,
                                        double temperature, std::uint64_t seed,
                                        std::array<int, 2> trigger_site) {
    spec.validate();
    if (!(temperature >= 0.0))
        throw std::invalid_argument("sample_coherent_amplitudes: temperature must be >= 0");

    CoherentBath bath;
    bath.spec = spec;
    bath.trigger_site = trigger_site;
    bath.modes = std::move(modes);

    const std::size_t count = bath.modes.size();
    bath.amplitude.resize(count);
    bath.phase.resize(count);
    bath.omega.resize(count);

    GaussianSampler gauss(seed);
    const double kt = constants::k_boltzmann * temperature;
    const double site_x = static_cast<double>(trigger_site[0]) * spec.spacing;
    const double site_y = static_cast<double>(trigger_site[1]) * spec.spacing;
    const double elongation_scale = 2.0 * constants::hbar / (spec.atom_mass * spec.mode_sites());

    for (std::size_t j = 0; j < count; ++j) {
        Mode& mode = bath.modes[j];
        // E[|f|^2] = kB T / (hbar omega); real and imaginary parts each
        // N(0, kB T / (2 hbar omega)). Two deviates per mode, in grid order.
        const double z_re = gauss.next();
        const double z_im = gauss.next();
        const double sigma_f =
            temperature > 0.0 ? std::sqrt(kt / (2.0 * constants::hbar * mode.omega)) : 0.0;
        mode.f = {sigma_f * z_re, sigma_f * z_im};

        // fold f e^{-i k.s0} and the Eq-type weight sqrt(2 hbar/(m N L omega))
        // into (A_j, phi_j); the cosine regrouping is exact.
        const double ks = mode.kx * site_x + mode.ky * site_y;
        const std::complex<double> g = mode.f * std::complex<double>(std::cos(ks), -std::sin(ks));
        bath.amplitude[j] = std::sqrt(elongation_scale / mode.omega) * std::abs(g);
        bath.phase[j] = (g == std::complex<double>{0.0, 0.0}) ? 0.0 : std::arg(g);
        bath.omega[j] = mode.omega;
    }
    return bath;
}

CoherentBath sample_bath(const LatticeSpec& spec, std::uint64_t seed,
                         std::array<int, 2> trigger_site) {
    return sample_coherent_amplitudes(spec, build_mode_grid(spec), spec.temperature, seed,
                                      trigger_site);
}

Trace elongation_trace(const CoherentBath& bath, double t0, double dt, std::size_t steps) {
    if (steps < 1) throw std::invalid_argument("elongation_trace: steps must be >= 1");
    if (!(dt > 0.0)) throw std::invalid_argument("elongation_trace: dt must be positive");

    Trace trace;
    trace.t0 = t0;
    trace.dt = dt;
    trace.kind = TraceKind::Elongation;
    trace.values.assign(steps, 0.0);

    const std::size_t count = bath.amplitude.size();
    if (count == 0) return trace;

    // Per-mode phasor rotation: z_j <- z_j e^{i omega_j dt}, sample = sum Re z_j.
    // Exact trig resync at every block start caps the rotation drift.
    constexpr std::size_t kBlock = 512;
    std::vector<double> re(count), im(count), rot_c(count), rot_s(count);
    for (std::size_t j = 0; j < count; ++j) {
        rot_c[j] = std::cos(bath.omega[j] * dt);
        rot_s[j] = std::sin(bath.omega[j] * dt);
    }

    double* out = trace.values.data();
    for (std::size_t block = 0; block < steps; block += kBlock) {
        const std::size_t block_end = std::min(steps, block + kBlock);
        const double t_block = t0 + dt * static_cast<double>(block);
        for (std::size_t j = 0; j < count; ++j) {
            const double theta = bath.omega[j] * t_block + bath.phase[j];
            re[j] = bath.amplitude[j] * std::cos(theta);
            im[j] = bath.amplitude[j] * std::sin(theta);
        }
        double* re_p = re.data();
        double* im_p = im.data();
        const double* rc = rot_c.data();
        const double* rs = rot_s.data();
        for (std::size_t i = block; i < block_end; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < count; ++j) {
                const double c = re_p[j];
                const double s = im_p[j];
                acc += c;
                re_p[j] = c * rc[j] - s * rs[j];
                im_p[j] = c * rs[j] + s * rc[j];
            }
            out[i] = acc;
        }
    }
    return trace;
}

double analytic_sigma0(const LatticeSpec& spec) {
    spec.validate();
    const double kt = constants::k_boltzmann * spec.temperature;
    if (kt == 0.0) return 0.0;
    double sum = 0.0;
    for (const Mode& mode : build_mode_grid(spec)) sum += 1.0 / (mode.omega * mode.omega);
    return std::sqrt(kt / (spec.atom_mass * spec.mode_sites()) * sum);
}

double vacuum_variance(const LatticeSpec& spec) {
    spec.validate();
    double sum = 0.0;
    for (const Mode& mode : build_mode_grid(spec)) sum += 1.0 / mode.omega;
    return constants::hbar / (2.0 * spec.atom_mass * spec.mode_sites()) * sum;
}

double thermal_inner_product(const CoherentBath& bath) {
    double sum = 0.0;
    for (const Mode& mode : bath.modes) sum += std::norm(mode.f) / mode.omega;
    return constants::hbar / (2.0 * bath.spec.atom_mass * bath.spec.mode_sites()) * sum;
}

} // namespace vat
