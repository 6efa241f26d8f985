#include "vat/tunneling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "vat/constants.hpp"

namespace vat {

double derive_kappa(double mass_kg, double height_j) {
    if (!(mass_kg > 0.0)) throw std::invalid_argument("derive_kappa: mass must be positive");
    if (!(height_j >= 0.0)) throw std::invalid_argument("derive_kappa: V0 must be >= 0");
    return std::sqrt(2.0 * mass_kg * height_j) / constants::hbar;
}

BarrierSpec::BarrierSpec(double mass_kg, double height_j, double mean_width_m)
    : mass(mass_kg), height(height_j), mean_width(mean_width_m) {
    if (!(mean_width >= 0.0)) throw std::invalid_argument("BarrierSpec: d0 must be >= 0");
    kappa = derive_kappa(mass_kg, height_j);
}

Trace log_time_factor(const Trace& elongation, double kappa) {
    if (elongation.kind != TraceKind::Elongation)
        throw std::invalid_argument("log_time_factor: input must be an elongation trace");
    Trace out;
    out.t0 = elongation.t0;
    out.dt = elongation.dt;
    out.kind = TraceKind::LogAmplitude;
    out.values.resize(elongation.values.size());
    const double scale = -2.0 * kappa;
    std::transform(elongation.values.begin(), elongation.values.end(), out.values.begin(),
                   [scale](double phi) { return scale * phi; });
    return out;
}

double log_static_prefactor(const CoherentBath& bath, double kappa) {
    return 2.0 * kappa * kappa * thermal_inner_product(bath);
}

double log_vacuum_prefactor(const LatticeSpec& spec, double kappa) {
    return 2.0 * kappa * kappa * vacuum_variance(spec);
}

Trace log_integrand_norm(const Trace& log_time, const BarrierSpec& barrier,
                         double log_prefactor) {
    if (log_time.kind != TraceKind::LogAmplitude)
        throw std::invalid_argument("log_integrand_norm: input must be a log-amplitude trace");
    // log(|C|^2/(2 kappa)) == 0 under the unit-normalization convention.
    const double offset = -2.0 * barrier.kappa * barrier.mean_width + log_prefactor;
    Trace out = log_time;
    for (double& v : out.values) v += offset;
    return out;
}

namespace {

// t where a line through (t1, v1), (t2, v2) reaches level.
double interpolate_crossing(double t1, double v1, double t2, double v2, double level) {
    const double span = v2 - v1;
    if (span == 0.0) return t1;
    return t1 + (level - v1) / span * (t2 - t1);
}

double width_at_drop(const Trace& trace, std::size_t peak, double drop) {
    const auto& v = trace.values;
    const double level = v[peak] - drop;
    double t_left = trace.t0;
    for (std::size_t i = peak; i-- > 0;) {
        if (v[i] < level) {
            t_left = interpolate_crossing(trace.time_at(i), v[i], trace.time_at(i + 1), v[i + 1],
                                          level);
            break;
        }
    }
    double t_right = trace.time_at(v.size() - 1);
    for (std::size_t i = peak + 1; i < v.size(); ++i) {
        if (v[i] < level) {
            t_right = interpolate_crossing(trace.time_at(i - 1), v[i - 1], trace.time_at(i), v[i],
                                           level);
            break;
        }
    }
    return t_right - t_left;
}

} // namespace

std::vector<PeakRecord> detect_peaks(const Trace& log_trace, double min_separation,
                                     double kappa) {
    if (log_trace.values.empty()) return {};
    if (!(min_separation >= log_trace.dt))
        throw std::invalid_argument("detect_peaks: min_separation must be >= dt");

    const auto& v = log_trace.values;
    std::vector<std::size_t> candidates;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i] > v[i - 1] && v[i] >= v[i + 1]) candidates.push_back(i);
    }
    // greedy, tallest first; ties resolve to the earlier sample
    std::sort(candidates.begin(), candidates.end(), [&v](std::size_t a, std::size_t b) {
        if (v[a] != v[b]) return v[a] > v[b];
        return a < b;
    });

    std::vector<PeakRecord> peaks;
    std::vector<double> accepted_times;
    for (const std::size_t i : candidates) {
        const double t = log_trace.time_at(i);
        const bool clear = std::none_of(accepted_times.begin(), accepted_times.end(),
                                        [&](double ta) { return std::abs(t - ta) < min_separation; });
        if (!clear) continue;
        accepted_times.push_back(t);
        PeakRecord peak;
        peak.t_peak = t;
        peak.log_amplitude = v[i];
        peak.phi_min = kappa > 0.0 ? -v[i] / (2.0 * kappa) : 0.0;
        peak.width_estimate = width_at_drop(log_trace, i, 1.0);
        peaks.push_back(peak);
    }
    return peaks;
}

std::vector<ContactEvent> contact_events(const Trace& elongation, double d0) {
    if (elongation.kind != TraceKind::Elongation)
        throw std::invalid_argument("contact_events: input must be an elongation trace");

    const auto& v = elongation.values;
    const double level = -d0; // width d0 + phi < 0  <=>  phi < -d0
    std::vector<ContactEvent> events;
    bool inside = false;
    double t_start = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const bool below = v[i] < level;
        if (below && !inside) {
            inside = true;
            t_start = (i == 0) ? elongation.t0
                               : interpolate_crossing(elongation.time_at(i - 1), v[i - 1],
                                                      elongation.time_at(i), v[i], level);
        } else if (!below && inside) {
            inside = false;
            const double t_end = interpolate_crossing(elongation.time_at(i - 1), v[i - 1],
                                                      elongation.time_at(i), v[i], level);
            events.push_back({t_start, t_end, t_end - t_start});
        }
    }
    if (inside) {
        const double t_end = elongation.time_at(v.size() - 1);
        if (t_end > t_start) events.push_back({t_start, t_end, t_end - t_start});
    }
    return events;
}

double contact_integral_estimate(double v0_j, double omega_debye) {
    if (!(v0_j >= 0.0)) throw std::invalid_argument("contact_integral_estimate: V0 must be >= 0");
    if (!(omega_debye > 0.0))
        throw std::invalid_argument("contact_integral_estimate: omega_D must be positive");
    return v0_j / (constants::hbar * omega_debye);
}

} // namespace vat
