#include "vat/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vat/constants.hpp"
#include "vat/errors.hpp"
#include "vat/stats.hpp"

namespace vat {

void GumbelParams::validate() const {
    if (!(sigma > 0.0)) throw std::invalid_argument("GumbelParams: sigma must be positive");
    if (n_drawings < 2) throw std::invalid_argument("GumbelParams: n_drawings must be >= 2");
}

GumbelParams GumbelParams::from_sigma0(double sigma0, long n_drawings) {
    if (!(sigma0 > 0.0)) throw std::invalid_argument("GumbelParams: sigma0 must be positive");
    if (n_drawings < 2) throw std::invalid_argument("GumbelParams: n_drawings must be >= 2");
    const double n = static_cast<double>(n_drawings);
    const double root = std::sqrt(2.0 * std::log(n));
    GumbelParams params;
    params.sigma = sigma0 / root;
    params.mu = sigma0 * (root - (std::log(std::log(n)) + std::log(4.0 * std::numbers::pi)) /
                                     (2.0 * root));
    params.n_drawings = n_drawings;
    return params;
}

double gumbel_cdf(double x, const GumbelParams& params) {
    params.validate();
    return std::exp(-std::exp(-(x - params.mu) / params.sigma));
}

double gumbel_quantile(double p, const GumbelParams& params) {
    params.validate();
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("gumbel_quantile: p must be in (0,1)");
    return params.mu - params.sigma * std::log(-std::log(p));
}

double effective_drawings(double duration, double omega_debye) {
    if (!(duration > 0.0) || !(omega_debye > 0.0))
        throw std::invalid_argument("effective_drawings: inputs must be positive");
    return duration * omega_debye / (2.0 * std::numbers::pi);
}

double decision_probability(double a, double sigma) {
    if (!(a >= 0.0)) throw std::invalid_argument("decision_probability: a must be >= 0");
    if (!(sigma > 0.0)) throw std::invalid_argument("decision_probability: sigma must be positive");
    return 1.0 - std::tanh(a / (2.0 * sigma));
}

double born_probability(double alpha_abs, double beta_abs, double kappa, double sigma) {
    if (!(alpha_abs >= 0.0) || !(beta_abs >= 0.0))
        throw std::invalid_argument("born_probability: magnitudes must be >= 0");
    if (alpha_abs == 0.0 && beta_abs == 0.0)
        throw std::invalid_argument("born_probability: both magnitudes are zero");
    if (alpha_abs == 0.0) return 0.0;
    if (beta_abs == 0.0) return 1.0;
    if (!(kappa * sigma > 0.0))
        throw std::invalid_argument("born_probability: kappa*sigma must be positive");

    // 1/(1 + r^(1/(kappa sigma))) via the log ratio; the branch keeps
    // p(alpha,beta) + p(beta,alpha) == 1 exact in floating point.
    const double log_ratio = (std::log(beta_abs) - std::log(alpha_abs)) / (kappa * sigma);
    if (log_ratio <= 0.0) return 1.0 / (1.0 + std::exp(log_ratio));
    return 1.0 - 1.0 / (1.0 + std::exp(-log_ratio));
}

double gumbel_width_ratio(double n1, double n2) {
    if (!(n1 >= 2.0) || !(n2 >= 2.0))
        throw std::invalid_argument("gumbel_width_ratio: drawing counts must be >= 2");
    return std::sqrt(std::log(n1) / std::log(n2));
}

GumbelParams fit_gumbel(std::span<const double> samples) {
    if (samples.size() < 30)
        throw EstimationError("fit_gumbel: need at least 30 samples, got " +
                              std::to_string(samples.size()));
    const MeanStddev ms = mean_stddev(samples);
    if (!(ms.stddev > 0.0)) throw EstimationError("fit_gumbel: zero sample variance");
    GumbelParams params;
    params.sigma = std::sqrt(6.0) * ms.stddev / std::numbers::pi;
    params.mu = ms.mean - constants::euler_gamma * params.sigma;
    params.n_drawings = static_cast<long>(samples.size());
    return params;
}

namespace {

// Peak log AMPLITUDE of one channel: half the maximal squared-norm log.
double channel_log_amplitude(std::uint64_t seed, const LatticeSpec& spec,
                             const BarrierSpec& barrier, double duration,
                             double samples_per_cycle) {
    const CoherentBath bath = sample_bath(spec, seed);
    const double dt = 2.0 * std::numbers::pi / (spec.debye_frequency * samples_per_cycle);
    const auto steps = static_cast<std::size_t>(std::max(1.0, std::floor(duration / dt)));
    const Trace trace = elongation_trace(bath, 0.0, dt, steps);
    const Trace log_time = log_time_factor(trace, barrier.kappa);
    const Trace log_norm =
        log_integrand_norm(log_time, barrier, log_vacuum_prefactor(spec, barrier.kappa));
    const double peak = *std::max_element(log_norm.values.begin(), log_norm.values.end());
    return 0.5 * peak;
}

} // namespace

SelectionOutcome run_selection(std::uint64_t bath_left_seed, std::uint64_t bath_right_seed,
                               const LatticeSpec& spec, const BarrierSpec& barrier,
                               double duration, double margin_a, double samples_per_cycle) {
    if (!(duration > 0.0)) throw std::invalid_argument("run_selection: duration must be positive");
    if (!(margin_a >= 0.0)) throw std::invalid_argument("run_selection: margin must be >= 0");

    SelectionOutcome outcome;
    outcome.log_amp_left =
        channel_log_amplitude(bath_left_seed, spec, barrier, duration, samples_per_cycle);
    outcome.log_amp_right =
        channel_log_amplitude(bath_right_seed, spec, barrier, duration, samples_per_cycle);
    outcome.margin = std::abs(outcome.log_amp_left - outcome.log_amp_right);
    outcome.decided = outcome.margin >= barrier.kappa * margin_a;
    if (!outcome.decided) {
        outcome.winner = Winner::Ambiguous;
    } else {
        outcome.winner =
            outcome.log_amp_left >= outcome.log_amp_right ? Winner::Left : Winner::Right;
    }
    return outcome;
}

} // namespace vat
