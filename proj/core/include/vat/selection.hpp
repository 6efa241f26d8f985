#pragma once

#include <cstdint>
#include <span>

#include "vat/bath.hpp"
#include "vat/tunneling.hpp"

namespace vat {

/// Gumbel law of the largest of n_drawings normal deviates:
///   F(x) = exp(-exp(-(x - mu)/sigma)).
struct GumbelParams {
    double mu = 0.0;    // m, location
    double sigma = 0.0; // m, scale (> 0)
    long n_drawings = 0;

    /// Scale from the parent deviation: sigma = sigma0 / sqrt(2 ln n), with
    /// the classical normal-extremes location
    ///   mu = sigma0 * ( sqrt(2 ln n) - (ln ln n + ln 4 pi) / (2 sqrt(2 ln n)) ).
    static GumbelParams from_sigma0(double sigma0, long n_drawings);

    void validate() const;
};

double gumbel_cdf(double x, const GumbelParams& params);

/// Inverse CDF: mu - sigma * ln(-ln p), p in (0, 1).
double gumbel_quantile(double p, const GumbelParams& params);

/// Number of statistically independent extremum opportunities in a window:
/// duration / tau_c with correlation time tau_c = 2 pi / omega_D. A stated
/// convention — maxima of a band-limited trace decorrelate on the dominant
/// frequency scale.
double effective_drawings(double duration, double omega_debye);

/// Probability that two independent Gumbel maxima of scale sigma differ by
/// at least a: 1 - tanh(a / (2 sigma)).
double decision_probability(double a, double sigma);

/// Probability that the alpha channel's peak amplitude wins given
/// superposition magnitudes |alpha|, |beta|:
///   1 / (1 + |beta/alpha|^(1/(kappa sigma))).
/// Exactly 1/2 at |alpha| = |beta|; complements sum to 1 exactly.
/// Edge cases: alpha = 0 -> 0, beta = 0 -> 1.
double born_probability(double alpha_abs, double beta_abs, double kappa, double sigma);

enum class Winner { Left, Right, Ambiguous };

/// Result of one two-channel experiment. Log amplitudes are logs of the peak
/// tunnel AMPLITUDE (half the squared-norm log), so the decided threshold
/// margin >= kappa*a is the amplitude-ratio criterion e^{kappa a}.
struct SelectionOutcome {
    double log_amp_left = 0.0;
    double log_amp_right = 0.0;
    double margin = 0.0; // |left - right|
    bool decided = false;
    Winner winner = Winner::Ambiguous;
};

/// Simulate two independent heat baths, one per channel, take each channel's
/// maximal log integrand norm over [0, duration] and apply the margin test at
/// threshold kappa * margin_a. Equal log amplitudes with decided=true resolve
/// to Left (only reachable when margin_a = 0).
SelectionOutcome run_selection(std::uint64_t bath_left_seed, std::uint64_t bath_right_seed,
                               const LatticeSpec& spec, const BarrierSpec& barrier,
                               double duration, double margin_a,
                               double samples_per_cycle = 16.0);

/// Ratio of Gumbel scales at fixed sigma0 when the drawing count moves from
/// N1 to N2: sqrt(ln N1 / ln N2).
double gumbel_width_ratio(double n1, double n2);

/// Method-of-moments Gumbel fit: sigma = sqrt(6)*stddev/pi,
/// mu = mean - euler_gamma*sigma. Throws EstimationError on fewer than 30
/// samples or zero variance.
GumbelParams fit_gumbel(std::span<const double> samples);

} // namespace vat
