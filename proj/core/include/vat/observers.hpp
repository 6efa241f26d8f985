#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vat/selection.hpp"

namespace vat {

enum class Channel { Left, Right };

/// n observers, each with an independent heat bath per channel. seeds holds
/// 2n entries: [0, n) drive the Left channel baths, [n, 2n) the Right ones.
struct ObserverEnsemble {
    int n_observers = 0;
    std::vector<std::uint64_t> seeds; // 2 * n_observers, all distinct
    LatticeSpec spec;
    BarrierSpec barrier;
    double duration = 0.0; // s
    double samples_per_cycle = 16.0;

    void validate() const;
};

/// Collective amplitude bookkeeping for one channel. Each observer's trace is
/// extremized over its own time variable; the minima add up in the exponent.
struct EnsembleStats {
    std::vector<double> per_observer_extrema; // m, minimal elongation per observer
    double sum_extrema = 0.0;                 // m
    double log_collective_amplitude = 0.0;    // = -2 kappa * sum_extrema
    double log_static_sum = 0.0;              // per-observer static terms, kept separate
};

/// Simulate the channel's n independent baths and take each observer's
/// minimal elongation over [0, duration]. The extrema are summed in
/// ascending value order so permuting observer seeds cannot change
/// sum_extrema even in the last bit.
EnsembleStats collective_log_amplitude(const ObserverEnsemble& ensemble, Channel channel);

struct ScalingRow {
    int n_observers = 0;
    double mean_sum_extrema = 0.0;   // m
    double stddev_sum_extrema = 0.0; // m, sample stddev over trials
};

/// Empirical scaling of summed extrema with observer count: `trials`
/// independent ensembles per n, seeds fanned out from master_seed.
std::vector<ScalingRow> sqrt_n_scaling_check(const LatticeSpec& spec, const BarrierSpec& barrier,
                                             double duration, std::span<const int> n_values,
                                             int trials, std::uint64_t master_seed,
                                             double samples_per_cycle = 16.0);

/// Two-channel selection on collective amplitudes; margin threshold scales to
/// n * kappa * margin_a (per-observer margin held fixed), so n = 1 reduces
/// exactly to run_selection. Throws std::invalid_argument on mismatched
/// observer counts.
SelectionOutcome collective_selection(const ObserverEnsemble& ensemble_left,
                                      const ObserverEnsemble& ensemble_right,
                                      double margin_a);

} // namespace vat
