#include "vat/observers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "vat/parallel.hpp"
#include "vat/rng.hpp"
#include "vat/stats.hpp"

namespace vat {

void ObserverEnsemble::validate() const {
    if (n_observers < 1)
        throw std::invalid_argument("ObserverEnsemble: n_observers must be >= 1");
    if (seeds.size() != static_cast<std::size_t>(2 * n_observers))
        throw std::invalid_argument("ObserverEnsemble: need exactly 2*n_observers seeds");
    if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size())
        throw std::invalid_argument("ObserverEnsemble: seeds must be distinct");
    if (!(duration > 0.0)) throw std::invalid_argument("ObserverEnsemble: duration must be positive");
    spec.validate();
}

namespace {

double minimal_elongation(const LatticeSpec& spec, std::uint64_t seed, double duration,
                          double samples_per_cycle) {
    const CoherentBath bath = sample_bath(spec, seed);
    const double dt = 2.0 * std::numbers::pi / (spec.debye_frequency * samples_per_cycle);
    const auto steps = static_cast<std::size_t>(std::max(1.0, std::floor(duration / dt)));
    const Trace trace = elongation_trace(bath, 0.0, dt, steps);
    return *std::min_element(trace.values.begin(), trace.values.end());
}

// Order-independent sum: permuting observers permutes the extrema list but
// must leave sum_extrema bit-identical.
double sorted_sum(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    for (const double v : values) sum += v;
    return sum;
}

} // namespace

EnsembleStats collective_log_amplitude(const ObserverEnsemble& ensemble, Channel channel) {
    ensemble.validate();
    const std::size_t n = static_cast<std::size_t>(ensemble.n_observers);
    const std::size_t offset = channel == Channel::Left ? 0 : n;

    EnsembleStats stats;
    stats.per_observer_extrema.assign(n, 0.0);
    parallel_for(n, [&](std::size_t j) {
        stats.per_observer_extrema[j] =
            minimal_elongation(ensemble.spec, ensemble.seeds[offset + j], ensemble.duration,
                               ensemble.samples_per_cycle);
    });

    stats.sum_extrema = sorted_sum(stats.per_observer_extrema);
    stats.log_collective_amplitude = -2.0 * ensemble.barrier.kappa * stats.sum_extrema;
    stats.log_static_sum =
        static_cast<double>(n) *
        (-2.0 * ensemble.barrier.kappa * ensemble.barrier.mean_width +
         log_vacuum_prefactor(ensemble.spec, ensemble.barrier.kappa));
    return stats;
}

std::vector<ScalingRow> sqrt_n_scaling_check(const LatticeSpec& spec, const BarrierSpec& barrier,
                                             double duration, std::span<const int> n_values,
                                             int trials, std::uint64_t master_seed,
                                             double samples_per_cycle) {
    if (trials < 2) throw std::invalid_argument("sqrt_n_scaling_check: trials must be >= 2");
    (void)barrier; // extrema are in elongation units; kappa cancels in the ratios

    std::vector<ScalingRow> rows;
    rows.reserve(n_values.size());
    for (const int n : n_values) {
        if (n < 1) throw std::invalid_argument("sqrt_n_scaling_check: n_observers must be >= 1");
        std::vector<double> sums(static_cast<std::size_t>(trials), 0.0);
        parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
            std::vector<double> extrema(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) {
                const std::uint64_t seed =
                    fan_out_seed(master_seed, "sqrtn", trial, static_cast<std::uint64_t>(n),
                                 static_cast<std::uint64_t>(j));
                extrema[static_cast<std::size_t>(j)] =
                    minimal_elongation(spec, seed, duration, samples_per_cycle);
            }
            sums[trial] = sorted_sum(std::move(extrema));
        });
        const MeanStddev ms = mean_stddev(sums);
        rows.push_back({n, ms.mean, ms.stddev});
    }
    return rows;
}

SelectionOutcome collective_selection(const ObserverEnsemble& ensemble_left,
                                      const ObserverEnsemble& ensemble_right, double margin_a) {
    if (ensemble_left.n_observers != ensemble_right.n_observers)
        throw std::invalid_argument("collective_selection: observer counts must match");
    if (!(margin_a >= 0.0))
        throw std::invalid_argument("collective_selection: margin must be >= 0");

    const EnsembleStats left = collective_log_amplitude(ensemble_left, Channel::Left);
    const EnsembleStats right = collective_log_amplitude(ensemble_right, Channel::Right);

    SelectionOutcome outcome;
    outcome.log_amp_left = 0.5 * (left.log_static_sum + left.log_collective_amplitude);
    outcome.log_amp_right = 0.5 * (right.log_static_sum + right.log_collective_amplitude);
    outcome.margin = std::abs(outcome.log_amp_left - outcome.log_amp_right);
    const double threshold =
        static_cast<double>(ensemble_left.n_observers) * ensemble_left.barrier.kappa * margin_a;
    outcome.decided = outcome.margin >= threshold;
    if (!outcome.decided) {
        outcome.winner = Winner::Ambiguous;
    } else {
        outcome.winner =
            outcome.log_amp_left >= outcome.log_amp_right ? Winner::Left : Winner::Right;
    }
    return outcome;
}

} // namespace vat
