#include "vat/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "vat/bath.hpp"
#include "vat/constants.hpp"
#include "vat/csv.hpp"
#include "vat/errors.hpp"
#include "vat/observers.hpp"
#include "vat/parallel.hpp"
#include "vat/rng.hpp"
#include "vat/selection.hpp"
#include "vat/stats.hpp"
#include "vat/tunneling.hpp"

namespace vat {

namespace {

// ---------------------------------------------------------------------------
// summary plumbing

class Summary {
public:
    void line(const std::string& name, double value, const std::string& formula) {
        out_ << name << " = " << csv_double(value) << "  [" << formula << "]\n";
    }

    void line(const std::string& name, const std::string& value, const std::string& formula) {
        out_ << name << " = " << value << "  [" << formula << "]\n";
    }

    void text(const std::string& raw) { out_ << raw << '\n'; }

    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

void common_scalars(Summary& summary, const RunConfig& config) {
    const LatticeSpec spec = config.lattice_spec();
    const BarrierSpec barrier = config.barrier_spec();
    const double sigma0 = analytic_sigma0(spec);
    const double duration = config.effective_duration();
    const double n_eff = effective_drawings(duration, spec.debye_frequency);

    summary.line("kappa_per_m", barrier.kappa, "sqrt(2*M*V0)/hbar");
    summary.line("sigma0_m", sigma0, "sqrt(sum_modes kB*T/(m*N*L*omega^2))");
    summary.line("duration_s", duration, "run window");
    summary.line("n_eff", n_eff, "duration*omega_D/(2*pi)");
    if (sigma0 > 0.0 && n_eff >= 2.0) {
        const auto gumbel = GumbelParams::from_sigma0(sigma0, static_cast<long>(n_eff));
        summary.line("gumbel_sigma_m", gumbel.sigma, "sigma0/sqrt(2*ln(N_eff))");
        summary.line("gumbel_mu_m", gumbel.mu,
                     "sigma0*(sqrt(2*ln N) - (ln ln N + ln 4*pi)/(2*sqrt(2*ln N)))");
    }
    summary.line("log_vacuum_prefactor", log_vacuum_prefactor(spec, barrier.kappa),
                 "2*kappa^2*sum_modes hbar/(2*m*N*L*omega)");
    summary.line("contact_integral", contact_integral_estimate(barrier.height, spec.debye_frequency),
                 "V0/(hbar*omega_D)");
}

struct Outputs {
    std::filesystem::path dir;
    std::vector<std::filesystem::path> created;

    std::filesystem::path file(const std::string& name) {
        std::filesystem::path p = dir / name;
        created.push_back(p);
        return p;
    }

    void discard_all() {
        for (const auto& p : created) {
            std::error_code ec;
            std::filesystem::remove(p, ec);
        }
    }
};

std::string winner_name(Winner w) {
    switch (w) {
        case Winner::Left: return "left";
        case Winner::Right: return "right";
        case Winner::Ambiguous: return "ambiguous";
    }
    return "ambiguous";
}

// ---------------------------------------------------------------------------
// experiments

void run_trace(const RunConfig& config, Outputs& out, Summary& summary, bool with_amplitude) {
    const LatticeSpec spec = config.lattice_spec();
    const BarrierSpec barrier = config.barrier_spec();
    const char* tag = with_amplitude ? "amplitude" : "trace";
    const CoherentBath bath =
        sample_bath(spec, fan_out_seed(config.master_seed, tag),
                    {config.trigger_x, config.trigger_y});

    const double dt = config.dt();
    const auto steps =
        static_cast<std::size_t>(std::max(1.0, std::floor(config.effective_duration() / dt)));
    const Trace trace = elongation_trace(bath, 0.0, dt, steps);

    if (!with_amplitude) {
        CsvWriter csv(out.file("trace.csv"), {"t", "elongation"}, {"s", "m"});
        for (std::size_t i = 0; i < trace.size(); ++i)
            csv.write_row({csv_double(trace.time_at(i)), csv_double(trace.values[i])});
    } else {
        const Trace log_norm = log_integrand_norm(
            log_time_factor(trace, barrier.kappa), barrier,
            log_vacuum_prefactor(spec, barrier.kappa));
        CsvWriter csv(out.file("amplitude-trace.csv"), {"t", "elongation", "log_integrand_norm"},
                      {"s", "m", "1"});
        for (std::size_t i = 0; i < trace.size(); ++i)
            csv.write_row({csv_double(trace.time_at(i)), csv_double(trace.values[i]),
                           csv_double(log_norm.values[i])});

        const auto peaks = detect_peaks(log_norm, 2.0 * std::numbers::pi / spec.debye_frequency,
                                        barrier.kappa);
        summary.line("n_peaks", static_cast<double>(peaks.size()),
                     "local maxima, exclusion radius 2*pi/omega_D");
        if (!peaks.empty()) {
            summary.line("peak_log_amplitude", peaks.front().log_amplitude,
                         "max_t log ||integrand||^2");
            summary.line("peak_time_s", peaks.front().t_peak, "argmax_t log ||integrand||^2");
            summary.line("peak_phi_min_m", peaks.front().phi_min, "-log_amplitude/(2*kappa)");
            summary.line("peak_width_s", peaks.front().width_estimate,
                         "full width at log-height - 1");
        }
        const double median = [&] {
            std::vector<double> sorted(log_norm.values);
            std::sort(sorted.begin(), sorted.end());
            return sorted[sorted.size() / 2];
        }();
        const double peak_value = *std::max_element(log_norm.values.begin(), log_norm.values.end());
        summary.line("log_spike_span", peak_value - median, "max - median of log ||integrand||^2");

        const auto contacts = contact_events(trace, barrier.mean_width);
        summary.line("n_contact_events", static_cast<double>(contacts.size()),
                     "intervals with d0 + elongation < 0");
        if (!contacts.empty()) {
            double mean_tau = 0.0;
            for (const auto& ev : contacts) mean_tau += ev.tau;
            mean_tau /= static_cast<double>(contacts.size());
            summary.line("mean_contact_tau_s", mean_tau, "mean event duration");
        }
    }
    summary.line("trace_samples", static_cast<double>(trace.size()), "duration/dt");
    summary.line("trace_dt_s", dt, "2*pi/(omega_D*samples_per_cycle)");
}

void run_selection_experiment(const RunConfig& config, Outputs& out, Summary& summary) {
    const LatticeSpec spec = config.lattice_spec();
    const BarrierSpec barrier = config.barrier_spec();
    const double duration = config.effective_duration();
    const double margin_a = config.margin_angstrom * constants::angstrom;
    const auto trials = static_cast<std::size_t>(config.trials);

    std::vector<SelectionOutcome> outcomes(trials);
    parallel_for(trials, [&](std::size_t trial) {
        const std::uint64_t left = fan_out_seed(config.master_seed, "selection", trial, 0);
        const std::uint64_t right = fan_out_seed(config.master_seed, "selection", trial, 1);
        outcomes[trial] = run_selection(left, right, spec, barrier, duration, margin_a,
                                        config.samples_per_cycle);
    });

    CsvWriter csv(out.file("selection.csv"),
                  {"trial", "log_amp_left", "log_amp_right", "margin", "decided", "winner"},
                  {"1", "1", "1", "1", "bool", "enum"});
    std::size_t decided = 0;
    std::size_t left_wins = 0;
    std::size_t right_wins = 0;
    std::vector<double> channel_maxima;
    channel_maxima.reserve(2 * trials);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const SelectionOutcome& o = outcomes[trial];
        csv.write_row({std::to_string(trial), csv_double(o.log_amp_left),
                       csv_double(o.log_amp_right), csv_double(o.margin),
                       o.decided ? "1" : "0", winner_name(o.winner)});
        decided += o.decided ? 1 : 0;
        left_wins += o.winner == Winner::Left ? 1 : 0;
        right_wins += o.winner == Winner::Right ? 1 : 0;
        // per-channel peak positions in elongation units; shift-invariant fit
        channel_maxima.push_back(o.log_amp_left / barrier.kappa);
        channel_maxima.push_back(o.log_amp_right / barrier.kappa);
    }

    const double decided_fraction = static_cast<double>(decided) / static_cast<double>(trials);
    summary.line("trials", static_cast<double>(trials), "experiment pairs");
    summary.line("margin_a_m", margin_a, "decided <=> margin >= kappa*a");
    summary.line("decided_fraction", decided_fraction, "count(margin >= kappa*a)/trials");
    summary.line("left_win_fraction",
                 decided ? static_cast<double>(left_wins) / static_cast<double>(decided) : 0.0,
                 "left wins / decided");
    summary.line("right_win_fraction",
                 decided ? static_cast<double>(right_wins) / static_cast<double>(decided) : 0.0,
                 "right wins / decided");
    try {
        const GumbelParams emp = fit_gumbel(channel_maxima);
        summary.line("sigma_emp_m", emp.sigma, "sqrt(6)*stddev/pi over channel maxima");
        summary.line("predicted_decided_fraction", decision_probability(margin_a, emp.sigma),
                     "1-tanh(a/(2*sigma_emp))");
    } catch (const EstimationError&) {
        summary.text("sigma_emp_m = n/a  [fit needs >= 30 samples with spread]");
    }
}

void run_born_mc(const RunConfig& config, Outputs& out, Summary& summary) {
    CsvWriter csv(out.file("born-mc.csv"),
                  {"kappa_sigma", "ratio_beta_alpha", "p_formula", "p_monte_carlo", "n_pairs"},
                  {"1", "1", "1", "1", "1"});
    const auto pairs = static_cast<std::size_t>(config.trials);
    double worst = 0.0;
    std::size_t cell = 0;
    for (const double kappa_sigma : config.born_kappa_sigma) {
        for (const double ratio : config.born_ratio) {
            // alpha-channel win <=> G1 - G2 > ln(ratio)/(kappa*sigma),
            // G1, G2 standard Gumbel
            Xoshiro256PlusPlus rng(fan_out_seed(config.master_seed, "born", cell++));
            const double threshold = std::log(ratio) / kappa_sigma;
            std::size_t wins = 0;
            for (std::size_t i = 0; i < pairs; ++i) {
                const double g1 = -std::log(-std::log(1.0 - rng.uniform01()));
                const double g2 = -std::log(-std::log(1.0 - rng.uniform01()));
                if (g1 - g2 > threshold) ++wins;
            }
            const double mc = static_cast<double>(wins) / static_cast<double>(pairs);
            const double formula = born_probability(1.0, ratio, kappa_sigma, 1.0);
            worst = std::max(worst, std::abs(mc - formula));
            csv.write_row({csv_double(kappa_sigma), csv_double(ratio), csv_double(formula),
                           csv_double(mc), std::to_string(pairs)});
        }
    }
    summary.line("born_pairs_per_cell", static_cast<double>(pairs), "Monte Carlo sample size");
    summary.line("born_max_abs_error", worst, "max |MC - 1/(1+ratio^(1/(kappa*sigma)))|");
}

void run_ensemble(const RunConfig& config, Outputs& out, Summary& summary) {
    const LatticeSpec spec = config.lattice_spec();
    const BarrierSpec barrier = config.barrier_spec();
    const auto rows = sqrt_n_scaling_check(spec, barrier, config.effective_duration(),
                                           config.observer_counts,
                                           static_cast<int>(config.trials), config.master_seed,
                                           config.samples_per_cycle);

    CsvWriter csv(out.file("ensemble.csv"),
                  {"n_observers", "mean_sum_extrema", "stddev_sum_extrema", "stddev_ratio_vs_n1",
                   "sqrt_n"},
                  {"1", "m", "m", "1", "1"});
    const double base = rows.empty() ? 0.0 : rows.front().stddev_sum_extrema;
    for (const auto& row : rows) {
        const double ratio = base > 0.0 ? row.stddev_sum_extrema / base : 0.0;
        csv.write_row({std::to_string(row.n_observers), csv_double(row.mean_sum_extrema),
                       csv_double(row.stddev_sum_extrema), csv_double(ratio),
                       csv_double(std::sqrt(static_cast<double>(row.n_observers)))});
        summary.line("stddev_ratio_n" + std::to_string(row.n_observers), ratio,
                     "stddev(sum extrema, n)/stddev(n=1); expected sqrt(n)");
    }
    summary.line("trials_per_n", static_cast<double>(config.trials), "ensembles per observer count");
}

void run_gumbel_fit(const RunConfig& config, Outputs& out, Summary& summary) {
    const LatticeSpec spec = config.lattice_spec();
    const double duration = config.effective_duration();
    const double dt = config.dt();
    const auto steps = static_cast<std::size_t>(std::max(1.0, std::floor(duration / dt)));
    const auto trials = static_cast<std::size_t>(config.trials);

    std::vector<double> maxima(trials);
    parallel_for(trials, [&](std::size_t trial) {
        const CoherentBath bath =
            sample_bath(spec, fan_out_seed(config.master_seed, "gumbel", trial),
                        {config.trigger_x, config.trigger_y});
        const Trace trace = elongation_trace(bath, 0.0, dt, steps);
        maxima[trial] = *std::max_element(trace.values.begin(), trace.values.end());
    });

    CsvWriter csv(out.file("gumbel-fit.csv"), {"trial", "max_elongation"}, {"1", "m"});
    for (std::size_t trial = 0; trial < trials; ++trial)
        csv.write_row({std::to_string(trial), csv_double(maxima[trial])});

    const double sigma0 = analytic_sigma0(spec);
    const double n_eff = effective_drawings(duration, spec.debye_frequency);
    const double sigma_pred = sigma0 / std::sqrt(2.0 * std::log(n_eff));
    const MeanStddev ms = mean_stddev(maxima);
    // location fitted, scale pinned by the extreme-value prediction
    GumbelParams predicted;
    predicted.sigma = sigma_pred;
    predicted.mu = ms.mean - constants::euler_gamma * sigma_pred;
    predicted.n_drawings = static_cast<long>(n_eff);
    const double ks_pred =
        ks_distance(maxima, [&](double x) { return gumbel_cdf(x, predicted); });

    summary.line("windows", static_cast<double>(trials), "independent seeds");
    summary.line("window_duration_s", duration, "per-window length");
    summary.line("sigma_pred_m", sigma_pred, "sigma0/sqrt(2*ln(N_eff))");
    summary.line("mu_fit_m", predicted.mu, "mean - euler_gamma*sigma_pred");
    summary.line("ks_distance_predicted_sigma", ks_pred, "sup_x |F_emp(x) - F_gumbel(x)|");

    const GumbelParams mm = fit_gumbel(maxima);
    const double ks_mm = ks_distance(maxima, [&](double x) { return gumbel_cdf(x, mm); });
    summary.line("sigma_mm_m", mm.sigma, "sqrt(6)*stddev/pi");
    summary.line("mu_mm_m", mm.mu, "mean - euler_gamma*sigma_mm");
    summary.line("ks_distance_moment_fit", ks_mm, "sup_x |F_emp(x) - F_gumbel(x)|");
}

void run_estimates(const RunConfig& config, Outputs& out, Summary& summary) {
    const LatticeSpec spec = config.lattice_spec();
    const BarrierSpec barrier = config.barrier_spec();
    const double kappa_per_angstrom = barrier.kappa * constants::angstrom;
    const double contact = contact_integral_estimate(barrier.height, spec.debye_frequency);
    const double width_ratio = gumbel_width_ratio(1e4, 1e11);

    summary.line("kappa_per_angstrom", kappa_per_angstrom, "sqrt(2*M*V0)/hbar * 1e-10");
    summary.line("width_ratio_1e4_to_1e11", width_ratio, "sqrt(ln(1e4)/ln(1e11))");

    CsvWriter csv(out.file("estimates.csv"),
                  {"kappa", "kappa_per_angstrom", "contact_integral", "width_ratio_1e4_to_1e11",
                   "sigma0"},
                  {"1/m", "1/angstrom", "1", "1", "m"});
    csv.write_row({csv_double(barrier.kappa), csv_double(kappa_per_angstrom), csv_double(contact),
                   csv_double(width_ratio), csv_double(analytic_sigma0(spec))});
}

} // namespace

RunArtifacts run_experiment(const RunConfig& config) {
    Outputs out;
    out.dir = config.output_dir;
    std::filesystem::create_directories(out.dir);

    Summary summary;
    summary.text(std::string("experiment = ") + std::string(experiment_name(config.experiment)));
    summary.line("master_seed", std::to_string(config.master_seed), "configured");
    common_scalars(summary, config);

    try {
        switch (config.experiment) {
            case Experiment::Trace: run_trace(config, out, summary, false); break;
            case Experiment::AmplitudeTrace: run_trace(config, out, summary, true); break;
            case Experiment::Selection: run_selection_experiment(config, out, summary); break;
            case Experiment::BornMC: run_born_mc(config, out, summary); break;
            case Experiment::Ensemble: run_ensemble(config, out, summary); break;
            case Experiment::GumbelFit: run_gumbel_fit(config, out, summary); break;
            case Experiment::Estimates: run_estimates(config, out, summary); break;
        }

        const std::filesystem::path summary_path = out.file("summary.txt");
        std::ofstream summary_file(summary_path, std::ios::binary);
        if (!summary_file) throw std::runtime_error("cannot write " + summary_path.string());
        summary_file << summary.str();
        summary_file.close();
        if (!summary_file) throw std::runtime_error("failed writing " + summary_path.string());
    } catch (...) {
        out.discard_all();
        throw;
    }

    return {out.created, summary.str()};
}

} // namespace vat
