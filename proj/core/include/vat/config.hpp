#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vat/lattice.hpp"
#include "vat/tunneling.hpp"

namespace vat {

enum class Experiment {
    Trace,          // elongation time series
    AmplitudeTrace, // elongation + log integrand norm
    Selection,      // two-channel experiments
    BornMC,         // Gumbel-pair Monte Carlo vs the closed form
    Ensemble,       // multi-observer sum-extrema scaling
    GumbelFit,      // per-window maxima vs the Gumbel law
    Estimates,      // closed-form scalars only
};

std::string_view experiment_name(Experiment e);
std::optional<Experiment> experiment_from_name(std::string_view name);

/// Batch run description. Fields keep the config-file units (amu, meV,
/// angstrom, K); everything converts to SI at the lattice_spec()/
/// barrier_spec() boundary, never inside the math.
struct RunConfig {
    // lattice (defaults: aqueous membrane at body temperature)
    int lattice_nx = 70;
    int lattice_ny = 70;
    double mass_amu = 18.0;               // per-site atom mass
    double lattice_spacing_angstrom = 3.0;
    double speed_of_sound = 1500.0;       // m/s
    double debye_frequency = 1.6e13;      // rad/s
    double temperature = 310.0;           // K
    int trigger_x = 0;
    int trigger_y = 0;

    // barrier (defaults: light configurational mass, membrane-scale step)
    double barrier_mass_amu = 6.0;
    double barrier_height_mev = 70.0;
    double barrier_width_angstrom = 1.0;

    // run control
    std::optional<double> duration_s;      // default: 1e4 Debye cycles
    double samples_per_cycle = 16.0;
    std::uint64_t master_seed = 20260810;
    Experiment experiment = Experiment::Trace;
    long trials = 500;
    double margin_angstrom = 1.0;
    std::vector<int> observer_counts{1, 4, 16};
    std::vector<double> born_kappa_sigma{1.0, 5.0, 20.0};
    std::vector<double> born_ratio{1.0, 2.0, 10.0};
    std::string output_dir = "out";

    LatticeSpec lattice_spec() const;
    BarrierSpec barrier_spec() const;

    /// duration_s if set, else 1e4 * 2 pi / omega_D.
    double effective_duration() const;

    /// Sample spacing: 2 pi / (omega_D * samples_per_cycle).
    double dt() const;
};

/// Parse flat `key = value` text ('#' comments, blank lines allowed).
/// Unknown keys, malformed lines and out-of-range values raise ConfigError
/// with the line number. Absent keys keep the defaults above, so an empty
/// file yields the full default configuration.
RunConfig parse_config(std::string_view text, const std::string& source_name = "<string>");

/// parse_config over a file's contents; missing file raises ConfigError.
RunConfig load_config(const std::string& path);

/// Render a config as parseable `key = value` text. Values are emitted at
/// full precision, so dump -> load -> dump is byte-identical.
std::string dump_config(const RunConfig& config);

} // namespace vat
