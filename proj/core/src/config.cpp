#include "vat/config.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "vat/constants.hpp"
#include "vat/csv.hpp"
#include "vat/errors.hpp"

namespace vat {

std::string_view experiment_name(Experiment e) {
    switch (e) {
        case Experiment::Trace: return "trace";
        case Experiment::AmplitudeTrace: return "amplitude-trace";
        case Experiment::Selection: return "selection";
        case Experiment::BornMC: return "born-mc";
        case Experiment::Ensemble: return "ensemble";
        case Experiment::GumbelFit: return "gumbel-fit";
        case Experiment::Estimates: return "estimates";
    }
    return "trace";
}

std::optional<Experiment> experiment_from_name(std::string_view name) {
    for (const Experiment e :
         {Experiment::Trace, Experiment::AmplitudeTrace, Experiment::Selection, Experiment::BornMC,
          Experiment::Ensemble, Experiment::GumbelFit, Experiment::Estimates}) {
        if (experiment_name(e) == name) return e;
    }
    return std::nullopt;
}

LatticeSpec RunConfig::lattice_spec() const {
    LatticeSpec spec;
    spec.nx = lattice_nx;
    spec.ny = lattice_ny;
    spec.atom_mass = mass_amu * constants::atomic_mass_unit;
    spec.spacing = lattice_spacing_angstrom * constants::angstrom;
    spec.sound_speed = speed_of_sound;
    spec.debye_frequency = debye_frequency;
    spec.temperature = temperature;
    spec.validate();
    return spec;
}

BarrierSpec RunConfig::barrier_spec() const {
    return BarrierSpec(barrier_mass_amu * constants::atomic_mass_unit,
                       barrier_height_mev * constants::milli_electron_volt,
                       barrier_width_angstrom * constants::angstrom);
}

double RunConfig::effective_duration() const {
    if (duration_s) return *duration_s;
    return 1e4 * 2.0 * std::numbers::pi / debye_frequency;
}

double RunConfig::dt() const {
    return 2.0 * std::numbers::pi / (debye_frequency * samples_per_cycle);
}

namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

class LineContext {
public:
    LineContext(const std::string& source, std::size_t line) : source_(source), line_(line) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError(source_ + ":" + std::to_string(line_) + ": " + what);
    }

    double number(std::string_view value) const {
        const std::string text(value);
        errno = 0;
        char* end = nullptr;
        const double parsed = std::strtod(text.c_str(), &end);
        if (end != text.c_str() + text.size() || text.empty() || errno == ERANGE ||
            !std::isfinite(parsed))
            fail("malformed number '" + text + "'");
        return parsed;
    }

    long integer(std::string_view value) const {
        const double parsed = number(value);
        if (parsed != std::floor(parsed) || std::abs(parsed) > 9.0e18)
            fail("expected an integer, got '" + std::string(value) + "'");
        return static_cast<long>(parsed);
    }

    std::uint64_t unsigned64(std::string_view value) const {
        const std::string text(value);
        errno = 0;
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(text.c_str(), &end, 10);
        if (end != text.c_str() + text.size() || text.empty() || errno == ERANGE ||
            text.front() == '-')
            fail("malformed unsigned integer '" + text + "'");
        return parsed;
    }

    template <typename T, typename Parse>
    std::vector<T> list(std::string_view value, Parse&& parse) const {
        std::vector<T> items;
        std::size_t start = 0;
        const std::string text(value);
        while (start <= text.size()) {
            const std::size_t comma = text.find(',', start);
            const std::string_view item =
                trim(std::string_view(text).substr(start, comma == std::string::npos
                                                              ? std::string::npos
                                                              : comma - start));
            if (item.empty()) fail("empty list element");
            items.push_back(parse(item));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (items.empty()) fail("empty list");
        return items;
    }

    void require(bool ok, const std::string& what) const {
        if (!ok) fail(what);
    }

private:
    const std::string& source_;
    std::size_t line_;
};

void apply_key(RunConfig& config, std::string_view key, std::string_view value,
               const LineContext& ctx) {
    if (key == "lattice_nx") {
        config.lattice_nx = static_cast<int>(ctx.integer(value));
        ctx.require(config.lattice_nx >= 2, "lattice_nx must be >= 2");
    } else if (key == "lattice_ny") {
        config.lattice_ny = static_cast<int>(ctx.integer(value));
        ctx.require(config.lattice_ny >= 2, "lattice_ny must be >= 2");
    } else if (key == "mass_amu") {
        config.mass_amu = ctx.number(value);
        ctx.require(config.mass_amu > 0.0, "mass_amu must be positive");
    } else if (key == "lattice_spacing_angstrom") {
        config.lattice_spacing_angstrom = ctx.number(value);
        ctx.require(config.lattice_spacing_angstrom > 0.0,
                    "lattice_spacing_angstrom must be positive");
    } else if (key == "speed_of_sound") {
        config.speed_of_sound = ctx.number(value);
        ctx.require(config.speed_of_sound > 0.0, "speed_of_sound must be positive");
    } else if (key == "debye_frequency") {
        config.debye_frequency = ctx.number(value);
        ctx.require(config.debye_frequency > 0.0, "debye_frequency must be positive");
    } else if (key == "temperature") {
        config.temperature = ctx.number(value);
        ctx.require(config.temperature >= 0.0, "temperature must be >= 0");
    } else if (key == "trigger_x") {
        config.trigger_x = static_cast<int>(ctx.integer(value));
    } else if (key == "trigger_y") {
        config.trigger_y = static_cast<int>(ctx.integer(value));
    } else if (key == "barrier_mass_amu") {
        config.barrier_mass_amu = ctx.number(value);
        ctx.require(config.barrier_mass_amu > 0.0, "barrier_mass_amu must be positive");
    } else if (key == "barrier_height_mev") {
        config.barrier_height_mev = ctx.number(value);
        ctx.require(config.barrier_height_mev >= 0.0, "barrier_height_mev must be >= 0");
    } else if (key == "barrier_width_angstrom") {
        config.barrier_width_angstrom = ctx.number(value);
        ctx.require(config.barrier_width_angstrom >= 0.0, "barrier_width_angstrom must be >= 0");
    } else if (key == "duration_s") {
        config.duration_s = ctx.number(value);
        ctx.require(*config.duration_s > 0.0, "duration_s must be positive");
    } else if (key == "samples_per_cycle") {
        config.samples_per_cycle = ctx.number(value);
        ctx.require(config.samples_per_cycle >= 2.0, "samples_per_cycle must be >= 2");
    } else if (key == "master_seed") {
        config.master_seed = ctx.unsigned64(value);
    } else if (key == "experiment") {
        const auto parsed = experiment_from_name(trim(value));
        ctx.require(parsed.has_value(), "unknown experiment '" + std::string(value) + "'");
        config.experiment = *parsed;
    } else if (key == "trials") {
        config.trials = ctx.integer(value);
        ctx.require(config.trials >= 1, "trials must be >= 1");
    } else if (key == "margin_angstrom") {
        config.margin_angstrom = ctx.number(value);
        ctx.require(config.margin_angstrom >= 0.0, "margin_angstrom must be >= 0");
    } else if (key == "observer_counts") {
        config.observer_counts = ctx.list<int>(value, [&](std::string_view item) {
            const long n = ctx.integer(item);
            ctx.require(n >= 1, "observer counts must be >= 1");
            return static_cast<int>(n);
        });
    } else if (key == "born_kappa_sigma") {
        config.born_kappa_sigma = ctx.list<double>(value, [&](std::string_view item) {
            const double x = ctx.number(item);
            ctx.require(x > 0.0, "born_kappa_sigma entries must be positive");
            return x;
        });
    } else if (key == "born_ratio") {
        config.born_ratio = ctx.list<double>(value, [&](std::string_view item) {
            const double x = ctx.number(item);
            ctx.require(x > 0.0, "born_ratio entries must be positive");
            return x;
        });
    } else if (key == "output_dir") {
        ctx.require(!trim(value).empty(), "output_dir must be non-empty");
        config.output_dir = std::string(trim(value));
    } else {
        ctx.fail("unknown key '" + std::string(key) + "'");
    }
}

} // namespace

RunConfig parse_config(std::string_view text, const std::string& source_name) {
    RunConfig config;
    std::size_t line_number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t newline = text.find('\n', start);
        std::string_view line = text.substr(
            start, newline == std::string_view::npos ? std::string_view::npos : newline - start);
        ++line_number;
        start = newline == std::string_view::npos ? text.size() + 1 : newline + 1;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const LineContext ctx(source_name, line_number);
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) ctx.fail("expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) ctx.fail("empty key");
        if (value.empty()) ctx.fail("empty value for key '" + std::string(key) + "'");
        apply_key(config, key, value, ctx);
    }
    return config;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path);
}

namespace {

template <typename T>
std::string join_list(const std::vector<T>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        if constexpr (std::is_same_v<T, double>) {
            out += csv_double(values[i]);
        } else {
            out += std::to_string(values[i]);
        }
    }
    return out;
}

} // namespace

std::string dump_config(const RunConfig& c) {
    std::ostringstream out;
    out << "lattice_nx = " << c.lattice_nx << '\n';
    out << "lattice_ny = " << c.lattice_ny << '\n';
    out << "mass_amu = " << csv_double(c.mass_amu) << '\n';
    out << "lattice_spacing_angstrom = " << csv_double(c.lattice_spacing_angstrom) << '\n';
    out << "speed_of_sound = " << csv_double(c.speed_of_sound) << '\n';
    out << "debye_frequency = " << csv_double(c.debye_frequency) << '\n';
    out << "temperature = " << csv_double(c.temperature) << '\n';
    out << "trigger_x = " << c.trigger_x << '\n';
    out << "trigger_y = " << c.trigger_y << '\n';
    out << "barrier_mass_amu = " << csv_double(c.barrier_mass_amu) << '\n';
    out << "barrier_height_mev = " << csv_double(c.barrier_height_mev) << '\n';
    out << "barrier_width_angstrom = " << csv_double(c.barrier_width_angstrom) << '\n';
    if (c.duration_s) out << "duration_s = " << csv_double(*c.duration_s) << '\n';
    out << "samples_per_cycle = " << csv_double(c.samples_per_cycle) << '\n';
    out << "master_seed = " << c.master_seed << '\n';
    out << "experiment = " << experiment_name(c.experiment) << '\n';
    out << "trials = " << c.trials << '\n';
    out << "margin_angstrom = " << csv_double(c.margin_angstrom) << '\n';
    out << "observer_counts = " << join_list(c.observer_counts) << '\n';
    out << "born_kappa_sigma = " << join_list(c.born_kappa_sigma) << '\n';
    out << "born_ratio = " << join_list(c.born_ratio) << '\n';
    out << "output_dir = " << c.output_dir << '\n';
    return out.str();
}

} // namespace vat
