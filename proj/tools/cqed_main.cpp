// cqed: command-line front end.
//
//   cqed <command> --config <path> [--output <path>] [--format csv|json] [--seed <int>]
//
// One JSON config in, one CSV/JSON table out. All physics inputs are in
// user units (GHz for rates/2pi, nm for wavelengths, meV/eV for
// energies, 1/ns for pump rates); field names carry the unit. Runs are
// deterministic given the config (and seed), and files are written
// atomically. Exit codes: 0 success, 2 validation error, 1 runtime error.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cqed/cqed.hpp"
#include "cqed/io.hpp"

using nlohmann::json;

namespace {

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- config field access -------------------------------------------------

double require_number(const json& j, const std::string& key) {
    if (!j.contains(key)) throw ValidationError(key + ": required field missing");
    if (!j.at(key).is_number()) throw ValidationError(key + ": expected a number");
    return j.at(key).get<double>();
}

std::int64_t require_integer(const json& j, const std::string& key) {
    if (!j.contains(key)) throw ValidationError(key + ": required field missing");
    if (!j.at(key).is_number_integer()) throw ValidationError(key + ": expected an integer");
    return j.at(key).get<std::int64_t>();
}

std::string require_string(const json& j, const std::string& key) {
    if (!j.contains(key)) throw ValidationError(key + ": required field missing");
    if (!j.at(key).is_string()) throw ValidationError(key + ": expected a string");
    return j.at(key).get<std::string>();
}

double optional_number(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number()) throw ValidationError(key + ": expected a number");
    return j.at(key).get<double>();
}

/// Cavity frequency from lambda0_nm or omega_over_2pi_GHz (exactly one).
cqed::AngularFrequency cavity_frequency(const json& j) {
    const bool has_lambda = j.contains("lambda0_nm");
    const bool has_omega = j.contains("omega_over_2pi_GHz");
    if (has_lambda == has_omega)
        throw ValidationError("lambda0_nm: provide exactly one of lambda0_nm, omega_over_2pi_GHz");
    if (has_lambda)
        return cqed::vacuum_wavelength_nm_to_angular(require_number(j, "lambda0_nm"));
    return cqed::linear_ghz_to_angular(require_number(j, "omega_over_2pi_GHz"));
}

struct Sweep {
    std::vector<double> values;
};

Sweep linear_sweep(const json& j, const std::string& start_key, const std::string& stop_key) {
    if (!j.contains("sweep")) throw ValidationError("sweep: required field missing");
    const json& s = j.at("sweep");
    const double start = require_number(s, start_key);
    const double stop = require_number(s, stop_key);
    const auto points = require_integer(s, "points");
    if (points < 1) throw ValidationError("sweep.points: must be >= 1");
    if (start > stop) throw ValidationError("sweep." + start_key + ": start must be <= stop");

    Sweep out;
    out.values.reserve(static_cast<std::size_t>(points));
    if (points == 1) {
        out.values.push_back(start);
    } else {
        for (std::int64_t i = 0; i < points; ++i)
            out.values.push_back(start + (stop - start) * static_cast<double>(i) /
                                             static_cast<double>(points - 1));
    }
    return out;
}

Sweep pump_sweep(const json& j) {
    if (!j.contains("sweep")) throw ValidationError("sweep: required field missing");
    const json& s = j.at("sweep");
    const double start = require_number(s, "start_per_ns");
    const double stop = require_number(s, "stop_per_ns");
    const auto points = require_integer(s, "points");
    if (points < 1) throw ValidationError("sweep.points: must be >= 1");
    if (start > stop) throw ValidationError("sweep.start_per_ns: start must be <= stop");

    std::string spacing = "log";
    if (s.contains("spacing")) spacing = require_string(s, "spacing");
    if (spacing != "log" && spacing != "linear")
        throw ValidationError("sweep.spacing: must be \"log\" or \"linear\"");
    if (spacing == "log" && start <= 0.0)
        throw ValidationError("sweep.start_per_ns: must be > 0 for log spacing");

    Sweep out;
    out.values.reserve(static_cast<std::size_t>(points));
    if (points == 1) {
        out.values.push_back(start);
    } else if (spacing == "linear") {
        for (std::int64_t i = 0; i < points; ++i)
            out.values.push_back(start + (stop - start) * static_cast<double>(i) /
                                             static_cast<double>(points - 1));
    } else {
        const double ratio = stop / start;
        for (std::int64_t i = 0; i < points; ++i)
            out.values.push_back(start * std::pow(ratio, static_cast<double>(i) /
                                                             static_cast<double>(points - 1)));
    }
    return out;
}

cqed::FockDistribution distribution_from_config(const json& j) {
    const bool has_probs = j.contains("probs");
    const bool has_poisson = j.contains("poisson_mean");
    if (has_probs == has_poisson)
        throw ValidationError("probs: provide exactly one of probs, poisson_mean");
    if (has_poisson) return cqed::FockDistribution::poisson(require_number(j, "poisson_mean"));

    const json& probs = j.at("probs");
    if (!probs.is_object()) throw ValidationError("probs: expected an object {\"n\": P_n}");
    std::map<int, double> table;
    for (const auto& [key, value] : probs.items()) {
        int n = 0;
        const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), n);
        if (ec != std::errc() || ptr != key.data() + key.size() || n < 0)
            throw ValidationError("probs: key '" + key + "' is not a photon number");
        if (!value.is_number()) throw ValidationError("probs: P_" + key + " must be a number");
        table[n] = value.get<double>();
    }
    try {
        return cqed::FockDistribution(std::move(table));
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
}

// --- output table ---------------------------------------------------------

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string csv_cell(const json& cell) {
    if (cell.is_string()) return csv_escape(cell.get<std::string>());
    if (cell.is_number_integer()) return std::to_string(cell.get<std::int64_t>());
    if (cell.is_number()) return format_double(cell.get<double>());
    return csv_escape(cell.dump());
}

std::string render_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(table.columns[i]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const std::string& command, const json& config, const Table& table) {
    json doc;
    doc["command"] = command;
    doc["config_echo"] = config;
    doc["columns"] = table.columns;
    json rows = json::array();
    for (const auto& row : table.rows) rows.push_back(row);
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

void write_output(const std::string& content, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << content;
        return;
    }
    const std::filesystem::path target(output_path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("output: cannot write '" + tmp.string() + "'");
        out << content;
        if (!out.flush()) throw std::runtime_error("output: write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, target);
}

// --- commands ---------------------------------------------------------

constexpr double kTwoPiGHz = 2.0 * std::numbers::pi * 1e9;

double to_ghz(double rad_per_s) { return rad_per_s / kTwoPiGHz; }

Table cmd_ladder(const json& cfg) {
    const auto omega = cavity_frequency(cfg);
    const auto g = cqed::linear_ghz_to_angular(require_number(cfg, "g_over_2pi_GHz"));
    const auto delta =
        cqed::linear_ghz_to_angular(optional_number(cfg, "detuning_over_2pi_GHz", 0.0));
    const auto n_max = require_integer(cfg, "n_max");
    if (n_max < 0) throw ValidationError("n_max: must be >= 0");

    const cqed::LosslessSystem sys(omega, omega + delta, g);
    Table t;
    t.columns = {"n", "f_plus_GHz", "f_minus_GHz", "splitting_GHz"};
    for (const auto& m : cqed::ladder_table(sys, static_cast<int>(n_max))) {
        const double hbar = cqed::constants::hbar;
        t.rows.push_back({m.n, to_ghz(m.e_plus.value / hbar), to_ghz(m.e_minus.value / hbar),
                          to_ghz(m.splitting().value / hbar)});
    }
    return t;
}

Table cmd_anticross(const json& cfg) {
    const double g_ghz = require_number(cfg, "g_over_2pi_GHz");
    const double kappa_ghz = require_number(cfg, "kappa_over_2pi_GHz");
    const double gamma_ghz = require_number(cfg, "gamma_over_2pi_GHz");
    const Sweep sweep = linear_sweep(cfg, "start_GHz", "stop_GHz");

    const auto g = cqed::linear_ghz_to_angular(g_ghz);
    const auto kappa = cqed::linear_ghz_to_angular(kappa_ghz);
    const auto gamma = cqed::linear_ghz_to_angular(gamma_ghz);
    const char* regime = cqed::to_string(
        cqed::classify_regime({cqed::AngularFrequency(0.0), cqed::AngularFrequency(0.0), g, kappa,
                               gamma})
            .regime);

    Table t;
    t.columns = {"delta_GHz",
                 "jc_upper_offset_GHz",
                 "jc_lower_offset_GHz",
                 "lossy_upper_offset_GHz",
                 "lossy_upper_hwhm_GHz",
                 "lossy_lower_offset_GHz",
                 "lossy_lower_hwhm_GHz",
                 "regime"};
    for (double delta_ghz : sweep.values) {
        // Lossless branches, as offsets from the cavity line.
        const double jc = std::sqrt(delta_ghz * delta_ghz / 4.0 + g_ghz * g_ghz);
        // Lossy branches: complex eigenfrequencies of the offset system
        // (omega = 0, nu = delta).
        const cqed::LossySystem sys(cqed::AngularFrequency(0.0),
                                    cqed::linear_ghz_to_angular(delta_ghz), g, kappa, gamma);
        const auto modes = cqed::complex_eigenfrequencies(sys);
        t.rows.push_back({delta_ghz, delta_ghz / 2.0 + jc, delta_ghz / 2.0 - jc,
                          to_ghz(modes.plus.frequency.value), to_ghz(modes.plus.damping.value),
                          to_ghz(modes.minus.frequency.value), to_ghz(modes.minus.damping.value),
                          regime});
    }
    return t;
}

Table cmd_spectrum(const json& cfg) {
    const auto g = cqed::linear_ghz_to_angular(require_number(cfg, "g_over_2pi_GHz"));
    const auto kappa = cqed::linear_ghz_to_angular(require_number(cfg, "kappa_over_2pi_GHz"));
    const auto gamma = cqed::linear_ghz_to_angular(require_number(cfg, "gamma_over_2pi_GHz"));
    const auto delta =
        cqed::linear_ghz_to_angular(optional_number(cfg, "detuning_over_2pi_GHz", 0.0));
    const Sweep sweep = linear_sweep(cfg, "start_GHz", "stop_GHz");

    // Probe offsets relative to the cavity line (omega = 0 internally).
    const cqed::AngularFrequency zero(0.0);
    const cqed::LossySystem coupled(zero, delta, g, kappa, gamma);
    const cqed::LossySystem empty(zero, delta, cqed::AngularFrequency(0.0), kappa, gamma);

    std::vector<cqed::AngularFrequency> probes;
    probes.reserve(sweep.values.size());
    for (double x : sweep.values) probes.push_back(cqed::linear_ghz_to_angular(x));

    const auto coupled_spec = cqed::transmission_spectrum(coupled, probes);
    const auto empty_spec = cqed::transmission_spectrum(empty, probes);

    Table t;
    t.columns = {"probe_offset_GHz", "empty_cavity_intensity", "coupled_intensity"};
    for (std::size_t i = 0; i < sweep.values.size(); ++i)
        t.rows.push_back({sweep.values[i], empty_spec[i].intensity, coupled_spec[i].intensity});
    return t;
}

Table cmd_purcell(const json& cfg) {
    const double q = require_number(cfg, "q");
    const double v_norm = require_number(cfg, "v_mode_norm");
    const double psi_abs = optional_number(cfg, "psi_abs", 1.0);
    const double cos_xi = optional_number(cfg, "cos_xi", 1.0);
    const double f_other = optional_number(cfg, "f_other", 1.0);
    const auto omega = cavity_frequency(cfg);
    const Sweep sweep = linear_sweep(cfg, "start_GHz", "stop_GHz");

    Table t;
    t.columns = {"detuning_GHz", "purcell_factor", "beta"};
    for (double delta_ghz : sweep.values) {
        const double f = cqed::effective_purcell(
            {q, v_norm, psi_abs, cos_xi, cqed::linear_ghz_to_angular(delta_ghz), omega});
        t.rows.push_back({delta_ghz, f, cqed::beta_factor(f, f_other)});
    }
    return t;
}

Table cmd_laser(const json& cfg) {
    const double beta = require_number(cfg, "beta");
    cqed::AngularFrequency kappa;
    if (cfg.contains("kappa_over_2pi_GHz")) {
        kappa = cqed::linear_ghz_to_angular(require_number(cfg, "kappa_over_2pi_GHz"));
    } else if (cfg.contains("q")) {
        const auto omega = cavity_frequency(cfg);
        kappa = cqed::AngularFrequency(omega.value / (2.0 * require_number(cfg, "q")));
    } else {
        throw ValidationError("kappa_over_2pi_GHz: provide kappa_over_2pi_GHz or q");
    }
    const auto params = cqed::LaserParams::from_beta(kappa, beta);
    const auto photon =
        cqed::photon_energy(cqed::vacuum_wavelength_nm_to_angular(require_number(cfg, "lambda0_nm")));

    const Sweep sweep = pump_sweep(cfg);
    std::vector<double> pumps;
    pumps.reserve(sweep.values.size());
    for (double per_ns : sweep.values) pumps.push_back(per_ns * 1e9);

    Table t;
    t.columns = {"pump_per_ns", "photon_number", "output_power_W"};
    const auto curve = cqed::light_light_curve(params, pumps, photon);
    for (const auto& pt : curve)
        t.rows.push_back({pt.pump * 1e-9, pt.photon_number, pt.output_power_w});
    return t;
}

Table cmd_qd(const json& cfg, std::optional<std::uint64_t> seed_override) {
    cqed::QDotConfig dot;
    try {
        dot = cqed::qdot_config_from_json(cfg);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    for (const auto& warning : dot.spec.sanity_warnings())
        std::cerr << "warning: " << warning << '\n';

    std::string report = "levels";
    if (cfg.contains("report")) report = require_string(cfg, "report");

    Table t;
    if (report == "levels") {
        const auto max_shell = require_integer(cfg, "max_shell");
        if (max_shell < 0) throw ValidationError("max_shell: must be >= 0");
        t.columns = {"shell", "degeneracy", "electron_level_meV", "hole_level_meV",
                     "transition_eV"};
        for (int shell = 0; shell <= max_shell; ++shell) {
            const cqed::LevelIndex idx{shell, 0, 1};
            const auto e_e = cqed::level_energy(dot.spec, cqed::Particle::electron, idx);
            const auto e_h = cqed::level_energy(dot.spec, cqed::Particle::hole, idx);
            t.rows.push_back({shell, cqed::level_degeneracy(shell), e_e.mev(), e_h.mev(),
                              (dot.spec.band_gap + e_e + e_h).ev()});
        }
    } else if (report == "coulomb") {
        const auto samples = require_integer(cfg, "samples");
        std::uint64_t seed = 0;
        if (seed_override) {
            seed = *seed_override;
        } else {
            seed = static_cast<std::uint64_t>(require_integer(cfg, "seed"));
        }
        const auto result = cqed::coulomb_correction_mc(dot.spec, dot.epsilon_r, samples, seed);
        t.columns = {"samples", "seed", "delta_e_meV", "std_err_meV"};
        t.rows.push_back({samples, static_cast<std::int64_t>(seed), result.delta_e.mev(),
                          result.std_err.mev()});
    } else {
        throw ValidationError("report: must be \"levels\" or \"coulomb\"");
    }
    return t;
}

Table cmd_g2(const json& cfg) {
    Table t;
    if (cfg.contains("records_csv")) {
        const auto path = require_string(cfg, "records_csv");
        std::ifstream in(path);
        if (!in) throw ValidationError("records_csv: cannot open '" + path + "'");
        const auto records = cqed::read_pulse_records_csv(in);
        const auto est = cqed::g2_estimate(records);
        t.columns = {"source", "g2", "std_err", "classification"};
        if (est)
            t.rows.push_back({path, est->g2, est->std_err,
                              cqed::to_string(cqed::classify_statistics(est->g2))});
        else
            t.rows.push_back({path, "undefined", "undefined", "undefined"});
        return t;
    }

    if (!cfg.contains("cases") || !cfg.at("cases").is_array())
        throw ValidationError("cases: expected an array of named distributions");
    t.columns = {"case", "g2", "classification"};
    for (const auto& entry : cfg.at("cases")) {
        const auto name = require_string(entry, "name");
        const auto dist = distribution_from_config(entry);
        const auto g2 = cqed::g2_zero(dist);
        if (g2)
            t.rows.push_back({name, *g2, cqed::to_string(cqed::classify_statistics(*g2))});
        else
            t.rows.push_back({name, "undefined", "undefined"});
    }
    return t;
}

Table cmd_hbt(const json& cfg, std::optional<std::uint64_t> seed_override) {
    const auto dist = distribution_from_config(cfg);
    const auto pulses = require_integer(cfg, "pulses");
    std::uint64_t seed = 0;
    if (seed_override) {
        seed = *seed_override;
    } else {
        seed = static_cast<std::uint64_t>(require_integer(cfg, "seed"));
    }

    Table t;
    t.columns = {"pulse_index", "counts_a", "counts_b"};
    for (const auto& r : cqed::hbt_simulate(dist, pulses, seed))
        t.rows.push_back({r.pulse_index, r.counts_a, r.counts_b});
    return t;
}

Table cmd_modevolume(const json& cfg) {
    std::optional<cqed::FieldGrid> grid;
    if (cfg.contains("grid_json")) {
        try {
            grid = cqed::load_field_grid(require_string(cfg, "grid_json"));
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what());
        }
    } else if (cfg.contains("synthetic_gaussian")) {
        const json& s = cfg.at("synthetic_gaussian");
        const double sigma = require_number(s, "sigma_nm") * 1e-9;
        const double box_sigmas = optional_number(s, "box_sigmas", 2.5);
        const auto n = require_integer(s, "points_per_axis");
        if (n < 3 || n % 2 == 0)
            throw ValidationError("synthetic_gaussian.points_per_axis: must be odd and >= 3");
        if (sigma <= 0.0 || box_sigmas <= 0.0)
            throw ValidationError("synthetic_gaussian.sigma_nm: must be > 0");

        const double half_width = box_sigmas * sigma;
        const double h = 2.0 * half_width / static_cast<double>(n);
        const std::size_t count = static_cast<std::size_t>(n);
        std::vector<double> epsilon(count * count * count, 1.0);
        std::vector<cqed::Vec3c> field(count * count * count);
        std::size_t flat = 0;
        for (std::size_t ix = 0; ix < count; ++ix)
            for (std::size_t iy = 0; iy < count; ++iy)
                for (std::size_t iz = 0; iz < count; ++iz, ++flat) {
                    const double x = -half_width + (static_cast<double>(ix) + 0.5) * h;
                    const double y = -half_width + (static_cast<double>(iy) + 0.5) * h;
                    const double z = -half_width + (static_cast<double>(iz) + 0.5) * h;
                    const double r2 = x * x + y * y + z * z;
                    field[flat] = {{std::exp(-r2 / (2.0 * sigma * sigma)), 0.0}, {0, 0}, {0, 0}};
                }
        grid.emplace(std::array<std::size_t, 3>{count, count, count},
                     std::array<double, 3>{h, h, h}, std::move(epsilon), std::move(field));
    } else {
        throw ValidationError("grid_json: provide grid_json or synthetic_gaussian");
    }

    double v = 0.0;
    try {
        v = cqed::mode_volume(*grid);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    Table t;
    t.columns = {"nx", "ny", "nz", "v_mode_m3", "v_mode_um3"};
    t.rows.push_back({static_cast<std::int64_t>(grid->dims()[0]),
                      static_cast<std::int64_t>(grid->dims()[1]),
                      static_cast<std::int64_t>(grid->dims()[2]), v, v * 1e18});
    return t;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cavity-QED desk calculator: dressed states, lossy eigenmodes, Purcell "
                 "factors, laser rate equations, quantum-dot levels, photon statistics"};
    app.require_subcommand(1);

    std::string config_path, output_path, format = "csv";
    std::optional<std::int64_t> seed_flag;

    const std::vector<std::string> commands = {"ladder", "anticross", "spectrum",
                                               "purcell", "laser", "qd",
                                               "g2", "hbt", "modevolume"};
    for (const auto& name : commands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("--output", output_path, "output file (default: stdout)");
        sub->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", seed_flag, "override the config seed");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();

    try {
        std::ifstream in(config_path);
        if (!in) throw ValidationError("config: cannot open '" + config_path + "'");
        json cfg;
        try {
            in >> cfg;
        } catch (const json::exception& e) {
            throw ValidationError("config: invalid JSON: " + std::string(e.what()));
        }

        std::optional<std::uint64_t> seed_override;
        if (seed_flag) seed_override = static_cast<std::uint64_t>(*seed_flag);

        Table table;
        if (command == "ladder") table = cmd_ladder(cfg);
        else if (command == "anticross") table = cmd_anticross(cfg);
        else if (command == "spectrum") table = cmd_spectrum(cfg);
        else if (command == "purcell") table = cmd_purcell(cfg);
        else if (command == "laser") table = cmd_laser(cfg);
        else if (command == "qd") table = cmd_qd(cfg, seed_override);
        else if (command == "g2") table = cmd_g2(cfg);
        else if (command == "hbt") table = cmd_hbt(cfg, seed_override);
        else table = cmd_modevolume(cfg);

        json echoed = cfg;
        if (seed_override && (command == "qd" || command == "hbt"))
            echoed["seed"] = *seed_override;

        const std::string content =
            (format == "json") ? render_json(command, echoed, table) : render_csv(table);
        write_output(content, output_path);
        return 0;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
