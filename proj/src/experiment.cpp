#include "sssd/experiment.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "sssd/ait_sahalia.hpp"
#include "sssd/analysis.hpp"
#include "sssd/baselines.hpp"
#include "sssd/cir_quad.hpp"
#include "sssd/format.hpp"
#include "sssd/gen_ait_sahalia.hpp"

namespace sssd {
namespace {

const std::set<std::string> kExperimentKeys = {
    "model", "scheme", "T", "n", "finest_n", "levels", "delta",
    "deltas", "p", "paths", "seed", "full_paths", "strict"};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double_value(const std::string& key, const std::string& s) {
    double v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw validation_error("key " + key + ": cannot parse number '" + s + "'");
    }
    return v;
}

std::uint64_t parse_u64_value(const std::string& key, const std::string& s) {
    std::uint64_t v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw validation_error("key " + key + ": cannot parse count '" + s + "'");
    }
    return v;
}

bool parse_bool_value(const std::string& key, const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw validation_error("key " + key + ": expected true or false, got '" + s +
                           "'");
}

std::vector<double> parse_list_value(const std::string& key, const std::string& s) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_double_value(key, trim(item)));
    }
    if (out.empty()) {
        throw validation_error("key " + key + ": empty list");
    }
    return out;
}

template <typename T>
T require(const std::optional<T>& v, const char* key) {
    if (!v) throw validation_error(std::string("missing key ") + key);
    return *v;
}

void require_absent_for(const ExperimentConfig& cfg, const char* command,
                        const std::vector<std::pair<bool, const char*>>& keys) {
    for (const auto& [present, name] : keys) {
        if (present) {
            throw validation_error(std::string("key ") + name +
                                   " is not used by the " + command + " command");
        }
    }
}

struct BuiltScheme {
    ComposedScheme scheme;
    bool y_space = false; // state is y = x^2; x = sqrt(y) is the model variable
    double a1 = 0.0;      // drives the default positivity boundary semantics
};

BuiltScheme build(const ExperimentConfig& cfg) {
    BuiltScheme out;
    KvMap params = cfg.model_params;
    if (cfg.model == "ait-sahalia") {
        KvMap split_kv;
        if (auto it = params.find("a"); it != params.end()) {
            split_kv["a"] = it->second;
            params.erase(it);
        }
        if (cfg.scheme == "sssd") {
            const AitSahaliaParams p = ait_sahalia_from_kv(params);
            out.scheme = make_ait_sahalia_scheme(p, split_config_from_kv(split_kv));
            out.y_space = true;
            out.a1 = p.a1;
            return out;
        }
        if (!split_kv.empty()) {
            throw validation_error("unknown key a (split parameter applies to the "
                                   "sssd scheme only)");
        }
        const AitSahaliaParams p = ait_sahalia_from_kv(params);
        out.a1 = p.a1;
        if (cfg.scheme == "euler-maruyama") {
            out.scheme = make_euler_maruyama_scheme(p);
            return out;
        }
        if (cfg.scheme == "drift-implicit") {
            out.scheme = make_drift_implicit_scheme(p);
            return out;
        }
        throw validation_error("unsupported scheme '" + cfg.scheme +
                               "' for model ait-sahalia");
    }
    if (cfg.model == "gen-ait-sahalia") {
        if (cfg.scheme != "sssd") {
            throw validation_error("model gen-ait-sahalia supports only the sssd "
                                   "scheme, got '" + cfg.scheme + "'");
        }
        const GenAitSahaliaParams p = gen_ait_sahalia_from_kv(params);
        out.scheme = make_gen_ait_sahalia_scheme(p);
        out.y_space = true;
        out.a1 = p.base.a1;
        return out;
    }
    if (cfg.model == "cir-quad") {
        if (cfg.scheme != "sssd") {
            throw validation_error("model cir-quad supports only the sssd scheme, "
                                   "got '" + cfg.scheme + "'");
        }
        out.scheme = make_cir_quad_scheme(cir_quad_from_kv(params));
        return out;
    }
    throw validation_error("unknown model '" + cfg.model + "'");
}

void write_file(const std::string& out_dir, const std::string& name,
                const std::string& content, std::ostream& log) {
    std::filesystem::create_directories(out_dir);
    const std::string path = out_dir + "/" + name;
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + path);
    }
    f << content;
    log << "wrote " << path << "\n";
}

void write_report(const std::string& out_dir, const std::string& stem,
                  const std::string& csv, const std::string& json,
                  OutputFormat format, std::ostream& log) {
    if (format == OutputFormat::csv || format == OutputFormat::both) {
        write_file(out_dir, stem + ".csv", csv, log);
    }
    if (format == OutputFormat::json || format == OutputFormat::both) {
        write_file(out_dir, stem + ".json", json, log);
    }
}

bool default_strict(const BuiltScheme& built) {
    // Strict positivity is the guarantee only when the a1 floor is present;
    // the cir-quad noise stage preserves nonnegativity.
    return built.y_space && built.a1 > 0.0;
}

} // namespace

ExperimentConfig parse_experiment_config(const std::string& text) {
    ExperimentConfig cfg;
    std::set<std::string> seen;
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw validation_error("line " + std::to_string(line_no) +
                                   ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw validation_error("line " + std::to_string(line_no) +
                                   ": expected key = value");
        }
        if (!seen.insert(key).second) {
            throw validation_error("duplicate key " + key);
        }
        if (key == "model") cfg.model = value;
        else if (key == "scheme") cfg.scheme = value;
        else if (key == "T") cfg.horizon = parse_double_value(key, value);
        else if (key == "n") cfg.steps = parse_u64_value(key, value);
        else if (key == "finest_n") cfg.finest_n = parse_u64_value(key, value);
        else if (key == "levels")
            cfg.levels = static_cast<unsigned>(parse_u64_value(key, value));
        else if (key == "delta") cfg.delta = parse_double_value(key, value);
        else if (key == "deltas") cfg.deltas = parse_list_value(key, value);
        else if (key == "p") cfg.p_values = parse_list_value(key, value);
        else if (key == "paths") cfg.paths = parse_u64_value(key, value);
        else if (key == "seed") cfg.seed = parse_u64_value(key, value);
        else if (key == "full_paths") cfg.full_paths = parse_bool_value(key, value);
        else if (key == "strict") cfg.strict = parse_bool_value(key, value);
        else cfg.model_params[key] = value; // validated by the bundle parsers
    }
    if (cfg.model.empty()) throw validation_error("missing key model");
    if (cfg.scheme.empty()) throw validation_error("missing key scheme");
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw validation_error("cannot open config file " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_experiment_config(ss.str());
}

ComposedScheme build_scheme(const ExperimentConfig& cfg) { return build(cfg).scheme; }

int cmd_simulate(const ExperimentConfig& cfg, const std::string& out_dir,
                 OutputFormat format, std::ostream& log) {
    require_absent_for(cfg, "simulate",
                       {{cfg.finest_n.has_value(), "finest_n"},
                        {cfg.levels.has_value(), "levels"},
                        {cfg.delta.has_value(), "delta"},
                        {!cfg.deltas.empty(), "deltas"},
                        {!cfg.p_values.empty(), "p"},
                        {cfg.strict.has_value(), "strict"}});
    const BuiltScheme built = build(cfg);
    const TimeGrid grid = make_grid(require(cfg.horizon, "T"),
                                    require(cfg.steps, "n"));
    const std::uint64_t paths = require(cfg.paths, "paths");
    const std::uint64_t seed = require(cfg.seed, "seed");

    const PathEnsemble ensemble = simulate_ensemble(built.scheme, grid, paths, seed);

    std::string csv = built.y_space ? "path,terminal_state,terminal_x\n"
                                    : "path,terminal_state\n";
    std::string json_body;
    for (std::uint64_t p = 0; p < paths; ++p) {
        const double terminal = ensemble.row(p).back();
        csv += std::to_string(p) + "," + format_double(terminal);
        if (built.y_space) {
            csv += "," + format_double(to_x(std::max(terminal, 0.0)));
        }
        csv += "\n";
        if (!json_body.empty()) json_body += ",";
        json_body += format_double(terminal);
    }
    write_report(out_dir, "terminal", csv, "[" + json_body + "]\n", format, log);

    if (cfg.full_paths) {
        std::string paths_csv = "path,step,state\n";
        for (std::uint64_t p = 0; p < paths; ++p) {
            const auto row = ensemble.row(p);
            for (std::uint64_t k = 0; k < row.size(); ++k) {
                paths_csv += std::to_string(p) + "," + std::to_string(k) + "," +
                             format_double(row[k]) + "\n";
            }
        }
        write_file(out_dir, "paths.csv", paths_csv, log);
    }

    const PositivityReport audit = positivity_audit(ensemble, default_strict(built));
    log << "paths=" << paths << " steps=" << grid.steps
        << " min_state=" << format_double(audit.min_state)
        << " violations=" << audit.violations << "\n";
    return exit_ok;
}

int cmd_convergence(const ExperimentConfig& cfg, const std::string& out_dir,
                    OutputFormat format, std::ostream& log) {
    require_absent_for(cfg, "convergence",
                       {{cfg.steps.has_value(), "n"},
                        {cfg.delta.has_value(), "delta"},
                        {!cfg.deltas.empty(), "deltas"},
                        {!cfg.p_values.empty(), "p"},
                        {cfg.strict.has_value(), "strict"},
                        {cfg.full_paths, "full_paths"}});
    const BuiltScheme built = build(cfg);
    const ConvergenceReport report = strong_error_study(
        built.scheme, require(cfg.horizon, "T"), require(cfg.finest_n, "finest_n"),
        require(cfg.levels, "levels"), require(cfg.paths, "paths"),
        require(cfg.seed, "seed"));
    write_report(out_dir, "convergence", to_csv_string(report),
                 to_json_string(report), format, log);
    log << "estimated_order=" << format_double(report.estimated_order)
        << " r2=" << format_double(report.regression_r2) << "\n";
    return report.order_defined && std::isfinite(report.estimated_order)
               ? exit_ok
               : exit_audit_failure;
}

int cmd_moments(const ExperimentConfig& cfg, const std::string& out_dir,
                OutputFormat format, std::ostream& log) {
    require_absent_for(cfg, "moments",
                       {{cfg.steps.has_value(), "n"},
                        {cfg.finest_n.has_value(), "finest_n"},
                        {cfg.levels.has_value(), "levels"},
                        {cfg.delta.has_value(), "delta"},
                        {cfg.strict.has_value(), "strict"},
                        {cfg.full_paths, "full_paths"}});
    const BuiltScheme built = build(cfg);
    if (cfg.deltas.empty()) throw validation_error("missing key deltas");
    if (cfg.p_values.empty()) throw validation_error("missing key p");
    const double horizon = require(cfg.horizon, "T");
    const std::uint64_t paths = require(cfg.paths, "paths");
    const std::uint64_t seed = require(cfg.seed, "seed");
    for (double p : cfg.p_values) {
        const MomentReport report =
            moment_study(built.scheme, p, cfg.deltas, horizon, paths, seed);
        write_report(out_dir, "moments_p" + format_double(p),
                     to_csv_string(report), to_json_string(report), format, log);
        log << "p=" << format_double(p)
            << " max_moment=" << format_double(report.max_over_deltas) << "\n";
    }
    return exit_ok;
}

int cmd_positivity(const ExperimentConfig& cfg, const std::string& out_dir,
                   OutputFormat format, std::ostream& log) {
    require_absent_for(cfg, "positivity",
                       {{cfg.finest_n.has_value(), "finest_n"},
                        {cfg.levels.has_value(), "levels"},
                        {cfg.delta.has_value(), "delta"},
                        {!cfg.deltas.empty(), "deltas"},
                        {!cfg.p_values.empty(), "p"},
                        {cfg.full_paths, "full_paths"}});
    const BuiltScheme built = build(cfg);
    const TimeGrid grid = make_grid(require(cfg.horizon, "T"),
                                    require(cfg.steps, "n"));
    const PathEnsemble ensemble = simulate_ensemble(
        built.scheme, grid, require(cfg.paths, "paths"), require(cfg.seed, "seed"));
    const bool strict = cfg.strict.value_or(default_strict(built));
    const PositivityReport report = positivity_audit(ensemble, strict);
    write_report(out_dir, "positivity", to_csv_string(report),
                 to_json_string(report), format, log);
    log << "min_state=" << format_double(report.min_state)
        << " violations=" << report.violations << "\n";
    return report.violations == 0 ? exit_ok : exit_audit_failure;
}

int cmd_contrast(const ExperimentConfig& cfg, const std::string& out_dir,
                 OutputFormat format, std::ostream& log) {
    require_absent_for(cfg, "contrast",
                       {{cfg.steps.has_value(), "n"},
                        {cfg.finest_n.has_value(), "finest_n"},
                        {cfg.levels.has_value(), "levels"},
                        {!cfg.deltas.empty(), "deltas"},
                        {!cfg.p_values.empty(), "p"},
                        {cfg.strict.has_value(), "strict"},
                        {cfg.full_paths, "full_paths"}});
    if (cfg.model != "ait-sahalia" || cfg.scheme != "sssd") {
        throw validation_error(
            "contrast runs the ait-sahalia model with scheme = sssd");
    }
    KvMap params = cfg.model_params;
    KvMap split_kv;
    if (auto it = params.find("a"); it != params.end()) {
        split_kv["a"] = it->second;
        params.erase(it);
    }
    const ContrastSummary summary = baseline_contrast(
        ait_sahalia_from_kv(params), split_config_from_kv(split_kv),
        require(cfg.horizon, "T"), require(cfg.delta, "delta"),
        require(cfg.paths, "paths"), require(cfg.seed, "seed"));
    write_report(out_dir, "contrast", to_csv_string(summary),
                 to_json_string(summary), format, log);
    std::uint64_t sssd_violations = 0;
    for (const auto& row : summary.rows) {
        log << row.scheme << ": violations=" << row.violations
            << " nonfinite=" << row.nonfinite << "\n";
        if (row.scheme == "sssd") sssd_violations = row.violations;
    }
    return sssd_violations == 0 ? exit_ok : exit_audit_failure;
}

} // namespace sssd
