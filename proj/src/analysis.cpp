#include "sssd/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "sssd/ait_sahalia.hpp"
#include "sssd/baselines.hpp"
#include "sssd/brownian.hpp"
#include "sssd/format.hpp"

namespace sssd {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::uint64_t steps_for(double horizon, double delta) {
    const double ratio = horizon / delta;
    const auto n = static_cast<std::uint64_t>(std::llround(ratio));
    if (n < 1 || std::abs(static_cast<double>(n) * delta - horizon) >
                     1e-9 * horizon) {
        throw std::invalid_argument("delta " + format_double(delta) +
                                    " does not divide the horizon " +
                                    format_double(horizon));
    }
    return n;
}

double terminal_state(const ComposedScheme& scheme, const TimeGrid& grid,
                      const BrownianIncrements& inc) {
    double x = scheme.initial_state;
    for (std::uint64_t k = 0; k < grid.steps; ++k) {
        x = step(scheme, x, grid.delta, inc.values[k]);
    }
    return x;
}

} // namespace

OrderFit fit_order(const std::vector<std::pair<double, double>>& delta_rms) {
    if (delta_rms.size() < 2) {
        return {kNaN, kNaN, false};
    }
    double sx = 0.0, sy = 0.0;
    for (const auto& [d, e] : delta_rms) {
        sx += std::log(d);
        sy += std::log(e);
    }
    const double n = static_cast<double>(delta_rms.size());
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& [d, e] : delta_rms) {
        const double dx = std::log(d) - mx;
        const double dy = std::log(e) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        return {kNaN, kNaN, false};
    }
    const double slope = sxy / sxx;
    const double ss_res = syy - slope * sxy;
    const double r2 = (syy == 0.0) ? 1.0 : 1.0 - ss_res / syy;
    return {slope, r2, true};
}

ConvergenceReport strong_error_study(const ComposedScheme& scheme, double horizon,
                                     std::uint64_t finest_n, unsigned levels,
                                     std::uint64_t paths, std::uint64_t seed) {
    if (levels < 1) {
        throw std::invalid_argument("strong_error_study: levels must be >= 1");
    }
    if (levels >= 60 || finest_n % (std::uint64_t{1} << levels) != 0) {
        throw std::invalid_argument("strong_error_study: finest_n " +
                                    std::to_string(finest_n) +
                                    " not divisible by 2^" + std::to_string(levels));
    }
    if (paths < 2) {
        throw std::invalid_argument("strong_error_study: paths must be >= 2");
    }
    const TimeGrid fine_grid = make_grid(horizon, finest_n);

    std::vector<double> sum_sq(levels, 0.0), sum_abs(levels, 0.0);
    for (std::uint64_t p = 0; p < paths; ++p) {
        const BrownianIncrements fine = sample_increments(seed, p, fine_grid);
        double fine_total = 0.0;
        for (double v : fine.values) fine_total += v;
        const double reference = terminal_state(scheme, fine_grid, fine);

        for (unsigned k = 1; k <= levels; ++k) {
            const BrownianIncrements coarse =
                coarsen_increments(fine, std::uint64_t{1} << k);
            double coarse_total = 0.0;
            for (double v : coarse.values) coarse_total += v;
            if (std::abs(coarse_total - fine_total) >
                1e-12 * std::max(1.0, std::abs(fine_total))) {
                throw std::logic_error(
                    "strong_error_study: coupling checksum failed");
            }
            const double terminal = terminal_state(scheme, coarse.grid, coarse);
            const double err = terminal - reference;
            sum_sq[k - 1] += err * err;
            sum_abs[k - 1] += std::abs(err);
        }
    }

    ConvergenceReport report;
    report.paths = paths;
    report.seed = seed;
    report.finest_n = finest_n;
    report.horizon = horizon;
    std::vector<std::pair<double, double>> fit_points;
    for (unsigned k = levels; k >= 1; --k) {
        ConvergenceLevel lvl;
        lvl.delta = fine_grid.delta * static_cast<double>(std::uint64_t{1} << k);
        lvl.rms_error = std::sqrt(sum_sq[k - 1] / static_cast<double>(paths));
        lvl.mean_abs_error = sum_abs[k - 1] / static_cast<double>(paths);
        lvl.excluded_from_fit = (lvl.rms_error == 0.0);
        if (!lvl.excluded_from_fit) {
            fit_points.emplace_back(lvl.delta, lvl.rms_error);
        }
        report.levels.push_back(lvl);
    }
    ConvergenceLevel ref;
    ref.delta = fine_grid.delta;
    ref.rms_error = 0.0;
    ref.mean_abs_error = 0.0;
    ref.is_reference = true;
    ref.excluded_from_fit = true;
    report.levels.push_back(ref);

    const OrderFit fit = fit_order(fit_points);
    report.estimated_order = fit.order;
    report.regression_r2 = fit.r2;
    report.order_defined = fit.defined;
    return report;
}

MomentReport moment_study(const ComposedScheme& scheme, double p,
                          const std::vector<double>& deltas, double horizon,
                          std::uint64_t paths, std::uint64_t seed) {
    if (!(p >= 0.0)) {
        throw std::invalid_argument("moment_study: p must be >= 0");
    }
    if (paths < 1) {
        throw std::invalid_argument("moment_study: paths must be >= 1");
    }
    MomentReport report;
    report.p = p;
    report.paths = paths;
    report.seed = seed;
    report.horizon = horizon;
    report.max_over_deltas = -std::numeric_limits<double>::infinity();
    for (double delta : deltas) {
        if (scheme.max_delta && !(delta < *scheme.max_delta)) {
            throw std::invalid_argument("moment_study: delta " +
                                        format_double(delta) + " rejected: " +
                                        scheme.max_delta_reason);
        }
        const TimeGrid grid = make_grid(horizon, steps_for(horizon, delta));
        double sum = 0.0, sum_sq = 0.0;
        for (std::uint64_t path = 0; path < paths; ++path) {
            const BrownianIncrements inc = sample_increments(seed, path, grid);
            const double terminal = terminal_state(scheme, grid, inc);
            const double v = std::pow(std::abs(terminal), p);
            sum += v;
            sum_sq += v * v;
        }
        const double n = static_cast<double>(paths);
        const double mean = sum / n;
        const double var =
            (paths > 1) ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0))
                        : 0.0;
        MomentLevel lvl{delta, mean, std::sqrt(var / n)};
        report.per_delta.push_back(lvl);
        report.max_over_deltas = std::max(report.max_over_deltas, mean);
    }
    if (report.per_delta.empty()) {
        report.max_over_deltas = kNaN;
    }
    return report;
}

PathEnsemble simulate_ensemble(const ComposedScheme& scheme, const TimeGrid& grid,
                               std::uint64_t paths, std::uint64_t seed) {
    PathEnsemble out;
    out.grid = grid;
    out.paths = paths;
    out.data.resize(paths * (grid.steps + 1));
    for (std::uint64_t p = 0; p < paths; ++p) {
        const BrownianIncrements inc = sample_increments(seed, p, grid);
        const std::vector<double> path = simulate_path(scheme, grid, inc);
        std::copy(path.begin(), path.end(), out.row(p).begin());
    }
    return out;
}

PositivityReport positivity_audit(const PathEnsemble& ensemble, bool strict) {
    PositivityReport report;
    report.paths = ensemble.paths;
    report.steps = ensemble.grid.steps;
    report.strict = strict;
    report.min_state = kNaN;
    double min_state = std::numeric_limits<double>::infinity();
    bool scanned = false;
    for (std::uint64_t p = 0; p < ensemble.paths; ++p) {
        const auto row = ensemble.row(p);
        for (std::uint64_t k = 1; k < row.size(); ++k) {
            const double v = row[k];
            scanned = true;
            if (strict ? (v <= 0.0) : (v < 0.0)) {
                ++report.violations;
            }
            if (v < min_state) {
                min_state = v;
            }
        }
    }
    if (scanned) {
        report.min_state = min_state;
    }
    return report;
}

ContrastSummary baseline_contrast(const AitSahaliaParams& params,
                                  const SplitConfig& cfg, double horizon,
                                  double delta, std::uint64_t paths,
                                  std::uint64_t seed) {
    validate(params);
    validate(cfg);
    ContrastSummary summary;
    summary.delta = delta;
    summary.horizon = horizon;
    summary.paths = paths;
    summary.seed = seed;
    ContrastRow sssd_row{"sssd", "y", 0, 0, kNaN};
    ContrastRow em_row{"euler-maruyama", "x", 0, 0, kNaN};
    if (paths == 0) {
        summary.rows = {sssd_row, em_row};
        return summary;
    }

    const TimeGrid grid = make_grid(horizon, steps_for(horizon, delta));
    double sssd_min = std::numeric_limits<double>::infinity();
    double em_min = std::numeric_limits<double>::infinity();
    const double y0 = transform_to_y(params.x0);
    for (std::uint64_t p = 0; p < paths; ++p) {
        const BrownianIncrements inc = sample_increments(seed, p, grid);
        double y = y0;
        double x = params.x0;
        for (std::uint64_t k = 0; k < grid.steps; ++k) {
            y = ait_sahalia_step(y, params, cfg, grid.delta, inc.values[k]);
            if (!std::isfinite(y)) ++sssd_row.nonfinite;
            if (y <= 0.0) ++sssd_row.violations;
            if (y < sssd_min) sssd_min = y;

            if (x == 0.0) {
                // a1/x undefined; the remaining states never leave the boundary
                em_row.violations += grid.steps - k;
                break;
            }
            x = euler_maruyama_step(x, params, grid.delta, inc.values[k]);
            if (!std::isfinite(x)) ++em_row.nonfinite;
            if (x <= 0.0) ++em_row.violations;
            if (x < em_min) em_min = x;
        }
    }
    if (std::isfinite(sssd_min)) sssd_row.min_state = sssd_min;
    if (std::isfinite(em_min)) em_row.min_state = em_min;
    summary.rows = {sssd_row, em_row};
    return summary;
}

namespace {

using nlohmann::json;

json level_to_json(const ConvergenceLevel& l) {
    return json{{"delta", l.delta},
                {"rms_error", l.rms_error},
                {"mean_abs_error", l.mean_abs_error},
                {"is_reference", l.is_reference},
                {"excluded_from_fit", l.excluded_from_fit}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string to_json_string(const ConvergenceReport& r) {
    json levels = json::array();
    for (const auto& l : r.levels) levels.push_back(level_to_json(l));
    return dump(json{{"levels", levels},
                     {"estimated_order", r.estimated_order},
                     {"regression_r2", r.regression_r2},
                     {"order_defined", r.order_defined},
                     {"paths", r.paths},
                     {"seed", r.seed},
                     {"finest_n", r.finest_n},
                     {"horizon", r.horizon}});
}

std::string to_json_string(const MomentReport& r) {
    json levels = json::array();
    for (const auto& l : r.per_delta) {
        levels.push_back(json{{"delta", l.delta},
                              {"empirical_moment", l.empirical_moment},
                              {"std_error", l.std_error}});
    }
    return dump(json{{"p", r.p},
                     {"per_delta", levels},
                     {"max_over_deltas", r.max_over_deltas},
                     {"paths", r.paths},
                     {"seed", r.seed},
                     {"horizon", r.horizon}});
}

std::string to_json_string(const PositivityReport& r) {
    return dump(json{{"paths", r.paths},
                     {"steps", r.steps},
                     {"min_state", r.min_state},
                     {"violations", r.violations},
                     {"strict", r.strict}});
}

std::string to_json_string(const ContrastSummary& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back(json{{"scheme", row.scheme},
                            {"space", row.space},
                            {"violations", row.violations},
                            {"nonfinite", row.nonfinite},
                            {"min_state", row.min_state}});
    }
    return dump(json{{"delta", r.delta},
                     {"horizon", r.horizon},
                     {"paths", r.paths},
                     {"seed", r.seed},
                     {"rows", rows}});
}

std::string to_csv_string(const ConvergenceReport& r) {
    std::string out = "delta,rms_error,mean_abs_error,n_paths,seed\n";
    for (const auto& l : r.levels) {
        out += format_double(l.delta) + "," + format_double(l.rms_error) + "," +
               format_double(l.mean_abs_error) + "," + std::to_string(r.paths) +
               "," + std::to_string(r.seed) + "\n";
    }
    return out;
}

std::string to_csv_string(const MomentReport& r) {
    std::string out = "delta,empirical_moment,std_error,p,n_paths,seed\n";
    for (const auto& l : r.per_delta) {
        out += format_double(l.delta) + "," + format_double(l.empirical_moment) +
               "," + format_double(l.std_error) + "," + format_double(r.p) + "," +
               std::to_string(r.paths) + "," + std::to_string(r.seed) + "\n";
    }
    return out;
}

std::string to_csv_string(const PositivityReport& r) {
    std::string out = "paths,steps,min_state,violations,strict\n";
    out += std::to_string(r.paths) + "," + std::to_string(r.steps) + "," +
           format_double(r.min_state) + "," + std::to_string(r.violations) + "," +
           (r.strict ? "true" : "false") + "\n";
    return out;
}

std::string to_csv_string(const ContrastSummary& r) {
    std::string out = "scheme,space,violations,nonfinite,min_state,delta,n_paths,seed\n";
    for (const auto& row : r.rows) {
        out += row.scheme + "," + row.space + "," + std::to_string(row.violations) +
               "," + std::to_string(row.nonfinite) + "," +
               format_double(row.min_state) + "," + format_double(r.delta) + "," +
               std::to_string(r.paths) + "," + std::to_string(r.seed) + "\n";
    }
    return out;
}

} // namespace sssd
