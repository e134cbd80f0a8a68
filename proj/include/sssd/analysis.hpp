#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sssd/params.hpp"
#include "sssd/path_ensemble.hpp"
#include "sssd/stage_flow.hpp"

namespace sssd {

/// One row of a coupled-refinement study. The reference row is the finest
/// level compared against itself; its error is exactly zero and it is
/// excluded from the order regression, as is any other zero-error level.
struct ConvergenceLevel {
    double delta = 0.0;
    double rms_error = 0.0;
    double mean_abs_error = 0.0;
    bool is_reference = false;
    bool excluded_from_fit = false;
};

struct ConvergenceReport {
    std::vector<ConvergenceLevel> levels; // sorted by decreasing delta
    double estimated_order = 0.0;         // NaN when undefined
    double regression_r2 = 0.0;           // NaN when undefined
    bool order_defined = false;
    std::uint64_t paths = 0;
    std::uint64_t seed = 0;
    std::uint64_t finest_n = 0;
    double horizon = 0.0;
};

struct MomentLevel {
    double delta = 0.0;
    double empirical_moment = 0.0;
    double std_error = 0.0;
};

struct MomentReport {
    double p = 0.0;
    std::vector<MomentLevel> per_delta;
    double max_over_deltas = 0.0;
    std::uint64_t paths = 0;
    std::uint64_t seed = 0;
    double horizon = 0.0;
};

struct PositivityReport {
    std::uint64_t paths = 0;
    std::uint64_t steps = 0;
    double min_state = 0.0;
    std::uint64_t violations = 0;
    bool strict = true;
};

struct ContrastRow {
    std::string scheme;
    std::string space;              // "x" or "y"
    std::uint64_t violations = 0;   // states <= 0
    std::uint64_t nonfinite = 0;
    double min_state = 0.0;         // over finite states; NaN when none
};

struct ContrastSummary {
    double delta = 0.0;
    double horizon = 0.0;
    std::uint64_t paths = 0;
    std::uint64_t seed = 0;
    std::vector<ContrastRow> rows;
};

/// Least-squares fit of log(rms) against log(delta). Undefined (NaN order/r2)
/// with fewer than two points.
struct OrderFit {
    double order;
    double r2;
    bool defined;
};
OrderFit fit_order(const std::vector<std::pair<double, double>>& delta_rms);

/// Coupled strong-error study against self-refinement: increments are sampled
/// once per path at the finest grid (horizon/finest_n) and every level k =
/// 1..levels is the same path coarsened by 2^k, so all levels ride one
/// Brownian path. Errors are measured at the terminal time against the
/// finest-level simulation. Requires finest_n divisible by 2^levels and
/// paths >= 2.
ConvergenceReport strong_error_study(const ComposedScheme& scheme, double horizon,
                                     std::uint64_t finest_n, unsigned levels,
                                     std::uint64_t paths, std::uint64_t seed);

/// Empirical p-th moment of the terminal state for each step size, with Monte
/// Carlo standard errors. Each delta must divide the horizon into a whole
/// number of steps and must respect the scheme's step ceiling (the default
/// split parameter requires delta < 1).
MomentReport moment_study(const ComposedScheme& scheme, double p,
                          const std::vector<double>& deltas, double horizon,
                          std::uint64_t paths, std::uint64_t seed);

/// Simulates `paths` independent paths of the scheme on the grid.
PathEnsemble simulate_ensemble(const ComposedScheme& scheme, const TimeGrid& grid,
                               std::uint64_t paths, std::uint64_t seed);

/// Counts boundary violations among the generated states (columns 1..n; the
/// initial column is caller input, not scheme output). strict counts
/// states <= 0, non-strict counts states < 0. min_state is the smallest
/// scanned state, NaN when nothing was scanned.
PositivityReport positivity_audit(const PathEnsemble& ensemble, bool strict);

/// Runs the Euler baseline (x coordinates) and the split-step scheme
/// (y coordinates) over the same Brownian increments and tallies boundary
/// violations and non-finite states per scheme.
ContrastSummary baseline_contrast(const AitSahaliaParams& params,
                                  const SplitConfig& cfg, double horizon,
                                  double delta, std::uint64_t paths,
                                  std::uint64_t seed);

/// Machine-readable report forms. JSON objects have sorted keys and doubles
/// are written in shortest round-trip form, so equal reports serialize to
/// equal bytes. CSV columns: convergence delta,rms_error,mean_abs_error,
/// n_paths,seed; moments delta,empirical_moment,std_error,p,n_paths,seed;
/// positivity paths,steps,min_state,violations,strict; contrast scheme,space,
/// violations,nonfinite,min_state,delta,n_paths,seed.
std::string to_json_string(const ConvergenceReport& r);
std::string to_json_string(const MomentReport& r);
std::string to_json_string(const PositivityReport& r);
std::string to_json_string(const ContrastSummary& r);
std::string to_csv_string(const ConvergenceReport& r);
std::string to_csv_string(const MomentReport& r);
std::string to_csv_string(const PositivityReport& r);
std::string to_csv_string(const ContrastSummary& r);

} // namespace sssd
