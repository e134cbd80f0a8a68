#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sssd/brownian.hpp"
#include "sssd/time_grid.hpp"

namespace sssd {

enum class StageKind { deterministic, stochastic };

/// One exactly-solved sub-flow of a split drift: a per-step map
/// (entry state, frozen state, delta, dW) -> state. The frozen state is the
/// composed state at the step's left endpoint and feeds any coefficient that
/// the construction freezes there. Deterministic stages receive dW = 0.
///
/// Contract: flow(entry, frozen, 0, 0) == entry (a zero-duration flow is the
/// identity), and the flow is total on the scheme's state domain.
struct StageFlow {
    StageKind kind = StageKind::deterministic;
    std::string name;
    std::function<double(double entry, double frozen, double delta, double dw)> map;
};

/// An integrator assembled from stage flows applied in order within each step.
/// Stage 1 enters with the step's left-endpoint state, each later stage with
/// the previous stage's endpoint; every stage sees the same frozen state. At
/// most one stage is stochastic and it comes last.
struct ComposedScheme {
    std::vector<StageFlow> stages;
    double initial_state = 0.0;

    /// Lower bound of the state domain (0 for positivity-preserving schemes,
    /// -infinity when unconstrained). Checked on every stage entry.
    double domain_lower_bound = -std::numeric_limits<double>::infinity();

    /// Step-size ceiling required by the scheme's construction, if any,
    /// enforced by the experiment layer (not per step).
    std::optional<double> max_delta;
    std::string max_delta_reason;

    bool has_lower_bound() const {
        return domain_lower_bound > -std::numeric_limits<double>::infinity();
    }
};

/// Throws std::invalid_argument unless the scheme has at least one stage and
/// any stochastic stage is unique and last.
void validate_scheme(const ComposedScheme& scheme);

/// Advances one step of size delta with Wiener increment dw. Throws
/// std::domain_error naming the offending stage when a stage entry state
/// leaves the scheme's domain.
double step(const ComposedScheme& scheme, double state, double delta, double dw);

/// Iterates `step` over the grid. output[0] = initial state,
/// output[k+1] = step(output[k], delta, increments.values[k]). The increments
/// must live on the same grid.
std::vector<double> simulate_path(const ComposedScheme& scheme, const TimeGrid& grid,
                                  const BrownianIncrements& increments);

} // namespace sssd
