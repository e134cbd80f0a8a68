#include "sssd/stage_flow.hpp"

#include <stdexcept>

namespace sssd {

void validate_scheme(const ComposedScheme& scheme) {
    if (scheme.stages.empty()) {
        throw std::invalid_argument("scheme must have at least one stage");
    }
    std::size_t stochastic = 0;
    for (const auto& s : scheme.stages) {
        if (s.kind == StageKind::stochastic) ++stochastic;
    }
    if (stochastic > 1) {
        throw std::invalid_argument("scheme may have at most one stochastic stage");
    }
    if (stochastic == 1 && scheme.stages.back().kind != StageKind::stochastic) {
        throw std::invalid_argument("the stochastic stage must come last");
    }
}

double step(const ComposedScheme& scheme, double state, double delta, double dw) {
    const double frozen = state;
    double x = state;
    const bool bounded = scheme.has_lower_bound();
    for (const auto& stage : scheme.stages) {
        if (bounded && !(x >= scheme.domain_lower_bound)) {
            throw std::domain_error("state " + std::to_string(x) +
                                    " outside domain at stage '" + stage.name + "'");
        }
        x = stage.map(x, frozen, delta,
                      stage.kind == StageKind::stochastic ? dw : 0.0);
    }
    return x;
}

std::vector<double> simulate_path(const ComposedScheme& scheme, const TimeGrid& grid,
                                  const BrownianIncrements& increments) {
    if (!(increments.grid == grid)) {
        throw std::invalid_argument("simulate_path: increments grid does not match");
    }
    std::vector<double> out(grid.steps + 1);
    out[0] = scheme.initial_state;
    for (std::uint64_t k = 0; k < grid.steps; ++k) {
        out[k + 1] = step(scheme, out[k], grid.delta, increments.values[k]);
    }
    return out;
}

} // namespace sssd
