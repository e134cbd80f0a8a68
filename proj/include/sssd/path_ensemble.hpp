#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sssd/time_grid.hpp"

namespace sssd {

/// Row-major matrix of simulated paths. Each row holds n+1 states, column 0
/// being the initial state.
struct PathEnsemble {
    TimeGrid grid;
    std::uint64_t paths = 0;
    std::vector<double> data; // paths * (grid.steps + 1)

    std::span<const double> row(std::uint64_t p) const {
        const std::uint64_t w = grid.steps + 1;
        return {data.data() + p * w, w};
    }
    std::span<double> row(std::uint64_t p) {
        const std::uint64_t w = grid.steps + 1;
        return {data.data() + p * w, w};
    }
};

} // namespace sssd
