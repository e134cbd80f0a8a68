#pragma once

#include <cstdint>
#include <vector>

#include "sssd/time_grid.hpp"

namespace sssd {

/// Wiener increments over one grid: values[k] = W(t_{k+1}) - W(t_k),
/// distributed Normal(0, delta).
struct BrownianIncrements {
    TimeGrid grid;
    std::vector<double> values;
};

/// Draws the n increments of one path. Pure function of
/// (seed, path_index, grid): repeat calls are bitwise identical.
BrownianIncrements sample_increments(std::uint64_t seed, std::uint64_t path_index,
                                     const TimeGrid& grid);

/// Collapses consecutive groups of `factor` fine increments into one coarse
/// increment by left-to-right summation. The coarse grid keeps the horizon and
/// has steps = fine.steps / factor. Throws std::invalid_argument when factor
/// < 2 or the fine step count is not divisible by factor.
///
/// Strong-error studies sample increments once at the finest level and derive
/// every coarser level this way, so all levels share one Brownian path.
BrownianIncrements coarsen_increments(const BrownianIncrements& fine,
                                      std::uint64_t factor);

} // namespace sssd
