#include "sssd/brownian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sssd/rng.hpp"

namespace sssd {

BrownianIncrements sample_increments(std::uint64_t seed, std::uint64_t path_index,
                                     const TimeGrid& grid) {
    if (!(grid.delta > 0.0) || grid.steps < 1) {
        throw std::invalid_argument("sample_increments: invalid grid");
    }
    RngStream rng(seed, path_index);
    const double scale = std::sqrt(grid.delta);
    BrownianIncrements out{grid, std::vector<double>(grid.steps)};
    for (auto& v : out.values) {
        v = scale * rng.next_normal();
    }
    return out;
}

BrownianIncrements coarsen_increments(const BrownianIncrements& fine,
                                      std::uint64_t factor) {
    if (factor < 2) {
        throw std::invalid_argument("coarsen_increments: factor must be >= 2");
    }
    if (fine.grid.steps % factor != 0) {
        throw std::invalid_argument(
            "coarsen_increments: step count " + std::to_string(fine.grid.steps) +
            " not divisible by factor " + std::to_string(factor));
    }
    const std::uint64_t coarse_steps = fine.grid.steps / factor;
    BrownianIncrements out{make_grid(fine.grid.horizon, coarse_steps),
                           std::vector<double>(coarse_steps)};
    for (std::uint64_t k = 0; k < coarse_steps; ++k) {
        double sum = 0.0;
        for (std::uint64_t j = 0; j < factor; ++j) {
            sum += fine.values[k * factor + j];
        }
        out.values[k] = sum;
    }
    return out;
}

} // namespace sssd
