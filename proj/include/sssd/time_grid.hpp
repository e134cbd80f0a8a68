#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sssd {

/// Uniform partition 0 = t_0 < t_1 < ... < t_n = T with step delta = T/n.
struct TimeGrid {
    double horizon = 0.0;   // T
    std::uint64_t steps = 0; // n
    double delta = 0.0;     // T/n

    friend bool operator==(const TimeGrid& a, const TimeGrid& b) {
        return a.horizon == b.horizon && a.steps == b.steps;
    }
};

/// Builds the uniform grid with step T/n. Throws std::invalid_argument for
/// non-positive T or zero n.
inline TimeGrid make_grid(double horizon, std::uint64_t steps) {
    if (!(horizon > 0.0)) {
        throw std::invalid_argument("make_grid: horizon T must be > 0, got " +
                                    std::to_string(horizon));
    }
    if (steps < 1) {
        throw std::invalid_argument("make_grid: step count n must be >= 1");
    }
    return TimeGrid{horizon, steps, horizon / static_cast<double>(steps)};
}

} // namespace sssd
