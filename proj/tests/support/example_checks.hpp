#pragma once

#include <functional>
#include <string>
#include <vector>

namespace checks {

/// One spec'd behavior of one operation: run() throws std::runtime_error with
/// a diagnostic when the behavior does not hold.
struct ExampleCheck {
    std::string name;
    std::function<void()> run;
};

/// The full registry, shared between the unit suites and the acceptance
/// runner.
const std::vector<ExampleCheck>& all_example_checks();

} // namespace checks
