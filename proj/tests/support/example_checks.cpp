#include "support/example_checks.hpp"

namespace checks {
const std::vector<ExampleCheck>& all_example_checks() {
    static const std::vector<ExampleCheck> registry;
    return registry;
}
} // namespace checks
