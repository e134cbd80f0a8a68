#pragma once

#include <charconv>
#include <string>

namespace sssd {

/// Shortest round-trip decimal form of a double, locale-independent. All
/// report writers go through this so that identical runs produce identical
/// bytes.
inline std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

} // namespace sssd
