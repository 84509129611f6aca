#pragma once

#include <charconv>
#include <string>

namespace spread {

/// Shortest decimal text that round-trips the value (std::to_chars). Keeps
/// reports and CSV output byte-stable across platforms.
inline std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;  // 32 bytes always suffice for double
    return std::string(buf, ptr);
}

}  // namespace spread
