#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace rumor {

/// Doubles serialized with 17 significant digits round-trip exactly.
inline std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Empty cell for NaN (a value the column genuinely lacks), g17 otherwise.
inline std::string g17_or_blank(double v) {
    return std::isnan(v) ? std::string{} : g17(v);
}

} // namespace rumor
