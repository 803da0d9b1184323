#include "kelly/numeric.hpp"

#include <cstdio>
#include <cstdlib>

namespace kelly {

std::string format_significant(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

double round_significant(double x, int digits) {
    if (!std::isfinite(x) || x == 0.0) return x;
    return std::strtod(format_significant(x, digits).c_str(), nullptr);
}

}  // namespace kelly
