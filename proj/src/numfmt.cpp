#include "evalkit/numfmt.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace evalkit {

std::int64_t half_up_hundredths(double value) {
    return static_cast<std::int64_t>(std::floor(value * 100.0 + 0.5));
}

std::string format_hundredths(std::int64_t hundredths) {
    const bool neg = hundredths < 0;
    if (neg) hundredths = -hundredths;
    std::string frac = std::to_string(hundredths % 100);
    if (frac.size() < 2) frac.insert(frac.begin(), '0');
    return (neg ? "-" : "") + std::to_string(hundredths / 100) + "." + frac;
}

double round_sig6(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return std::strtod(buf, nullptr);
}

std::string format_roundtrip(double value) {
    char buf[40];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, end);
}

}  // namespace evalkit
