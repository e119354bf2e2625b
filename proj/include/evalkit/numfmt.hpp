#pragma once

#include <cstdint>
#include <string>

namespace evalkit {

/// Half-up rounding of a nonnegative value to integer hundredths
/// (62.2328 -> 6223).
std::int64_t half_up_hundredths(double value);

/// "6223" -> "62.23"; fixed two decimals.
std::string format_hundredths(std::int64_t hundredths);

/// Nearest double with 6 significant decimal digits.
double round_sig6(double value);

/// Shortest decimal text that parses back to exactly the same double.
std::string format_roundtrip(double value);

}  // namespace evalkit
