#pragma once

#include <string>

namespace transit {

// Shortest decimal string that parses back to exactly v (at most 17
// significant digits).
std::string format_shortest(double v);

// v rounded to `decimals` places, half-to-even on the exact binary value.
std::string format_fixed_half_even(double v, int decimals);

}  // namespace transit
