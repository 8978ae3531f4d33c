#include "transit/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace transit {

std::string format_shortest(double v) {
  if (v == 0) return "0";  // folds -0
  std::array<char, 64> buf{};
  auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), r.ptr};
}

std::string format_fixed_half_even(double v, int decimals) {
  if (!std::isfinite(v)) throw std::invalid_argument("format_fixed_half_even: non-finite value");
  if (decimals < 0) throw std::invalid_argument("format_fixed_half_even: negative decimals");
  // 1100 fractional digits cover the longest exact expansion of a double
  // (1074 for the smallest subnormal), so the digits below are exact.
  constexpr int kExact = 1100;
  std::string buf(kExact + 400, '\0');
  auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, kExact);
  buf.resize(static_cast<std::size_t>(r.ptr - buf.data()));

  const bool negative = buf.front() == '-';
  std::string digits = buf.substr(negative ? 1 : 0);
  const auto dot = digits.find('.');
  const std::string int_part = digits.substr(0, dot);
  const std::string frac = digits.substr(dot + 1);

  std::string kept = int_part + frac.substr(0, static_cast<std::size_t>(decimals));
  const std::string rest = frac.substr(static_cast<std::size_t>(decimals));

  bool round_up = false;
  if (!rest.empty()) {
    if (rest[0] > '5') {
      round_up = true;
    } else if (rest[0] == '5') {
      const bool above_half = rest.find_first_not_of('0', 1) != std::string::npos;
      round_up = above_half || ((kept.back() - '0') % 2 == 1);
    }
  }
  if (round_up) {
    std::size_t i = kept.size();
    while (i > 0) {
      --i;
      if (kept[i] == '9') {
        kept[i] = '0';
      } else {
        ++kept[i];
        break;
      }
      if (i == 0) kept.insert(kept.begin(), '1');
    }
  }

  const std::size_t int_len = kept.size() - static_cast<std::size_t>(decimals);
  std::string out = kept.substr(0, int_len);
  if (decimals > 0) out += "." + kept.substr(int_len);
  if (negative && out.find_first_not_of("0.") != std::string::npos) out.insert(out.begin(), '-');
  return out;
}

}  // namespace transit
