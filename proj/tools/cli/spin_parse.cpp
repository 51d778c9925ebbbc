#include "cli/spin_parse.hpp"

#include <charconv>

#include "cli/errors.hpp"

namespace otto::cli {

namespace {

constexpr long long kMaxTwoS = 1000;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

long long to_integer(std::string_view s, std::string_view whole) {
  if (!all_digits(s) || s.size() > 9) throw UsageError("invalid spin '" + std::string(whole) + "'");
  long long v = 0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

}  // namespace

int parse_spin(std::string_view text) {
  const auto bad = [&](const char* why) {
    return UsageError("invalid spin '" + std::string(text) + "': " + why);
  };
  long long twoS = 0;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const long long num = to_integer(text.substr(0, slash), text);
    const long long den = to_integer(text.substr(slash + 1), text);
    if (den == 0) throw bad("zero denominator");
    if ((2 * num) % den != 0) throw bad("not a half-integer");
    twoS = 2 * num / den;
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const long long whole = to_integer(text.substr(0, dot), text);
    std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) throw bad("malformed decimal");
    while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
    if (frac.empty()) {
      twoS = 2 * whole;
    } else if (frac == "5") {
      twoS = 2 * whole + 1;
    } else {
      throw bad("not a half-integer");
    }
  } else {
    twoS = 2 * to_integer(text, text);
  }
  if (twoS <= 0) throw bad("spin must be positive");
  if (twoS > kMaxTwoS) throw bad("spin too large");
  return static_cast<int>(twoS);
}

std::string spin_label(int twoS) {
  if (twoS % 2 == 0) return std::to_string(twoS / 2);
  return std::to_string(twoS) + "/2";
}

}  // namespace otto::cli
