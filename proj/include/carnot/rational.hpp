#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace carnot {

// Exact arbitrary-precision arithmetic. BCH coefficients reach 1/720 and
// products thereof, so machine integers are not an option.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_text(const Rat &q) { return q.str(); }

inline Rat rat_of(long long num, long long den = 1) { return Rat(num, den); }

// Parses "3", "-5/7". Throws on malformed input or zero denominator.
inline Rat rat_parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(Int(std::string(s)));
    Int num{std::string(s.substr(0, slash))};
    Int den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception &) {
    throw std::invalid_argument("bad rational literal: " + std::string(s));
  }
}

} // namespace carnot
