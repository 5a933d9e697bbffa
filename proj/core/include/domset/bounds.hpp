#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace domset {

using Rational = boost::multiprecision::cpp_rational;

struct ClassicalBounds {
  Rational arnautov;                          // n/(delta+1) * H(delta+1), exact
  double alon = 0.0;                          // n (1 + ln(delta+1)) / (delta+1)
  std::optional<std::int64_t> theorem_bound;  // floor(n/3) or floor(4n/11)
};

// Requires n >= 1 and delta >= 0; throws std::invalid_argument otherwise.
ClassicalBounds classical_bounds(std::int64_t n, int delta);

// floor(n/3) for delta >= 5, floor(4n/11) for delta == 4, nothing below.
std::optional<std::int64_t> theorem_bound(std::int64_t n, int delta);

std::string to_string(const Rational& r);
double to_double(const Rational& r);

}  // namespace domset
