#include "domset/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace domset {

std::optional<std::int64_t> theorem_bound(std::int64_t n, int delta) {
  if (delta >= 5) return n / 3;
  if (delta == 4) return 4 * n / 11;
  return std::nullopt;
}

ClassicalBounds classical_bounds(std::int64_t n, int delta) {
  if (n < 1 || delta < 0) throw std::invalid_argument("classical_bounds needs n >= 1, delta >= 0");
  Rational harmonic = 0;
  for (int j = 1; j <= delta + 1; ++j) harmonic += Rational(1, j);
  ClassicalBounds out;
  out.arnautov = Rational(n, delta + 1) * harmonic;
  out.alon = static_cast<double>(n) * (1.0 + std::log(delta + 1.0)) / (delta + 1.0);
  out.theorem_bound = theorem_bound(n, delta);
  return out;
}

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace domset
