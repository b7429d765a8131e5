#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace longrun {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// Working precision for probabilities that are not rational (Gaussian shift).
using Real = boost::multiprecision::cpp_bin_float_50;

inline constexpr int kDefaultPrecision = 6;

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(int n, int k);

BigInt pow2(unsigned exponent);

/// Parses "3/16", "0.05", "1e-3" or "2" into an exact rational.
Rational parse_rational(std::string_view text);
Real parse_real(std::string_view text);

Real to_real(const Rational& value);

/// "num/den" in lowest terms ("1" and "0" for integers).
std::string fraction_string(const Rational& value);

/// Rounds to `significant_digits` significant digits; output is stable across
/// runs (no locale, no platform printf).
std::string decimal_string(const Real& value, int significant_digits);
std::string decimal_string(const Rational& value, int significant_digits);

/// A probability that is exact when the inputs were rational, and a
/// high-precision approximation otherwise. `approx` is always populated.
struct ProbValue {
  std::optional<Rational> exact;
  Real approx;

  static ProbValue from_exact(Rational value);
  static ProbValue from_real(Real value);

  bool is_exact() const { return exact.has_value(); }
};

}  // namespace longrun
