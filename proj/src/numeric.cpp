#include "longrun/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

#include "longrun/errors.hpp"

namespace longrun {

namespace {

using WideReal = boost::multiprecision::cpp_bin_float_100;

std::string trim(std::string_view text) {
  auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  auto end = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(begin, end - begin + 1));
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::InvalidArgument,
              "not a number: '" + std::string(text) + "'");
}

// Decimal literal ([+-]digits[.digits][e[+-]digits]) to an exact rational.
Rational parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt mantissa = 0;
  int scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mantissa = mantissa * 10 + (ch - '0');
      any_digit = true;
      if (seen_point) --scale;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) bad_number(text);
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') bad_number(text);
    ++pos;
    std::size_t consumed = 0;
    int exponent = 0;
    try {
      exponent = std::stoi(text.substr(pos), &consumed);
    } catch (const std::exception&) {
      bad_number(text);
    }
    if (consumed == 0 || pos + consumed != text.size()) bad_number(text);
    if (exponent > 4000 || exponent < -4000) bad_number(text);
    scale += exponent;
  }
  Rational result(mantissa);
  BigInt ten_power = boost::multiprecision::pow(BigInt(10), std::abs(scale));
  if (scale >= 0) {
    result *= ten_power;
  } else {
    result /= ten_power;
  }
  return negative ? Rational(-result) : result;
}

}  // namespace

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt pow2(unsigned exponent) {
  BigInt result = 1;
  result <<= exponent;
  return result;
}

Rational parse_rational(std::string_view raw) {
  std::string text = trim(raw);
  if (text.empty()) bad_number(raw);
  auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  Rational num = parse_decimal(trim(text.substr(0, slash)));
  Rational den = parse_decimal(trim(text.substr(slash + 1)));
  if (den == 0) {
    throw Error(ErrorCode::InvalidArgument, "zero denominator: '" + text + "'");
  }
  return num / den;
}

Real parse_real(std::string_view raw) {
  std::string text = trim(raw);
  std::string lowered = text;
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lowered == "inf" || lowered == "+inf" || lowered == "infinity") {
    return std::numeric_limits<Real>::infinity();
  }
  if (lowered == "-inf" || lowered == "-infinity") {
    return -std::numeric_limits<Real>::infinity();
  }
  return to_real(parse_rational(text));
}

Real to_real(const Rational& value) {
  return Real(WideReal(numerator(value)) / WideReal(denominator(value)));
}

std::string fraction_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string decimal_string(const Real& value, int significant_digits) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << std::setprecision(std::clamp(significant_digits, 1, 45)) << value;
  return out.str();
}

std::string decimal_string(const Rational& value, int significant_digits) {
  WideReal wide = WideReal(numerator(value)) / WideReal(denominator(value));
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << std::setprecision(std::clamp(significant_digits, 1, 90)) << wide;
  return out.str();
}

ProbValue ProbValue::from_exact(Rational value) {
  ProbValue result;
  result.approx = to_real(value);
  result.exact = std::move(value);
  return result;
}

ProbValue ProbValue::from_real(Real value) {
  ProbValue result;
  result.approx = std::move(value);
  return result;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroResidual: return "ZeroResidual";
    case ErrorCode::EmptyAfterDrop: return "EmptyAfterDrop";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::ObservedOutOfRange: return "ObservedOutOfRange";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::RecursionDomain: return "RecursionDomain";
    case ErrorCode::UnreconciledCase: return "UnreconciledCase";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingColumns: return "MissingColumns";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
  }
  return "Unknown";
}

}  // namespace longrun
