#include "longrun/alternative_power.hpp"

#include <boost/math/special_functions/erf.hpp>

#include "longrun/conditional_counts.hpp"
#include "longrun/errors.hpp"

namespace longrun {

namespace {

void require_open_unit(const Real& p) {
  if (!(p > 0 && p < 1)) {
    throw Error(ErrorCode::InvalidArgument,
                "p must lie strictly between 0 and 1, got " + decimal_string(p, 20));
  }
}

}  // namespace

AlternativeSpec AlternativeSpec::direct(const Rational& p) {
  if (p <= 0 || p >= 1) {
    throw Error(ErrorCode::InvalidArgument,
                "p must lie strictly between 0 and 1, got " + fraction_string(p));
  }
  AlternativeSpec spec;
  spec.exact_p_ = p;
  spec.p_ = to_real(p);
  return spec;
}

AlternativeSpec AlternativeSpec::direct(const Real& p) {
  require_open_unit(p);
  AlternativeSpec spec;
  spec.p_ = p;
  return spec;
}

AlternativeSpec AlternativeSpec::gaussian_shift(const Real& shift, const Real& sigma) {
  AlternativeSpec spec;
  spec.origin_ = Origin::gaussian_shift;
  spec.shift_ = shift;
  spec.sigma_ = sigma;
  spec.p_ = p_from_gaussian_shift(shift, sigma);
  require_open_unit(spec.p_);
  if (shift == 0) spec.exact_p_ = Rational(1, 2);
  return spec;
}

AlternativeSpec AlternativeSpec::complement() const {
  AlternativeSpec spec = *this;
  spec.p_ = 1 - p_;
  if (exact_p_) spec.exact_p_ = 1 - *exact_p_;
  spec.shift_ = -shift_;
  return spec;
}

Real p_from_gaussian_shift(const Real& shift, const Real& sigma) {
  if (!(sigma > 0)) {
    throw Error(ErrorCode::InvalidArgument, "sigma must be positive");
  }
  // Residual = error + shift is positive with probability Pr(error > -shift).
  Real z = shift / sigma;
  if (boost::multiprecision::isinf(z)) return z > 0 ? Real(1) : Real(0);
  return boost::math::erfc(-z / boost::multiprecision::sqrt(Real(2))) / 2;
}

ProbValue binomial_mixture(const std::vector<BigInt>& counts, const AlternativeSpec& spec) {
  const int n = static_cast<int>(counts.size()) - 1;
  if (const auto& exact = spec.exact_p()) {
    const BigInt& num = numerator(*exact);
    const BigInt& den = denominator(*exact);
    const BigInt other = den - num;
    // sum_k c_k num^k other^(n-k) / den^n
    std::vector<BigInt> other_powers(static_cast<std::size_t>(n) + 1);
    other_powers[0] = 1;
    for (int i = 1; i <= n; ++i) other_powers[i] = other_powers[i - 1] * other;
    BigInt total = 0;
    BigInt num_power = 1;
    for (int k = 0; k <= n; ++k) {
      if (!counts[k].is_zero()) total += counts[k] * num_power * other_powers[n - k];
      num_power *= num;
    }
    return ProbValue::from_exact(Rational(total, boost::multiprecision::pow(den, static_cast<unsigned>(n))));
  }
  const Real& p = spec.p();
  const Real q = 1 - p;
  std::vector<Real> q_powers(static_cast<std::size_t>(n) + 1);
  q_powers[0] = 1;
  for (int i = 1; i <= n; ++i) q_powers[i] = q_powers[i - 1] * q;
  Real total = 0;
  Real p_power = 1;
  for (int k = 0; k <= n; ++k) {
    if (!counts[k].is_zero()) total += Real(counts[k]) * p_power * q_powers[n - k];
    p_power *= p;
  }
  return ProbValue::from_real(total);
}

ProbValue alt_cdf(int n, int x, const AlternativeSpec& spec) {
  if (n < 1 || x < 0 || x > n) {
    throw Error(ErrorCode::InvalidArgument,
                "alt_cdf needs n >= 1 and 0 <= x <= n (n=" + std::to_string(n) +
                    ", x=" + std::to_string(x) + ")");
  }
  if (x == 0) return ProbValue::from_exact(0);
  return binomial_mixture(snk_cached(n, x)->counts, spec);
}

ProbabilityTable alternative_table(int n, const Rational& p) {
  auto spec = AlternativeSpec::direct(p);
  std::vector<Rational> pmf(static_cast<std::size_t>(n) + 1, Rational(0));
  Rational previous = 0;
  for (int x = 1; x <= n; ++x) {
    Rational current = *alt_cdf(n, x, spec).exact;
    pmf[x] = current - previous;
    previous = current;
  }
  return make_table(n, std::move(pmf), Regime::alternative, p);
}

PowerResult power(int n, const Rational& alpha, Tail tail, Convention convention,
                  const AlternativeSpec& spec) {
  PowerResult result;
  result.n = n;
  result.alpha = alpha;
  result.tail = tail;
  result.convention = convention;
  result.spec = spec;
  result.region = rejection_region(n, alpha, tail, convention);
  const auto& region = result.region;
  if (region.lower > region.upper) {
    result.power = ProbValue::from_exact(1);
    return result;
  }
  // power = 1 - Pr(lower <= L_n <= upper)
  ProbValue upper = alt_cdf(n, std::min(region.upper, n), spec);
  ProbValue below = alt_cdf(n, std::clamp(region.lower - 1, 0, n), spec);
  if (upper.exact && below.exact) {
    result.power = ProbValue::from_exact(1 - (*upper.exact - *below.exact));
  } else {
    result.power = ProbValue::from_real(1 - (upper.approx - below.approx));
  }
  return result;
}

}  // namespace longrun
