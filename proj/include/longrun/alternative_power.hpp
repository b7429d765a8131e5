#pragma once

#include <optional>
#include <string>

#include "longrun/exact_null.hpp"
#include "longrun/numeric.hpp"

namespace longrun {

/// Probability p that a residual is positive under a constant-shift
/// alternative. Kept exact when given as a rational.
class AlternativeSpec {
 public:
  enum class Origin { direct, gaussian_shift };

  static AlternativeSpec direct(const Rational& p);
  static AlternativeSpec direct(const Real& p);
  /// p = Phi(shift / sigma).
  static AlternativeSpec gaussian_shift(const Real& shift, const Real& sigma);

  Origin origin() const { return origin_; }
  const std::optional<Rational>& exact_p() const { return exact_p_; }
  const Real& p() const { return p_; }
  const Real& shift() const { return shift_; }
  const Real& sigma() const { return sigma_; }

  /// Same spec with p replaced by 1 - p.
  AlternativeSpec complement() const;

 private:
  AlternativeSpec() = default;

  Origin origin_ = Origin::direct;
  std::optional<Rational> exact_p_;
  Real p_;
  Real shift_ = 0;
  Real sigma_ = 1;
};

/// Phi(shift / sigma), standard normal CDF in working precision.
Real p_from_gaussian_shift(const Real& shift, const Real& sigma);

/// Pr(L_n <= x) = sum_k S_n^(k)(x) p^k (1-p)^(n-k); 0 <= x <= n.
ProbValue alt_cdf(int n, int x, const AlternativeSpec& spec);

/// Exact law of L_n under a rational p.
ProbabilityTable alternative_table(int n, const Rational& p);

/// sum_k counts[k] p^k (1-p)^(n-k), exact when p is rational.
ProbValue binomial_mixture(const std::vector<BigInt>& counts, const AlternativeSpec& spec);

struct PowerResult {
  int n = 0;
  Rational alpha;
  Tail tail = Tail::unilateral;
  Convention convention = Convention::paper;
  AlternativeSpec spec = AlternativeSpec::direct(Rational(1, 2));
  RejectionRegion region;
  ProbValue power;
};

PowerResult power(int n, const Rational& alpha, Tail tail, Convention convention,
                  const AlternativeSpec& spec);

}  // namespace longrun
