#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "longrun/discrepancy.hpp"
#include "longrun/numeric.hpp"

namespace longrun {

enum class Regime { null, alternative };
enum class Convention { paper, conservative };
enum class Tail { unilateral, bilateral };

std::string to_string(Convention convention);
std::string to_string(Tail tail);

/// Exact law of L_n. pmf and cdf are indexed by k = 0..n (pmf[0] = 0).
struct ProbabilityTable {
  int n = 0;
  std::vector<Rational> pmf;
  std::vector<Rational> cdf;
  Regime regime = Regime::null;
  std::optional<Rational> p;  // set for the alternative regime

  /// Pr(L_n > c); 1 for c < 1, 0 for c >= n.
  Rational tail_above(int c) const;
  /// Pr(L_n <= c) with the same clamping.
  Rational cdf_at(int c) const;
};

/// Fills cdf from pmf.
ProbabilityTable make_table(int n, std::vector<Rational> pmf, Regime regime,
                            std::optional<Rational> p = std::nullopt);

/// Strings with every run <= k number 2 * (compositions of n into parts <= k).
ProbabilityTable null_table_by_counting(int n);

/// Cached null_table_by_counting.
std::shared_ptr<const ProbabilityTable> null_table(int n);

enum class RiordanWeights {
  factorial,      // m! as printed
  powers_of_two,  // 2^m
};

/// One application of the three-term-by-length recursion for Pr(L_n = k):
///   w(n-1) P(n,k) = 2 w(n-2) P(n-1,k) - w(n-k-2) P(n-k-1,k)
///                 + w(n-2) P(n-1,k-1) - 2 w(n-3) P(n-2,k-1) + w(n-k-1) P(n-k,k-1)
/// `prob(m, j)` supplies earlier values (P(0,0) = 1 by convention).
/// Throws RecursionDomain when a weight is undefined (factorial of a negative
/// number) and multiplies a nonzero probability.
Rational riordan_step(int n, int k, RiordanWeights weights,
                      const std::function<Rational(int, int)>& prob);

struct RiordanResult {
  ProbabilityTable table;
  DiscrepancyReport report;
};

/// Null law from the recursion, seeded with Pr(L_n = 1) = 2^-(n-1) and
/// Pr(L_2 = 2) = 1/2. The table uses the weight reading that reproduces the
/// counting engine; the printed reading is evaluated alongside and every cell
/// where it disagrees is listed in the report.
RiordanResult null_table_riordan(int n);

struct CriticalValueResult {
  int n = 0;
  Rational alpha;
  int c = 0;
  Rational attained_level;  // Pr(L_n > c)
  Convention convention = Convention::paper;
};

/// paper: largest c with Pr(L_n > c) >= alpha.
/// conservative: smallest c with Pr(L_n > c) <= alpha.
CriticalValueResult critical_value(int n, const Rational& alpha, Convention convention);

/// Unilateral: Pr(L_n >= observed).
/// Bilateral: 2 min(Pr(L_n >= observed), Pr(L_n <= observed)), capped at 1.
Rational p_value(int n, int observed, Tail tail);

/// Accept when lower <= L_n <= upper, reject otherwise.
struct RejectionRegion {
  Tail tail = Tail::unilateral;
  int lower = 1;
  int upper = 0;

  bool rejects(int l_n) const { return l_n < lower || l_n > upper; }
  std::string describe() const;
};

/// Unilateral: {L_n > c_{n,alpha}}. Bilateral: L_n outside
/// [c_{n,1-alpha/2}, c_{n,alpha/2}].
RejectionRegion rejection_region(int n, const Rational& alpha, Tail tail,
                                 Convention convention);

/// Probability of the rejection region under `table`.
Rational region_probability(const ProbabilityTable& table, const RejectionRegion& region);

void require_alpha(const Rational& alpha);

}  // namespace longrun
