#include "longrun/exact_null.hpp"

#include <algorithm>
#include <string>

#include "longrun/conditional_counts.hpp"
#include "longrun/errors.hpp"
#include "longrun/table_cache.hpp"

namespace longrun {

namespace {

void require_n(int n, int minimum) {
  if (n < minimum) {
    throw Error(ErrorCode::InvalidArgument,
                "n must be >= " + std::to_string(minimum) + ", got " +
                    std::to_string(n));
  }
}

Rational half_power(int exponent) { return Rational(1, pow2(static_cast<unsigned>(exponent))); }

// Weight w(m) as an exact rational, or nullopt when undefined.
std::optional<Rational> weight(RiordanWeights weights, int m) {
  if (weights == RiordanWeights::powers_of_two) {
    return m >= 0 ? Rational(pow2(static_cast<unsigned>(m))) : half_power(-m);
  }
  if (m < 0) return std::nullopt;
  BigInt f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return Rational(f);
}

}  // namespace

std::string to_string(Convention convention) {
  return convention == Convention::paper ? "paper" : "conservative";
}

std::string to_string(Tail tail) {
  return tail == Tail::unilateral ? "unilateral" : "bilateral";
}

Rational ProbabilityTable::tail_above(int c) const { return 1 - cdf_at(c); }

Rational ProbabilityTable::cdf_at(int c) const {
  if (c < 1) return 0;
  if (c >= n) return 1;
  return cdf[c];
}

ProbabilityTable make_table(int n, std::vector<Rational> pmf, Regime regime,
                            std::optional<Rational> p) {
  ProbabilityTable table;
  table.n = n;
  table.regime = regime;
  table.p = std::move(p);
  table.pmf = std::move(pmf);
  table.cdf.resize(table.pmf.size());
  Rational running = 0;
  for (std::size_t k = 0; k < table.pmf.size(); ++k) {
    running += table.pmf[k];
    table.cdf[k] = running;
  }
  return table;
}

ProbabilityTable null_table_by_counting(int n) {
  require_n(n, 1);
  // at_most[x] = number of strings whose longest run is <= x
  std::vector<BigInt> at_most(static_cast<std::size_t>(n) + 1, BigInt(0));
  for (int x = 1; x <= n; ++x) at_most[x] = 2 * compositions_bounded(n, x);
  const BigInt total = pow2(static_cast<unsigned>(n));
  std::vector<Rational> pmf(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 1; k <= n; ++k) pmf[k] = Rational(at_most[k] - at_most[k - 1], total);
  return make_table(n, std::move(pmf), Regime::null);
}

std::shared_ptr<const ProbabilityTable> null_table(int n) {
  require_n(n, 1);
  static TableCache<int, ProbabilityTable> cache;
  return cache.get_or_build(n, [n] { return null_table_by_counting(n); });
}

Rational riordan_step(int n, int k, RiordanWeights weights,
                      const std::function<Rational(int, int)>& prob) {
  struct Term {
    int coefficient;
    int weight_arg;
    int length;
    int run;
  };
  const Term terms[] = {
      {2, n - 2, n - 1, k},      {-1, n - k - 2, n - k - 1, k},
      {1, n - 2, n - 1, k - 1},  {-2, n - 3, n - 2, k - 1},
      {1, n - k - 1, n - k, k - 1},
  };
  auto value_of = [&](int length, int run) -> Rational {
    if (length < 0 || run < 0 || run > length) return 0;
    if (length == 0) return run == 0 ? 1 : 0;
    return prob(length, run);
  };
  Rational rhs = 0;
  for (const auto& t : terms) {
    Rational p = value_of(t.length, t.run);
    if (p == 0) continue;
    auto w = weight(weights, t.weight_arg);
    if (!w) {
      throw Error(ErrorCode::RecursionDomain,
                  "weight (" + std::to_string(t.weight_arg) +
                      ")! is undefined but multiplies Pr(L_" +
                      std::to_string(t.length) + "=" + std::to_string(t.run) +
                      ") != 0 at n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
    rhs += t.coefficient * *w * p;
  }
  auto lhs_weight = weight(weights, n - 1);
  if (!lhs_weight || *lhs_weight == 0) {
    throw Error(ErrorCode::RecursionDomain,
                "left-hand weight undefined at n=" + std::to_string(n));
  }
  return rhs / *lhs_weight;
}

RiordanResult null_table_riordan(int n) {
  require_n(n, 2);
  // values[m][k] for m = 0..n
  auto run_recursion = [n](RiordanWeights weights) {
    std::vector<std::vector<Rational>> values(static_cast<std::size_t>(n) + 1);
    values[0] = {Rational(1)};
    values[1] = {Rational(0), Rational(1)};
    auto prob = [&values](int m, int k) { return values[m][k]; };
    for (int m = 2; m <= n; ++m) {
      auto& row = values[m];
      row.assign(static_cast<std::size_t>(m) + 1, Rational(0));
      row[1] = half_power(m - 1);
      if (m == 2) {
        row[2] = Rational(1, 2);
        continue;
      }
      for (int k = 2; k <= m; ++k) row[k] = riordan_step(m, k, weights, prob);
    }
    return values;
  };

  auto resolved = run_recursion(RiordanWeights::powers_of_two);
  auto literal = run_recursion(RiordanWeights::factorial);

  RiordanResult result;
  result.table = make_table(n, resolved[n], Regime::null);

  auto& report = result.report;
  report.subject = "Pr(L_n = k) length recursion";
  report.validation_grid = "2 <= m <= " + std::to_string(n) +
                           ", 1 <= k <= m; compared with the counting engine";
  report.notes = {
      "seeds: Pr(L_m = 1) = 2^-(m-1) for m >= 1, Pr(L_2 = 2) = 1/2; recursion used for m >= 3, k >= 2",
      "conventions: Pr(L_0 = 0) = 1; Pr(L_m = k) = 0 for m < 0 or k outside 0..m",
      "the printed weights hit (-1)! * Pr(L_0 = 0) at (n=2, k=1); the k = 1 seed avoids that term",
  };

  DiscrepancyEntry weights_entry;
  weights_entry.region = "all (m, k) with 3 <= m <= n, 2 <= k <= m";
  weights_entry.literal_formula =
      "(n-1)! Pr(L_n=k) = 2(n-2)! Pr(L_{n-1}=k) - (n-k-2)! Pr(L_{n-k-1}=k) "
      "+ (n-2)! Pr(L_{n-1}=k-1) - 2(n-3)! Pr(L_{n-2}=k-1) + (n-k-1)! Pr(L_{n-k}=k-1)";
  weights_entry.resolved_formula =
      "2^(n-1) Pr(L_n=k) = 2*2^(n-2) Pr(L_{n-1}=k) - 2^(n-k-2) Pr(L_{n-k-1}=k) "
      "+ 2^(n-2) Pr(L_{n-1}=k-1) - 2*2^(n-3) Pr(L_{n-2}=k-1) + 2^(n-k-1) Pr(L_{n-k}=k-1)";
  weights_entry.correction = "every weight m! read as 2^m";

  DiscrepancyEntry residual_entry;
  residual_entry.region = weights_entry.region;
  residual_entry.literal_formula = weights_entry.resolved_formula;
  residual_entry.correction = "none available";

  for (int m = 3; m <= n; ++m) {
    auto counted = null_table(m);
    for (int k = 2; k <= m; ++k) {
      ++weights_entry.grid_points;
      ++residual_entry.grid_points;
      if (literal[m][k] != counted->pmf[k]) {
        ++weights_entry.literal_mismatches;
        weights_entry.mismatches.push_back(
            {m, k, 0, fraction_string(literal[m][k]), fraction_string(resolved[m][k])});
      }
      if (resolved[m][k] != counted->pmf[k]) {
        ++residual_entry.literal_mismatches;
        residual_entry.mismatches.push_back(
            {m, k, 0, fraction_string(resolved[m][k]), fraction_string(counted->pmf[k])});
      }
    }
  }
  weights_entry.status = weights_entry.literal_mismatches == 0 ? EntryStatus::exact
                                                               : EntryStatus::corrected;
  report.entries.push_back(std::move(weights_entry));
  if (residual_entry.literal_mismatches > 0) {
    residual_entry.status = EntryStatus::unreconciled;
    report.entries.push_back(std::move(residual_entry));
  }
  return result;
}

void require_alpha(const Rational& alpha) {
  if (alpha <= 0 || alpha >= 1) {
    throw Error(ErrorCode::InvalidArgument,
                "alpha must lie in (0, 1), got " + fraction_string(alpha));
  }
}

CriticalValueResult critical_value(int n, const Rational& alpha, Convention convention) {
  require_n(n, 1);
  require_alpha(alpha);
  auto table = null_table(n);
  CriticalValueResult result;
  result.n = n;
  result.alpha = alpha;
  result.convention = convention;
  if (convention == Convention::paper) {
    // Pr(L_n > c) is nonincreasing in c and equals 1 at c = 0.
    int c = 0;
    for (int candidate = n; candidate >= 0; --candidate) {
      if (table->tail_above(candidate) >= alpha) {
        c = candidate;
        break;
      }
    }
    result.c = c;
  } else {
    int c = n;
    for (int candidate = 0; candidate <= n; ++candidate) {
      if (table->tail_above(candidate) <= alpha) {
        c = candidate;
        break;
      }
    }
    result.c = c;
  }
  result.attained_level = table->tail_above(result.c);
  return result;
}

Rational p_value(int n, int observed, Tail tail) {
  require_n(n, 1);
  if (observed < 1 || observed > n) {
    throw Error(ErrorCode::ObservedOutOfRange,
                "observed statistic " + std::to_string(observed) +
                    " outside [1, " + std::to_string(n) + "]");
  }
  auto table = null_table(n);
  Rational upper = table->tail_above(observed - 1);
  if (tail == Tail::unilateral) return upper;
  Rational lower = table->cdf_at(observed);
  Rational doubled = 2 * std::min(upper, lower);
  return doubled > 1 ? Rational(1) : doubled;
}

std::string RejectionRegion::describe() const {
  if (lower > upper) return "always reject";
  std::string text;
  if (lower > 1) text = "L_n < " + std::to_string(lower);
  if (!text.empty()) text += " or ";
  text += "L_n > " + std::to_string(upper);
  return text;
}

RejectionRegion rejection_region(int n, const Rational& alpha, Tail tail,
                                 Convention convention) {
  RejectionRegion region;
  region.tail = tail;
  if (tail == Tail::unilateral) {
    region.lower = 1;
    region.upper = critical_value(n, alpha, convention).c;
  } else {
    region.lower = critical_value(n, 1 - alpha / 2, convention).c;
    region.upper = critical_value(n, alpha / 2, convention).c;
    region.lower = std::max(region.lower, 1);
  }
  return region;
}

Rational region_probability(const ProbabilityTable& table, const RejectionRegion& region) {
  if (region.lower > region.upper) return 1;
  return 1 - (table.cdf_at(region.upper) - table.cdf_at(region.lower - 1));
}

}  // namespace longrun
