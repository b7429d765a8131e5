#include "longrun/asymptotic_check.hpp"

#include <map>
#include <mutex>
#include <string>

#include "longrun/errors.hpp"
#include "longrun/table_cache.hpp"

namespace longrun {

PlusRunCountTable plus_run_counts(int n, int x) {
  if (n < 1 || x < 0) {
    throw Error(ErrorCode::InvalidArgument, "plus_run_counts needs n >= 1 and x >= 0");
  }
  const int bound = std::min(x, n);
  const std::size_t width = static_cast<std::size_t>(n) + 1;
  // state[r][k]: current trailing run of positives has length r (0 after a negative)
  std::vector<std::vector<BigInt>> state(static_cast<std::size_t>(bound) + 1,
                                         std::vector<BigInt>(width));
  auto next = state;
  state[0][0] = 1;
  for (int pos = 1; pos <= n; ++pos) {
    for (auto& row : next) std::fill(row.begin(), row.end(), BigInt(0));
    for (int r = 0; r <= bound; ++r) {
      for (int k = 0; k < pos; ++k) {
        const BigInt& c = state[r][k];
        if (c.is_zero()) continue;
        next[0][k] += c;
        if (r < bound) next[r + 1][k + 1] += c;
      }
    }
    std::swap(state, next);
  }
  PlusRunCountTable table;
  table.n = n;
  table.x = x;
  table.counts.assign(width, BigInt(0));
  for (const auto& row : state)
    for (std::size_t k = 0; k < width; ++k) table.counts[k] += row[k];
  return table;
}

namespace {

std::shared_ptr<const PlusRunCountTable> plus_cached(int n, int x) {
  static TableCache<std::pair<int, int>, PlusRunCountTable> cache;
  return cache.get_or_build({n, x}, [&] { return plus_run_counts(n, x); });
}

}  // namespace

ProbValue plus_run_cdf(int n, int k, const AlternativeSpec& spec) {
  if (n < 1 || k < 0 || k > n) {
    throw Error(ErrorCode::InvalidArgument, "plus_run_cdf needs 0 <= k <= n");
  }
  return binomial_mixture(plus_cached(n, k)->counts, spec);
}

ConvergenceReport convergence_report(int k, const AlternativeSpec& spec,
                                     std::span<const int> n_grid) {
  const bool half = spec.exact_p() ? *spec.exact_p() == Rational(1, 2) : spec.p() == Real(0.5);
  if (half) {
    throw Error(ErrorCode::InvalidArgument,
                "convergence report needs p != 1/2 (no dominant sign)");
  }
  if (n_grid.empty()) {
    throw Error(ErrorCode::InvalidArgument, "convergence report needs a nonempty n grid");
  }
  ConvergenceReport report;
  report.k = k;
  report.spec = spec;
  report.uses_negative_runs = spec.p() < Real(0.5);
  // L_n^- under p has the law of L_n^+ under 1 - p.
  const AlternativeSpec one_sided_spec = report.uses_negative_runs ? spec.complement() : spec;

  for (int n : n_grid) {
    if (k < 0 || k > n) {
      throw Error(ErrorCode::InvalidArgument,
                  "k = " + std::to_string(k) + " outside [0, n] for n = " + std::to_string(n));
    }
    ConvergenceRow row;
    row.n = n;
    row.longest = alt_cdf(n, k, spec);
    row.one_sided = plus_run_cdf(n, k, one_sided_spec);
    if (row.longest.exact && row.one_sided.exact) {
      Rational gap = *row.one_sided.exact - *row.longest.exact;
      row.difference = to_real(gap < 0 ? Rational(-gap) : gap);
    } else {
      row.difference = boost::multiprecision::abs(row.one_sided.approx - row.longest.approx);
    }
    report.rows.push_back(std::move(row));
  }
  report.strictly_decreasing = true;
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    if (!(report.rows[i].difference < report.rows[i - 1].difference)) {
      report.strictly_decreasing = false;
    }
  }
  return report;
}

}  // namespace longrun
