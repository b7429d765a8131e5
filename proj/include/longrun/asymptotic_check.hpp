#pragma once

#include <span>
#include <vector>

#include "longrun/alternative_power.hpp"
#include "longrun/numeric.hpp"

namespace longrun {

/// counts[k]: length-n sequences with k positives whose longest run of
/// positives is at most x (negative runs unconstrained).
struct PlusRunCountTable {
  int n = 0;
  int x = 0;
  std::vector<BigInt> counts;
};

PlusRunCountTable plus_run_counts(int n, int x);

/// Pr(L_n^+ <= k) under positive-sign probability p.
ProbValue plus_run_cdf(int n, int k, const AlternativeSpec& spec);

struct ConvergenceRow {
  int n = 0;
  ProbValue longest;    // Pr(L_n <= k)
  ProbValue one_sided;  // Pr(L_n^+ <= k), or Pr(L_n^- <= k) when p < 1/2
  Real difference;      // |one_sided - longest|
};

struct ConvergenceReport {
  int k = 0;
  AlternativeSpec spec = AlternativeSpec::direct(Rational(1, 2));
  bool uses_negative_runs = false;
  std::vector<ConvergenceRow> rows;
  bool strictly_decreasing = false;
};

/// Gap between the law of L_n and that of the dominant one-sided run over
/// `n_grid`. Requires p != 1/2 and k <= n for every grid point.
ConvergenceReport convergence_report(int k, const AlternativeSpec& spec,
                                     std::span<const int> n_grid);

}  // namespace longrun
