#pragma once

#include <memory>
#include <vector>

#include "longrun/numeric.hpp"

namespace longrun {

enum class CountEngine { dp, proposition1 };

/// counts[k] = S_n^(k)(x): length-n sign sequences with k positives whose
/// longest run of either sign is at most x.
struct CountTable {
  int n = 0;
  int x = 0;
  std::vector<BigInt> counts;  // index k = 0..n
  CountEngine engine = CountEngine::dp;

  const BigInt& at(int k) const { return counts.at(static_cast<std::size_t>(k)); }
  BigInt total() const;
};

/// Compositions of n into parts in {1..x}; 1 for n == 0, 0 for n < 0.
BigInt compositions_bounded(int n, int x);

/// compositions_bounded(m, x) for m = 0..n in one pass.
std::vector<BigInt> compositions_bounded_prefix(int n, int x);

/// State-machine DP over (ones so far, current sign, current run length).
/// x larger than n is accepted and behaves like x = n.
CountTable snk_dp(int n, int x);

/// Memoised snk_dp keyed by (n, min(x, n)).
std::shared_ptr<const CountTable> snk_cached(int n, int x);

}  // namespace longrun
