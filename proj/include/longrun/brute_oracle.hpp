#pragma once

#include <cstdint>
#include <vector>

#include "longrun/exact_null.hpp"

namespace longrun {

inline constexpr int kOracleCap = 24;

/// Exhaustive counts over all 2^n sign sequences.
///   joint(k, L)      sequences with k positives and longest run L
///   joint_plus(k, L) sequences with k positives and longest positive run L
struct JointCountTable {
  int n = 0;
  std::vector<std::uint64_t> joint;       // (n+1) x (n+1), row k
  std::vector<std::uint64_t> joint_plus;  // (n+1) x (n+1), row k

  std::uint64_t at(int k, int l) const;
  std::uint64_t plus_at(int k, int l_plus) const;
  /// Sequences with k positives and longest run <= x.
  std::uint64_t count_at_most(int k, int x) const;
  /// Sequences with k positives and longest positive run <= x.
  std::uint64_t plus_count_at_most(int k, int x) const;
  std::vector<std::uint64_t> marginal_by_run() const;
  std::vector<std::uint64_t> marginal_by_positives() const;
  std::uint64_t total() const;

  friend bool operator==(const JointCountTable&, const JointCountTable&) = default;
};

/// OpenMP kernel; pattern ranges are split across threads and per-thread
/// tables are summed, so the result does not depend on the thread count.
JointCountTable enumerate_joint(int n);
/// Single-threaded reference for the kernel above.
JointCountTable enumerate_joint_serial(int n);

std::uint64_t oracle_snk(int n, int x, int k);
ProbabilityTable oracle_null_pmf(int n);

}  // namespace longrun
