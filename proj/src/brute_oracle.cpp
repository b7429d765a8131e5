#include "longrun/brute_oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <string>

#include "longrun/errors.hpp"
#include "longrun/run_stats.hpp"

namespace longrun {

namespace {

void require_in_cap(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "oracle needs n >= 1");
  if (n > kOracleCap) {
    throw Error(ErrorCode::CapExceeded,
                "enumeration capped at n = " + std::to_string(kOracleCap) +
                    ", got " + std::to_string(n));
  }
}

JointCountTable empty_table(int n) {
  JointCountTable table;
  table.n = n;
  const auto cells = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1);
  table.joint.assign(cells, 0);
  table.joint_plus.assign(cells, 0);
  return table;
}

inline std::size_t cell(int n, int k, int l) {
  return static_cast<std::size_t>(k) * static_cast<std::size_t>(n + 1) +
         static_cast<std::size_t>(l);
}

void scan_range(int n, std::uint64_t begin, std::uint64_t end, JointCountTable& table) {
  for (std::uint64_t pattern = begin; pattern < end; ++pattern) {
    RunSummary s = longest_runs(pattern, n);
    ++table.joint[cell(n, s.k, s.l_n)];
    ++table.joint_plus[cell(n, s.k, s.l_plus)];
  }
}

void accumulate(JointCountTable& into, const JointCountTable& from) {
  for (std::size_t i = 0; i < into.joint.size(); ++i) {
    into.joint[i] += from.joint[i];
    into.joint_plus[i] += from.joint_plus[i];
  }
}

}  // namespace

std::uint64_t JointCountTable::at(int k, int l) const {
  if (k < 0 || k > n || l < 0 || l > n) return 0;
  return joint[cell(n, k, l)];
}

std::uint64_t JointCountTable::plus_at(int k, int l_plus) const {
  if (k < 0 || k > n || l_plus < 0 || l_plus > n) return 0;
  return joint_plus[cell(n, k, l_plus)];
}

std::uint64_t JointCountTable::count_at_most(int k, int x) const {
  std::uint64_t sum = 0;
  for (int l = 0; l <= std::min(x, n); ++l) sum += at(k, l);
  return sum;
}

std::uint64_t JointCountTable::plus_count_at_most(int k, int x) const {
  std::uint64_t sum = 0;
  for (int l = 0; l <= std::min(x, n); ++l) sum += plus_at(k, l);
  return sum;
}

std::vector<std::uint64_t> JointCountTable::marginal_by_run() const {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= n; ++l) out[l] += at(k, l);
  return out;
}

std::vector<std::uint64_t> JointCountTable::marginal_by_positives() const {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= n; ++l) out[k] += at(k, l);
  return out;
}

std::uint64_t JointCountTable::total() const {
  std::uint64_t sum = 0;
  for (auto c : joint) sum += c;
  return sum;
}

JointCountTable enumerate_joint_serial(int n) {
  require_in_cap(n);
  JointCountTable table = empty_table(n);
  scan_range(n, 0, std::uint64_t{1} << n, table);
  return table;
}

JointCountTable enumerate_joint(int n) {
  require_in_cap(n);
  const std::uint64_t patterns = std::uint64_t{1} << n;
  JointCountTable result = empty_table(n);
  // Fixed chunking keeps the work split independent of the thread count.
  constexpr std::int64_t kChunk = 1 << 12;
  const std::int64_t chunks =
      static_cast<std::int64_t>((patterns + kChunk - 1) / kChunk);
#pragma omp parallel
  {
    JointCountTable local = empty_table(n);
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const auto begin = static_cast<std::uint64_t>(c) * kChunk;
      const auto end = std::min<std::uint64_t>(begin + kChunk, patterns);
      scan_range(n, begin, end, local);
    }
#pragma omp critical(longrun_oracle_merge)
    accumulate(result, local);
  }
  return result;
}

std::uint64_t oracle_snk(int n, int x, int k) {
  require_in_cap(n);
  if (k < 0 || k > n) return 0;
  return enumerate_joint(n).count_at_most(k, x);
}

ProbabilityTable oracle_null_pmf(int n) {
  auto table = enumerate_joint(n);
  auto by_run = table.marginal_by_run();
  const BigInt total = pow2(static_cast<unsigned>(n));
  std::vector<Rational> pmf(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int l = 1; l <= n; ++l) pmf[l] = Rational(BigInt(by_run[l]), total);
  return make_table(n, std::move(pmf), Regime::null);
}

}  // namespace longrun
