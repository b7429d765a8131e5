#include "longrun/conditional_counts.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "longrun/errors.hpp"
#include "longrun/table_cache.hpp"

namespace longrun {

namespace {

void require_positive(int n, int x) {
  if (n < 1 || x < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "need n >= 1 and x >= 1 (got n=" + std::to_string(n) +
                    ", x=" + std::to_string(x) + ")");
  }
}

}  // namespace

BigInt CountTable::total() const {
  BigInt sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

std::vector<BigInt> compositions_bounded_prefix(int n, int x) {
  if (x < 1) {
    throw Error(ErrorCode::InvalidArgument, "part bound x must be >= 1");
  }
  if (n < 0) return {};
  // F(m) = F(m-1) + ... + F(m-x), kept as a sliding window sum.
  std::vector<BigInt> f(static_cast<std::size_t>(n) + 1);
  f[0] = 1;
  BigInt window = 1;
  for (int m = 1; m <= n; ++m) {
    f[m] = window;
    window += f[m];
    if (m - x >= 0) window -= f[m - x];
  }
  return f;
}

BigInt compositions_bounded(int n, int x) {
  if (n < 0) {
    if (x < 1) throw Error(ErrorCode::InvalidArgument, "part bound x must be >= 1");
    return 0;
  }
  return compositions_bounded_prefix(n, x).back();
}

CountTable snk_dp(int n, int x) {
  require_positive(n, x);
  const int requested_x = x;
  x = std::min(x, n);
  const std::size_t width = static_cast<std::size_t>(n) + 1;
  // cur[sign][run-1][k]
  using Layer = std::vector<std::vector<BigInt>>;
  std::array<Layer, 2> cur, next;
  for (auto* layer : {&cur, &next}) {
    for (auto& by_sign : *layer) {
      by_sign.assign(static_cast<std::size_t>(x), std::vector<BigInt>(width));
    }
  }
  cur[0][0][0] = 1;
  cur[1][0][1] = 1;

  for (int pos = 2; pos <= n; ++pos) {
    for (auto& by_sign : next) {
      for (auto& row : by_sign) std::fill(row.begin(), row.end(), BigInt(0));
    }
    for (int sign = 0; sign < 2; ++sign) {
      for (int run = 1; run <= x; ++run) {
        const auto& row = cur[sign][run - 1];
        for (int k = 0; k < pos; ++k) {
          const BigInt& c = row[k];
          if (c.is_zero()) continue;
          // same sign extends the run
          if (run < x) next[sign][run][k + sign] += c;
          // opposite sign starts a new run
          int other = 1 - sign;
          next[other][0][k + other] += c;
        }
      }
    }
    std::swap(cur, next);
  }

  CountTable table;
  table.n = n;
  table.x = requested_x;
  table.engine = CountEngine::dp;
  table.counts.assign(width, BigInt(0));
  for (int sign = 0; sign < 2; ++sign) {
    for (int run = 1; run <= x; ++run) {
      for (std::size_t k = 0; k < width; ++k) table.counts[k] += cur[sign][run - 1][k];
    }
  }
  return table;
}

std::shared_ptr<const CountTable> snk_cached(int n, int x) {
  require_positive(n, x);
  static TableCache<std::pair<int, int>, CountTable> cache;
  int clamped = std::min(x, n);
  return cache.get_or_build({n, clamped}, [&] { return snk_dp(n, clamped); });
}

}  // namespace longrun
