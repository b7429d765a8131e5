#include "longrun/run_stats.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "longrun/errors.hpp"

namespace longrun {

ResidualSeries::ResidualSeries(std::vector<Observation> points,
                               ResidualSource source)
    : points_(std::move(points)), source_(source) {
  if (points_.size() < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "a residual series needs at least 2 points, got " +
                    std::to_string(points_.size()));
  }
  std::stable_sort(points_.begin(), points_.end(),
                   [](const Observation& a, const Observation& b) {
                     return a.covariate < b.covariate;
                   });
}

std::vector<double> ResidualSeries::residuals() const {
  std::vector<double> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.residual);
  return out;
}

SignSequence signs_from_residuals(std::span<const double> residuals,
                                  ZeroPolicy policy) {
  SignSequence seq;
  seq.bits.reserve(residuals.size());
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    double r = residuals[i];
    if (r == 0.0) {
      if (policy == ZeroPolicy::error) {
        throw Error(ErrorCode::ZeroResidual,
                    "residual at ordered position " + std::to_string(i) +
                        " is exactly zero");
      }
      seq.zero_positions.push_back(i);
      continue;
    }
    seq.bits.push_back(r > 0.0 ? 1 : 0);
  }
  if (seq.bits.empty()) {
    throw Error(ErrorCode::EmptyAfterDrop,
                "no nonzero residuals left after dropping zeros");
  }
  return seq;
}

SignSequence signs_from_residuals(const ResidualSeries& series,
                                  ZeroPolicy policy) {
  auto values = series.residuals();
  return signs_from_residuals(std::span<const double>(values), policy);
}

RunSummary longest_runs(std::span<const std::uint8_t> bits) {
  if (bits.empty()) {
    throw Error(ErrorCode::EmptySequence, "longest_runs of an empty sequence");
  }
  RunSummary s;
  int run = 0;
  std::uint8_t prev = 2;
  for (auto b : bits) {
    run = (b == prev) ? run + 1 : 1;
    prev = b;
    if (b) {
      ++s.k;
      s.l_plus = std::max(s.l_plus, run);
    } else {
      s.l_minus = std::max(s.l_minus, run);
    }
  }
  s.l_n = std::max(s.l_plus, s.l_minus);
  return s;
}

RunSummary longest_runs(const SignSequence& seq) {
  return longest_runs(std::span<const std::uint8_t>(seq.bits));
}

namespace {

// Longest block of set bits among the low n bits.
int longest_ones(std::uint64_t word) {
  int best = 0;
  while (word) {
    word >>= std::countr_zero(word);
    int len = std::countr_one(word);
    best = std::max(best, len);
    if (len == 64) break;
    word >>= len;
  }
  return best;
}

}  // namespace

RunSummary longest_runs(std::uint64_t pattern, int n) {
  if (n < 1 || n > 64) {
    throw Error(ErrorCode::InvalidArgument,
                "packed pattern length must be in [1, 64]");
  }
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0}
                                     : ((std::uint64_t{1} << n) - 1);
  pattern &= mask;
  RunSummary s;
  s.k = std::popcount(pattern);
  s.l_plus = longest_ones(pattern);
  s.l_minus = longest_ones(~pattern & mask);
  s.l_n = std::max(s.l_plus, s.l_minus);
  return s;
}

}  // namespace longrun
