#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace longrun {

enum class ResidualSource { raw, precomputed };
enum class ZeroPolicy { error, drop };

struct Observation {
  double covariate = 0.0;
  double residual = 0.0;
};

/// Residuals ordered by covariate. Ties keep their input order.
class ResidualSeries {
 public:
  /// Sorts `points` by covariate (stable). Requires at least two points.
  ResidualSeries(std::vector<Observation> points, ResidualSource source);

  std::span<const Observation> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  ResidualSource source() const { return source_; }
  std::vector<double> residuals() const;

 private:
  std::vector<Observation> points_;
  ResidualSource source_;
};

struct SignSequence {
  std::vector<std::uint8_t> bits;
  /// Positions (in covariate order, before dropping) of exactly-zero residuals.
  std::vector<std::size_t> zero_positions;

  std::size_t size() const { return bits.size(); }
};

struct RunSummary {
  int l_plus = 0;
  int l_minus = 0;
  int l_n = 0;
  int k = 0;

  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

SignSequence signs_from_residuals(std::span<const double> residuals,
                                  ZeroPolicy policy);
SignSequence signs_from_residuals(const ResidualSeries& series,
                                  ZeroPolicy policy);

RunSummary longest_runs(std::span<const std::uint8_t> bits);
RunSummary longest_runs(const SignSequence& seq);

/// Same statistic for a packed pattern: bit i (LSB first) is Z_{i+1}.
/// n must be in [1, 64].
RunSummary longest_runs(std::uint64_t pattern, int n);

}  // namespace longrun
