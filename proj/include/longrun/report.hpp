#pragma once

#include <string>
#include <vector>

#include "longrun/alternative_power.hpp"
#include "longrun/asymptotic_check.hpp"
#include "longrun/brute_oracle.hpp"
#include "longrun/conditional_counts.hpp"
#include "longrun/exact_null.hpp"
#include "longrun/run_stats.hpp"

namespace longrun {

enum class OutputFormat { json, csv, text };

struct TestConfig {
  Rational alpha{1, 20};
  Tail tail = Tail::unilateral;
  Convention convention = Convention::paper;
  ZeroPolicy zero_policy = ZeroPolicy::error;
};

struct TestReport {
  TestConfig config;
  ResidualSource source = ResidualSource::precomputed;
  std::size_t n_input = 0;
  std::size_t n_effective = 0;
  std::vector<std::size_t> zero_positions;
  RunSummary statistic;
  Rational p_value;
  /// One entry (unilateral) or two (bilateral: 1 - alpha/2, then alpha/2).
  std::vector<CriticalValueResult> critical_values;
  RejectionRegion region;
  /// Pr(reject) under the null.
  Rational size;
  bool reject = false;
};

/// Signs, statistic, critical values, p-value and decision. Under the paper
/// convention the size can exceed alpha, so the unilateral decision equals
/// p_value <= size rather than p_value <= alpha.
TestReport run_test(const ResidualSeries& series, const TestConfig& config);

std::string render_test(const TestReport& report, OutputFormat format, int precision);
std::string render_table(const ProbabilityTable& table, OutputFormat format, int precision);
std::string render_critical(const CriticalValueResult& result, OutputFormat format,
                            int precision);
std::string render_power(const PowerResult& result, OutputFormat format, int precision);
std::string render_counts(const CountTable& table, OutputFormat format);
std::string render_convergence(const ConvergenceReport& report, OutputFormat format,
                               int precision);
std::string render_oracle(const JointCountTable& table, OutputFormat format);

}  // namespace longrun
