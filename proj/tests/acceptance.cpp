// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are pinned below.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_runner.hpp"
#include "longrun/alternative_power.hpp"
#include "longrun/asymptotic_check.hpp"
#include "longrun/brute_oracle.hpp"
#include "longrun/conditional_counts.hpp"
#include "longrun/exact_null.hpp"
#include "longrun/proposition1.hpp"
#include "longrun/report.hpp"
#include "longrun/run_stats.hpp"

using namespace longrun;
using longrun::testing::run_cli;
using longrun::testing::write_temp;

namespace {

constexpr double kHandValueTolerance = 1e-10;
constexpr double kFrozenRelativeTolerance = 1e-5;  // frozen values carry 6 significant digits
constexpr double kShrinkFactor = 10.0;
constexpr double kMonteCarloSigmas = 3.0;
constexpr int kReplications = 10000;
constexpr std::uint64_t kSeed = 0x5eed2026ULL;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& check) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = check();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!outcome.pass) ++failures;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.1fs", seconds);
  std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << id << ". " << title << " (" << timing
            << ")";
  if (!outcome.detail.empty()) std::cout << ": " << outcome.detail;
  std::cout << std::endl;
}

Outcome fail(const std::string& why) { return {false, why}; }

std::string cell(int n, int k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

// Pr(L_4 <= 2) at p = 7/10 by listing the 16 sign strings.
double hand_value_n4_x2() {
  double total = 0.0;
  for (int pattern = 0; pattern < 16; ++pattern) {
    int longest = 0, run = 0, prev = -1, ones = 0;
    for (int i = 0; i < 4; ++i) {
      int bit = (pattern >> i) & 1;
      ones += bit;
      run = bit == prev ? run + 1 : 1;
      prev = bit;
      longest = std::max(longest, run);
    }
    if (longest <= 2) total += std::pow(0.7, ones) * std::pow(0.3, 4 - ones);
  }
  return total;
}

Outcome counting_vs_enumeration() {
  for (int n = 1; n <= 20; ++n) {
    auto counted = null_table_by_counting(n);
    auto listed = oracle_null_pmf(n);
    for (int k = 0; k <= n; ++k)
      if (counted.pmf[k] != listed.pmf[k]) return fail(cell(n, k));
  }
  return {true, "n = 1..20, exact"};
}

Outcome riordan_vs_counting() {
  std::size_t literal_cells = 0;
  for (int n = 2; n <= 20; ++n) {
    auto result = null_table_riordan(n);
    const auto& counted = *null_table(n);
    for (int k = 0; k <= n; ++k)
      if (result.table.pmf[k] != counted.pmf[k]) return fail("resolved table differs at " + cell(n, k));
    if (!result.report.all_resolved()) return fail("unresolved entry at n=" + std::to_string(n));
    if (n == 20) {
      for (const auto& e : result.report.entries) {
        if (e.mismatches.size() != e.literal_mismatches)
          return fail("report for '" + e.region + "' is incomplete");
        literal_cells += e.literal_mismatches;
      }
    }
  }
  return {true, "n = 2..20 exact with corrected weights; report lists " +
                    std::to_string(literal_cells) + " cells where the printed weights disagree"};
}

Outcome base_cases() {
  if (null_table(2)->pmf[2] != Rational(1, 2)) return fail("Pr(L_2 = 2)");
  for (int n = 1; n <= 30; ++n) {
    if (null_table(n)->pmf[1] != Rational(1) / pow2(static_cast<unsigned>(n - 1)))
      return fail("Pr(L_n = 1) at n=" + std::to_string(n));
  }
  return {true, "Pr(L_2=2) = 1/2, Pr(L_n=1) = 2^-(n-1) for n = 1..30"};
}

Outcome snk_vs_enumeration() {
  std::size_t cells = 0;
  for (int n = 1; n <= 18; ++n) {
    auto joint = enumerate_joint(n);
    for (int x = 1; x <= n; ++x) {
      auto table = snk_dp(n, x);
      for (int k = 0; k <= n; ++k, ++cells) {
        if (table.counts[k] != BigInt(joint.count_at_most(k, x)))
          return fail(cell(n, k) + " x=" + std::to_string(x));
      }
    }
  }
  return {true, std::to_string(cells) + " (n, x, k) cells exact"};
}

Outcome proposition1_vs_dp() {
  for (int n = 1; n <= 30; ++n) {
    for (int x = 1; x <= n; ++x) {
      auto dp = snk_dp(n, x);
      auto rec = snk_proposition1(n, x).table;
      for (int k = 0; k <= n; ++k)
        if (dp.counts[k] != rec.counts[k]) return fail(cell(n, k) + " x=" + std::to_string(x));
    }
  }
  const auto& rep = default_reconciliation()->report;
  if (!rep.all_resolved()) return fail("reconciliation left a case unresolved");
  std::size_t listed = 0;
  for (const auto& e : rep.entries) {
    if (e.status != EntryStatus::corrected) continue;
    if (e.literal_formula.empty() || e.resolved_formula.empty() || e.correction.empty())
      return fail("corrected case '" + e.region + "' lacks its formulas");
    ++listed;
  }
  if (listed != rep.corrected_count() || listed == 0) return fail("no corrected cases listed");
  return {true, "n <= 30 exact; report lists " + std::to_string(listed) +
                    " corrected cases with printed and resolved forms"};
}

Outcome alternative_identity() {
  auto half = AlternativeSpec::direct(Rational(1, 2));
  for (int n = 1; n <= 30; ++n) {
    const auto& null = *null_table(n);
    for (int x = 0; x <= n; ++x)
      if (*alt_cdf(n, x, half).exact != null.cdf_at(x)) return fail("p=1/2 at " + cell(n, x));
  }
  auto value = alt_cdf(4, 2, AlternativeSpec::direct(Rational(7, 10)));
  const double got = value.approx.convert_to<double>();
  const double hand = hand_value_n4_x2();
  const double gap = std::max(std::abs(got - hand), std::abs(got - 0.5082));
  if (gap > kHandValueTolerance) return fail("Pr(L_4<=2 | p=0.7) = " + std::to_string(got));
  return {true, "p=1/2 equals null for n <= 30; Pr(L_4<=2 | 0.7) = " + fraction_string(*value.exact)};
}

Outcome power_sanity() {
  const Rational alpha(1, 20);
  std::size_t checks = 0;
  for (int n = 1; n <= 20; ++n) {
    for (Tail tail : {Tail::unilateral, Tail::bilateral}) {
      for (Convention conv : {Convention::paper, Convention::conservative}) {
        auto at_half = power(n, alpha, tail, conv, AlternativeSpec::direct(Rational(1, 2)));
        if (*at_half.power.exact != region_probability(*null_table(n), at_half.region))
          return fail("size at n=" + std::to_string(n));
        Rational previous = *at_half.power.exact;
        for (int step = 1; step <= 9; ++step) {
          const Rational p = Rational(1, 2) + Rational(step, 20);
          auto up = *power(n, alpha, tail, conv, AlternativeSpec::direct(p)).power.exact;
          auto down = *power(n, alpha, tail, conv, AlternativeSpec::direct(1 - p)).power.exact;
          if (up != down) return fail("asymmetry at n=" + std::to_string(n) + " p=" + fraction_string(p));
          if (tail == Tail::unilateral && up < previous)
            return fail("unilateral power decreases at n=" + std::to_string(n) +
                        " p=" + fraction_string(p) + " (" + to_string(conv) + ")");
          previous = up;
          ++checks;
        }
      }
    }
  }
  return {true, std::to_string(checks) + " grid points, alpha = 1/20, both tails and conventions"};
}

struct FrozenGap {
  const char* p;
  int k;
  double diff[4];  // n = 50, 100, 200, 400
};

// Values recorded from the first validated run.
constexpr int kGrid[4] = {50, 100, 200, 400};
constexpr FrozenGap kFrozen[] = {
    {"0.6", 5, {4.81440e-2, 3.22010e-2, 6.70332e-3, 1.43174e-4}},
    {"0.7", 5, {3.78360e-3, 7.01651e-4, 1.10622e-5, 1.32110e-9}},
    {"0.8", 5, {5.27723e-5, 7.15590e-7, 5.95384e-11, 1.96588e-19}},
    {"0.9", 5, {1.24399e-8, 5.45130e-13, 4.65026e-22, 1.60091e-40}},
};

Outcome convergence_trend() {
  std::ostringstream summary;
  for (const auto& frozen : kFrozen) {
    auto spec = AlternativeSpec::direct(parse_rational(frozen.p));
    auto rep = convergence_report(frozen.k, spec, kGrid);
    if (!rep.strictly_decreasing) return fail(std::string("not strictly decreasing at p=") + frozen.p);
    const Real first = rep.rows.front().difference;
    const Real last = rep.rows.back().difference;
    if (!(last * kShrinkFactor <= first))
      return fail(std::string("shrinkage below 10x at p=") + frozen.p);
    for (int i = 0; i < 4; ++i) {
      const double got = rep.rows[i].difference.convert_to<double>();
      if (std::abs(got - frozen.diff[i]) > kFrozenRelativeTolerance * std::abs(frozen.diff[i]))
        return fail(std::string("p=") + frozen.p + " n=" + std::to_string(kGrid[i]) + " gave " +
                    decimal_string(rep.rows[i].difference, 6));
    }
    summary << " p=" << frozen.p << " k=" << frozen.k << " ratio "
            << decimal_string(Real(first / last), 3) << ";";
  }
  return {true, "strictly decreasing, >=10x shrinkage, frozen values match;" + summary.str()};
}

double true_m(double x) { return std::sin(6.283185307179586 * x) + 2.0 * x; }

std::vector<double> shifted_residuals(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<double> residuals(static_cast<std::size_t>(n));
  for (auto& r : residuals) r = 0.5 + noise(rng);
  return residuals;
}

Outcome end_to_end() {
  constexpr int n = 200;
  const Rational alpha(1, 20);

  auto residuals = shifted_residuals(n, kSeed);
  std::ostringstream csv;
  csv << "x,y,fitted\n";
  std::vector<Observation> points;
  char line[128];
  for (int i = 0; i < n; ++i) {
    const double x = (i + 0.5) / n;
    const double m = true_m(x);
    const double y = m + residuals[i];
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", x, y, m);
    csv << line;
    points.push_back({x, y - m});
  }
  auto path = write_temp("acceptance_shift.csv", csv.str());
  auto cli = run_cli("--format json test " + path.string() + " --alpha 0.05");
  if (cli.status != 0) return fail("CLI exited with " + std::to_string(cli.status));
  auto cli_json = nlohmann::json::parse(cli.out);

  TestConfig config;
  config.alpha = alpha;
  auto lib = run_test(ResidualSeries(points, ResidualSource::raw), config);
  if (cli_json["p_value"]["fraction"] != fraction_string(lib.p_value))
    return fail("CLI p-value " + cli_json["p_value"]["fraction"].get<std::string>() +
                " vs library " + fraction_string(lib.p_value));

  auto power_run = run_cli("--format json power --n 200 --alpha 0.05 --shift 0.5 --sigma 1");
  if (power_run.status != 0) return fail("power subcommand failed");
  const double exact = std::stod(
      nlohmann::json::parse(power_run.out)["power"]["decimal"].get<std::string>());

  const RejectionRegion region = rejection_region(n, alpha, Tail::unilateral, Convention::paper);
  long rejections = 0;
#pragma omp parallel for reduction(+ : rejections) schedule(static)
  for (int rep = 0; rep < kReplications; ++rep) {
    auto sample = shifted_residuals(n, kSeed + 1 + static_cast<std::uint64_t>(rep));
    auto signs = signs_from_residuals(std::span<const double>(sample), ZeroPolicy::drop);
    if (region.rejects(longest_runs(signs).l_n)) ++rejections;
  }
  const double rate = static_cast<double>(rejections) / kReplications;
  const double se = std::sqrt(exact * (1 - exact) / kReplications);
  const double z = (rate - exact) / se;
  char detail[256];
  std::snprintf(detail, sizeof detail,
                "p-value %s matches; MC rate %.4f vs exact power %.6f (%d reps, z = %+.2f)",
                decimal_string(lib.p_value, 6).c_str(), rate, exact, kReplications, z);
  if (std::abs(z) > kMonteCarloSigmas) return fail(detail);
  return {true, detail};
}

Outcome determinism() {
  std::ostringstream csv;
  csv << "x,residual\n";
  auto residuals = shifted_residuals(60, kSeed + 99);
  for (int i = 0; i < 60; ++i) csv << i << ',' << residuals[i] << '\n';
  auto data = write_temp("acceptance_determinism.csv", csv.str());
  const std::vector<std::string> commands = {
      "test " + data.string(),
      "--format text test " + data.string() + " --tail bilateral --conservative",
      "--format csv table --n 40",
      "table --n 16 --p 3/5",
      "critical --n 50 --alpha 0.01",
      "power --n 120 --alpha 0.05 --shift 0.5 --sigma 1",
      "--format csv snk --n 30 --x 4 --engine proposition1",
      "--format csv converge --p 0.7 --k 5 --n-grid 50,100",
      "--format csv oracle --n 12",
      "discrepancies",
  };
  for (const auto& args : commands) {
    auto a = run_cli(args);
    auto b = run_cli(args);
    if (a.status != 0) return fail("'" + args + "' exited with " + std::to_string(a.status));
    if (a.out != b.out) return fail("'" + args + "' differs between runs");
  }
  return {true, std::to_string(commands.size()) + " commands byte-identical across two runs"};
}

}  // namespace

int main() {
  std::cout << "longrun acceptance (" << omp_get_max_threads() << " OpenMP threads)\n";
  report(1, "null law by counting equals enumeration", counting_vs_enumeration);
  report(2, "recursive null law equals counting", riordan_vs_counting);
  report(3, "base cases", base_cases);
  report(4, "conditional counts equal enumeration", snk_vs_enumeration);
  report(5, "boundary recursion equals DP after corrections", proposition1_vs_dp);
  report(6, "alternative CDF identity", alternative_identity);
  report(7, "power sanity", power_sanity);
  report(8, "one-sided run approximation trend", convergence_trend);
  report(9, "end-to-end CLI and Monte Carlo power", end_to_end);
  report(10, "determinism", determinism);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
