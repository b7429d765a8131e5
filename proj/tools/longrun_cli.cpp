// Command-line front end for the longest-run lack-of-fit test.
//
// Exit codes: 0 success, 1 rejection with --fail-on-reject, 2 input error,
// 3 configuration error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "longrun/alternative_power.hpp"
#include "longrun/asymptotic_check.hpp"
#include "longrun/brute_oracle.hpp"
#include "longrun/conditional_counts.hpp"
#include "longrun/errors.hpp"
#include "longrun/exact_null.hpp"
#include "longrun/ingest.hpp"
#include "longrun/proposition1.hpp"
#include "longrun/report.hpp"

namespace {

constexpr int kExitRejected = 1;
constexpr int kExitInput = 2;
constexpr int kExitConfig = 3;

int exit_code_for(longrun::ErrorCode code) {
  using longrun::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::MissingColumns:
    case ErrorCode::NonFiniteValue:
    case ErrorCode::ZeroResidual:
    case ErrorCode::EmptyAfterDrop:
    case ErrorCode::EmptySequence:
      return kExitInput;
    default:
      return kExitConfig;
  }
}

longrun::Tail parse_tail(const std::string& text) {
  return text == "bilateral" ? longrun::Tail::bilateral : longrun::Tail::unilateral;
}

longrun::Convention convention_of(bool conservative) {
  return conservative ? longrun::Convention::conservative : longrun::Convention::paper;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace longrun;

  CLI::App app{"Longest-run lack-of-fit test: exact null law, critical values, p-values and power"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  int precision = kDefaultPrecision;
  std::string zero_policy_name = "error";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--precision", precision, "Significant digits for decimals")
      ->check(CLI::Range(1, 45));
  app.add_option("--zero-policy", zero_policy_name, "Handling of exactly-zero residuals")
      ->check(CLI::IsMember({"error", "drop"}));

  // test
  auto* test_cmd = app.add_subcommand("test", "Run the test on a CSV of (x,y,fitted) or (x,residual)");
  std::string input_path;
  std::string alpha_text = "0.05";
  std::string tail_name = "unilateral";
  bool conservative = false;
  bool fail_on_reject = false;
  test_cmd->add_option("input", input_path, "CSV file, '-' for stdin")->required();
  test_cmd->add_option("--alpha", alpha_text, "Nominal level");
  test_cmd->add_option("--tail", tail_name)->check(CLI::IsMember({"unilateral", "bilateral"}));
  test_cmd->add_flag("--conservative", conservative, "Smallest c with Pr(L_n > c) <= alpha");
  test_cmd->add_flag("--fail-on-reject", fail_on_reject, "Exit with status 1 when H0 is rejected");

  // table
  auto* table_cmd = app.add_subcommand("table", "Exact law of L_n");
  int n = 0;
  std::optional<std::string> p_text;
  std::string table_engine = "counting";
  table_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--p", p_text, "Positive-sign probability (rational) for the alternative law");
  table_cmd->add_option("--engine", table_engine)->check(CLI::IsMember({"counting", "riordan"}));

  // critical
  auto* critical_cmd = app.add_subcommand("critical", "Critical value c_{n,alpha}");
  critical_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  critical_cmd->add_option("--alpha", alpha_text)->required();
  critical_cmd->add_flag("--conservative", conservative);

  // power
  auto* power_cmd = app.add_subcommand("power", "Exact power under a constant shift");
  std::optional<std::string> shift_text;
  std::string sigma_text = "1";
  power_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  power_cmd->add_option("--alpha", alpha_text)->required();
  auto* p_opt = power_cmd->add_option("--p", p_text, "Positive-sign probability");
  auto* shift_opt = power_cmd->add_option("--shift", shift_text, "Shift c of the alternative");
  power_cmd->add_option("--sigma", sigma_text, "Gaussian error scale for --shift");
  p_opt->excludes(shift_opt);
  power_cmd->add_option("--tail", tail_name)->check(CLI::IsMember({"unilateral", "bilateral"}));
  power_cmd->add_flag("--conservative", conservative);

  // snk
  auto* snk_cmd = app.add_subcommand("snk", "Counts S_n^(k)(x)");
  int x = 0;
  std::string snk_engine = "dp";
  snk_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  snk_cmd->add_option("--x", x)->required()->check(CLI::PositiveNumber);
  snk_cmd->add_option("--engine", snk_engine)->check(CLI::IsMember({"dp", "proposition1"}));

  // converge
  auto* converge_cmd = app.add_subcommand("converge", "Gap between Pr(L_n <= k) and the one-sided run law");
  int k = 0;
  std::vector<int> n_grid;
  converge_cmd->add_option("--p", p_text)->required();
  converge_cmd->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  converge_cmd->add_option("--n-grid", n_grid)->required()->delimiter(',');

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force joint counts (n <= 24)");
  oracle_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  // discrepancies
  auto* disc_cmd = app.add_subcommand("discrepancies", "Corrections applied to the printed recursions (JSON)");
  std::string subject = "proposition1";
  int grid = 18;
  disc_cmd->add_option("--subject", subject)->check(CLI::IsMember({"proposition1", "riordan"}));
  disc_cmd->add_option("--n", grid, "Validation grid bound")->check(CLI::Range(2, 40));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  const OutputFormat format = format_name == "json"  ? OutputFormat::json
                              : format_name == "csv" ? OutputFormat::csv
                                                     : OutputFormat::text;
  try {
    if (*test_cmd) {
      TestConfig config;
      config.alpha = parse_rational(alpha_text);
      config.tail = parse_tail(tail_name);
      config.convention = convention_of(conservative);
      config.zero_policy = zero_policy_name == "drop" ? ZeroPolicy::drop : ZeroPolicy::error;
      require_alpha(config.alpha);
      auto series = ingest_path(input_path);
      auto report = run_test(series, config);
      std::cout << render_test(report, format, precision);
      return (fail_on_reject && report.reject) ? kExitRejected : 0;
    }
    if (*table_cmd) {
      if (p_text) {
        std::cout << render_table(alternative_table(n, parse_rational(*p_text)), format, precision);
      } else if (table_engine == "riordan") {
        std::cout << render_table(null_table_riordan(n).table, format, precision);
      } else {
        std::cout << render_table(*null_table(n), format, precision);
      }
      return 0;
    }
    if (*critical_cmd) {
      std::cout << render_critical(
          critical_value(n, parse_rational(alpha_text), convention_of(conservative)), format,
          precision);
      return 0;
    }
    if (*power_cmd) {
      if (!p_text && !shift_text) {
        throw Error(ErrorCode::InvalidArgument, "power needs --p or --shift");
      }
      auto spec = p_text ? AlternativeSpec::direct(parse_rational(*p_text))
                         : AlternativeSpec::gaussian_shift(parse_real(*shift_text),
                                                           parse_real(sigma_text));
      std::cout << render_power(power(n, parse_rational(alpha_text), parse_tail(tail_name),
                                      convention_of(conservative), spec),
                                format, precision);
      return 0;
    }
    if (*snk_cmd) {
      auto table = snk_engine == "dp" ? snk_dp(n, x) : snk_proposition1(n, x).table;
      std::cout << render_counts(table, format);
      return 0;
    }
    if (*converge_cmd) {
      auto report = convergence_report(k, AlternativeSpec::direct(parse_rational(*p_text)), n_grid);
      std::cout << render_convergence(report, format, precision);
      return 0;
    }
    if (*oracle_cmd) {
      std::cout << render_oracle(enumerate_joint(n), format);
      return 0;
    }
    if (*disc_cmd) {
      auto report = subject == "riordan" ? null_table_riordan(grid).report
                                         : reconcile_proposition1(grid).report;
      std::cout << report.to_json().dump(2) << '\n';
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return 0;
}
