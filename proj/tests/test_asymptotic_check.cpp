#include <doctest.h>

#include <vector>

#include "longrun/asymptotic_check.hpp"
#include "longrun/brute_oracle.hpp"
#include "longrun/errors.hpp"

using namespace longrun;

namespace {
Rational q(int num, int den) { return Rational(num, den); }
}  // namespace

TEST_CASE("positive-run counts") {
  CHECK(plus_run_counts(4, 1).counts[2] == 3);
  CHECK(plus_run_counts(4, 4).counts[2] == 6);
  auto none = plus_run_counts(3, 0);
  CHECK(none.counts == std::vector<BigInt>{1, 0, 0, 0});
  CHECK_THROWS_AS(plus_run_counts(0, 1), Error);
  CHECK_THROWS_AS(plus_run_counts(3, -1), Error);
}

TEST_CASE("positive-run counts match enumeration for n <= 14") {
  for (int n = 1; n <= 14; ++n) {
    auto joint = enumerate_joint(n);
    for (int x = 0; x <= n; ++x) {
      auto t = plus_run_counts(n, x);
      for (int k = 0; k <= n; ++k) {
        REQUIRE(t.counts[k] == BigInt(joint.plus_count_at_most(k, x)));
        if (k <= x) REQUIRE(t.counts[k] == binomial(n, k));
      }
    }
  }
}

TEST_CASE("one-sided cdf examples") {
  auto seventy = AlternativeSpec::direct(q(7, 10));
  CHECK(*plus_run_cdf(4, 4, seventy).exact == 1);
  CHECK(*plus_run_cdf(4, 1, AlternativeSpec::direct(q(1, 2))).exact == q(8, 16));
  CHECK(*plus_run_cdf(2, 1, seventy).exact == q(51, 100));
}

TEST_CASE("longest run law is dominated by the one-sided law") {
  for (int n = 1; n <= 25; ++n) {
    for (int percent : {30, 60, 90}) {
      auto spec = AlternativeSpec::direct(q(percent, 100));
      for (int k = 0; k <= n; ++k) {
        REQUIRE(*alt_cdf(n, k, spec).exact <= *plus_run_cdf(n, k, spec).exact);
      }
    }
  }
}

TEST_CASE("convergence report") {
  std::vector<int> grid = {20, 40, 80};
  CHECK_THROWS_AS(convergence_report(3, AlternativeSpec::direct(q(1, 2)), grid), Error);
  CHECK_THROWS_AS(convergence_report(30, AlternativeSpec::direct(q(7, 10)), grid), Error);

  std::vector<int> equal_k = {6};
  auto full = convergence_report(6, AlternativeSpec::direct(q(7, 10)), equal_k);
  CHECK(full.rows[0].difference == 0);

  auto up = convergence_report(4, AlternativeSpec::direct(q(7, 10)), grid);
  auto down = convergence_report(4, AlternativeSpec::direct(q(3, 10)), grid);
  CHECK_FALSE(up.uses_negative_runs);
  CHECK(down.uses_negative_runs);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(up.rows[i].difference == down.rows[i].difference);
  }
  CHECK(up.strictly_decreasing);
}
