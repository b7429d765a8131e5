#include <doctest.h>

#include "longrun/conditional_counts.hpp"
#include "longrun/errors.hpp"
#include "oracles.hpp"

using namespace longrun;

TEST_CASE("compositions with bounded parts") {
  CHECK(compositions_bounded(5, 2) == 8);
  CHECK(compositions_bounded(5, 3) == 13);
  CHECK(compositions_bounded(0, 1) == 1);
  CHECK(compositions_bounded(0, 7) == 1);
  CHECK(compositions_bounded(-1, 2) == 0);
  CHECK_THROWS_AS(compositions_bounded(3, 0), Error);
  for (int n = 0; n <= 16; ++n) {
    for (int x = 1; x <= 17; ++x) {
      REQUIRE(compositions_bounded(n, x) == BigInt(testing::list_compositions(n, x)));
    }
  }
  // unbounded parts: 2^(n-1)
  CHECK(compositions_bounded(60, 60) == pow2(59));
}

TEST_CASE("dp counts on enumerated examples") {
  auto t = snk_dp(4, 2);
  std::vector<BigInt> want = {0, 2, 6, 2, 0};
  CHECK(t.counts == want);
  CHECK(snk_dp(5, 2).at(2) == 7);
  CHECK(snk_dp(4, 4).at(2) == 6);
  CHECK(snk_dp(3, 2).at(0) == 0);
  CHECK(snk_dp(1, 1).counts == std::vector<BigInt>{1, 1});
  CHECK_THROWS_AS(snk_dp(0, 1), Error);
  CHECK_THROWS_AS(snk_dp(3, 0), Error);
}

TEST_CASE("dp matches a direct scan for n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    for (int x = 1; x <= n; ++x) {
      auto t = snk_dp(n, x);
      for (int k = 0; k <= n; ++k) {
        REQUIRE(t.at(k) == BigInt(testing::scan_count(n, k, x)));
      }
    }
  }
}

TEST_CASE("count table invariants") {
  for (int n = 1; n <= 30; ++n) {
    std::vector<BigInt> previous;
    for (int x = 1; x <= n + 2; ++x) {
      auto t = snk_dp(n, x);
      REQUIRE(t.total() == 2 * compositions_bounded(n, x));
      for (int k = 0; k <= n; ++k) {
        REQUIRE(t.at(k) <= binomial(n, k));
        REQUIRE(t.at(k) == t.at(n - k));
        if (x >= std::max(k, n - k)) REQUIRE(t.at(k) == binomial(n, k));
        if (!previous.empty()) REQUIRE(t.at(k) >= previous[k]);
      }
      previous = t.counts;
    }
  }
}

TEST_CASE("cached tables are shared") {
  auto a = snk_cached(20, 3);
  auto b = snk_cached(20, 3);
  CHECK(a.get() == b.get());
  CHECK(snk_cached(10, 50)->counts == snk_dp(10, 10).counts);
}
