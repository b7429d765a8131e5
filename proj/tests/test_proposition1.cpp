#include <doctest.h>

#include "longrun/conditional_counts.hpp"
#include "longrun/errors.hpp"
#include "longrun/proposition1.hpp"

using namespace longrun;

namespace {

const DiscrepancyEntry& entry_for(const DiscrepancyReport& report, const char* prefix) {
  for (const auto& e : report.entries)
    if (e.region.rfind(prefix, 0) == 0) return e;
  FAIL("missing entry " << prefix);
  static DiscrepancyEntry none;
  return none;
}

}  // namespace

TEST_CASE("regions") {
  CHECK(region_of(4, 2, 2) == CountRegion::both_bounded);
  CHECK(region_of(5, 4, 2) == CountRegion::ones_exceed);
  CHECK(region_of(5, 2, 2) == CountRegion::zeros_exceed);
  CHECK(region_of(9, 4, 3) == CountRegion::interior);
}

TEST_CASE("printed boundary sums evaluated with true counts") {
  // case 3 as printed at n=5, k=2, x=2: S_5^(3) + S_4^(2) + S_3^(1) = 7 + 6 + 3
  auto lookup = [](int m, int k) -> BigInt {
    if (m < 0 || k < 0 || k > m) return 0;
    if (m == 0) return 1;
    return snk_dp(m, 2).at(k);
  };
  BigInt printed = 0;
  auto form = printed_zeros_exceed_form();
  for (int j = 0; j <= 2; ++j) printed += lookup(5 - form.n_offset - j, 2 - form.k_offset - form.k_step * j);
  CHECK(printed == 16);
  CHECK(snk_dp(5, 2).at(2) == 7);
  CHECK(printed_ones_exceed_form().self_referential());
  CHECK_FALSE(printed_zeros_exceed_form().well_founded());
}

TEST_CASE("special points as printed never land inside the table") {
  for (int n = 1; n <= 40; ++n)
    for (int x = 1; x <= n; ++x)
      for (int k = 0; k <= n; ++k)
        if (region_of(n, k, x) == CountRegion::interior)
          REQUIRE(special_point_correction(n, k, x, SpecialPointReading::as_printed) == 0);
}

TEST_CASE("reconciliation on the default grid") {
  auto rec = default_reconciliation();
  const auto& report = rec->report;
  CHECK(report.all_resolved());
  CHECK(report.corrected_count() == 3);

  REQUIRE(rec->forms.ones_exceed);
  CHECK(*rec->forms.ones_exceed == BoundarySumForm{1, 0, 1, 0});
  REQUIRE(rec->forms.zeros_exceed);
  CHECK(*rec->forms.zeros_exceed == BoundarySumForm{1, 1, 0, 0});
  REQUIRE(rec->forms.interior);
  CHECK(*rec->forms.interior == SpecialPointReading::swapped);

  CHECK(entry_for(report, "case 1").status == EntryStatus::exact);
  const auto& c3 = entry_for(report, "case 3");
  CHECK(c3.status == EntryStatus::corrected);
  CHECK(c3.literal_mismatches == c3.mismatches.size());
  bool saw_example = false;
  for (const auto& p : c3.mismatches) {
    if (p.n == 5 && p.k == 2 && p.x == 2) {
      saw_example = true;
      CHECK(p.literal_value == "16");
      CHECK(p.resolved_value == "7");
    }
  }
  CHECK(saw_example);
  const auto& c4 = entry_for(report, "case 4");
  CHECK(c4.status == EntryStatus::corrected);
  CHECK(c4.literal_mismatches > 0);

  auto json = report.to_json();
  CHECK(json["schema"] == 1);
  CHECK(json["entries"].size() == 4);
}

TEST_CASE("special-point corrections are closed under k -> n-k") {
  for (int n = 1; n <= 30; ++n)
    for (int x = 1; x <= n; ++x)
      for (int k = 0; k <= n; ++k)
        if (region_of(n, k, x) == CountRegion::interior)
          REQUIRE(special_point_correction(n, k, x, SpecialPointReading::swapped) ==
                  special_point_correction(n, n - k, x, SpecialPointReading::swapped));
}

TEST_CASE("proposition engine examples and symmetry") {
  CHECK(snk_proposition1(4, 2).table.at(2) == 6);
  CHECK(snk_proposition1(5, 2).table.at(2) == 7);
  CHECK(snk_proposition1(3, 2).table.at(0) == 0);
  auto result = snk_proposition1(12, 3);
  CHECK(result.table.engine == CountEngine::proposition1);
  REQUIRE(result.report);
  for (int k = 0; k <= 12; ++k) CHECK(result.table.at(k) == result.table.at(12 - k));
}

TEST_CASE("printed-only reconciliation refuses unreconciled regions") {
  auto rec = reconcile_proposition1(10, CandidateSpace::printed_only());
  CHECK_FALSE(rec.report.all_resolved());
  CHECK_FALSE(rec.forms.ones_exceed.has_value());
  // x >= n stays in the binomial case and is still served
  CHECK(snk_proposition1(4, 4, rec).counts == snk_dp(4, 4).counts);
  try {
    snk_proposition1(5, 2, rec);
    FAIL("expected UnreconciledCase");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnreconciledCase);
  }
}
