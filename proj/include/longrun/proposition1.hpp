#pragma once

// Closed recursion for S_n^(k)(x) by cases on (n - k, k) versus x, kept as an
// independent engine next to snk_dp. The printed recursion is reconciled
// against the DP on a validation grid before it is allowed to serve values;
// every deviation from the printed form ends up in a DiscrepancyReport.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "longrun/conditional_counts.hpp"
#include "longrun/discrepancy.hpp"

namespace longrun {

enum class CountRegion {
  both_bounded = 1,  // n-k <= x, k <= x
  ones_exceed = 2,   // n-k <= x, k > x
  zeros_exceed = 3,  // n-k > x,  k <= x
  interior = 4,      // n-k > x,  k > x
};

CountRegion region_of(int n, int k, int x);

/// sum_{j=j_start}^{x} S_{n - n_offset - j}^{(k - k_offset - k_step*j)}(x)
struct BoundarySumForm {
  int n_offset = 0;
  int k_offset = 0;
  int k_step = 0;
  int j_start = 0;

  /// The j_start term is S_n^(k) itself.
  bool self_referential() const;
  /// Every term has a strictly smaller length, so the form can drive a
  /// bottom-up evaluation.
  bool well_founded() const;
  int distance(const BoundarySumForm& other) const;
  std::string formula() const;

  friend bool operator==(const BoundarySumForm&, const BoundarySumForm&) = default;
};

/// Where the +-1 special-point families of the interior case are placed.
enum class SpecialPointReading {
  as_printed,  // pairs read as (k, n)
  swapped,     // pairs read as (n, k)
  none,
};

std::string to_string(SpecialPointReading reading);

BoundarySumForm printed_ones_exceed_form();   // case 2 as printed
BoundarySumForm printed_zeros_exceed_form();  // case 3 as printed

/// Candidate corrections tried, nearest to the printed form first.
struct CandidateSpace {
  std::vector<BoundarySumForm> ones_exceed;
  std::vector<BoundarySumForm> zeros_exceed;
  std::vector<SpecialPointReading> interior;

  /// Offsets n in {0,1,2}, k in {-1,0,1}, k_step in {0,1}, j_start in {0,1}.
  static CandidateSpace standard();
  /// Printed forms only; used to exercise the refusal path.
  static CandidateSpace printed_only();
};

struct Proposition1Forms {
  std::optional<BoundarySumForm> ones_exceed;
  std::optional<BoundarySumForm> zeros_exceed;
  std::optional<SpecialPointReading> interior;
};

struct Reconciliation {
  Proposition1Forms forms;
  DiscrepancyReport report;
  int grid_max_n = 0;
};

/// Checks each case as a one-step identity with DP values on the right-hand
/// side, for all 1 <= x <= n <= grid_max_n and 0 <= k <= n, and picks the
/// first candidate that holds everywhere.
Reconciliation reconcile_proposition1(int grid_max_n,
                                      const CandidateSpace& space = CandidateSpace::standard());

/// Reconciliation over the default grid (n <= 18), computed once.
std::shared_ptr<const Reconciliation> default_reconciliation();

/// Interior-case series R_n^(k)(x), reading S values from `lookup`.
template <typename Lookup>
BigInt interior_series(int n, int k, int x, Lookup&& lookup);

/// +1, -1 or 0 from the special-point families under the given reading.
int special_point_correction(int n, int k, int x, SpecialPointReading reading);

struct Proposition1Result {
  CountTable table;
  std::shared_ptr<const DiscrepancyReport> report;
};

/// Throws UnreconciledCase if (n, x) needs a region the reconciliation
/// could not fix.
CountTable snk_proposition1(int n, int x, const Reconciliation& reconciliation);
Proposition1Result snk_proposition1(int n, int x);

// -- implementation ---------------------------------------------------------

template <typename Lookup>
BigInt interior_series(int n, int k, int x, Lookup&& lookup) {
  BigInt total = 0;
  const int block = x + 1;
  for (int j = 0; n - 2 - 2 * j * block >= 0; ++j) {
    for (int i = 1; i <= x; ++i) {
      const int n_even = n - 1 - i - 2 * j * block;
      const int n_odd = n - 1 - (2 * j + 1) * block - i;
      total += lookup(n_even, k - 1 - j * block);
      total += lookup(n_even, k - i - j * block);
      total -= lookup(n_odd, k - (j + 1) * block);
      total -= lookup(n_odd, k - 1 - j * block - i);
    }
  }
  return total;
}

}  // namespace longrun
