#include "longrun/proposition1.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "longrun/errors.hpp"

namespace longrun {

namespace {

// DP values used as the right-hand side of the one-step identity checks.
class GridOracle {
 public:
  explicit GridOracle(int max_n) : max_n_(max_n) {
    tables_.resize(static_cast<std::size_t>(max_n) + 1);
    for (int x = 1; x <= max_n; ++x) {
      auto& row = tables_[x];
      row.reserve(static_cast<std::size_t>(max_n));
      for (int m = 1; m <= max_n; ++m) row.push_back(snk_dp(m, x).counts);
    }
  }

  BigInt operator()(int m, int k, int x) const {
    if (m < 0 || k < 0 || k > m) return 0;
    if (m == 0) return 1;
    return tables_[x][m - 1][k];
  }

  int max_n() const { return max_n_; }

 private:
  int max_n_;
  // tables_[x][m-1][k]
  std::vector<std::vector<std::vector<BigInt>>> tables_;
};

template <typename Lookup>
BigInt evaluate_sum(const BoundarySumForm& form, int n, int k, int x,
                    Lookup&& lookup) {
  BigInt total = 0;
  for (int j = form.j_start; j <= x; ++j) {
    total += lookup(n - form.n_offset - j, k - form.k_offset - form.k_step * j);
  }
  return total;
}

std::string describe_change(const BoundarySumForm& from,
                            const BoundarySumForm& to) {
  std::ostringstream out;
  auto field = [&](const char* name, int a, int b) {
    if (a == b) return;
    if (out.tellp() > 0) out << "; ";
    out << name << ' ' << a << " -> " << b;
  };
  field("length offset", from.n_offset, to.n_offset);
  field("positives offset", from.k_offset, to.k_offset);
  field("positives step per j", from.k_step, to.k_step);
  field("sum start", from.j_start, to.j_start);
  return out.str();
}

std::string term(int offset, const char* var, const char* step) {
  std::ostringstream out;
  out << var;
  if (step[0] != '\0') out << " - " << step;
  if (offset > 0) out << " - " << offset;
  if (offset < 0) out << " + " << -offset;
  return out.str();
}

struct GridPoint {
  int n, k, x;
};

std::vector<GridPoint> grid_points(int max_n, CountRegion region) {
  std::vector<GridPoint> points;
  for (int n = 1; n <= max_n; ++n) {
    for (int x = 1; x <= n; ++x) {
      for (int k = 0; k <= n; ++k) {
        if (region_of(n, k, x) == region) points.push_back({n, k, x});
      }
    }
  }
  return points;
}

template <typename Evaluate>
std::size_t count_mismatches(const std::vector<GridPoint>& points,
                             const GridOracle& oracle, Evaluate&& evaluate,
                             std::vector<DiscrepancyPoint>* record) {
  std::size_t bad = 0;
  for (const auto& p : points) {
    BigInt got = evaluate(p.n, p.k, p.x);
    BigInt want = oracle(p.n, p.k, p.x);
    if (got != want) {
      ++bad;
      if (record) {
        record->push_back({p.n, p.k, p.x, got.str(), want.str()});
      }
    }
  }
  return bad;
}

DiscrepancyEntry reconcile_boundary(const char* region_text,
                                    const BoundarySumForm& printed,
                                    std::vector<BoundarySumForm> candidates,
                                    const std::vector<GridPoint>& points,
                                    const GridOracle& oracle,
                                    std::optional<BoundarySumForm>& chosen) {
  DiscrepancyEntry entry;
  entry.region = region_text;
  entry.literal_formula = printed.formula();
  entry.grid_points = points.size();

  auto evaluate_with = [&](const BoundarySumForm& form) {
    return [&oracle, form](int n, int k, int x) {
      return evaluate_sum(form, n, k, x,
                          [&](int m, int kk) { return oracle(m, kk, x); });
    };
  };
  entry.literal_mismatches =
      count_mismatches(points, oracle, evaluate_with(printed), &entry.mismatches);

  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const auto& a, const auto& b) {
                     return a.distance(printed) < b.distance(printed);
                   });
  for (const auto& candidate : candidates) {
    if (!candidate.well_founded()) continue;
    if (count_mismatches(points, oracle, evaluate_with(candidate), nullptr) == 0) {
      chosen = candidate;
      break;
    }
  }

  if (!chosen) {
    entry.status = EntryStatus::unreconciled;
    entry.correction = "no candidate reproduces the oracle; region refused";
  } else if (*chosen == printed) {
    entry.status = EntryStatus::exact;
    entry.resolved_formula = chosen->formula();
  } else {
    entry.status = EntryStatus::corrected;
    entry.resolved_formula = chosen->formula();
    entry.correction = describe_change(printed, *chosen);
    if (!printed.well_founded()) {
      entry.correction += printed.self_referential()
                              ? " (printed sum contains S_n^(k) itself at its first term)"
                              : " (printed sum references its own length n)";
    }
  }
  return entry;
}

}  // namespace

CountRegion region_of(int n, int k, int x) {
  const bool zeros_ok = n - k <= x;
  const bool ones_ok = k <= x;
  if (zeros_ok && ones_ok) return CountRegion::both_bounded;
  if (zeros_ok) return CountRegion::ones_exceed;
  if (ones_ok) return CountRegion::zeros_exceed;
  return CountRegion::interior;
}

bool BoundarySumForm::self_referential() const {
  return n_offset + j_start == 0 && k_offset + k_step * j_start == 0;
}

bool BoundarySumForm::well_founded() const { return n_offset + j_start >= 1; }

int BoundarySumForm::distance(const BoundarySumForm& other) const {
  return (n_offset != other.n_offset) + (k_offset != other.k_offset) +
         (k_step != other.k_step) + (j_start != other.j_start);
}

std::string BoundarySumForm::formula() const {
  std::ostringstream out;
  out << "S_n^(k)(x) = sum_{j=" << j_start << "}^{x} S_{"
      << term(n_offset, "n", "j") << "}^{("
      << term(k_offset, "k", k_step == 1 ? "j" : "") << ")}(x)";
  return out.str();
}

std::string to_string(SpecialPointReading reading) {
  switch (reading) {
    case SpecialPointReading::as_printed: return "as printed, pairs read as (k,n)";
    case SpecialPointReading::swapped: return "pairs read as (n,k)";
    case SpecialPointReading::none: return "no special-point correction";
  }
  return "unknown";
}

BoundarySumForm printed_ones_exceed_form() { return {0, 0, 0, 0}; }
BoundarySumForm printed_zeros_exceed_form() { return {0, -1, 1, 0}; }

CandidateSpace CandidateSpace::standard() {
  CandidateSpace space;
  for (int n_offset : {0, 1, 2}) {
    for (int k_offset : {-1, 0, 1}) {
      for (int k_step : {0, 1}) {
        for (int j_start : {0, 1}) {
          BoundarySumForm form{n_offset, k_offset, k_step, j_start};
          space.ones_exceed.push_back(form);
          space.zeros_exceed.push_back(form);
        }
      }
    }
  }
  space.interior = {SpecialPointReading::as_printed, SpecialPointReading::swapped,
                    SpecialPointReading::none};
  return space;
}

CandidateSpace CandidateSpace::printed_only() {
  CandidateSpace space;
  space.ones_exceed = {printed_ones_exceed_form()};
  space.zeros_exceed = {printed_zeros_exceed_form()};
  space.interior = {SpecialPointReading::as_printed};
  return space;
}

int special_point_correction(int n, int k, int x, SpecialPointReading reading) {
  if (reading == SpecialPointReading::none) return 0;
  // Families are written over (first, second) = (k, n) as printed.
  const int first = reading == SpecialPointReading::as_printed ? k : n;
  const int second = reading == SpecialPointReading::as_printed ? n : k;
  const int block = x + 1;
  auto in_range = [x](int i) { return i >= 1 && i <= x; };

  // +1: (2j(x+1)+i, j(x+1)) or (2j(x+1)+i, j(x+1)+i), j >= 1
  if (second % block == 0) {
    int j = second / block;
    if (j >= 1 && in_range(first - 2 * j * block)) return 1;
  }
  if ((first - second) % block == 0) {
    int j = (first - second) / block;
    if (j >= 1 && in_range(second - j * block)) return 1;
  }
  // -1: ((2j+1)(x+1)+i, j(x+1)+i) or ((2j+1)(x+1)+i, (j+1)(x+1)), j >= 1
  if ((first - second) % block == 0) {
    int j = (first - second) / block - 1;
    if (j >= 1 && in_range(second - j * block)) return -1;
  }
  if (second % block == 0) {
    int j = second / block - 1;
    if (j >= 1 && in_range(first - (2 * j + 1) * block)) return -1;
  }
  return 0;
}

Reconciliation reconcile_proposition1(int grid_max_n, const CandidateSpace& space) {
  if (grid_max_n < 1) {
    throw Error(ErrorCode::InvalidArgument, "validation grid needs n >= 1");
  }
  GridOracle oracle(grid_max_n);
  Reconciliation result;
  result.grid_max_n = grid_max_n;
  auto& report = result.report;
  report.subject = "S_n^(k)(x) case recursion";
  report.validation_grid = "1 <= x <= n <= " + std::to_string(grid_max_n) +
                           ", 0 <= k <= n; right-hand sides evaluated with DP counts";
  report.notes = {
      "conventions: S_0^(0)(x) = 1; S_m^(j)(x) = 0 for m < 0, j < 0 or j > m",
      "S_0^(0)(x) = 1 coincides with the binomial case at n = 0, so the "
      "R_0^(0) and S_0^(0) readings of the convention give the same values",
      "a served form must be well founded: every term has length < n",
  };

  {
    DiscrepancyEntry entry;
    entry.region = "case 1: n-k <= x and k <= x";
    entry.literal_formula = "S_n^(k)(x) = C(n,k)";
    entry.resolved_formula = entry.literal_formula;
    auto points = grid_points(grid_max_n, CountRegion::both_bounded);
    entry.grid_points = points.size();
    entry.literal_mismatches = count_mismatches(
        points, oracle, [](int n, int k, int) { return binomial(n, k); },
        &entry.mismatches);
    entry.status = entry.literal_mismatches == 0 ? EntryStatus::exact
                                                 : EntryStatus::unreconciled;
    report.entries.push_back(std::move(entry));
  }

  report.entries.push_back(reconcile_boundary(
      "case 2: n-k <= x and k > x", printed_ones_exceed_form(), space.ones_exceed,
      grid_points(grid_max_n, CountRegion::ones_exceed), oracle,
      result.forms.ones_exceed));
  report.entries.push_back(reconcile_boundary(
      "case 3: n-k > x and k <= x", printed_zeros_exceed_form(), space.zeros_exceed,
      grid_points(grid_max_n, CountRegion::zeros_exceed), oracle,
      result.forms.zeros_exceed));

  {
    DiscrepancyEntry entry;
    entry.region = "case 4: n-k > x and k > x";
    entry.literal_formula =
        "S_n^(k)(x) = R_n^(k)(x) + special-point correction, "
        "R_n^(k)(x) = sum_{j>=0} sum_{i=1}^{x} [ S_{n-1-i-2j(x+1)}^{(k-1-j(x+1))} "
        "+ S_{n-1-i-2j(x+1)}^{(k-i-j(x+1))} - S_{n-1-(2j+1)(x+1)-i}^{(k-(j+1)(x+1))} "
        "- S_{n-1-(2j+1)(x+1)-i}^{(k-1-j(x+1)-i)} ]; +1 at (k,n) = (2j(x+1)+i, j(x+1)) "
        "or (2j(x+1)+i, j(x+1)+i); -1 at (k,n) = ((2j+1)(x+1)+i, j(x+1)+i) or "
        "((2j+1)(x+1)+i, (j+1)(x+1)); i in 1..x, j >= 1";
    auto points = grid_points(grid_max_n, CountRegion::interior);
    entry.grid_points = points.size();
    auto evaluate_with = [&](SpecialPointReading reading) {
      return [&oracle, reading](int n, int k, int x) {
        BigInt value = interior_series(
            n, k, x, [&](int m, int kk) { return oracle(m, kk, x); });
        return value + special_point_correction(n, k, x, reading);
      };
    };
    entry.literal_mismatches = count_mismatches(
        points, oracle, evaluate_with(SpecialPointReading::as_printed),
        &entry.mismatches);
    for (auto reading : space.interior) {
      if (count_mismatches(points, oracle, evaluate_with(reading), nullptr) == 0) {
        result.forms.interior = reading;
        break;
      }
    }
    if (!result.forms.interior) {
      entry.status = EntryStatus::unreconciled;
      entry.correction = "no special-point reading reproduces the oracle; region refused";
    } else if (*result.forms.interior == SpecialPointReading::as_printed) {
      entry.status = EntryStatus::exact;
      entry.resolved_formula = entry.literal_formula;
    } else {
      entry.status = EntryStatus::corrected;
      entry.resolved_formula =
          "R_n^(k)(x) series unchanged; special points " +
          to_string(*result.forms.interior);
      entry.correction = "special-point families: " +
                         to_string(SpecialPointReading::as_printed) + " -> " +
                         to_string(*result.forms.interior);
    }
    report.entries.push_back(std::move(entry));
  }
  return result;
}

std::shared_ptr<const Reconciliation> default_reconciliation() {
  static const auto instance =
      std::make_shared<const Reconciliation>(reconcile_proposition1(18));
  return instance;
}

CountTable snk_proposition1(int n, int x, const Reconciliation& reconciliation) {
  if (n < 1 || x < 1) {
    throw Error(ErrorCode::InvalidArgument, "need n >= 1 and x >= 1");
  }
  const auto& forms = reconciliation.forms;
  // rows[m][k] = S_m^(k)(x), filled in increasing m.
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n) + 1);
  rows[0] = {BigInt(1)};
  auto lookup = [&rows](int m, int k) -> BigInt {
    if (m < 0 || k < 0 || k > m) return 0;
    return rows[m][k];
  };
  auto refuse = [&](int m, int k, const char* which) {
    throw Error(ErrorCode::UnreconciledCase,
                std::string(which) + " is unreconciled; cannot serve S_" +
                    std::to_string(m) + "^(" + std::to_string(k) + ")(" +
                    std::to_string(x) + ")");
  };

  for (int m = 1; m <= n; ++m) {
    auto& row = rows[m];
    row.assign(static_cast<std::size_t>(m) + 1, BigInt(0));
    for (int k = 0; k <= m; ++k) {
      switch (region_of(m, k, x)) {
        case CountRegion::both_bounded:
          row[k] = binomial(m, k);
          break;
        case CountRegion::ones_exceed:
          if (!forms.ones_exceed) refuse(m, k, "case 2");
          row[k] = evaluate_sum(*forms.ones_exceed, m, k, x, lookup);
          break;
        case CountRegion::zeros_exceed:
          if (!forms.zeros_exceed) refuse(m, k, "case 3");
          row[k] = evaluate_sum(*forms.zeros_exceed, m, k, x, lookup);
          break;
        case CountRegion::interior:
          if (!forms.interior) refuse(m, k, "case 4");
          row[k] = interior_series(m, k, x, lookup) +
                   special_point_correction(m, k, x, *forms.interior);
          break;
      }
    }
  }

  CountTable table;
  table.n = n;
  table.x = x;
  table.engine = CountEngine::proposition1;
  table.counts = std::move(rows[n]);
  return table;
}

Proposition1Result snk_proposition1(int n, int x) {
  auto reconciliation = default_reconciliation();
  Proposition1Result result;
  result.table = snk_proposition1(n, x, *reconciliation);
  result.report = std::shared_ptr<const DiscrepancyReport>(reconciliation,
                                                           &reconciliation->report);
  return result;
}

}  // namespace longrun
