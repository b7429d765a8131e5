#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace longrun {

enum class EntryStatus {
  exact,         // printed form reproduces the oracle
  corrected,     // printed form fails; a corrected form is served
  unreconciled,  // no candidate form matches; region is refused
};

std::string to_string(EntryStatus status);

struct DiscrepancyPoint {
  int n = 0;
  int k = 0;
  int x = 0;  // 0 when the quantity has no run bound
  std::string literal_value;
  std::string resolved_value;
};

struct DiscrepancyEntry {
  std::string region;
  std::string literal_formula;
  std::string resolved_formula;
  std::string correction;
  EntryStatus status = EntryStatus::exact;
  std::size_t grid_points = 0;
  std::size_t literal_mismatches = 0;
  std::vector<DiscrepancyPoint> mismatches;
};

/// Machine-readable record of where a printed recursion had to be corrected
/// to agree with an enumeration oracle.
struct DiscrepancyReport {
  std::string subject;
  std::string validation_grid;
  std::vector<std::string> notes;
  std::vector<DiscrepancyEntry> entries;

  /// True when no entry is unreconciled.
  bool all_resolved() const;
  std::size_t corrected_count() const;
  nlohmann::ordered_json to_json() const;
};

}  // namespace longrun
