#include "longrun/discrepancy.hpp"

#include <algorithm>

namespace longrun {

std::string to_string(EntryStatus status) {
  switch (status) {
    case EntryStatus::exact: return "exact";
    case EntryStatus::corrected: return "corrected";
    case EntryStatus::unreconciled: return "unreconciled";
  }
  return "unknown";
}

bool DiscrepancyReport::all_resolved() const {
  return std::none_of(entries.begin(), entries.end(), [](const auto& e) {
    return e.status == EntryStatus::unreconciled;
  });
}

std::size_t DiscrepancyReport::corrected_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) {
        return e.status == EntryStatus::corrected;
      }));
}

nlohmann::ordered_json DiscrepancyReport::to_json() const {
  nlohmann::ordered_json out;
  out["schema"] = 1;
  out["subject"] = subject;
  out["validation_grid"] = validation_grid;
  out["notes"] = notes;
  out["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json entry;
    entry["region"] = e.region;
    entry["literal_formula"] = e.literal_formula;
    entry["resolved_formula"] = e.resolved_formula;
    entry["correction"] = e.correction;
    entry["status"] = to_string(e.status);
    entry["grid_points"] = e.grid_points;
    entry["literal_mismatches"] = e.literal_mismatches;
    auto& points = entry["mismatches"] = nlohmann::ordered_json::array();
    for (const auto& p : e.mismatches) {
      nlohmann::ordered_json point = {{"n", p.n}, {"k", p.k}};
      if (p.x > 0) point["x"] = p.x;
      point["literal"] = p.literal_value;
      point["resolved"] = p.resolved_value;
      points.push_back(std::move(point));
    }
    out["entries"].push_back(std::move(entry));
  }
  return out;
}

}  // namespace longrun
