#pragma once

#include <istream>
#include <string>

#include "longrun/run_stats.hpp"

namespace longrun {

/// Reads a CSV with a header row naming either (x, y, fitted) or
/// (x, residual); extra columns are ignored. Residuals are y - fitted for
/// the first layout. Result is sorted by x with stable ties.
ResidualSeries ingest_csv(std::istream& in, const std::string& source_name = "<input>");

/// "-" reads standard input.
ResidualSeries ingest_path(const std::string& path);

}  // namespace longrun
