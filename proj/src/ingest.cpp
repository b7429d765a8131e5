#include "longrun/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <vector>

#include "longrun/errors.hpp"

namespace longrun {

namespace {

std::string trim(std::string_view text) {
  auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  auto end = text.find_last_not_of(" \t\r");
  return std::string(text.substr(begin, end - begin + 1));
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    fields.push_back(trim(std::string_view(line).substr(
        start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::string lower(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return text;
}

std::string where(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line);
}

double parse_field(const std::string& text, const std::string& column,
                   const std::string& source, std::size_t line) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::ParseError, where(source, line) + ": column '" + column +
                                           "': cannot parse '" + text + "' as a number");
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::NonFiniteValue,
                where(source, line) + ": column '" + column + "' is not finite");
  }
  return value;
}

}  // namespace

ResidualSeries ingest_csv(std::istream& in, const std::string& source_name) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (trim(line).empty()) continue;
    header = split_fields(line);
    break;
  }
  if (header.empty()) {
    throw Error(ErrorCode::MissingColumns, source_name + ": no header row");
  }
  auto column = [&](const char* name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (lower(header[i]) == name) return i;
    return std::nullopt;
  };
  auto x_col = column("x");
  auto y_col = column("y");
  auto fitted_col = column("fitted");
  auto residual_col = column("residual");

  ResidualSource source;
  if (x_col && y_col && fitted_col) {
    source = ResidualSource::raw;
  } else if (x_col && residual_col) {
    source = ResidualSource::precomputed;
  } else {
    std::string found;
    for (const auto& h : header) found += (found.empty() ? "" : ", ") + h;
    throw Error(ErrorCode::MissingColumns,
                source_name + ": header must name (x, y, fitted) or (x, residual); found: " + found);
  }

  std::vector<Observation> points;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::ParseError,
                  where(source_name, line_no) + ": expected " + std::to_string(header.size()) +
                      " fields, got " + std::to_string(fields.size()));
    }
    Observation obs;
    obs.covariate = parse_field(fields[*x_col], header[*x_col], source_name, line_no);
    if (source == ResidualSource::raw) {
      double y = parse_field(fields[*y_col], header[*y_col], source_name, line_no);
      double fitted = parse_field(fields[*fitted_col], header[*fitted_col], source_name, line_no);
      obs.residual = y - fitted;
    } else {
      obs.residual = parse_field(fields[*residual_col], header[*residual_col], source_name, line_no);
    }
    points.push_back(obs);
  }
  if (points.size() < 2) {
    throw Error(ErrorCode::ParseError,
                source_name + ": need at least 2 data rows, got " + std::to_string(points.size()));
  }
  return ResidualSeries(std::move(points), source);
}

ResidualSeries ingest_path(const std::string& path) {
  if (path == "-") return ingest_csv(std::cin, "<stdin>");
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return ingest_csv(file, path);
}

}  // namespace longrun
