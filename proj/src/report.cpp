#include "longrun/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "longrun/errors.hpp"

namespace longrun {

namespace {

using Json = nlohmann::ordered_json;

Json prob_json(const Rational& value, int precision) {
  return Json{{"fraction", fraction_string(value)},
              {"decimal", decimal_string(value, precision)}};
}

Json prob_json(const ProbValue& value, int precision) {
  if (value.exact) return prob_json(*value.exact, precision);
  return Json{{"decimal", decimal_string(value.approx, precision)}};
}

std::string prob_text(const Rational& value, int precision) {
  return fraction_string(value) + " (" + decimal_string(value, precision) + ")";
}

std::string prob_text(const ProbValue& value, int precision) {
  if (value.exact) return prob_text(*value.exact, precision);
  return decimal_string(value.approx, precision);
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

std::string source_name(ResidualSource source) {
  return source == ResidualSource::raw ? "raw" : "precomputed";
}

// Key/value pairs shared by the csv and text renderings of scalar results.
using Fields = std::vector<std::pair<std::string, std::string>>;

std::string render_fields(const Fields& fields, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    out << "field,value\n";
    for (const auto& [key, value] : fields) out << key << ',' << value << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& f : fields) width = std::max(width, f.first.size());
    for (const auto& [key, value] : fields) {
      out << std::left << std::setw(static_cast<int>(width) + 2) << key + ":" << value << '\n';
    }
  }
  return out.str();
}

Json spec_json(const AlternativeSpec& spec, int precision) {
  Json json;
  json["origin"] = spec.origin() == AlternativeSpec::Origin::direct ? "direct" : "gaussian_shift";
  if (spec.exact_p()) {
    json["p"] = prob_json(*spec.exact_p(), precision);
  } else {
    json["p"] = Json{{"decimal", decimal_string(spec.p(), precision)}};
  }
  if (spec.origin() == AlternativeSpec::Origin::gaussian_shift) {
    json["shift"] = decimal_string(spec.shift(), precision);
    json["sigma"] = decimal_string(spec.sigma(), precision);
  }
  return json;
}

std::string p_text(const AlternativeSpec& spec, int precision) {
  if (spec.exact_p()) return prob_text(*spec.exact_p(), precision);
  return decimal_string(spec.p(), precision);
}

}  // namespace

TestReport run_test(const ResidualSeries& series, const TestConfig& config) {
  require_alpha(config.alpha);
  TestReport report;
  report.config = config;
  report.source = series.source();
  report.n_input = series.size();
  SignSequence signs = signs_from_residuals(series, config.zero_policy);
  report.zero_positions = signs.zero_positions;
  report.n_effective = signs.size();
  report.statistic = longest_runs(signs);

  const int n = static_cast<int>(report.n_effective);
  report.p_value = p_value(n, report.statistic.l_n, config.tail);
  report.region = rejection_region(n, config.alpha, config.tail, config.convention);
  if (config.tail == Tail::unilateral) {
    report.critical_values.push_back(critical_value(n, config.alpha, config.convention));
  } else {
    report.critical_values.push_back(critical_value(n, 1 - config.alpha / 2, config.convention));
    report.critical_values.push_back(critical_value(n, config.alpha / 2, config.convention));
  }
  report.size = region_probability(*null_table(n), report.region);
  report.reject = report.region.rejects(report.statistic.l_n);
  return report;
}

std::string render_test(const TestReport& r, OutputFormat format, int precision) {
  const auto& s = r.statistic;
  const std::string decision = r.reject ? "reject" : "fail_to_reject";
  const std::string p_rule = r.config.tail == Tail::unilateral
                                 ? "Pr(L_n >= observed)"
                                 : "2 min(Pr(L_n >= observed), Pr(L_n <= observed)), capped at 1";
  if (format == OutputFormat::json) {
    Json json;
    json["schema"] = 1;
    json["command"] = "test";
    json["source"] = source_name(r.source);
    json["n_input"] = r.n_input;
    json["n_effective"] = r.n_effective;
    json["dropped_zeros"] = r.zero_positions.size();
    json["zero_positions"] = r.zero_positions;
    json["statistic"] = {{"l_plus", s.l_plus}, {"l_minus", s.l_minus}, {"l_n", s.l_n}, {"k", s.k}};
    json["alpha"] = prob_json(r.config.alpha, precision);
    json["tail"] = to_string(r.config.tail);
    json["convention"] = to_string(r.config.convention);
    json["zero_policy"] = r.config.zero_policy == ZeroPolicy::error ? "error" : "drop";
    Json criticals = Json::array();
    for (const auto& c : r.critical_values) {
      criticals.push_back({{"level", prob_json(c.alpha, precision)},
                           {"c", c.c},
                           {"attained_level", prob_json(c.attained_level, precision)}});
    }
    json["critical_values"] = criticals;
    json["rejection_region"] = r.region.describe();
    json["size"] = prob_json(r.size, precision);
    json["p_value"] = prob_json(r.p_value, precision);
    json["p_value_rule"] = p_rule;
    json["decision"] = decision;
    return dump(json);
  }
  Fields fields = {
      {"source", source_name(r.source)},
      {"n_input", std::to_string(r.n_input)},
      {"n_effective", std::to_string(r.n_effective)},
      {"dropped_zeros", std::to_string(r.zero_positions.size())},
      {"l_plus", std::to_string(s.l_plus)},
      {"l_minus", std::to_string(s.l_minus)},
      {"l_n", std::to_string(s.l_n)},
      {"k", std::to_string(s.k)},
      {"alpha", prob_text(r.config.alpha, precision)},
      {"tail", to_string(r.config.tail)},
      {"convention", to_string(r.config.convention)},
  };
  for (const auto& c : r.critical_values) {
    fields.push_back({"critical_value[" + fraction_string(c.alpha) + "]", std::to_string(c.c)});
  }
  fields.push_back({"rejection_region", r.region.describe()});
  fields.push_back({"size", prob_text(r.size, precision)});
  fields.push_back({"p_value", prob_text(r.p_value, precision)});
  fields.push_back({"decision", decision});
  if (format == OutputFormat::csv) {
    // fractions and decimals in separate rows keep the csv two-column
    for (auto& [key, value] : fields) {
      if (key == "alpha") value = fraction_string(r.config.alpha);
      if (key == "size") value = fraction_string(r.size);
      if (key == "p_value") value = fraction_string(r.p_value);
    }
    fields.push_back({"p_value_decimal", decimal_string(r.p_value, precision)});
  }
  return render_fields(fields, format);
}

std::string render_table(const ProbabilityTable& t, OutputFormat format, int precision) {
  if (format == OutputFormat::json) {
    Json json;
    json["schema"] = 1;
    json["command"] = "table";
    json["n"] = t.n;
    json["regime"] = t.regime == Regime::null ? "null" : "alternative";
    if (t.p) json["p"] = prob_json(*t.p, precision);
    Json rows = Json::array();
    for (int k = 1; k <= t.n; ++k) {
      rows.push_back({{"k", k},
                      {"pmf", prob_json(t.pmf[k], precision)},
                      {"cdf", prob_json(t.cdf[k], precision)}});
    }
    json["rows"] = rows;
    return dump(json);
  }
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    out << "k,pmf_num,pmf_den,pmf,cdf_num,cdf_den,cdf\n";
    for (int k = 1; k <= t.n; ++k) {
      out << k << ',' << numerator(t.pmf[k]) << ',' << denominator(t.pmf[k]) << ','
          << decimal_string(t.pmf[k], precision) << ',' << numerator(t.cdf[k]) << ','
          << denominator(t.cdf[k]) << ',' << decimal_string(t.cdf[k], precision) << '\n';
    }
    return out.str();
  }
  out << "law of L_" << t.n << (t.regime == Regime::null ? " under the null" : " under p = ");
  if (t.p) out << fraction_string(*t.p);
  out << '\n';
  out << std::left << std::setw(6) << "k" << std::setw(32) << "Pr(L_n = k)" << "Pr(L_n <= k)\n";
  for (int k = 1; k <= t.n; ++k) {
    out << std::left << std::setw(6) << k << std::setw(32) << prob_text(t.pmf[k], precision)
        << prob_text(t.cdf[k], precision) << '\n';
  }
  return out.str();
}

std::string render_critical(const CriticalValueResult& r, OutputFormat format, int precision) {
  if (format == OutputFormat::json) {
    Json json;
    json["schema"] = 1;
    json["command"] = "critical";
    json["n"] = r.n;
    json["alpha"] = prob_json(r.alpha, precision);
    json["convention"] = to_string(r.convention);
    json["c"] = r.c;
    json["attained_level"] = prob_json(r.attained_level, precision);
    return dump(json);
  }
  Fields fields = {{"n", std::to_string(r.n)},
                   {"alpha", format == OutputFormat::csv ? fraction_string(r.alpha)
                                                         : prob_text(r.alpha, precision)},
                   {"convention", to_string(r.convention)},
                   {"c", std::to_string(r.c)},
                   {"attained_level", format == OutputFormat::csv
                                          ? fraction_string(r.attained_level)
                                          : prob_text(r.attained_level, precision)}};
  if (format == OutputFormat::csv) {
    fields.push_back({"attained_level_decimal", decimal_string(r.attained_level, precision)});
  }
  return render_fields(fields, format);
}

std::string render_power(const PowerResult& r, OutputFormat format, int precision) {
  if (format == OutputFormat::json) {
    Json json;
    json["schema"] = 1;
    json["command"] = "power";
    json["n"] = r.n;
    json["alpha"] = prob_json(r.alpha, precision);
    json["tail"] = to_string(r.tail);
    json["convention"] = to_string(r.convention);
    Json spec = spec_json(r.spec, precision);
    json["p"] = spec["p"];
    json["alternative"] = spec;
    if (r.tail == Tail::unilateral) {
      json["c"] = r.region.upper;
    } else {
      json["c"] = {{"lower", r.region.lower}, {"upper", r.region.upper}};
    }
    json["rejection_region"] = r.region.describe();
    json["power"] = prob_json(r.power, precision);
    return dump(json);
  }
  Fields fields = {{"n", std::to_string(r.n)},
                   {"alpha", fraction_string(r.alpha)},
                   {"tail", to_string(r.tail)},
                   {"convention", to_string(r.convention)},
                   {"p", p_text(r.spec, precision)},
                   {"rejection_region", r.region.describe()},
                   {"power", format == OutputFormat::csv ? decimal_string(r.power.approx, precision)
                                                         : prob_text(r.power, precision)}};
  if (format == OutputFormat::csv) {
    fields[4].second = decimal_string(r.spec.p(), precision);
    if (r.power.exact) fields.push_back({"power_fraction", fraction_string(*r.power.exact)});
  }
  return render_fields(fields, format);
}

std::string render_counts(const CountTable& t, OutputFormat format) {
  const std::string engine = t.engine == CountEngine::dp ? "dp" : "proposition1";
  if (format == OutputFormat::json) {
    Json json;
    json["schema"] = 1;
    json["command"] = "snk";
    json["n"] = t.n;
    json["x"] = t.x;
    json["engine"] = engine;
    Json rows = Json::array();
    for (int k = 0; k <= t.n; ++k) rows.push_back({{"k", k}, {"count", t.at(k).str()}});
    json["counts"] = rows;
    json["total"] = t.total().str();
    return dump(json);
  }
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    out << "k,count\n";
    for (int k = 0; k <= t.n; ++k) out << k << ',' << t.at(k) << '\n';
    return out.str();
  }
  out << "S_" << t.n << "^(k)(" << t.x << ") via " << engine << '\n';
  for (int k = 0; k <= t.n; ++k) out << std::left << std::setw(6) << k << t.at(k) << '\n';
  out << "total " << t.total() << '\n';
  return out.str();
}

std::string render_convergence(const ConvergenceReport& r, OutputFormat format, int precision) {
  const std::string side = r.uses_negative_runs ? "minus" : "plus";
  if (format == OutputFormat::json) {
    Json json;
    json["schema"] = 1;
    json["command"] = "converge";
    json["k"] = r.k;
    json["p"] = spec_json(r.spec, precision)["p"];
    json["one_sided"] = side;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"n", row.n},
                      {"pr_longest", Json{{"decimal", decimal_string(row.longest.approx, precision)}}},
                      {"pr_one_sided", Json{{"decimal", decimal_string(row.one_sided.approx, precision)}}},
                      {"diff", decimal_string(row.difference, precision)}});
    }
    json["rows"] = rows;
    json["strictly_decreasing"] = r.strictly_decreasing;
    return dump(json);
  }
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    out << "n,diff\n";
    for (const auto& row : r.rows) out << row.n << ',' << decimal_string(row.difference, precision) << '\n';
    return out.str();
  }
  out << "k = " << r.k << ", p = " << p_text(r.spec, precision) << ", one-sided run: " << side << '\n';
  out << std::left << std::setw(8) << "n" << std::setw(22) << "Pr(L_n <= k)" << std::setw(22)
      << "Pr(one-sided <= k)" << "diff\n";
  for (const auto& row : r.rows) {
    out << std::left << std::setw(8) << row.n << std::setw(22)
        << decimal_string(row.longest.approx, precision) << std::setw(22)
        << decimal_string(row.one_sided.approx, precision)
        << decimal_string(row.difference, precision) << '\n';
  }
  out << "strictly decreasing: " << (r.strictly_decreasing ? "yes" : "no") << '\n';
  return out.str();
}

std::string render_oracle(const JointCountTable& t, OutputFormat format) {
  if (format == OutputFormat::json) {
    Json json;
    json["schema"] = 1;
    json["command"] = "oracle";
    json["n"] = t.n;
    Json cells = Json::array();
    for (int k = 0; k <= t.n; ++k)
      for (int l = 0; l <= t.n; ++l)
        if (t.at(k, l) || t.plus_at(k, l))
          cells.push_back({{"k", k}, {"run", l}, {"count", t.at(k, l)}, {"plus_count", t.plus_at(k, l)}});
    json["cells"] = cells;
    json["total"] = t.total();
    return dump(json);
  }
  std::ostringstream out;
  out << (format == OutputFormat::csv ? "k,L,count,plus_count\n" : "k L count plus_count\n");
  const char sep = format == OutputFormat::csv ? ',' : ' ';
  for (int k = 0; k <= t.n; ++k)
    for (int l = 0; l <= t.n; ++l)
      if (t.at(k, l) || t.plus_at(k, l))
        out << k << sep << l << sep << t.at(k, l) << sep << t.plus_at(k, l) << '\n';
  return out.str();
}

}  // namespace longrun
