#include "advbound/adversary/adversary_json.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "advbound/boolfn/truth_table_json.h"
#include "advbound/specmat/matrix_json.h"

namespace advbound::adversary {

nlohmann::json json_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double real_from_json(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw std::invalid_argument("expected a real number");
}

nlohmann::json to_json(const AdversaryMatrix& gamma) {
  auto doc = specmat::to_json(gamma.matrix);
  doc["function"] = boolfn::to_json(gamma.function);
  return doc;
}

AdversaryMatrix adversary_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("function")) {
    throw std::invalid_argument("adversary matrix needs an embedded 'function'");
  }
  return AdversaryMatrix{boolfn::function_from_json(doc["function"]), specmat::matrix_from_json(doc)};
}

nlohmann::json to_json(const MinimaxWitness& witness) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k < witness.p.size(); ++k) {
    rows.push_back({{"x", witness.function.domain()[k].str()}, {"p", witness.p[k]}});
  }
  return {{"rows", std::move(rows)}};
}

MinimaxWitness witness_from_json(const nlohmann::json& doc, const BooleanFunction& f) {
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw std::invalid_argument("witness needs an array 'rows'");
  }
  MinimaxWitness w{f, std::vector<std::vector<double>>(f.size())};
  std::vector<bool> seen(f.size(), false);
  for (const auto& row : doc["rows"]) {
    if (!row.is_object() || !row.contains("x") || !row.contains("p") || !row["p"].is_array()) {
      throw std::invalid_argument("witness row must be {\"x\": string, \"p\": [reals]}");
    }
    const auto x = boolfn::BitString::parse(row["x"].get<std::string>());
    const auto k = f.index_of(x);
    if (!k) throw std::invalid_argument("witness row '" + x.str() + "' is outside the function domain");
    if (seen[*k]) throw std::invalid_argument("duplicate witness row '" + x.str() + "'");
    seen[*k] = true;
    for (const auto& v : row["p"]) w.p[*k].push_back(real_from_json(v));
  }
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (!seen[k]) throw std::invalid_argument("witness is missing row '" + f.domain()[k].str() + "'");
  }
  check_witness(w);
  return w;
}

nlohmann::json to_json(const CostVector& alpha) {
  nlohmann::json out = nlohmann::json::array();
  for (double c : alpha.values()) out.push_back(c);
  return out;
}

nlohmann::json to_json(const ValidationReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"kind", kind_name(v.kind)}, {"row", v.row}, {"col", v.col}, {"value", json_real(v.value)},
                          {"message", v.message}});
  }
  return {{"valid", report.valid}, {"constant_function", report.constant_function},
          {"violations", std::move(violations)}};
}

}  // namespace advbound::adversary
