#include "advbound/boolfn/truth_table_json.h"

#include <fstream>
#include <stdexcept>

namespace advbound::boolfn {

nlohmann::json to_json(const BooleanFunction& f) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k < f.size(); ++k) {
    rows.push_back({{"x", f.domain()[k].str()}, {"f", f.value_at(k)}});
  }
  return {{"n", f.arity()}, {"rows", std::move(rows)}};
}

BooleanFunction function_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows")) {
    throw std::invalid_argument("truth table needs fields 'n' and 'rows'");
  }
  if (!doc["n"].is_number_integer()) throw std::invalid_argument("truth table 'n' must be an integer");
  if (!doc["rows"].is_array()) throw std::invalid_argument("truth table 'rows' must be an array");
  const int n = doc["n"].get<int>();
  std::vector<BooleanFunction::Row> rows;
  for (const auto& row : doc["rows"]) {
    if (!row.is_object() || !row.contains("x") || !row.contains("f") || !row["x"].is_string() ||
        !row["f"].is_number_integer()) {
      throw std::invalid_argument("truth table row must be {\"x\": string, \"f\": 0|1}");
    }
    rows.emplace_back(BitString::parse(row["x"].get<std::string>()), row["f"].get<int>());
  }
  return BooleanFunction(n, std::move(rows));
}

BooleanFunction load_truth_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open truth table '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("truth table '" + path + "': " + e.what());
  }
  return function_from_json(doc);
}

}  // namespace advbound::boolfn
