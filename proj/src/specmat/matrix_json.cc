#include "advbound/specmat/matrix_json.h"

#include <stdexcept>

namespace advbound::specmat {

nlohmann::json to_json(const SymMatrix& m) {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& l : m.labels()) labels.push_back(l.str());
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m(r, c));
    entries.push_back(std::move(row));
  }
  return {{"labels", std::move(labels)}, {"entries", std::move(entries)}};
}

SymMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("labels") || !doc.contains("entries") ||
      !doc["labels"].is_array() || !doc["entries"].is_array()) {
    throw std::invalid_argument("matrix needs arrays 'labels' and 'entries'");
  }
  std::vector<BitString> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) throw std::invalid_argument("matrix label must be a string");
    labels.push_back(BitString::parse(l.get<std::string>()));
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : doc["entries"]) {
    if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) throw std::invalid_argument("matrix entry must be a number");
      r.push_back(v.get<double>());
    }
    rows.push_back(std::move(r));
  }
  return SymMatrix::from_rows(std::move(labels), rows);
}

}  // namespace advbound::specmat
