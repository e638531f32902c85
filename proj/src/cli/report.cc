#include "advbound/cli/report.h"

#include <cstdio>
#include <stdexcept>

namespace advbound::cli {

nlohmann::json to_json(const Report& report) {
  return {{"schema", report.schema},
          {"tool_version", report.tool_version},
          {"command", report.command},
          {"inputs_digest", report.inputs_digest},
          {"seed", report.seed},
          {"results", report.results},
          {"pass", report.pass},
          {"timing", {{"elapsed_ms", report.elapsed_ms}}}};
}

Report report_from_json(const nlohmann::json& doc) {
  try {
    Report r;
    r.schema = doc.at("schema").get<std::string>();
    if (r.schema != kReportSchema) throw std::invalid_argument("unsupported report schema '" + r.schema + "'");
    r.tool_version = doc.at("tool_version").get<std::string>();
    r.command = doc.at("command").get<std::vector<std::string>>();
    r.inputs_digest = doc.at("inputs_digest").get<std::string>();
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.results = doc.at("results");
    r.pass = doc.at("pass").get<bool>();
    r.elapsed_ms = doc.at("timing").at("elapsed_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state) {
  for (unsigned char c : bytes) {
    state ^= c;
    state *= 0x100000001b3ULL;
  }
  return state;
}

std::string digest_string(std::uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + buf;
}

}  // namespace advbound::cli
