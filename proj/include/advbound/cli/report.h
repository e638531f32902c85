#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace advbound::cli {

inline constexpr std::string_view kReportSchema = "advbound-report/1";
inline constexpr std::string_view kToolVersion = "0.1.0";

struct Report {
  std::string schema{kReportSchema};
  std::string tool_version{kToolVersion};
  /// The argument vector, without the program name.
  std::vector<std::string> command;
  /// "fnv1a64:" + 16 hex digits over the arguments and any input file bytes.
  std::string inputs_digest;
  std::uint64_t seed = 0;
  nlohmann::json results = nlohmann::json::object();
  bool pass = true;
  double elapsed_ms = 0.0;
};

nlohmann::json to_json(const Report& report);
/// Throws std::invalid_argument on a missing field or a different schema.
Report report_from_json(const nlohmann::json& doc);

/// 64-bit FNV-1a, continuing from `state`.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state = 0xcbf29ce484222325ULL);
std::string digest_string(std::uint64_t hash);

}  // namespace advbound::cli
