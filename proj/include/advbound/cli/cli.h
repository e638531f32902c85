#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "advbound/boolfn/boolean_function.h"

namespace advbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. The JSON report
/// goes to `out`, a one-line human summary and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Where a function comes from. Exactly one of family, formula and table
/// must be set.
struct FunctionSource {
  std::string family;
  int n = 0;
  std::string formula;
  std::string table;
};

/// Throws std::invalid_argument naming the offending flag on conflicting or
/// missing sources and on malformed input.
boolfn::BooleanFunction load_function(const FunctionSource& source);

/// "and:2", "formula:x1|x2" or "table:path/to/file.json".
boolfn::BooleanFunction load_function_ref(const std::string& ref);

}  // namespace advbound::cli
