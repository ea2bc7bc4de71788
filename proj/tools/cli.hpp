#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mll/json_io.hpp"

namespace mll::cli {

/// Exit codes: 0 success, 1 a check failed or a library error, 2 bad
/// arguments or configuration.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Runs one named suite ("all" runs every suite). Suites needing a lattice
/// are skipped when the config has none.
std::vector<CheckResult> run_suites(const RunConfig& cfg, const std::string& suite, unsigned long seed,
                                    std::ostream& out);

Json report_json(const RunConfig& cfg, unsigned long seed, const std::vector<CheckResult>& checks);

/// Writes to a temporary file next to `path` and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

/// "re,im" or a single real number.
Complex parse_complex(const std::string& text);

}  // namespace mll::cli
