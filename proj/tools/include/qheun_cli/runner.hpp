#pragma once

#include <string>

#include "qheun_cli/config.hpp"

namespace qheun::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInvalidInput = 2, kInternalError = 3 };

struct RunResult {
  Json report;  // body plus a "timing" section
  int exit_code = kOk;
};

/// Runs the configured modes in the fixed order of all_modes().
RunResult run(const RunConfig& c);

/// The report without its "timing" section; what regression fixtures compare.
Json report_body(const Json& report);

/// Writes through a temporary file and a rename.
void write_atomically(const std::string& path, const std::string& text);

/// Entry point of the qheun executable.
int cli_main(int argc, char** argv);

}  // namespace qheun::cli
