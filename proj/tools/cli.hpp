#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace petriforge::cli {

enum ExitCode : int {
  kOk = 0,
  kAnalysisFailed = 1,  // exploration limit hit, or a contract did not validate
  kUsage = 2,
  kInput = 3,  // unreadable file, bad PNML, unwritable output
};

/// Runs one command. args excludes the program name. Results go to out,
/// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace petriforge::cli
