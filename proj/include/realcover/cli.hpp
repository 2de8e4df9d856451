#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace realcover::cli {

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitNegative = 2;  // infeasible, not admissible, not verified, no cover

/// Runs one subcommand. `args` excludes the program name. Every outcome is a
/// single JSON document on `out`; `err` gets a human-readable line on errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace realcover::cli
