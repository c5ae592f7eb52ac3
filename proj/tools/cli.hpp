#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "report.hpp"

namespace homlink::cli {

enum ExitCode { kOk = 0, kVerdictFalse = 1, kInputError = 2 };

/// Runs one command line (without the program name). The report goes to
/// `out` in the requested format and to --out when given; diagnostics go
/// to `err`. When `report` is non-null it receives the structured report.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Json* report = nullptr);

}  // namespace homlink::cli
