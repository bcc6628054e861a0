#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "idealforge/cli/document.hpp"

namespace idealforge::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kResource = 3 };

/// Runs one command line (without the program name). The verdict document
/// goes to `out` (or to --out FILE); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckOutcome {
  bool valid = false;
  std::string reason;
};

/// Re-validates a document's certificate against its claim. Certificates are
/// checked directly; verdicts that carry no finite certificate (negative
/// limit-membership answers, passing system checks, oracle reports) are
/// re-decided.
CheckOutcome check_document(const VerdictDocument& doc);

}  // namespace idealforge::cli
