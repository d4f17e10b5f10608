#pragma once

#include <optional>
#include <string>

namespace discont::cli {

/// One parsed command invocation. Flags that were not given stay
/// disengaged; nothing is inferred silently except the solve endpoints,
/// which default to the domain extremes and are echoed in the results.
struct Request {
  std::string command;
  std::string input;  // path or "-" for stdin
  std::optional<double> q;
  std::optional<double> r;
  std::optional<double> tol;
  std::optional<double> target;
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> codomain_spacing;
  std::optional<std::string> codomain_path;
  bool exact = false;
  bool digital = false;
  std::string format = "json";  // "json" or "text"
};

/// exit_code: 0 ok, 1 precondition violated (reported in the body),
/// 2 parse or usage error. output is the rendered report, newline
/// terminated, byte-identical for identical inputs.
struct RunResult {
  int exit_code = 0;
  std::string output;
};

/// Dispatches a command: one of stats, gaps, defect, continuity, solve,
/// components, invert. Never throws for user-facing failures; those are
/// rendered into the report with the matching exit code.
RunResult run(const Request& request);

}  // namespace discont::cli
