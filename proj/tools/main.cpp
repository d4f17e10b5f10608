#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "discont/cli.hpp"

namespace {

void add_common(CLI::App* cmd, discont::cli::Request& req) {
  cmd->add_option("--input", req.input, "dataset path, or - for stdin")
      ->required();
  cmd->add_option("--tol", req.tol,
                  "duplicate-matching tolerance for input parsing");
  cmd->add_option("--format", req.format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "discont: fuzzy-continuity analysis and certified intermediate-value "
      "solving on discrete samples"};
  app.require_subcommand(1);

  discont::cli::Request req;

  auto* stats = app.add_subcommand("stats", "adjacent-distance statistics");
  add_common(stats, req);

  auto* gaps = app.add_subcommand("gaps", "gap structure of a set");
  add_common(gaps, req);

  auto* defect = app.add_subcommand(
      "defect", "continuity defect of a sampled function");
  add_common(defect, req);
  defect->add_option("--q", req.q, "domain slack")->required();
  defect->add_option("--a", req.a, "restrict to one domain point");

  auto* continuity =
      app.add_subcommand("continuity", "(q, r)-continuity verdict");
  add_common(continuity, req);
  continuity->add_option("--q", req.q, "domain slack")->required();
  continuity->add_option("--r", req.r, "codomain slack")->required();
  continuity->add_option("--a", req.a, "restrict to one domain point");

  auto* solve =
      app.add_subcommand("solve", "intermediate-value solve on samples");
  add_common(solve, req);
  solve->add_option("--target", req.target, "value to reach")->required();
  solve->add_option("--a", req.a, "left endpoint (default: domain min)");
  solve->add_option("--b", req.b, "right endpoint (default: domain max)");
  solve->add_option("--q", req.q, "domain slack (exact mode)");
  solve->add_option("--r", req.r, "codomain slack");
  solve->add_option("--codomain-spacing", req.codomain_spacing,
                    "uniform codomain grid spacing (exact mode)");
  solve->add_option("--codomain", req.codomain_path,
                    "explicit codomain set (exact mode)");
  solve->add_flag("--exact", req.exact,
                  "demand an exact witness under the grid preconditions");
  solve->add_flag("--digital", req.digital,
                  "integer-grid mode with unit slacks");

  auto* components =
      app.add_subcommand("components", "r-connected component decomposition");
  add_common(components, req);
  components->add_option("--r", req.r, "connectivity radius")->required();

  auto* invert = app.add_subcommand(
      "invert", "inverse of a strictly monotone sample, with certificate");
  add_common(invert, req);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message to stderr
    return 2;
  }

  req.command = app.get_subcommands().front()->get_name();
  const discont::cli::RunResult result = discont::cli::run(req);
  std::cout << result.output;
  return result.exit_code;
}
