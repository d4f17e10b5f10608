#include "discont/cli.hpp"

#include <cmath>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "discont/connect.hpp"
#include "discont/continuity.hpp"
#include "discont/dataset.hpp"
#include "discont/discrete_set.hpp"
#include "discont/errors.hpp"
#include "discont/sampled_function.hpp"
#include "discont/solver.hpp"

namespace discont::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kCommands[] = {
    "stats", "gaps", "defect", "continuity", "solve", "components", "invert"};

bool known_command(const std::string& cmd) {
  for (auto c : kCommands) {
    if (c == cmd) return true;
  }
  return false;
}

double require_flag(const std::optional<double>& value, const char* flag,
                    const char* command) {
  if (!value) {
    throw Error(Errc::parse_error, std::string(command) + " requires --" +
                                       flag);
  }
  return *value;
}

ordered_json json_or_null(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

ordered_json echo_inputs(const Request& req) {
  ordered_json in;
  in["input"] = req.input;
  in["tol"] = req.tol.value_or(0.0);
  if (req.q) in["q"] = *req.q;
  if (req.r) in["r"] = *req.r;
  if (req.target) in["target"] = *req.target;
  if (req.a) in["a"] = *req.a;
  if (req.b) in["b"] = *req.b;
  if (req.codomain_spacing) in["codomain_spacing"] = *req.codomain_spacing;
  if (req.codomain_path) in["codomain"] = *req.codomain_path;
  if (req.command == "solve") {
    in["exact"] = req.exact;
    in["digital"] = req.digital;
  }
  return in;
}

ordered_json pieces_json(const RealSubset& s) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : s.pieces()) {
    arr.push_back(ordered_json::array({p.lo, p.hi}));
  }
  return arr;
}

const DiscreteSet& as_set(const Dataset& ds) {
  return std::get<DiscreteSet>(ds.payload);
}
const SampledFunction& as_function(const Dataset& ds) {
  return std::get<SampledFunction>(ds.payload);
}
const RealSubset& as_subset(const Dataset& ds) {
  return std::get<RealSubset>(ds.payload);
}

ordered_json run_stats(const Request& req, double tol) {
  const Dataset ds = load_dataset(req.input, DatasetKind::set, tol);
  const DiscreteSet& set = as_set(ds);
  const SetStats s = set.stats();
  ordered_json out;
  out["size"] = set.size();
  out["min"] = set.min();
  out["max"] = set.max();
  out["lib"] = json_or_null(s.lib);
  out["uib"] = json_or_null(s.uib);
  out["uniform"] = s.uniform;
  out["spacing"] = json_or_null(s.spacing);
  return out;
}

ordered_json run_gaps(const Request& req, double tol) {
  const Dataset ds = load_dataset(req.input, DatasetKind::set, tol);
  const GapReport g = as_set(ds).gaps();
  ordered_json out;
  out["left_ray"] = ordered_json::array({nullptr, g.left_ray_end});
  ordered_json interior = ordered_json::array();
  for (const auto& gap : g.interior) {
    interior.push_back(ordered_json::array({gap.lo, gap.hi}));
  }
  out["interior"] = std::move(interior);
  out["right_ray"] = ordered_json::array({g.right_ray_start, nullptr});
  return out;
}

ordered_json run_defect(const Request& req, double tol) {
  const double q = require_flag(req.q, "q", "defect");
  const Dataset ds = load_dataset(req.input, DatasetKind::function, tol);
  const SampledFunction& f = as_function(ds);
  ordered_json out;
  if (req.a) {
    out["a"] = *req.a;
    out["q"] = q;
    out["defect"] = defect_at(f, *req.a, q);
    return out;
  }
  const DefectProfile profile = defect_profile(f, q);
  out["q"] = q;
  out["global"] = profile.global;
  out["attained_at"] = profile.attained_at;
  ordered_json per = ordered_json::array();
  for (const auto& pd : profile.per_point) {
    per.push_back(ordered_json::array({pd.point, pd.defect}));
  }
  out["per_point"] = std::move(per);
  return out;
}

ordered_json run_continuity(const Request& req, double tol) {
  const double q = require_flag(req.q, "q", "continuity");
  const double r = require_flag(req.r, "r", "continuity");
  const Dataset ds = load_dataset(req.input, DatasetKind::function, tol);
  const SampledFunction& f = as_function(ds);
  ordered_json out;
  out["q"] = q;
  out["r"] = r;
  if (req.a) {
    const double d = defect_at(f, *req.a, q);
    out["a"] = *req.a;
    out["defect"] = d;
    out["continuous"] = d <= r;
  } else {
    const DefectProfile profile = defect_profile(f, q);
    out["global_defect"] = profile.global;
    out["continuous"] = profile.global <= r;
  }
  out["trivial_bound"] = json_or_null(trivial_continuity_bound(f.domain()));
  return out;
}

ordered_json witness_json(const Witness& w) {
  ordered_json out;
  out["c"] = w.location;
  out["residual"] = w.residual;
  out["guarantee"] = guarantee_label(w.guarantee);
  if (w.fuzzy_bound) out["bound"] = *w.fuzzy_bound;
  out["interior"] = w.interior;
  return out;
}

ordered_json run_solve(const Request& req, double tol) {
  if (req.exact && req.digital) {
    throw Error(Errc::parse_error, "choose at most one of --exact, --digital");
  }
  const double target = require_flag(req.target, "target", "solve");
  const Dataset ds = load_dataset(req.input, DatasetKind::function, tol);
  const SampledFunction& f = as_function(ds);
  const double a = req.a.value_or(f.domain().min());
  const double b = req.b.value_or(f.domain().max());

  ordered_json out;
  out["a"] = a;
  out["b"] = b;
  out["target"] = target;

  if (req.digital) {
    const auto as_int = [](double v, const char* what) {
      if (v != std::floor(v) || std::abs(v) > 9.007e15) {
        throw PreconditionError(std::string("integer_") + what,
                                std::string(what) + " must be an integer");
      }
      return static_cast<std::int64_t>(v);
    };
    out["mode"] = "digital";
    const Witness w = digital_intermediate(f, as_int(a, "a"), as_int(b, "b"),
                                           as_int(target, "target"));
    out.update(witness_json(w));
    return out;
  }

  if (req.exact) {
    const double q = require_flag(req.q, "q", "solve --exact");
    const double r = require_flag(req.r, "r", "solve --exact");
    if (!req.codomain_spacing && !req.codomain_path) {
      throw Error(Errc::parse_error,
                  "solve --exact requires --codomain-spacing or --codomain");
    }
    if (req.codomain_spacing && req.codomain_path) {
      throw Error(Errc::parse_error,
                  "choose one of --codomain-spacing, --codomain");
    }
    const bool want_zero = target == 0.0;
    CodomainGrid grid =
        req.codomain_spacing
            ? CodomainGrid::uniform(*req.codomain_spacing, want_zero)
            : CodomainGrid::explicit_set(
                  as_set(load_dataset(*req.codomain_path, DatasetKind::set,
                                      tol)),
                  want_zero);
    out["mode"] = "exact";
    const Witness w =
        discrete_intermediate(f, grid, a, b, target, FuzzyParams(q, r));
    out.update(witness_json(w));
    return out;
  }

  out["mode"] = "fuzzy";
  const Witness w = fuzzy_intermediate(f, a, b, target);
  out.update(witness_json(w));
  if (req.r) out["r_satisfied"] = w.residual < *req.r;
  return out;
}

ordered_json run_components(const Request& req, double tol) {
  const double r = require_flag(req.r, "r", "components");
  const Dataset ds = load_dataset(req.input, DatasetKind::subset, tol);
  const ComponentDecomposition decomp = r_components(as_subset(ds), r);
  ordered_json out;
  out["r"] = r;
  out["count"] = decomp.components.size();
  ordered_json comps = ordered_json::array();
  for (const auto& c : decomp.components) {
    comps.push_back(pieces_json(c));
  }
  out["components"] = std::move(comps);
  return out;
}

ordered_json run_invert(const Request& req, double tol) {
  const Dataset ds = load_dataset(req.input, DatasetKind::function, tol);
  const SampledFunction& f = as_function(ds);
  const SampledFunction inverse = invert_monotone(f);
  const GapCertificate cert = gap_certificate(inverse);
  ordered_json out;
  out["monotone"] = monotone_label(monotone_class(f));
  ordered_json inv;
  inv["x"] = inverse.domain().points();
  inv["y"] = inverse.values();
  out["inverse"] = std::move(inv);
  ordered_json cj;
  cj["domain_gap_sup"] = cert.domain_gap_sup;
  cj["image_gap_sup"] = cert.image_gap_sup;
  out["certificate"] = std::move(cj);
  return out;
}

ordered_json dispatch(const Request& req) {
  const double tol = req.tol.value_or(0.0);
  if (req.command == "stats") return run_stats(req, tol);
  if (req.command == "gaps") return run_gaps(req, tol);
  if (req.command == "defect") return run_defect(req, tol);
  if (req.command == "continuity") return run_continuity(req, tol);
  if (req.command == "solve") return run_solve(req, tol);
  if (req.command == "components") return run_components(req, tol);
  if (req.command == "invert") return run_invert(req, tol);
  throw Error(Errc::unknown_command, "unknown command '" + req.command + "'");
}

void render_text(const ordered_json& node, const std::string& prefix,
                 std::string& out) {
  for (const auto& [key, value] : node.items()) {
    const std::string label = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      render_text(value, label, out);
    } else {
      out += label;
      out += ": ";
      out += value.dump();
      out += "\n";
    }
  }
}

std::string render(const ordered_json& report, const std::string& format) {
  if (format == "text") {
    std::string out;
    render_text(report, "", out);
    return out;
  }
  return report.dump() + "\n";
}

}  // namespace

RunResult run(const Request& request) {
  ordered_json report;
  report["command"] = request.command;
  report["status"] = "ok";
  report["inputs"] = echo_inputs(request);

  int exit_code = 0;
  try {
    if (!known_command(request.command)) {
      throw Error(Errc::unknown_command,
                  "unknown command '" + request.command + "'");
    }
    if (request.format != "json" && request.format != "text") {
      throw Error(Errc::parse_error,
                  "unknown format '" + request.format + "'");
    }
    report["results"] = dispatch(request);
  } catch (const ParseError& e) {
    report["status"] = "parse_error";
    ordered_json err;
    err["code"] = errc_label(e.code());
    if (e.line() > 0) err["line"] = e.line();
    err["message"] = e.what();
    report["results"] = ordered_json{{"error", std::move(err)}};
    exit_code = 2;
  } catch (const PreconditionError& e) {
    report["status"] = "precondition_violated";
    ordered_json err;
    err["code"] = errc_label(e.code());
    err["which"] = e.which();
    err["message"] = e.what();
    report["results"] = ordered_json{{"error", std::move(err)}};
    exit_code = 1;
  } catch (const Error& e) {
    const bool usage =
        e.code() == Errc::unknown_command || e.code() == Errc::parse_error;
    report["status"] = usage ? "parse_error" : "precondition_violated";
    ordered_json err;
    err["code"] = errc_label(e.code());
    err["message"] = e.what();
    report["results"] = ordered_json{{"error", std::move(err)}};
    exit_code = usage ? 2 : 1;
  } catch (const std::invalid_argument& e) {
    // Malformed parameter values (negative slacks, bad tolerances).
    report["status"] = "parse_error";
    ordered_json err;
    err["code"] = "invalid_argument";
    err["message"] = e.what();
    report["results"] = ordered_json{{"error", std::move(err)}};
    exit_code = 2;
  }

  const std::string format =
      request.format == "text" ? std::string("text") : std::string("json");
  return RunResult{exit_code, render(report, format)};
}

}  // namespace discont::cli
