// quadlab: command-line driver for the verification sweeps, fiber
// certification and reduction traces.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "quadlab/errors.hpp"
#include "quadlab/fiber.hpp"
#include "quadlab/json_io.hpp"
#include "quadlab/reduction.hpp"
#include "quadlab/svg.hpp"
#include "quadlab/sweeps.hpp"
#include "quadlab/tolerances.hpp"

namespace fs = std::filesystem;
using quadlab::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::vector<std::string> tol_overrides;
  std::string out;
  std::string format = "json";
  bool reproducible = false;
  bool timestamp = false;

  quadlab::Tolerances tolerances() const {
    quadlab::Tolerances t;
    for (const auto& kv : tol_overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("--tol expects name=value, got '" + kv + "'");
      const std::string name = kv.substr(0, eq);
      double value = 0.0;
      try {
        std::size_t used = 0;
        value = std::stod(kv.substr(eq + 1), &used);
        if (used != kv.size() - eq - 1) throw std::invalid_argument("trailing text");
      } catch (const std::exception&) {
        throw UsageError("tolerance '" + name + "' has a malformed value");
      }
      try {
        t.set(name, value);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    return t;
  }
};

void add_common(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--seed", cfg.seed, "Base seed for random quads");
  cmd.add_option("--samples", cfg.samples, "Samples per check")->check(CLI::PositiveNumber);
  cmd.add_option("--tol", cfg.tol_overrides, "Tolerance override name=value (repeatable)");
  cmd.add_option("--out", cfg.out, "Output file (or directory with --svg)");
  cmd.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "svg", "text"}));
  cmd.add_flag("--reproducible", cfg.reproducible, "Never emit a timestamp");
  cmd.add_flag("--timestamp", cfg.timestamp, "Add a metadata timestamp");
}

void stamp(json& doc, const RunConfig& cfg) {
  if (!cfg.timestamp || cfg.reproducible) return;
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  doc["meta"] = {{"timestamp", buf}};
}

void emit_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

void emit(const json& doc, const RunConfig& cfg) { emit_text(doc.dump(2) + "\n", cfg.out); }

json check_json(const quadlab::CheckResult& c) {
  return {{"name", c.name}, {"samples", c.samples}, {"max_error", c.max_error}, {"threshold", c.threshold},
          {"pass", c.pass}};
}

int report_checks(const std::vector<quadlab::CheckResult>& checks, const RunConfig& cfg) {
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.pass;
  if (cfg.format == "text") {
    std::string text;
    for (const auto& c : checks) {
      text += (c.pass ? "PASS " : "FAIL ") + c.name + " samples=" + std::to_string(c.samples) +
              " max_error=" + json(c.max_error).dump() + "\n";
    }
    emit_text(text, cfg.out);
  } else {
    json doc;
    doc["seed"] = cfg.seed;
    doc["checks"] = json::array();
    for (const auto& c : checks) doc["checks"].push_back(check_json(c));
    stamp(doc, cfg);
    emit(doc, cfg);
  }
  return ok ? kExitOk : kExitFailed;
}

quadlab::SweepOptions sweep_options(const RunConfig& cfg) {
  quadlab::SweepOptions o;
  o.seed = cfg.seed;
  o.samples = cfg.samples;
  o.tolerances = cfg.tolerances();
  o.threads = quadlab::threads_from_env();
  return o;
}

int cmd_verify(const RunConfig& cfg) { return report_checks(quadlab::verify_suite(sweep_options(cfg)), cfg); }
int cmd_perp(const RunConfig& cfg) { return report_checks({quadlab::perpendicular_sweep(sweep_options(cfg))}, cfg); }
int cmd_perturb(const RunConfig& cfg) { return report_checks({quadlab::reachability_sweep(sweep_options(cfg))}, cfg); }

struct FiberArgs {
  std::string rho;
  std::string sigma;
  bool exact = false;
  int grid_radius = 3;
};

int cmd_fiber(const FiberArgs& fa, const RunConfig& cfg) {
  const quadlab::Tolerances tol = cfg.tolerances();
  const auto mode = fa.exact ? quadlab::Mode::Exact : quadlab::Mode::Approximate;
  auto parse = [&](const std::string& text, const char* what) {
    try {
      return quadlab::Scalar::parse(text, mode);
    } catch (const std::invalid_argument&) {
      throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
    }
  };
  const auto slopes = quadlab::FiberSlopes::make(parse(fa.rho, "rho"), parse(fa.sigma, "sigma"));
  const auto report = quadlab::interpolate_fiber_polynomials(slopes, fa.grid_radius, tol.fiber_fit());
  const bool ok = report.certified(tol.fiber_fit()) && report.offgrid_agrees;
  json doc = quadlab::to_json(report);
  doc["certified"] = ok;
  stamp(doc, cfg);
  emit(doc, cfg);
  return ok ? kExitOk : kExitFailed;
}

struct ReduceArgs {
  std::string quad_file;
  bool svg = false;
};

int cmd_reduce(const ReduceArgs& ra, const RunConfig& cfg, bool seed_given) {
  const quadlab::Tolerances tol = cfg.tolerances();
  if (!ra.quad_file.empty() && seed_given) throw UsageError("--quad and --seed are mutually exclusive");
  quadlab::CircleQuad start;
  if (!ra.quad_file.empty()) {
    std::ifstream f(ra.quad_file);
    if (!f) throw UsageError("cannot read '" + ra.quad_file + "'");
    try {
      start = quadlab::circle_quad_from_json(json::parse(f));
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad quad file: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad quad file: ") + e.what());
    }
  } else {
    start = quadlab::random_convex(cfg.seed, quadlab::kSweepMinArc);
  }

  quadlab::ReductionTrace trace;
  bool ok = true;
  try {
    trace = quadlab::reduce_to_square(start, quadlab::kDefaultMaxRounds, tol.square());
  } catch (const quadlab::RoundLimitExceeded& e) {
    std::cerr << "quadlab: " << e.what() << "\n";
    trace = e.trace();
    ok = false;
  }
  bool ratios_ok = true;
  for (std::size_t i = 0; i < trace.phi_ratios.size(); ++i) {
    if (trace.phi_before[i] <= 1.0 && trace.phi_ratios[i] < 1.5 - tol.phi_ratio_slack()) ratios_ok = false;
  }
  if (!ratios_ok) std::cerr << "quadlab: a phi ratio fell below 3/2\n";
  ok = ok && ratios_ok;

  json doc = quadlab::to_json(trace);
  doc["ratios_ok"] = ratios_ok;
  stamp(doc, cfg);

  if (ra.svg || cfg.format == "svg") {
    const fs::path dir = cfg.out.empty() ? fs::path("quadlab_frames") : fs::path(cfg.out);
    fs::create_directories(dir);
    quadlab::write_trace_svgs(trace, dir);
    emit_text(doc.dump(2) + "\n", (dir / "trace.json").string());
  } else if (cfg.format == "text") {
    std::string text = "rounds=" + std::to_string(trace.rounds()) + " steps=" + std::to_string(trace.steps.size()) +
                       " terminated=" + (trace.terminated ? "true" : "false") + "\n";
    emit_text(text, cfg.out);
  } else {
    emit(doc, cfg);
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification lab for cyclic quadrilaterals"};
  app.require_subcommand(1);

  RunConfig cfg;
  FiberArgs fa;
  ReduceArgs ra;

  auto* verify = app.add_subcommand("verify", "Run the identity and invariance sweeps");
  add_common(*verify, cfg);

  auto* fiber = app.add_subcommand("fiber", "Certify the fiber polynomials for one slope pair");
  add_common(*fiber, cfg);
  fiber->add_option("--rho", fa.rho, "Slope rho")->required();
  fiber->add_option("--sigma", fa.sigma, "Slope sigma")->required();
  fiber->add_flag("--exact", fa.exact, "Exact rational arithmetic");
  fiber->add_option("--grid-radius", fa.grid_radius, "Interpolation grid radius")->check(CLI::Range(2, 50));

  auto* reduce = app.add_subcommand("reduce", "Reduce a quad to a square and write the trace");
  add_common(*reduce, cfg);
  reduce->add_option("--quad", ra.quad_file, "Start quad as JSON {D, theta0, arcs}");
  reduce->add_flag("--svg", ra.svg, "Write one SVG per step into --out");

  auto* perp = app.add_subcommand("perp", "Sweep quads with perpendicular diagonals");
  add_common(*perp, cfg);

  auto* perturb = app.add_subcommand("perturb", "Sweep perturb/morph reachability");
  add_common(*perturb, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg);
    if (perp->parsed()) return cmd_perp(cfg);
    if (perturb->parsed()) return cmd_perturb(cfg);
    if (fiber->parsed()) return cmd_fiber(fa, cfg);
    if (reduce->parsed()) return cmd_reduce(ra, cfg, reduce->count("--seed") > 0);
  } catch (const UsageError& e) {
    std::cerr << "quadlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const quadlab::NonPythagoreanExact& e) {
    std::cerr << "quadlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const quadlab::BadSlopes& e) {
    std::cerr << "quadlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const quadlab::BadArcs& e) {
    std::cerr << "quadlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const quadlab::BadDiameter& e) {
    std::cerr << "quadlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "quadlab: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
