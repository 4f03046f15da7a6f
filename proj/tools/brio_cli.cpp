// Command-line front end: solve, curves, sample, verify, fv-compare.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brio/delta.hpp"
#include "brio/errors.hpp"
#include "brio/fv.hpp"
#include "brio/io.hpp"
#include "brio/property_suite.hpp"
#include "brio/riemann.hpp"
#include "brio/wave_curves.hpp"
#include "brio/weak_form.hpp"

namespace fs = std::filesystem;
using namespace brio;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerify = 2;

struct JobConfig {
  // (u, q) = (1, 5) and (0.7, 7) written as (u, v)
  std::vector<double> left{1.0, 3.0};
  std::vector<double> right{0.7, std::sqrt(13.51)};
  std::vector<double> base;
  std::vector<double> inverse_base;
  std::string family = "all";
  double span = 3.0;
  int points = 301;
  double t = 0.5;
  double x_min = -5.0;
  double x_max = 5.0;
  double tol_ode = brio::tol_ode;
  double tol_root = 1e-12;
  double tol_weak = tol_weak_default;
  std::string flip_speed = "rh";
  std::uint64_t seed = 42;
  bool arclength = false;
  std::vector<int> cells{512, 1024, 2048, 4096};
  double cfl = 0.8;
  bool serial = false;
  std::string out;
  std::string out_dir;
};

// One config-file key: the flag it shadows and how to read it.
struct Binding {
  CLI::Option* option = nullptr;
  std::function<void(const Json&)> assign;
};

template <class T>
std::function<void(const Json&)> setter(T& field) {
  return [&field](const Json& j) { field = j.get<T>(); };
}

std::vector<double> pair_from(const Json& j, const std::string& key) {
  auto v = j.get<std::vector<double>>();
  if (v.size() != 2) throw ConfigError("'" + key + "' must hold two numbers");
  return v;
}

class Job {
 public:
  explicit Job(CLI::App& sub) : sub_(sub) {
    sub.add_option("--config", config_path_, "JSON job file; its values win over flags");
    bind("out", sub.add_option("--out", cfg_.out, "output file ('-' for stdout)"),
         setter(cfg_.out));
    bind("out_dir",
         sub.add_option("--out-dir", cfg_.out_dir, "output directory (default $BRIO_OUTPUT_DIR or .)"),
         setter(cfg_.out_dir));
    bind("tol_ode", sub.add_option("--tol-ode", cfg_.tol_ode, "rarefaction ODE tolerance"),
         setter(cfg_.tol_ode));
    bind("tol_root", sub.add_option("--tol-root", cfg_.tol_root, "middle-state root tolerance"),
         setter(cfg_.tol_root));
  }

  JobConfig& cfg() { return cfg_; }

  void bind(const std::string& key, CLI::Option* opt, std::function<void(const Json&)> assign) {
    bindings_[key] = {opt, std::move(assign)};
  }

  void add_states() {
    bind("left",
         sub_.add_option("--left", cfg_.left, "left state u,v")->delimiter(',')->expected(2),
         [this](const Json& j) { cfg_.left = pair_from(j, "left"); });
    bind("right",
         sub_.add_option("--right", cfg_.right, "right state u,v")->delimiter(',')->expected(2),
         [this](const Json& j) { cfg_.right = pair_from(j, "right"); });
  }

  void add_flip() {
    bind("flip_speed",
         sub_.add_option("--flip-speed", cfg_.flip_speed, "v-flip shock speed: rh or paper")
             ->check(CLI::IsMember({"rh", "paper"})),
         setter(cfg_.flip_speed));
  }

  void add_tol_weak() {
    bind("tol_weak", sub_.add_option("--tol-weak", cfg_.tol_weak, "weak-residual tolerance"),
         setter(cfg_.tol_weak));
  }

  // Applies the config file (if any) and validates the result.
  void finalize() {
    if (!config_path_.empty()) load_config();
    for (double tol : {cfg_.tol_ode, cfg_.tol_root, cfg_.tol_weak}) {
      if (!(tol > 0.0)) throw ConfigError("tolerances must be positive");
    }
    if (cfg_.flip_speed != "rh" && cfg_.flip_speed != "paper") {
      throw ConfigError("flip_speed must be 'rh' or 'paper'");
    }
    if (cfg_.out_dir.empty()) {
      const char* env = std::getenv("BRIO_OUTPUT_DIR");
      cfg_.out_dir = env && *env ? env : ".";
    }
  }

  RiemannData data() const {
    if (cfg_.left.size() != 2 || cfg_.right.size() != 2) throw ConfigError("states need two numbers");
    return {{cfg_.left[0], cfg_.left[1]}, {cfg_.right[0], cfg_.right[1]}};
  }

  DeltaOptions delta_options() const {
    DeltaOptions o;
    o.flip_speed = cfg_.flip_speed == "paper" ? FlipSpeed::paper : FlipSpeed::rh;
    o.riemann.tol_root = cfg_.tol_root;
    o.riemann.ode.tol = cfg_.tol_ode;
    return o;
  }

  // Output stream for `default_name`, or stdout for --out -.
  void write(const std::string& default_name, const std::function<void(std::ostream&)>& body) const {
    if (cfg_.out == "-") {
      body(std::cout);
      return;
    }
    write_file(cfg_.out.empty() ? default_name : cfg_.out, body);
  }

  void write_file(const std::string& name, const std::function<void(std::ostream&)>& body) const {
    fs::path path(name);
    if (path.is_relative()) path = fs::path(cfg_.out_dir) / path;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot open " + path.string() + " for writing");
    body(os);
    std::cerr << "wrote " << path.string() << '\n';
  }

 private:
  void load_config() {
    std::ifstream is(config_path_);
    if (!is) throw ConfigError("cannot read config file " + config_path_);
    Json j;
    try {
      j = Json::parse(is);
    } catch (const Json::exception& e) {
      throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
      auto b = bindings_.find(it.key());
      if (b == bindings_.end()) throw ConfigError("unknown config key '" + it.key() + "'");
      if (b->second.option && b->second.option->count() > 0) {
        std::cerr << "warning: config key '" << it.key() << "' overrides "
                  << b->second.option->get_name() << " given on the command line\n";
      }
      try {
        b->second.assign(it.value());
      } catch (const Json::exception& e) {
        throw ConfigError("bad value for '" + it.key() + "': " + e.what());
      }
    }
  }

  CLI::App& sub_;
  JobConfig cfg_;
  std::string config_path_;
  std::map<std::string, Binding> bindings_;
};

// --- subcommands -----------------------------------------------------------

int run_solve(Job& job) {
  const DeltaSolution sol = solve_brio(job.data(), job.delta_options());
  job.write("solution.json", [&](std::ostream& os) { os << to_json(sol).dump(2) << '\n'; });
  return kExitOk;
}

int run_curves(Job& job) {
  const JobConfig& c = job.cfg();
  OdeOptions ode;
  ode.tol = c.tol_ode;
  if (c.base.empty() && c.inverse_base.empty()) throw ConfigError("curves needs --base or --inverse-base");
  const bool one = c.family == "1" || c.family == "all";
  const bool two = c.family == "2" || c.family == "all";
  if (!one && !two) throw ConfigError("family must be 1, 2 or all");
  std::vector<std::pair<CurveKind, TransState>> jobs;
  if (!c.base.empty()) {
    if (c.base.size() != 2) throw ConfigError("--base needs u,q");
    const TransState b{c.base[0], c.base[1]};
    if (one) jobs.insert(jobs.end(), {{CurveKind::sw1, b}, {CurveKind::rw1, b}});
    if (two) jobs.insert(jobs.end(), {{CurveKind::sw2, b}, {CurveKind::rw2, b}});
  }
  if (!c.inverse_base.empty()) {
    if (c.inverse_base.size() != 2) throw ConfigError("--inverse-base needs u,q");
    const TransState b{c.inverse_base[0], c.inverse_base[1]};
    if (two) jobs.insert(jobs.end(), {{CurveKind::sw2_inv, b}, {CurveKind::rw2_inv, b}});
  }
  for (const auto& [kind, base] : jobs) {
    if (!above_critical(base)) throw DomainError("curve base lies below q = u^2/2");
    const auto samples = tabulate_curve(kind, base, c.span, c.points, ode);
    job.write_file(std::string("curve_") + curve_name(kind) + ".csv",
                   [&](std::ostream& os) { write_curve_csv(os, samples); });
  }
  return kExitOk;
}

int run_sample(Job& job) {
  const JobConfig& c = job.cfg();
  if (!(c.t > 0.0)) throw PreconditionError("sampling time must be positive");
  if (c.points < 2 || !(c.x_max > c.x_min)) throw ConfigError("need points >= 2 and x_max > x_min");
  const DeltaSolution sol = solve_brio(job.data(), job.delta_options());
  std::vector<SampleRow> rows;
  for (int i = 0; i < c.points; ++i) {
    const double x = c.x_min + (c.x_max - c.x_min) * i / (c.points - 1);
    rows.push_back({x, sample_brio(sol, x, c.t).regular});
  }
  job.write("sample.csv", [&](std::ostream& os) { write_sample_csv(os, rows); });
  Json side;
  side["t"] = c.t;
  side["singular"] = Json::array();
  for (const DeltaSingularity& d : sol.singular) {
    side["singular"].push_back({{"position", d.speed * c.t},
                                {"strength", d.strength(c.t)},
                                {"speed", d.speed},
                                {"rate", d.rate},
                                {"component", d.component == Component::u ? "u" : "v"}});
  }
  std::string side_name = "sample_singular.json";
  if (!c.out.empty() && c.out != "-") {
    const fs::path p(c.out);
    side_name = (p.parent_path() / (p.stem().string() + "_singular.json")).string();
  }
  job.write_file(side_name, [&](std::ostream& os) { os << side.dump(2) << '\n'; });
  return kExitOk;
}

int run_verify(Job& job) {
  const JobConfig& c = job.cfg();
  SuiteOptions o;
  o.seed = c.seed;
  o.weak.arclength = c.arclength;
  o.tol_weak = c.tol_weak;
  const Report report = property_suite(o);
  job.write("report.json", [&](std::ostream& os) { os << to_json(report).dump(2) << '\n'; });
  int failed = 0;
  for (const Check& ch : report.checks) {
    if (ch.passed) continue;
    ++failed;
    std::cerr << "FAIL " << ch.name << " measured " << format_double(ch.measured) << " tolerance "
              << format_double(ch.tolerance) << '\n';
  }
  std::cerr << report.checks.size() - failed << "/" << report.checks.size() << " checks passed\n";
  return failed ? kExitVerify : kExitOk;
}

int run_fv_compare(Job& job) {
  const JobConfig& c = job.cfg();
  const RiemannData d = job.data();
  const WaveFan fan = build_fan(lift(d.left), lift(d.right), job.delta_options().riemann);
  std::vector<RefinementRow> rows;
  for (int n : c.cells) {
    FvGrid g;
    g.x_min = c.x_min;
    g.x_max = c.x_max;
    g.n_cells = n;
    g.cfl = c.cfl;
    g.final_time = c.t;
    rows.push_back({n, compare_fan_fv(fan, g, c.serial ? Execution::serial : Execution::parallel)});
  }
  job.write("fv_compare.csv", [&](std::ostream& os) { write_refinement_csv(os, rows); });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact delta-shock Riemann solver for the Brio system"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "write the admissible delta-type solution as JSON");
  Job solve_job(*solve);
  solve_job.add_states();
  solve_job.add_flip();

  auto* curves = app.add_subcommand("curves", "tabulate wave curves as CSV");
  Job curves_job(*curves);
  {
    JobConfig& c = curves_job.cfg();
    curves_job.bind("base",
                    curves->add_option("--base", c.base, "left base state u,q")->delimiter(',')->expected(2),
                    [&c](const Json& j) { c.base = pair_from(j, "base"); });
    curves_job.bind("inverse_base",
                    curves->add_option("--inverse-base", c.inverse_base, "right base state u,q for inverse curves")
                        ->delimiter(',')
                        ->expected(2),
                    [&c](const Json& j) { c.inverse_base = pair_from(j, "inverse_base"); });
    curves_job.bind("family",
                    curves->add_option("--family", c.family, "1, 2 or all")->check(CLI::IsMember({"1", "2", "all"})),
                    setter(c.family));
    curves_job.bind("span", curves->add_option("--span", c.span, "distance in u from the base"),
                    setter(c.span));
    curves_job.bind("points", curves->add_option("--points", c.points, "samples per curve"),
                    setter(c.points));
  }

  auto* sample = app.add_subcommand("sample", "sample (x, u, v) at a fixed time");
  Job sample_job(*sample);
  sample_job.add_states();
  sample_job.add_flip();
  {
    JobConfig& c = sample_job.cfg();
    c.points = 401;
    sample_job.bind("t", sample->add_option("--t", c.t, "time"), setter(c.t));
    sample_job.bind("x_min", sample->add_option("--x-min", c.x_min, "left end"), setter(c.x_min));
    sample_job.bind("x_max", sample->add_option("--x-max", c.x_max, "right end"), setter(c.x_max));
    sample_job.bind("points", sample->add_option("--points", c.points, "number of x samples"),
                    setter(c.points));
  }

  auto* verify = app.add_subcommand("verify", "run the property suite");
  Job verify_job(*verify);
  verify_job.add_tol_weak();
  {
    JobConfig& c = verify_job.cfg();
    verify_job.bind("seed", verify->add_option("--seed", c.seed, "random seed"), setter(c.seed));
    verify_job.bind("arclength",
                    verify->add_flag("--arclength", c.arclength, "weight line terms by sqrt(1+c^2)"),
                    setter(c.arclength));
  }

  auto* fv = app.add_subcommand("fv-compare", "Rusanov vs exact fan refinement table");
  Job fv_job(*fv);
  fv_job.add_states();
  {
    JobConfig& c = fv_job.cfg();
    fv_job.bind("cells", fv->add_option("--cells", c.cells, "cell counts")->delimiter(','),
                setter(c.cells));
    fv_job.bind("t", fv->add_option("--t", c.t, "final time"), setter(c.t));
    fv_job.bind("x_min", fv->add_option("--x-min", c.x_min, "left end"), setter(c.x_min));
    fv_job.bind("x_max", fv->add_option("--x-max", c.x_max, "right end"), setter(c.x_max));
    fv_job.bind("cfl", fv->add_option("--cfl", c.cfl, "CFL number"), setter(c.cfl));
    fv_job.bind("serial", fv->add_flag("--serial", c.serial, "use the serial kernels"),
                setter(c.serial));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_json(ConfigError(e.what())).dump() << '\n';
    return kExitError;
  }

  try {
    if (solve->parsed()) {
      solve_job.finalize();
      return run_solve(solve_job);
    }
    if (curves->parsed()) {
      curves_job.finalize();
      return run_curves(curves_job);
    }
    if (sample->parsed()) {
      sample_job.finalize();
      return run_sample(sample_job);
    }
    if (verify->parsed()) {
      verify_job.finalize();
      return run_verify(verify_job);
    }
    if (fv->parsed()) {
      fv_job.finalize();
      return run_fv_compare(fv_job);
    }
  } catch (const std::exception& e) {
    std::cerr << error_json(e).dump() << '\n';
    return kExitError;
  }
  return kExitError;
}
