// weylkk command-line driver.
//
//   weylkk verify {algebra|kk|madelung|weyl-gauge|reduce|spinor} [options]
//   weylkk curvature [options]
//   weylkk operator diff [options]
//   weylkk thresholds [--rs-meters X]
//
// Exit status: 0 all assertions pass, 1 an assertion failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "weylkk/errors.hpp"
#include "weylkk/scenario.hpp"

namespace {

using namespace weylkk;
using scenario::ScenarioConfig;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> points;
  std::optional<double> tol;
  std::optional<std::string> out;
  std::optional<std::string> background;
  std::optional<double> rs_meters;
  std::optional<double> rs;
  std::optional<double> charge;
  std::optional<double> m_e;
  std::optional<double> e;
  std::optional<std::string> scheme;
  std::optional<double> step;
  std::string output_file;
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--config", o.config, "scenario file with [background] [constants] [numerics] [output]");
  app->add_option("--seed", o.seed, "random seed");
  app->add_option("--points", o.points, "sample count")->check(CLI::PositiveNumber);
  app->add_option("--tol", o.tol, "assertion tolerance")->check(CLI::PositiveNumber);
  app->add_option("--out", o.out, "report format")->check(CLI::IsMember({"csv", "md", "markdown"}));
  app->add_option("--background", o.background, "background name");
  app->add_option("--rs-meters", o.rs_meters, "horizon radius in metres")->check(CLI::PositiveNumber);
  app->add_option("--rs", o.rs, "horizon radius in units of the Compton length")->check(CLI::PositiveNumber);
  app->add_option("--charge", o.charge, "Coulomb source strength");
  app->add_option("--m-e", o.m_e, "electron mass in inverse Compton lengths")->check(CLI::PositiveNumber);
  app->add_option("--e", o.e, "charge coupling");
  app->add_option("--scheme", o.scheme, "stencil scheme")->check(CLI::IsMember({"central2", "central4", "richardson"}));
  app->add_option("--step", o.step, "stencil step")->check(CLI::PositiveNumber);
  app->add_option("--output", o.output_file, "write the report to a file instead of stdout");
}

ScenarioConfig build_config(const Options& o) {
  ScenarioConfig c;
  if (!o.config.empty()) c = scenario::load_config(o.config);
  if (o.seed) c.seed = *o.seed;
  if (o.points) c.points = *o.points;
  if (o.tol) c.tol = *o.tol;
  if (o.out) c.format = scenario::parse_format(*o.out);
  if (o.background) c.background = scenario::parse_background(*o.background);
  if (o.rs_meters) c.rs_meters = *o.rs_meters;
  if (o.rs) c.r_s = *o.rs;
  if (o.charge) c.charge_q = *o.charge;
  if (o.m_e) c.m_e = *o.m_e;
  if (o.e) c.e = *o.e;
  if (o.scheme) c.backend.scheme = numkit::parse_scheme(*o.scheme);
  if (o.step) c.backend.step = *o.step;
  return c;
}

std::ostream& sink(const Options& o, std::ofstream& file) {
  if (o.output_file.empty()) return std::cout;
  file.open(o.output_file);
  if (!file) throw UsageError("cannot write " + o.output_file);
  return file;
}

int emit(const scenario::SuiteReport& r, const ScenarioConfig& c, const Options& o) {
  std::ofstream file;
  scenario::write_report(sink(o, file), r, c.format);
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kaluza-Klein and conformal geometrodynamics verification engine"};
  app.require_subcommand(1);

  Options o;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"algebra", "kk", "madelung", "weyl-gauge", "reduce", "spinor"}));
  add_common(verify, o);

  auto* curvature = app.add_subcommand("curvature", "curvature invariants of the selected background");
  add_common(curvature, o);

  auto* op = app.add_subcommand("operator", "squared Dirac operator tools");
  op->require_subcommand(1);
  auto* diff = op->add_subcommand("diff", "pointwise CQG minus SQM operator difference");
  add_common(diff, o);

  auto* thr = app.add_subcommand("thresholds", "distances below which the extra potentials matter");
  add_common(thr, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const ScenarioConfig cfg = build_config(o);
    if (*verify) return emit(scenario::run_suite(suite, cfg), cfg, o);
    if (*curvature) return emit(scenario::run_suite("curvature", cfg), cfg, o);
    if (*diff) return emit(scenario::run_suite("operator-diff", cfg), cfg, o);
    if (*thr) {
      std::ofstream file;
      scenario::write_thresholds(sink(o, file), scenario::thresholds(cfg), cfg, cfg.format);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
