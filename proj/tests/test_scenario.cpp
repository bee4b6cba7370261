#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "weylkk/scenario.hpp"
#include "oracles.hpp"

using namespace weylkk;
using namespace weylkk::scenario;

namespace {

ScenarioConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string render(const SuiteReport& r, OutputFormat f = OutputFormat::csv) {
  std::ostringstream os;
  write_report(os, r, f);
  return os.str();
}

}  // namespace

TEST_CASE("config file populates every section") {
  const auto c = parse(
      "# sample\n"
      "[background]\nkind = schwarzschild+coulomb\nr_s = 2.5\ncharge = 0.1\nf12 = 0.4\n"
      "[constants]\nm_e = 2\ne = 0.25\n"
      "[numerics]\nscheme = richardson\nstep = 0.002\nseed = 11\npoints = 3\ntol = 1e-5\n"
      "[output]\nformat = md\n");
  CHECK(c.background == BackgroundKind::schwarzschild_coulomb);
  CHECK(c.r_s == 2.5);
  CHECK(c.charge_q == 0.1);
  CHECK(c.field(1, 2) == 0.4);
  CHECK(c.field(2, 1) == -0.4);
  CHECK(c.m_e == 2.0);
  CHECK(c.backend.scheme == numkit::Scheme::richardson);
  CHECK(c.backend.step == 0.002);
  CHECK(c.seed == 11u);
  CHECK(c.points == 3);
  CHECK(c.tol == 1e-5);
  CHECK(c.format == OutputFormat::markdown);
}

TEST_CASE("config parser rejects unknown or invalid input") {
  CHECK_THROWS_AS(parse("[background]\nmass = 3\n"), UsageError);
  CHECK_THROWS_AS(parse("[physics]\nr_s = 1\n"), UsageError);
  CHECK_THROWS_AS(parse("r_s = 1\n"), UsageError);
  CHECK_THROWS_AS(parse("[background]\nr_s = -1\n"), UsageError);
  CHECK_THROWS_AS(parse("[background]\nr_s = abc\n"), UsageError);
  CHECK_THROWS_AS(parse("[background]\nkind = kerr\n"), UsageError);
  CHECK_THROWS_AS(parse("[numerics]\nscheme = upwind\n"), UsageError);
  CHECK_THROWS_AS(parse("[numerics]\nlattice = 3\n"), UsageError);
  CHECK_THROWS_AS(load_config("/nonexistent/scenario.ini"), UsageError);
}

TEST_CASE("background names round trip") {
  for (auto k : background_matrix()) CHECK(parse_background(background_name(k)) == k);
  CHECK(parse_background("schwarzschild_coulomb") == BackgroundKind::schwarzschild_coulomb);
  CHECK(background_matrix().size() == 7u);
}

TEST_CASE("config hash is stable and sensitive to every field") {
  ScenarioConfig a;
  CHECK(config_hash(a) == config_hash(ScenarioConfig{}));
  ScenarioConfig b = a;
  b.seed = 8;
  CHECK(config_hash(b) != config_hash(a));
  ScenarioConfig c = a;
  c.backend.step = 2e-3;
  CHECK(config_hash(c) != config_hash(a));
  ScenarioConfig d = a;
  d.field(0, 3) = 0.1;
  CHECK(config_hash(d) != config_hash(a));
  CHECK(hash_hex(0x1234u).size() == 16u);
}

TEST_CASE("sampled points are reproducible and stay in the chart") {
  ScenarioConfig c;
  c.r_s = 2.0;
  for (int i = 0; i < 10; ++i) {
    const auto p = sample_point(BackgroundKind::schwarzschild, c, 1, i);
    const auto q = sample_point(BackgroundKind::schwarzschild, c, 1, i);
    CHECK(p[1] == q[1]);
    CHECK(p[1] >= 1.5 * c.r_s);
    CHECK(p[1] <= 3.0 * c.r_s);
  }
  CHECK(sample_point(BackgroundKind::minkowski, c, 1, 0)[0] != sample_point(BackgroundKind::minkowski, c, 2, 0)[0]);
}

TEST_CASE("thresholds for a three kilometre horizon") {
  ScenarioConfig c;
  c.rs_meters = 3000.0;
  const auto t = thresholds(c);
  CHECK(t.compton_m == doctest::Approx(3.8615926796e-13));
  const double lc = t.compton_m;
  CHECK(t.r_star_gravity * lc == doctest::Approx(oracle::gravity_threshold(lc, 3000.0)).epsilon(1e-12));
  CHECK(t.r_star_gravity * lc == doctest::Approx(7.648e-8).epsilon(1e-3));
  CHECK(t.r_star_gravity_solved / t.r_star_gravity == doctest::Approx(std::pow(12.0, 1.0 / 6.0)));
  CHECK(t.r_star_em_quoted == 0.03);
  CHECK(t.r_star_em_computed == doctest::Approx(std::cbrt(7.2973525693e-3)));
  std::ostringstream os;
  write_thresholds(os, t, c, OutputFormat::csv);
  CHECK(os.str().find("0.03") != std::string::npos);
}

TEST_CASE("thresholds in Compton units") {
  ScenarioConfig c;
  c.r_s = 8.0;
  const auto t = thresholds(c);
  CHECK(t.horizon == 8.0);
  CHECK(t.r_star_gravity == doctest::Approx(2.0));
}

TEST_CASE("report records tolerance, seed, scheme and hash") {
  ScenarioConfig c;
  c.seed = 42;
  const auto r = run_suite("algebra", c);
  CHECK(r.pass());
  const std::string text = render(r);
  CHECK(text.find("# suite=algebra") != std::string::npos);
  CHECK(text.find("# seed=42") != std::string::npos);
  CHECK(text.find("# scheme=central4") != std::string::npos);
  CHECK(text.find("# config_hash=" + hash_hex(config_hash(c))) != std::string::npos);
  CHECK(text.find("# result=PASS") != std::string::npos);
  const std::string md = render(r, OutputFormat::markdown);
  CHECK(md.find("**result: PASS**") != std::string::npos);
}

TEST_CASE("diagnostic assertions do not affect the result") {
  SuiteReport r;
  r.check("real", 1.0, 2.0);
  r.check("probe", 5.0, 1.0, true);
  CHECK(r.pass());
  r.check("broken", 3.0, 1.0);
  CHECK_FALSE(r.pass());
  r.check("nan", std::nan(""), 1.0);
  CHECK_FALSE(r.assertions.back().pass);
  const std::string text = render(r);
  CHECK(text.find("# INFO-FAIL probe") != std::string::npos);
  CHECK(text.find("# FAIL broken") != std::string::npos);
}

TEST_CASE("kk suite on flat space meets its tolerance with stable output") {
  ScenarioConfig c;
  c.points = 3;
  const auto a = run_suite("kk", c);
  CHECK(a.pass());
  CHECK(a.table.columns ==
        std::vector<std::string>{"x0", "x1", "x2", "x3", "y_norm", "z", "closed", "brute", "rel_err"});
  CHECK(a.table.rows.size() == 3u);
  CHECK(render(a) == render(run_suite("kk", c)));
}

TEST_CASE("operator difference suite passes on every background") {
  ScenarioConfig c;
  c.points = 1;
  CHECK(run_suite("operator-diff", c).pass());
}

TEST_CASE("curvature suite") {
  ScenarioConfig c;
  c.background = BackgroundKind::schwarzschild;
  CHECK(run_suite("curvature", c).pass());
  c.background = BackgroundKind::einstein_static;
  CHECK(run_suite("curvature", c).pass());
}

TEST_CASE("unknown suite is a usage error") {
  CHECK_THROWS_AS(run_suite("nonsense", ScenarioConfig{}), UsageError);
}
