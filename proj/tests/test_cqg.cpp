#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weylkk/cqg.hpp"
#include "oracles.hpp"

using namespace weylkk;
using namespace weylkk::cqg;
using numkit::DerivBackend;

namespace {

std::array<double, 4> arr(const Point& p) { return {p[0], p[1], p[2], p[3]}; }

ScalarFields modulated_fields(const oracle::ModulatedWave& w) {
  ScalarFields f;
  f.rho = [w](const Point& p) { return w.rho(arr(p)); };
  f.sigma = [w](const Point& p) { return w.sigma(arr(p)); };
  f.chart = geometry::minkowski(4);
  return f;
}

// Smooth non-periodic fields for curved charts.
ScalarFields wavy_fields(const MetricField& chart) {
  ScalarFields f;
  f.rho = [](const Point& p) { return std::exp(0.3 * std::sin(p[1]) + 0.2 * std::cos(p[2] - p[0]) + 0.1 * p[3]); };
  f.sigma = [](const Point& p) { return 0.5 * p[0] - 0.4 * std::sin(p[1] + p[3]) + 0.2 * p[2] * p[2]; };
  f.chart = chart;
  return f;
}

GaugeChange exp_gauge() {
  return {[](const Point& p) { return std::exp(0.2 * std::sin(p[1]) + 0.1 * p[0] - 0.15 * std::cos(p[2])); }};
}

}  // namespace

TEST_CASE("phase convention keeps the modulus equal to the density") {
  const auto f = wavy_fields(geometry::minkowski(4));
  const auto psi = make_psi(f, PsiConvention::phase_gamma);
  const Point p{0.2, 0.4, -0.3, 0.7};
  CHECK(std::norm(psi.psi(p)) == doctest::Approx(f.rho(p)).epsilon(1e-14));
  CHECK(std::arg(psi.psi(p)) == doctest::Approx(geometry::gamma_const(4) * f.sigma(p)));
}

TEST_CASE("real exponent convention does not preserve the density") {
  const auto f = wavy_fields(geometry::minkowski(4));
  const auto psi = make_psi(f, PsiConvention::real_exponent);
  const Point p{0.2, 0.4, -0.3, 0.7};
  CHECK(psi.psi(p).imag() == 0.0);
  const double g = geometry::gamma_const(4);
  CHECK(std::norm(psi.psi(p)) == doctest::Approx(f.rho(p) * std::exp(2.0 * f.sigma(p) / g)));
  CHECK(std::abs(std::norm(psi.psi(p)) - f.rho(p)) > 1e-3);
}

TEST_CASE("action density of a constant density plane phase") {
  ScalarFields f;
  f.rho = [](const Point&) { return 2.0; };
  f.sigma = [](const Point& p) { return 0.3 * p[0] + 0.5 * p[1]; };
  f.chart = geometry::minkowski(4);
  const Point p{0.1, 0.2, 0.3, 0.4};
  CHECK(action_density(f, p) == doctest::Approx(2.0 * (-0.09 + 0.25)).epsilon(1e-10));
  CHECK(hj_residual(f, p) == doctest::Approx(-0.09 + 0.25).epsilon(1e-10));
  CHECK(std::abs(continuity_residual(f, p)) < 1e-12);
}

TEST_CASE("null phase on a constant density solves Hamilton-Jacobi") {
  ScalarFields f;
  f.rho = [](const Point&) { return 1.5; };
  f.sigma = [](const Point& p) { return 0.6 * p[0] + 0.6 * p[3]; };
  f.chart = geometry::minkowski(4);
  CHECK(std::abs(hj_residual(f, Point{0.3, 0.1, 0.2, 0.9})) < 1e-10);
}

TEST_CASE("continuity residual of an exponential profile") {
  ScalarFields f;
  f.rho = [](const Point& p) { return std::exp(-p[1]); };
  f.sigma = [](const Point& p) { return p[1]; };
  f.chart = geometry::minkowski(4);
  const Point p{0.0, 0.4, 0.0, 0.0};
  CHECK(continuity_residual(f, p) == doctest::Approx(-std::exp(-0.4)).epsilon(1e-9));
}

TEST_CASE("density must be positive") {
  ScalarFields f;
  f.rho = [](const Point& p) { return p[1]; };
  f.sigma = [](const Point&) { return 0.0; };
  f.chart = geometry::minkowski(4);
  CHECK_THROWS_AS(action_density(f, Point{0.0, -1.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(make_psi(f).psi(Point{0.0, 0.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("modulated wave matches its closed-form d'Alembertian and residuals") {
  oracle::ModulatedWave w;
  w.gamma = geometry::gamma_const(4);
  const auto f = modulated_fields(w);
  for (const Point& p : {Point{0.1, 0.3, -0.2, 0.5}, Point{-0.4, 1.7, 0.9, 0.0}}) {
    const auto m = madelung_breakdown(f, p);
    CHECK(std::abs(m.psi - w.psi(arr(p))) < 1e-14);
    CHECK(std::abs(m.laplacian - w.box(arr(p))) < 1e-8);
    CHECK(m.hj == doctest::Approx(w.hj(arr(p))).epsilon(1e-8));
    CHECK(m.continuity == doctest::Approx(w.continuity(arr(p))).epsilon(1e-8));
    CHECK(std::abs(m.residual) < 1e-8);
    CHECK(std::abs(wave_residual(make_psi(f), p) - w.box(arr(p))) < 1e-8);
  }
}

TEST_CASE("wave equation splits into continuity and Hamilton-Jacobi on curved charts") {
  for (const auto& chart : {geometry::schwarzschild(1.0), geometry::sphere_block(1.3), geometry::einstein_static(1.3)}) {
    const auto f = wavy_fields(chart);
    const Point p{0.3, 2.2, 1.1, 0.4};
    const auto m = madelung_breakdown(f, p);
    INFO(chart.name);
    CHECK(std::abs(m.residual) / std::abs(m.psi) < 1e-7);
    CHECK(std::abs(madelung_identity(f, p) - m.residual) < 1e-15);
  }
}

TEST_CASE("wave residual rejects an invalid sign") {
  const auto f = wavy_fields(geometry::minkowski(4));
  CHECK_THROWS_AS(wave_residual(make_psi(f), Point{0, 0, 0, 0}, 0), DomainError);
}

TEST_CASE("curvature sign of the wave operator") {
  ScalarFields f;
  f.rho = [](const Point&) { return 1.0; };
  f.sigma = [](const Point&) { return 0.0; };
  f.chart = geometry::sphere_block(1.3);
  const Point p{0.0, 0.0, 1.0, 0.0};
  const double g2 = oracle::gamma_squared(4), r = 2.0 / (1.3 * 1.3);
  CHECK(wave_residual(make_psi(f), p, -1).real() == doctest::Approx(-g2 * r).epsilon(1e-7));
  CHECK(wave_residual(make_psi(f), p, +1).real() == doctest::Approx(g2 * r).epsilon(1e-7));
}

TEST_CASE("weight table") {
  for (int N : {3, 4, 11}) {
    const WeightTable w = weight_table(N);
    CHECK(w.metric == 1.0);
    CHECK(w.inverse_metric == -1.0);
    CHECK(w.volume == doctest::Approx(N / 2.0));
    CHECK(w.connection == 0.0);
    CHECK(w.curvature == -1.0);
    CHECK(w.density == doctest::Approx(-(N - 2.0) / 2.0));
  }
}

TEST_CASE("unit calibration is the identity") {
  const auto chart = geometry::sphere_block(1.3);
  const auto f = wavy_fields(chart);
  const GaugeChange one{[](const Point&) { return 1.0; }};
  const auto g = weyl_transform(f, one);
  const Point p{0.1, 0.3, 1.0, 0.4};
  CHECK(oracle::max_abs_diff(g.chart(p), chart(p)) == 0.0);
  CHECK(g.rho(p) == f.rho(p));
}

TEST_CASE("weyl connection and curvature weight under a calibration change") {
  const auto chart = geometry::sphere_block(1.3);
  const auto f = wavy_fields(chart);
  const auto gc = exp_gauge();
  const auto g = weyl_transform(f, gc);
  const Point p{0.1, 0.3, 1.0, 0.4};
  const auto a = geometry::weyl_connection(f.chart, f.rho, p);
  const auto b = geometry::weyl_connection(g.chart, g.rho, p);
  CHECK((a - b).max_abs() < 1e-7);
  const double r1 = geometry::weyl_scalar(f.chart, f.rho, p).r_weyl;
  const double r2 = geometry::weyl_scalar(g.chart, g.rho, p).r_weyl;
  CHECK(gc.lambda(p) * r2 == doctest::Approx(r1).epsilon(1e-6));
  CHECK(action_density(g, p) == doctest::Approx(action_density(f, p)).epsilon(1e-6));
}

TEST_CASE("weyl vector shifts by half the log gradient of the calibration") {
  const auto chart = geometry::minkowski(4);
  const auto f = wavy_fields(chart);
  const auto gc = exp_gauge();
  geometry::CovectorField phi = [&f](const Point& q) { return geometry::weyl_vector(f.rho, q, 4); };
  const auto shifted = weyl_transform_vector(phi, gc);
  const auto rho2 = weyl_transform_density(f.rho, gc, 4);
  const Point p{0.2, -0.1, 0.6, 0.3};
  CHECK((shifted(p) - geometry::weyl_vector(rho2, p, 4)).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("calibration factor must be positive") {
  const GaugeChange bad{[](const Point& p) { return p[1]; }};
  const auto m = weyl_transform(geometry::minkowski(4), bad);
  CHECK_THROWS_AS(m(Point{0.0, -0.5, 0.0, 0.0}), DomainError);
}

TEST_CASE("conformal wave operator is covariant under rescaling") {
  const auto chart = geometry::minkowski(4);
  const GaugeChange gc = exp_gauge();
  const ComplexField psi = [](const Point& p) {
    return std::exp(oracle::I * (0.4 * p[1] - 0.2 * p[0])) * (1.0 + 0.2 * std::sin(p[2] + p[3]));
  };
  PsiField a{psi, PsiConvention::phase_gamma, chart};
  const double w = -(4.0 - 2.0) / 4.0;
  PsiField b{[psi, gc, w](const Point& p) { return std::pow(gc.lambda(p), w) * psi(p); }, PsiConvention::phase_gamma,
             weyl_transform(chart, gc)};
  for (const Point& p : {Point{0.1, 0.2, 0.3, 0.4}, Point{-0.5, 1.0, 0.2, -0.3}}) {
    const Complex lhs = wave_residual(b, p);
    const Complex rhs = std::pow(gc.lambda(p), w - 1.0) * wave_residual(a, p);
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-6);
  }
}

TEST_CASE("stress tensor vanishes for trivial fields") {
  ScalarFields f;
  f.rho = [](const Point&) { return 1.0; };
  f.sigma = [](const Point&) { return 0.0; };
  f.chart = geometry::minkowski(4);
  const Point p{0.1, 0.2, 0.3, 0.4};
  CHECK(stress_tensor(f, p).cwiseAbs().maxCoeff() == 0.0);
  CHECK(einstein_residual(f, p).cwiseAbs().maxCoeff() == 0.0);
  f.chart = geometry::schwarzschild(1.0);
  CHECK(einstein_residual(f, Point{0.0, 3.0, 1.0, 0.2}).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("stress tensor terms for an exponential density") {
  const Eigen::Vector4d a(0.2, -0.1, 0.3, 0.15);
  const double bq = 0.4;
  const Eigen::Vector4d c(0.5, 0.1, -0.2, 0.3);
  ScalarFields f;
  f.rho = [a](const Point& p) { return std::exp(a(0) * p[0] + a(1) * p[1] + a(2) * p[2] + a(3) * p[3]); };
  f.sigma = [bq, c](const Point& p) {
    return 0.5 * bq * p[1] * p[1] + c(0) * p[0] + c(1) * p[1] + c(2) * p[2] + c(3) * p[3];
  };
  f.chart = geometry::minkowski(4);
  const Point p{0.3, 0.6, -0.2, 0.1};
  const double rho = f.rho(p), g2 = oracle::gamma_squared(4);
  Eigen::Matrix4d eta = Eigen::Matrix4d::Zero();
  for (int i = 0; i < 4; ++i) eta(i, i) = oracle::minkowski_eta(i, i);
  const double aa = a.dot(eta * a);
  Eigen::Vector4d ds = c;
  ds(1) += bq * p[1];
  const StressTerms t = stress_terms(f, p);
  CHECK(oracle::max_abs_diff(t.sigma_grad, Eigen::MatrixXd(ds * ds.transpose())) < 1e-9);
  CHECK(oracle::max_abs_diff(t.sigma_trace, Eigen::MatrixXd(-0.5 * eta * bq)) < 1e-8);
  CHECK(oracle::max_abs_diff(t.rho_grad, Eigen::MatrixXd(a * a.transpose() / g2)) < 1e-8);
  CHECK(oracle::max_abs_diff(t.rho_trace, Eigen::MatrixXd(-0.5 * eta * aa / (g2 * rho))) < 1e-7);
  CHECK(oracle::max_abs_diff(t.rho_hessian, Eigen::MatrixXd(-a * a.transpose())) < 1e-7);
  CHECK(oracle::max_abs_diff(t.rho_laplacian, Eigen::MatrixXd(eta * aa)) < 1e-7);
  CHECK(oracle::max_abs_diff(stress_tensor(f, p), t.total()) == 0.0);
}
