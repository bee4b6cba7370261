#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weylkk/geometry.hpp"
#include "oracles.hpp"

using namespace weylkk;
using geometry::MetricField;
using numkit::DerivBackend;
using numkit::Point;

namespace {

oracle::Metric as_oracle(const MetricField& m) {
  return [m](const std::vector<double>& x) { return m.g(Point(std::span<const double>(x))); };
}

std::vector<double> coords(const Point& p) { return {p.coords().begin(), p.coords().end()}; }

double christoffel_gap(const MetricField& m, const Point& p) {
  const auto lib = geometry::christoffel(m, p, DerivBackend{});
  const auto ref = oracle::christoffel(as_oracle(m), coords(p));
  const int n = m.dim;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(lib(i, j, k) - ref[static_cast<std::size_t>(i * n * n + j * n + k)]));
  return worst;
}

}  // namespace

TEST_CASE("flat space has no curvature in any dimension") {
  for (int dim : {2, 4, 11}) {
    const auto m = geometry::minkowski(dim);
    Point p(dim);
    for (int i = 0; i < dim; ++i) p[i] = 0.1 * i;
    const auto s = geometry::curvature(m, p, DerivBackend{});
    CHECK(s.riemann.max_abs() == 0.0);
    CHECK(s.scalar == 0.0);
    CHECK(geometry::signature_of(s.g) == std::pair<int, int>{1, dim - 1});
  }
}

TEST_CASE("schwarzschild Christoffel symbols match a direct difference quotient") {
  const auto m = geometry::schwarzschild(1.0);
  for (double r : {1.7, 3.0, 8.0}) CHECK(christoffel_gap(m, Point{0.0, r, 1.1, 0.3}) < 1e-8);
}

TEST_CASE("schwarzschild is Ricci flat with the standard Kretschmann scalar") {
  for (double rs : {0.5, 1.0, 2.0}) {
    const auto m = geometry::schwarzschild(rs);
    for (double f : {3.0, 5.0, 10.0, 50.0}) {
      const double r = f * rs;
      const auto s = geometry::curvature(m, Point{0.2, r, 0.9, 2.0}, DerivBackend{});
      const double k = oracle::schwarzschild_kretschmann(rs, r);
      CHECK(std::abs(s.scalar) < 1e-12 * std::max(1.0, k * r * r));
      CHECK(s.ricci.max_abs() < 1e-10);
      CHECK(s.kretschmann == doctest::Approx(k).epsilon(1e-10));
      CHECK(geometry::symmetry_residuals(s).max() < 1e-10);
    }
  }
}

TEST_CASE("exact metric hooks agree with stencil derivatives") {
  const auto hooked = geometry::schwarzschild(1.0);
  MetricField bare = hooked;
  bare.d1 = nullptr;
  bare.d2 = nullptr;
  REQUIRE(hooked.has_exact_hooks());
  REQUIRE_FALSE(bare.has_exact_hooks());
  const Point p{0.0, 2.5, 1.2, 0.7};
  const auto a = geometry::metric_jet(hooked, p, DerivBackend{});
  const auto b = geometry::metric_jet(bare, p, DerivBackend{numkit::Scheme::richardson, 1e-2});
  for (int k = 0; k < 4; ++k) CHECK(oracle::max_abs_diff(a.dg[k], b.dg[k]) < 1e-9);
  for (int k = 0; k < 16; ++k) CHECK(oracle::max_abs_diff(a.ddg[k], b.ddg[k]) < 1e-7);
  const auto sa = geometry::curvature_from_jet(p, a);
  const auto sb = geometry::curvature_from_jet(p, b);
  CHECK(sb.kretschmann == doctest::Approx(sa.kretschmann).epsilon(1e-7));
}

TEST_CASE("schwarzschild chart refuses points inside the horizon") {
  const auto m = geometry::schwarzschild(1.0);
  CHECK_THROWS_AS(geometry::curvature(m, Point{0.0, 0.9, 1.0, 0.0}, DerivBackend{}), SingularPoint);
  CHECK_THROWS_AS(m(Point{0.0, 1.0, 1.0, 0.0}), SingularPoint);
}

TEST_CASE("sphere block curvature is constant") {
  const double a = 1.3;
  const auto m = geometry::sphere_block(a);
  const auto th = oracle::uniform_samples(11, 5, 0.4, 2.7);
  for (double t : th) {
    const Point p{0.1, -0.4, t, 0.8};
    const auto s = geometry::curvature(m, p, DerivBackend{});
    CHECK(s.scalar == doctest::Approx(2.0 / (a * a)).epsilon(1e-7));
    CHECK(s.kretschmann == doctest::Approx(4.0 / std::pow(a, 4)).epsilon(1e-6));
    const auto g = geometry::christoffel(m, p, DerivBackend{});
    CHECK(g(2, 3, 3) == doctest::Approx(-std::sin(t) * std::cos(t)).epsilon(1e-8));
    CHECK(g(3, 2, 3) == doctest::Approx(std::cos(t) / std::sin(t)).epsilon(1e-8));
  }
}

TEST_CASE("einstein static curvature is constant") {
  const double a = 1.3;
  const auto m = geometry::einstein_static(a);
  for (double chi : {0.6, 1.2, 2.0}) {
    const auto s = geometry::curvature(m, Point{0.0, chi, 1.0, 0.5}, DerivBackend{});
    CHECK(s.scalar == doctest::Approx(6.0 / (a * a)).epsilon(1e-7));
    CHECK(s.kretschmann == doctest::Approx(12.0 / std::pow(a, 4)).epsilon(1e-6));
    CHECK(christoffel_gap(m, Point{0.0, chi, 1.0, 0.5}) < 1e-8);
  }
}

TEST_CASE("dual scalar vanishes for a torsion-free connection") {
  const auto m = geometry::schwarzschild(1.0);
  CHECK(std::abs(geometry::dual_scalar(m, Point{0.0, 2.2, 0.9, 0.1})) < 1e-12);
  CHECK(std::abs(geometry::dual_scalar(geometry::einstein_static(1.1), Point{0.0, 0.7, 1.3, 0.2})) < 1e-8);
}

TEST_CASE("laplace beltrami of cos theta on the sphere block") {
  const double a = 1.3;
  const auto m = geometry::sphere_block(a);
  geometry::ScalarField f = [](const Point& p) { return std::cos(p[2]); };
  for (double t : {0.5, 1.0, 2.2}) {
    const double lb = geometry::laplace_beltrami(m, f, Point{0.0, 0.0, t, 0.3});
    CHECK(lb == doctest::Approx(-2.0 * std::cos(t) / (a * a)).epsilon(1e-7));
  }
}

TEST_CASE("laplace beltrami reduces to the flat wave operator") {
  const auto m = geometry::minkowski(4);
  geometry::ComplexField f = [](const Point& p) {
    return std::exp(oracle::I * (0.3 * p[0] + 0.5 * p[1] - 0.2 * p[3]));
  };
  const Point p{0.2, 0.1, -0.4, 0.9};
  const double kk = -0.09 + 0.25 + 0.04;
  const auto lb = geometry::laplace_beltrami(m, f, p);
  CHECK(std::abs(lb + kk * f(p)) < 1e-9);
}

TEST_CASE("gamma constant") {
  for (int N : {3, 4, 5, 11}) CHECK(geometry::gamma_const(N) == doctest::Approx(std::sqrt(oracle::gamma_squared(N))));
  CHECK(geometry::gamma_const(11) * geometry::gamma_const(11) == doctest::Approx(9.0 / 40.0));
}

TEST_CASE("weyl vector of an exponential density") {
  const Eigen::Vector4d a(0.3, -0.2, 0.5, 0.1);
  geometry::ScalarField rho = [a](const Point& p) {
    return std::exp(a(0) * p[0] + a(1) * p[1] + a(2) * p[2] + a(3) * p[3]);
  };
  const Point p{0.4, 0.1, -0.2, 0.3};
  const Eigen::VectorXd phi = geometry::weyl_vector(rho, p, 4);
  CHECK((phi - a / 2.0).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("weyl scalar of an exponential density on flat space") {
  const Eigen::Vector4d a(0.3, -0.2, 0.5, 0.1);
  geometry::ScalarField rho = [a](const Point& p) {
    return std::exp(a(0) * p[0] + a(1) * p[1] + a(2) * p[2] + a(3) * p[3]);
  };
  const auto m = geometry::minkowski(4);
  const Point p{0.4, 0.1, -0.2, 0.3};
  double aa = 0.0;
  for (int i = 0; i < 4; ++i) aa += oracle::minkowski_eta(i, i) * a(i) * a(i);
  const double expected = -aa / (4.0 * oracle::gamma_squared(4));
  const auto ws = geometry::weyl_scalar(m, rho, p);
  CHECK(ws.riemann_scalar == doctest::Approx(0.0));
  CHECK(ws.r_weyl == doctest::Approx(expected).epsilon(1e-7));
  CHECK(ws.r_weyl == doctest::Approx(ws.riemann_scalar - ws.bohm));
  CHECK(geometry::weyl_connection_scalar(m, rho, p) == doctest::Approx(expected).epsilon(1e-5));
}

TEST_CASE("weyl connection with zero vector is Levi-Civita") {
  const auto m = geometry::sphere_block(1.3);
  geometry::CovectorField zero = [](const Point&) { return Eigen::VectorXd::Zero(4); };
  const Point p{0.0, 0.2, 1.0, 0.4};
  const auto w = geometry::weyl_connection(m, zero, p);
  const auto lc = geometry::christoffel(m, p, DerivBackend{});
  CHECK((w - lc).max_abs() < 1e-12);
}

TEST_CASE("signature counts eigenvalue signs") {
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(5, 5);
  g(0, 0) = -2.0;
  g(3, 3) = -0.5;
  CHECK(geometry::signature_of(g) == std::pair<int, int>{2, 3});
}
