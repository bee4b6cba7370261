#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weylkk/lorentz.hpp"
#include "oracles.hpp"

using namespace weylkk;
using namespace weylkk::lorentz;

namespace {

GroupPoint sample_y(std::uint64_t seed, double scale = 0.4) {
  const auto v = oracle::uniform_samples(seed, 6, -scale, scale);
  GroupPoint y;
  for (int a = 0; a < 6; ++a) y.y(a) = v[a];
  return y;
}

Mat4 minus_combination(const Vec6& c) {
  const auto T = real_generators();
  Mat4 m = Mat4::Zero();
  for (int b = 0; b < 6; ++b) m -= c(b) * T[b];
  return m;
}

}  // namespace

TEST_CASE("identity suite passes every family at machine precision") {
  const IdentityReport r = identity_suite(1e-14);
  CHECK(r.all_pass());
  CHECK(r.families.size() >= 6);
  for (const auto& f : r.families) {
    CHECK(f.checks > 0);
    CHECK(f.max_residual <= 1e-14);
  }
}

TEST_CASE("identity suite reports the failing family and indices") {
  try {
    identity_suite(-1.0);
    FAIL("expected an identity failure");
  } catch (const IdentityFailure& e) {
    CHECK_FALSE(e.family.empty());
    CHECK_FALSE(e.indices.empty());
  }
}

TEST_CASE("pair basis indexing") {
  for (int a = 0; a < 6; ++a) {
    const auto [m, n] = kPairs[a];
    CHECK(pair_index(m, n) == a);
    CHECK(pair_index(n, m) == a);
  }
  CHECK(pair_index(2, 2) == -1);
}

TEST_CASE("dirac gamma matrices satisfy the Clifford relation") {
  const RepSet& d = rep_set(Rep::dirac);
  const auto ref = oracle::chiral_gammas();
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      const CMat lib = d.gamma[m] * d.gamma[n] + d.gamma[n] * d.gamma[m];
      const CMat want = -2.0 * oracle::minkowski_eta(m, n) * CMat::Identity(4, 4);
      CHECK(oracle::max_abs_diff(lib, want) < 1e-15);
      const CMat r = ref[m] * ref[n] + ref[n] * ref[m];
      CHECK(oracle::max_abs_diff(r, want) < 1e-15);
    }
}

TEST_CASE("dirac generators are the commutators of gamma matrices") {
  const RepSet& d = rep_set(Rep::dirac);
  // J_mn = (i/4)[γ_m, γ_n] with γ_m = η_mm γ^m
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      const CMat gm = oracle::minkowski_eta(m, m) * d.gamma[m];
      const CMat gn = oracle::minkowski_eta(n, n) * d.gamma[n];
      const CMat c = 0.25 * oracle::I * (gm * gn - gn * gm);
      CHECK(oracle::max_abs_diff(d.lower(m, n), c) < 1e-15);
    }
}

TEST_CASE("gamma five anticommutes with every gamma matrix") {
  const RepSet& d = rep_set(Rep::dirac);
  CHECK(oracle::max_abs_diff(CMat(d.gamma5 * d.gamma5), CMat::Identity(4, 4)) < 1e-15);
  for (int m = 0; m < 4; ++m)
    CHECK(oracle::max_abs_diff(CMat(d.gamma5 * d.gamma[m] + d.gamma[m] * d.gamma5), CMat::Zero(4, 4)) < 1e-15);
}

TEST_CASE("rotations and boosts have the textbook matrices") {
  for (double th : {0.3, 1.1, -2.0})
    CHECK(oracle::max_abs_diff(lorentz_matrix(GroupPoint::rotation(3, th)), oracle::rotation_z(th)) < 1e-14);
  for (double chi : {0.3, -0.8, 1.5})
    CHECK(oracle::max_abs_diff(lorentz_matrix(GroupPoint::boost(1, chi)), oracle::boost_x(chi)) < 1e-13);
}

TEST_CASE("lorentz matrices preserve the metric") {
  const Mat4 eta = eta_matrix();
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const Mat4 d = lorentz_matrix(sample_y(s, 1.0));
    CHECK(oracle::max_abs_diff(Mat4(d.transpose() * eta * d), eta) < 1e-12);
    CHECK(d.determinant() == doctest::Approx(1.0));
    CHECK(d(0, 0) >= 1.0);
  }
}

TEST_CASE("vector representation reproduces the lorentz matrix") {
  const GroupPoint y = sample_y(3);
  CHECK(oracle::max_abs_diff(exp_map(y, Rep::vector4), CMat(lorentz_matrix(y).cast<Complex>())) < 1e-13);
}

TEST_CASE("spinor transformation rotates gamma matrices covariantly") {
  const RepSet& d = rep_set(Rep::dirac);
  for (std::uint64_t s = 20; s < 25; ++s) {
    const GroupPoint y = sample_y(s);
    const CMat S = exp_map(y, Rep::dirac), Si = S.inverse();
    const Mat4 L = lorentz_matrix(y);
    for (int m = 0; m < 4; ++m) {
      CMat rhs = CMat::Zero(4, 4);
      for (int n = 0; n < 4; ++n) rhs += L(m, n) * d.gamma[n];
      CHECK(oracle::max_abs_diff(CMat(Si * d.gamma[m] * S), rhs) < 1e-13);
    }
  }
}

TEST_CASE("spinor transformations are unimodular and respect chirality") {
  const GroupPoint y = sample_y(5);
  const RepSet& d = rep_set(Rep::dirac);
  for (Rep r : {Rep::left, Rep::right})
    CHECK(std::abs(exp_map(y, r).determinant() - 1.0) < 1e-13);
  const CMat S = exp_map(y, Rep::dirac);
  CHECK(oracle::max_abs_diff(CMat(S * d.gamma5), CMat(d.gamma5 * S)) < 1e-14);
}

TEST_CASE("rotation by 2 pi is minus one on spinors") {
  for (int axis = 1; axis <= 3; ++axis) {
    const CMat S = exp_map(GroupPoint::rotation(axis, 2.0 * oracle::kPi), Rep::dirac);
    CHECK(oracle::max_abs_diff(S, CMat(-CMat::Identity(4, 4))) < 1e-12);
  }
}

TEST_CASE("structure constants are antisymmetric and satisfy Jacobi") {
  const auto& f = structure_constants();
  const auto T = real_generators();
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Mat4 comm = T[a] * T[b] - T[b] * T[a];
      Mat4 rebuilt = Mat4::Zero();
      for (int c = 0; c < 6; ++c) {
        CHECK(f[c](a, b) == doctest::Approx(-f[c](b, a)));
        rebuilt += f[c](a, b) * T[c];
      }
      CHECK(oracle::max_abs_diff(comm, rebuilt) < 1e-14);
    }
  double jac = 0.0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c)
        for (int e = 0; e < 6; ++e) {
          double s = 0.0;
          for (int d = 0; d < 6; ++d)
            s += f[d](a, b) * f[e](d, c) + f[d](b, c) * f[e](d, a) + f[d](c, a) * f[e](d, b);
          jac = std::max(jac, std::abs(s));
        }
  CHECK(jac < 1e-14);
}

TEST_CASE("generator projection inverts the generator expansion") {
  Vec6 c;
  c << 0.3, -0.1, 0.7, 0.2, -0.5, 0.05;
  CHECK((project_generators(minus_combination(c)) - c).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("adjoint action conjugates the generators") {
  const Mat4 D = lorentz_matrix(sample_y(9));
  const Mat6 ad = adjoint(D);
  const auto T = real_generators();
  for (int a = 0; a < 6; ++a) {
    Mat4 rhs = Mat4::Zero();
    for (int b = 0; b < 6; ++b) rhs += ad(b, a) * T[b];
    CHECK(oracle::max_abs_diff(Mat4(D * T[a] * D.inverse()), rhs) < 1e-13);
  }
}

TEST_CASE("maurer cartan closed form matches a direct difference quotient") {
  const auto T = real_generators();
  for (std::uint64_t s = 30; s < 36; ++s) {
    const GroupPoint y = sample_y(s, 0.6);
    const MCForms mc = maurer_cartan_exact(y);
    const Mat4 Dinv = lorentz_matrix(y).inverse();
    const double h = 1e-5;
    for (int a = 0; a < 6; ++a) {
      GroupPoint yp = y, ym = y;
      yp.y(a) += h;
      ym.y(a) -= h;
      const Mat4 dD = (lorentz_matrix(yp) - lorentz_matrix(ym)) / (2.0 * h);
      Mat4 rhs = Mat4::Zero();
      for (int b = 0; b < 6; ++b) rhs -= T[b] * mc.omega(b, a);
      CHECK(oracle::max_abs_diff(Mat4(dD * Dinv), rhs) < 1e-8);
    }
    const MCForms fd = maurer_cartan(y);
    CHECK((fd.omega - mc.omega).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("maurer cartan forms are the identity at the origin") {
  CHECK((maurer_cartan_exact(GroupPoint{}).omega - Mat6::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("maurer cartan forms satisfy the structure equation") {
  const GroupPoint y = sample_y(41, 0.5);
  const auto& f = structure_constants();
  const MCForms mc = maurer_cartan_exact(y);
  const double h = 1e-4;
  std::array<Mat6, 6> d;  // d[a] = ∂_a Ω
  for (int a = 0; a < 6; ++a) {
    GroupPoint yp = y, ym = y;
    yp.y(a) += h;
    ym.y(a) -= h;
    d[a] = (maurer_cartan_exact(yp).omega - maurer_cartan_exact(ym).omega) / (2.0 * h);
  }
  double worst = 0.0;
  for (int g = 0; g < 6; ++g)
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        const double lhs = -(d[a](g, b) - d[b](g, a));
        double rhs = 0.0;
        for (int p = 0; p < 6; ++p)
          for (int q = 0; q < 6; ++q) rhs += f[g](p, q) * mc.omega(p, a) * mc.omega(q, b);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  CHECK(worst < 1e-7);
}

TEST_CASE("maurer cartan chart breaks down at a full rotation") {
  const GroupPoint y = GroupPoint::rotation(3, 2.0 * oracle::kPi);
  try {
    maurer_cartan_exact(y);
    FAIL("expected a chart breakdown");
  } catch (const ChartBreakdown& e) {
    CHECK(e.condition >= kChartConditionLimit);
  }
}

TEST_CASE("field tensor splits into magnetic and electric parts") {
  Mat4 f = Mat4::Zero();
  const double vals[6] = {0.3, -0.7, 0.2, 1.1, -0.4, 0.6};
  for (int a = 0; a < 6; ++a) {
    f(kPairs[a].first, kPairs[a].second) = vals[a];
    f(kPairs[a].second, kPairs[a].first) = -vals[a];
  }
  const FJParts p = fj_decompose(f);
  CHECK(p.sigma_part(0) == doctest::Approx(f(2, 3)));
  CHECK(p.sigma_part(1) == doctest::Approx(f(3, 1)));
  CHECK(p.sigma_part(2) == doctest::Approx(f(1, 2)));
  CHECK(p.alpha_part(0) == doctest::Approx(f(1, 0)));
  CHECK(oracle::max_abs_diff(fj_matrix(f), oracle::fj_from_fields(f)) < 1e-14);
  CHECK(oracle::max_abs_diff(fj_reconstruct(p), oracle::fj_from_fields(f)) < 1e-14);

  const RepSet& d = rep_set(Rep::dirac);
  CMat direct = CMat::Zero(4, 4);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) direct += f(m, n) * d.upper(m, n);
  CHECK(oracle::max_abs_diff(direct, oracle::fj_from_fields(f)) < 1e-14);
}

TEST_CASE("pure magnetic field along z couples to the third spin matrix") {
  Mat4 f = Mat4::Zero();
  f(1, 2) = 0.8;
  f(2, 1) = -0.8;
  CHECK(oracle::max_abs_diff(fj_matrix(f), CMat(0.8 * sigma_block(3))) < 1e-15);
}

TEST_CASE("field decomposition rejects symmetric input") {
  Mat4 f = Mat4::Zero();
  f(0, 1) = f(1, 0) = 1.0;
  CHECK_THROWS_AS(fj_decompose(f), DomainError);
}
