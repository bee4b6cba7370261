#include <cmath>
#include <random>

#include "weylkk/cqg.hpp"
#include "weylkk/diracops.hpp"
#include "weylkk/errors.hpp"
#include "weylkk/geometry.hpp"
#include "weylkk/lorentz.hpp"
#include "weylkk/scenario.hpp"

namespace weylkk::scenario {

using diracops::Spinor;
using diracops::Spinor2;
using numkit::Complex;
using numkit::Point;

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex I(0.0, 1.0);

SuiteReport start(const std::string& name, const ScenarioConfig& cfg, double default_tol) {
  SuiteReport r;
  r.suite = name;
  r.scheme = numkit::scheme_name(cfg.backend.scheme);
  r.tol = cfg.tol > 0.0 ? cfg.tol : default_tol;
  r.seed = cfg.seed;
  r.hash = config_hash(cfg);
  return r;
}

int points_or(const ScenarioConfig& cfg, int d) { return cfg.points > 0 ? cfg.points : d; }

std::mt19937_64 stream_rng(const ScenarioConfig& cfg, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(stream), 0x5eedu};
  return std::mt19937_64(seq);
}

lorentz::GroupPoint random_fiber(std::mt19937_64& rng, double max_norm) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  lorentz::Vec6 v;
  for (int a = 0; a < 6; ++a) v(a) = n(rng);
  return lorentz::GroupPoint{v.normalized() * (max_norm * u(rng))};
}

// ---------------------------------------------------------------------------

SuiteReport suite_algebra(const ScenarioConfig& cfg) {
  SuiteReport r = start("algebra", cfg, 1e-14);
  r.table.columns = {"family", "checks", "max_residual"};
  try {
    const auto rep = lorentz::identity_suite(r.tol);
    for (const auto& f : rep.families) {
      r.table.rows.push_back({f.name, std::to_string(f.checks), fmt(f.max_residual)});
      r.check(f.name, f.max_residual, r.tol);
    }
  } catch (const IdentityFailure& e) {
    r.check(e.family, e.residual, r.tol);
    r.notes.push_back(std::string("first violation at ") + e.indices);
  }
  return r;
}

SuiteReport suite_kk(const ScenarioConfig& cfg) {
  SuiteReport r = start("kk", cfg, 1e-3);
  const int n = points_or(cfg, 8);
  const auto bg = make_background(cfg);
  const auto k = kaluza::constants(cfg.m_e, cfg.e);
  struct Row {
    Point x;
    double ynorm = 0, z = 0, closed = 0, brute = 0, rel = 0;
  };
  std::vector<Row> rows(n);
  std::vector<lorentz::GroupPoint> ys(n);
  std::vector<double> zs(n);
  auto rng = stream_rng(cfg, 2);
  std::uniform_real_distribution<double> uz(0.0, 2 * kPi);
  for (int i = 0; i < n; ++i) {
    ys[i] = random_fiber(rng, 0.5);
    zs[i] = uz(rng);
  }
  numkit::parallel_for(n, [&](std::size_t i) {
    Row& row = rows[i];
    row.x = sample_point(cfg.background, cfg, 1, static_cast<int>(i));
    row.ynorm = ys[i].norm();
    row.z = zs[i];
    row.closed = kaluza::rbar_closed(bg, k, row.x).total;
    row.brute = kaluza::rbar_bruteforce(bg, k, kaluza::make_point11(row.x, ys[i], row.z));
    row.rel = std::abs(row.brute - row.closed) / std::max(std::abs(row.closed), 1e-12);
  });
  r.table.columns = {"x0", "x1", "x2", "x3", "y_norm", "z", "closed", "brute", "rel_err"};
  double worst = 0.0;
  for (const auto& row : rows) {
    r.table.rows.push_back({fmt(row.x[0]), fmt(row.x[1]), fmt(row.x[2]), fmt(row.x[3]), fmt(row.ynorm), fmt(row.z),
                            fmt(row.closed), fmt(row.brute), fmt(row.rel)});
    worst = std::max(worst, row.rel);
  }
  r.check("max_rel_err", worst, r.tol);
  r.notes.push_back("fiber signature " + kaluza::signature_name(kaluza::FiberSignature::rotations_positive));
  if (cfg.background == BackgroundKind::schwarzschild_coulomb)
    r.notes.push_back("curved charged backgrounds probe the F F R R coefficient of the closed form");
  return r;
}

// Periodic random Fourier mode sums on a box of side L.
struct FourierField {
  std::vector<std::array<double, 4>> k;
  std::vector<double> amp, phase;
  double operator()(const Point& p) const {
    double s = 0.0;
    for (std::size_t j = 0; j < amp.size(); ++j)
      s += amp[j] * std::sin(k[j][0] * p[0] + k[j][1] * p[1] + k[j][2] * p[2] + k[j][3] * p[3] + phase[j]);
    return s;
  }
};

FourierField random_fourier(std::mt19937_64& rng, double box, int modes, double amp) {
  std::uniform_int_distribution<int> ni(-1, 1);
  std::uniform_real_distribution<double> ua(-amp, amp), up(0.0, 2 * kPi);
  FourierField f;
  for (int j = 0; j < modes; ++j) {
    std::array<double, 4> kv{};
    for (int a = 0; a < 4; ++a) kv[a] = 2 * kPi * ni(rng) / box;
    f.k.push_back(kv);
    f.amp.push_back(ua(rng));
    f.phase.push_back(up(rng));
  }
  return f;
}

cqg::ScalarFields random_pair(std::mt19937_64& rng, double box, const geometry::MetricField& chart) {
  const FourierField a = random_fourier(rng, box, 3, 0.4);
  const FourierField b = random_fourier(rng, box, 3, 0.8);
  cqg::ScalarFields f;
  f.rho = [a](const Point& p) { return std::exp(a(p)); };
  f.sigma = b;
  f.chart = chart;
  return f;
}

SuiteReport suite_madelung(const ScenarioConfig& cfg) {
  SuiteReport r = start("madelung", cfg, 1e-6);
  const int seeds = points_or(cfg, 20);
  diracops::Lattice lat;
  lat.extent = {cfg.lattice, cfg.lattice, cfg.lattice, cfg.lattice};
  lat.spacing = {cfg.spacing, cfg.spacing, cfg.spacing, cfg.spacing};
  lat.periodic = {true, true, true, true};
  const double box = cfg.lattice * cfg.spacing;
  const auto chart = geometry::minkowski(4);
  r.table.columns = {"seed", "sites", "max_residual", "field_scale", "rel_residual"};
  double worst = 0.0, modulus = 0.0;
  for (int s = 0; s < seeds; ++s) {
    auto rng = stream_rng(cfg, 100 + s);
    const cqg::ScalarFields f = random_pair(rng, box, chart);
    const std::size_t n = lat.sites();
    std::vector<double> res(n), scale(n);
    numkit::parallel_for(n, [&](std::size_t i) {
      const Point p = lat.site(i);
      const auto m = cqg::madelung_breakdown(f, p, cfg.backend);
      res[i] = std::abs(m.residual);
      scale[i] = std::abs(m.psi);
    });
    double mr = 0.0, ms = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      mr = std::max(mr, res[i]);
      ms = std::max(ms, scale[i]);
    }
    const double rel = mr / ms;
    worst = std::max(worst, rel);
    r.table.rows.push_back({std::to_string(cfg.seed + s), std::to_string(n), fmt(mr), fmt(ms), fmt(rel)});
    // |Ψ|² = ρ for the phase convention.
    const Point p0 = lat.site(n / 3);
    const auto psi = cqg::make_psi(f, cqg::PsiConvention::phase_gamma);
    modulus = std::max(modulus, std::abs(std::norm(psi.psi(p0)) - f.rho(p0)) / f.rho(p0));
  }
  r.check("max_rel_residual", worst, r.tol);
  r.check("modulus_phase_gamma", modulus, 1e-12);

  // The real-exponent convention breaks both |Ψ|² = ρ and the identity.
  auto rng = stream_rng(cfg, 99);
  const cqg::ScalarFields f = random_pair(rng, box, chart);
  const Point p0 = lat.site(lat.sites() / 2);
  const auto psr = cqg::make_psi(f, cqg::PsiConvention::real_exponent);
  const double mod_real = std::abs(std::norm(psr.psi(p0)) - f.rho(p0)) / f.rho(p0);
  r.check("modulus_real_exponent", mod_real, 1e-12, true);
  r.notes.push_back("Psi = sqrt(rho) exp(i gamma sigma) with the -gamma^2 R curvature sign");
  r.notes.push_back("real-exponent convention |Psi|^2 - rho relative gap " + fmt(mod_real));
  return r;
}

SuiteReport suite_weyl_gauge(const ScenarioConfig& cfg) {
  SuiteReport r = start("weyl-gauge", cfg, 1e-5);
  const int n = points_or(cfg, 50);
  const auto bg = make_background(cfg);
  const auto chart = bg.metric;
  const int N = chart.dim;
  struct Row {
    double decomposition = 0, gamma = 0, weight = 0;
  };
  std::vector<Row> rows(n);
  std::vector<FourierField> rf(n), lf(n);
  auto rng = stream_rng(cfg, 3);
  for (int i = 0; i < n; ++i) {
    rf[i] = random_fourier(rng, 3.0, 3, 0.3);
    lf[i] = random_fourier(rng, 3.0, 2, 0.3);
  }
  numkit::parallel_for(n, [&](std::size_t i) {
    const Point p = sample_point(cfg.background, cfg, 4, static_cast<int>(i));
    const FourierField a = rf[i], c = lf[i];
    geometry::ScalarField rho = [a](const Point& q) { return std::exp(a(q)); };
    cqg::GaugeChange gc{[c](const Point& q) { return std::exp(c(q)); }};
    const auto ws = geometry::weyl_scalar(chart, rho, p, cfg.backend);
    const double direct = geometry::weyl_connection_scalar(chart, rho, p, cfg.backend);
    rows[i].decomposition = std::abs(ws.r_weyl - direct) / std::max(1.0, std::abs(direct));
    const auto chart2 = cqg::weyl_transform(chart, gc);
    const auto rho2 = cqg::weyl_transform_density(rho, gc, N);
    const auto g1 = geometry::weyl_connection(chart, rho, p, cfg.backend);
    const auto g2 = geometry::weyl_connection(chart2, rho2, p, cfg.backend);
    rows[i].gamma = (g2 - g1).max_abs();
    const double rw2 = geometry::weyl_scalar(chart2, rho2, p, cfg.backend).r_weyl;
    rows[i].weight = std::abs(gc.lambda(p) * rw2 - ws.r_weyl) / std::max(1.0, std::abs(ws.r_weyl));
  });
  r.table.columns = {"index", "decomposition", "gamma_invariance", "curvature_weight"};
  double d = 0, g = 0, w = 0;
  for (int i = 0; i < n; ++i) {
    r.table.rows.push_back({std::to_string(i), fmt(rows[i].decomposition), fmt(rows[i].gamma), fmt(rows[i].weight)});
    d = std::max(d, rows[i].decomposition);
    g = std::max(g, rows[i].gamma);
    w = std::max(w, rows[i].weight);
  }
  r.check("decomposition", d, r.tol);
  r.check("gamma_invariance", g, 1e-6);
  r.check("curvature_weight", w, 1e-4);
  return r;
}

// Smooth test spinor with every component and derivative nonzero.
Spinor test_spinor(const Point& x) {
  Spinor s;
  s(0) = std::exp(I * (0.4 * x[1] - 0.3 * x[0])) * (1.0 + 0.1 * x[2] * x[2]);
  s(1) = Complex(0.3, 0.1) * std::cos(0.5 * x[3]) + 0.2 * x[1];
  s(2) = Complex(0.2, -0.4) * std::exp(-0.1 * x[1] * x[1]) + I * 0.1 * x[0];
  s(3) = std::exp(I * (0.3 * x[2] + 0.1 * x[0])) * (0.8 + 0.05 * x[3]);
  return s;
}

SuiteReport suite_operator_diff(const ScenarioConfig& cfg) {
  SuiteReport r = start("operator-diff", cfg, 1e-8);
  const int n = points_or(cfg, 4);
  const auto k = kaluza::constants(cfg.m_e, cfg.e);
  const double g2 = k.gamma * k.gamma;
  r.table.columns = {"background", "x0", "x1", "x2", "x3", "R4", "V", "expected", "measured", "abs_err"};
  double worst = 0.0, worst_pw = 0.0;
  for (auto kind : background_matrix()) {
    const auto bg = make_background(kind, cfg);
    diracops::SquareOptions sqm;
    sqm.kind = diracops::SquareKind::sqm;
    sqm.m_e = k.m_e;
    sqm.e = k.e_charge;
    diracops::SquareOptions cq = sqm;
    cq.kind = diracops::SquareKind::cqg;
    cq.k = k;
    struct Row {
      Point x;
      double r4 = 0, v = 0, expected = 0, measured = 0, err = 0, pw = 0;
    };
    std::vector<Row> rows(n);
    numkit::parallel_for(n, [&](std::size_t i) {
      Row& row = rows[i];
      row.x = sample_point(kind, cfg, 5, static_cast<int>(i));
      const Spinor a = diracops::square_apply(bg, test_spinor, row.x, cq, cfg.backend);
      const Spinor b = diracops::square_apply(bg, test_spinor, row.x, sqm, cfg.backend);
      const Spinor psi = test_spinor(row.x);
      const auto pot = diracops::potential_V(bg, k, row.x);
      row.r4 = pot.terms.r4;
      row.v = pot.V;
      row.expected = (g2 - 0.5) * row.r4 - row.v;
      const Spinor d = a - b;
      const Complex c = psi.dot(d) / psi.squaredNorm();
      row.measured = c.real();
      const double scale = std::max(1.0, std::abs(row.expected));
      row.err = std::abs(c - row.expected) / scale;
      row.pw = (d - row.expected * psi).norm() / (psi.norm() * scale);
    });
    for (const auto& row : rows) {
      r.table.rows.push_back({background_name(kind), fmt(row.x[0]), fmt(row.x[1]), fmt(row.x[2]), fmt(row.x[3]),
                              fmt(row.r4), fmt(row.v), fmt(row.expected), fmt(row.measured), fmt(row.err)});
      worst = std::max(worst, row.err);
      worst_pw = std::max(worst_pw, row.pw);
    }
  }
  r.check("coefficient_reconstruction", worst, r.tol);
  r.check("pointwise_difference", worst_pw, r.tol);
  r.notes.push_back("gamma^2 = " + fmt(g2));
  return r;
}

SuiteReport suite_reduce(const ScenarioConfig& cfg) {
  SuiteReport r = start("reduce", cfg, 1e-4);
  const int n = points_or(cfg, 5);
  const auto k = kaluza::constants(cfg.m_e, cfg.e);
  ScenarioConfig fc = cfg;
  const auto bgF = make_background(BackgroundKind::constant_F, fc);
  const auto bg0 = make_background(BackgroundKind::minkowski, fc);

  diracops::FiberHarmonic fh;
  fh.psi_R = [](const Point& x) -> Spinor2 { return test_spinor(x).head<2>(); };
  fh.psi_L = [](const Point& x) -> Spinor2 { return test_spinor(x).tail<2>(); };
  diracops::FiberHarmonic only_R = fh, only_L = fh;
  only_R.psi_L = [](const Point&) -> Spinor2 { return Spinor2::Zero(); };
  only_L.psi_R = [](const Point&) -> Spinor2 { return Spinor2::Zero(); };

  // (a) generator equivalence at 20 fiber points per chirality
  auto rng = stream_rng(cfg, 6);
  std::uniform_real_distribution<double> uz(0.0, 2 * kPi);
  double gen = 0.0, u1 = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto y = random_fiber(rng, 0.5);
    const auto q = kaluza::make_point11(sample_point(BackgroundKind::minkowski, cfg, 7, i), y, uz(rng));
    for (const auto* h : {&only_R, &only_L}) {
      const auto g = diracops::generator_equivalence(*h, q);
      gen = std::max(gen, g.max_rel_residual);
      u1 = std::max(u1, g.u1_residual);
    }
  }

  // (b) full eleven-dimensional operator against the four-component operator
  struct Row {
    Point x;
    double ynorm = 0, z = 0, rel = 0, rel_shift = 0, f2 = 0;
    Complex full, red;
  };
  std::vector<Row> rows(n);
  std::vector<lorentz::GroupPoint> ys(n);
  std::vector<double> zs(n);
  for (int i = 0; i < n; ++i) {
    ys[i] = random_fiber(rng, 0.5);
    zs[i] = uz(rng);
  }
  const double shift = 1.0 / (k.lambda0 * k.lambda0);
  numkit::parallel_for(n, [&](std::size_t i) {
    Row& row = rows[i];
    row.x = sample_point(BackgroundKind::minkowski, cfg, 8, static_cast<int>(i));
    row.ynorm = ys[i].norm();
    row.z = zs[i];
    const Point q = kaluza::make_point11(row.x, ys[i], row.z);
    const auto a = diracops::harmonic_reduce(bgF, k, fh, q);
    const auto a0 = diracops::harmonic_reduce(bg0, k, fh, q);
    const auto s = diracops::harmonic_reduce(bgF, k, fh, q, shift);
    row.full = a.full11;
    row.red = a.reduced4;
    row.rel = a.rel_err;
    row.rel_shift = s.rel_err;
    const Complex df = a.full11 - a0.full11, dr = a.reduced4 - a0.reduced4;
    row.f2 = std::abs(df - dr) / std::max({std::abs(df), std::abs(dr), 1e-300});
  });
  r.table.columns = {"x0", "x1", "x2", "x3", "y_norm", "z", "full11_re", "full11_im", "reduced4_re", "reduced4_im",
                     "rel_err", "field_part_rel_err", "shifted_rel_err"};
  double rel = 0, f2 = 0, rs = 0;
  for (const auto& row : rows) {
    r.table.rows.push_back({fmt(row.x[0]), fmt(row.x[1]), fmt(row.x[2]), fmt(row.x[3]), fmt(row.ynorm), fmt(row.z),
                            fmt(row.full.real()), fmt(row.full.imag()), fmt(row.red.real()), fmt(row.red.imag()),
                            fmt(row.rel), fmt(row.f2), fmt(row.rel_shift)});
    rel = std::max(rel, row.rel);
    f2 = std::max(f2, row.f2);
    rs = std::max(rs, row.rel_shift);
  }
  r.check("generator_equivalence", gen, 1e-6);
  r.check("u1_eigenvalue", u1, 1e-6);
  r.check("field_part_cancellation", f2, r.tol);
  r.check("full11_vs_reduced4", rel, r.tol);
  r.check("full11_vs_reduced4_mass_shifted", rs, r.tol, true);
  r.notes.push_back("mass shift probe adds 1/lambda0^2 = " + fmt(shift) + " to m_e^2");
  return r;
}

SuiteReport suite_curvature(const ScenarioConfig& cfg) {
  SuiteReport r = start("curvature", cfg, 1e-6);
  const auto bg = make_background(cfg);
  std::vector<Point> pts;
  if (cfg.background == BackgroundKind::schwarzschild || cfg.background == BackgroundKind::schwarzschild_coulomb) {
    for (double f : {3.0, 5.0, 10.0, 50.0}) pts.push_back(Point{0.0, f * cfg.r_s, 1.1, 0.4});
  } else {
    const int n = points_or(cfg, 4);
    for (int i = 0; i < n; ++i) pts.push_back(sample_point(cfg.background, cfg, 9, i));
  }
  auto expected = [&](const Point& x) -> std::pair<double, double> {
    const double a2 = cfg.radius * cfg.radius;
    switch (cfg.background) {
      case BackgroundKind::schwarzschild:
      case BackgroundKind::schwarzschild_coulomb:
        return {0.0, 12.0 * cfg.r_s * cfg.r_s / std::pow(x[1], 6)};
      case BackgroundKind::sphere_block:
        return {2.0 / a2, 4.0 / (a2 * a2)};
      case BackgroundKind::einstein_static:
        return {6.0 / a2, 12.0 / (a2 * a2)};
      default:
        return {0.0, 0.0};
    }
  };
  r.table.columns = {"x0", "x1", "x2", "x3", "R", "K", "K_expected", "symmetry"};
  double er = 0, ek = 0, es = 0;
  for (const auto& x : pts) {
    const auto geo = geometry::curvature(bg.metric, x, cfg.backend);
    const auto [re, ke] = expected(x);
    const double sym = geometry::symmetry_residuals(geo).max();
    er = std::max(er, std::abs(geo.scalar - re) / std::max(1.0, std::abs(re)));
    ek = std::max(ek, ke == 0.0 ? std::abs(geo.kretschmann) : std::abs(geo.kretschmann - ke) / ke);
    es = std::max(es, sym);
    r.table.rows.push_back(
        {fmt(x[0]), fmt(x[1]), fmt(x[2]), fmt(x[3]), fmt(geo.scalar), fmt(geo.kretschmann), fmt(ke), fmt(sym)});
  }
  r.check("scalar_curvature", er, r.tol);
  r.check("kretschmann", ek, r.tol);
  r.check("tensor_symmetries", es, bg.metric.d2 ? 1e-10 : 1e-6);
  r.notes.push_back(std::string("metric derivatives from ") + (bg.metric.d2 ? "exact hooks" : "stencils"));
  return r;
}

SuiteReport suite_spinor(const ScenarioConfig& cfg) {
  SuiteReport r = start("spinor", cfg, 1e-8);
  const auto k = kaluza::constants(cfg.m_e, cfg.e);
  const double m = k.m_e;

  // Free plane wave on a 16⁴ grid.
  const Eigen::Vector3d p(0.4, -0.3, 0.5);
  const double E = std::sqrt(m * m + p.squaredNorm());
  Spinor u;
  u << 1.0, 0.5, Complex(0.0, 0.3), -0.2;
  diracops::SpinorField wave = [&](const Point& x) -> Spinor {
    return u * std::exp(I * (-E * x[0] + p(0) * x[1] + p(1) * x[2] + p(2) * x[3]));
  };
  diracops::Lattice lat;
  lat.extent = {16, 16, 16, 16};
  lat.spacing = {0.015, 0.015, 0.015, 0.015};
  const auto grid = diracops::SpinorGrid::sample(lat, wave);
  auto flat = kaluza::minkowski_bg();
  flat.backend = cfg.backend;
  const auto sq = diracops::sqm_square_apply(flat, grid, m, k.e_charge);
  const auto cq = diracops::cqg_square_apply(flat, k, grid);
  const int margin = 2;
  r.check("plane_wave_sqm", sq.max_norm(margin) / grid.max_norm(margin), r.tol);
  r.check("plane_wave_cqg", cq.max_norm(margin) / grid.max_norm(margin), r.tol);
  r.notes.push_back("plane-wave residuals measured two sites in from the one-sided boundary closure");

  // g = 2: constant magnetic field along axis 3.
  const double h = 0.8;
  Eigen::Matrix4d f = Eigen::Matrix4d::Zero();
  f(1, 2) = h;
  f(2, 1) = -h;
  auto bfield = kaluza::constant_field_bg(f);
  bfield.backend = cfg.backend;
  diracops::Lattice small;
  small.extent = {8, 8, 8, 8};
  small.spacing = {0.1, 0.1, 0.1, 0.1};
  const auto g8 = diracops::SpinorGrid::sample(small, test_spinor);
  diracops::SquareOptions mo;
  mo.kind = diracops::SquareKind::minimal;
  mo.m_e = m;
  mo.e = k.e_charge;
  const auto full = diracops::sqm_square_apply(bfield, g8, m, k.e_charge);
  const auto minimal = diracops::square_apply(bfield, g8, mo);
  const diracops::CMat4 s3 = lorentz::sigma_block(3);
  double g2err = 0.0;
  for (std::size_t s = 0; s < g8.values.size(); ++s) {
    const Spinor d = full.values[s] - minimal.values[s];
    g2err = std::max(g2err, (d + k.e_charge * h * (s3 * g8.values[s])).norm() / g8.values[s].norm());
  }
  r.check("g_factor_difference", g2err, 1e-12);

  // Curvature commutator on Schwarzschild.
  auto schw = kaluza::schwarzschild_bg(cfg.r_s);
  schw.backend = cfg.backend;
  double comm = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Point x = sample_point(BackgroundKind::schwarzschild, cfg, 10, i);
    const auto c = diracops::curvature_commutator(schw, x, 0.0);
    comm = std::max(comm, c.max_abs_diff() / c.max_abs_closed());
  }
  r.check("curvature_commutator", comm, 1e-4);
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"algebra", "kk",        "madelung", "weyl-gauge",
                                                 "reduce",  "operator-diff", "curvature", "spinor"};
  return names;
}

SuiteReport run_suite(const std::string& name, const ScenarioConfig& cfg) {
  if (name == "algebra") return suite_algebra(cfg);
  if (name == "kk") return suite_kk(cfg);
  if (name == "madelung") return suite_madelung(cfg);
  if (name == "weyl-gauge") return suite_weyl_gauge(cfg);
  if (name == "reduce") return suite_reduce(cfg);
  if (name == "operator-diff") return suite_operator_diff(cfg);
  if (name == "curvature") return suite_curvature(cfg);
  if (name == "spinor") return suite_spinor(cfg);
  throw UsageError("unknown suite '" + name + "'");
}

}  // namespace weylkk::scenario
