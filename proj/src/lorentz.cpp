#include "weylkk/lorentz.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace weylkk::lorentz {

namespace {

const Complex I(0.0, 1.0);

int perm_sign(int a, int b, int c, int d) {
  int p[4] = {a, b, c, d};
  int s = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) s = -s;
    }
  return s;
}

std::string tuple(std::initializer_list<int> idx) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int i : idx) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << ')';
  return os.str();
}

double max_abs(const CMat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

RepSet build_spinor(Rep rep) {
  RepSet s;
  s.rep = rep;
  s.dim = 2;
  const auto sg = pauli();
  const double ksign = rep == Rep::left ? 1.0 : -1.0;
  for (auto& row : s.J)
    for (auto& m : row) m = CMat::Zero(2, 2);
  for (int a = 1; a <= 3; ++a) {
    CMat k = ksign * 0.5 * I * sg[a - 1];
    s.J[a][0] = k;
    s.J[0][a] = -k;
  }
  // J_ab = ½ ε_abc σ_c
  s.J[1][2] = 0.5 * sg[2];
  s.J[2][1] = -0.5 * sg[2];
  s.J[3][1] = 0.5 * sg[1];
  s.J[1][3] = -0.5 * sg[1];
  s.J[2][3] = 0.5 * sg[0];
  s.J[3][2] = -0.5 * sg[0];
  return s;
}

RepSet build_vector() {
  RepSet s;
  s.rep = Rep::vector4;
  s.dim = 4;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      CMat m = CMat::Zero(4, 4);
      for (int n = 0; n < 4; ++n)
        for (int r = 0; r < 4; ++r) {
          double v = (n == p ? eta(q, r) : 0.0) - (n == q ? eta(p, r) : 0.0);
          m(n, r) = -I * v;
        }
      s.J[p][q] = m;
    }
  return s;
}

RepSet build_dirac() {
  RepSet s;
  s.rep = Rep::dirac;
  s.dim = 4;
  const RepSet l = build_spinor(Rep::left);
  const RepSet r = build_spinor(Rep::right);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      CMat j = CMat::Zero(4, 4);
      j.topLeftCorner(2, 2) = l.J[m][n];
      j.bottomRightCorner(2, 2) = r.J[m][n];
      s.J[m][n] = j;
    }
  const auto sg = pauli();
  CMat g0 = CMat::Zero(4, 4);
  g0.topRightCorner(2, 2) = -CMat::Identity(2, 2);
  g0.bottomLeftCorner(2, 2) = -CMat::Identity(2, 2);
  s.gamma[0] = g0;
  for (int a = 1; a <= 3; ++a) {
    CMat g = CMat::Zero(4, 4);
    g.topRightCorner(2, 2) = sg[a - 1];
    g.bottomLeftCorner(2, 2) = -sg[a - 1];
    s.gamma[a] = g;
  }
  s.gamma5 = I * s.gamma[0] * s.gamma[1] * s.gamma[2] * s.gamma[3];
  return s;
}

}  // namespace

std::string rep_name(Rep r) {
  switch (r) {
    case Rep::vector4:
      return "vector4";
    case Rep::left:
      return "left";
    case Rep::right:
      return "right";
    case Rep::dirac:
      return "dirac";
  }
  return "unknown";
}

int pair_index(int m, int n) {
  if (m == n) return -1;
  if (m > n) std::swap(m, n);
  for (int a = 0; a < 6; ++a)
    if (kPairs[a].first == m && kPairs[a].second == n) return a;
  throw DomainError("pair index out of range");
}

double eta(int m, int n) {
  if (m != n) return 0.0;
  return m == 0 ? -1.0 : 1.0;
}

Mat4 eta_matrix() { return Eigen::Vector4d(-1.0, 1.0, 1.0, 1.0).asDiagonal(); }

double epsilon_upper(int a, int b, int c, int d) { return -static_cast<double>(perm_sign(a, b, c, d)); }

std::array<CMat, 3> pauli() {
  CMat s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, -I, I, 0;
  s3 << 1, 0, 0, -1;
  return {s1, s2, s3};
}

CMat sigma_block(int a) {
  const auto sg = pauli();
  CMat m = CMat::Zero(4, 4);
  m.topLeftCorner(2, 2) = sg[a - 1];
  m.bottomRightCorner(2, 2) = sg[a - 1];
  return m;
}

CMat alpha_block(int a) {
  const auto sg = pauli();
  CMat m = CMat::Zero(4, 4);
  m.topLeftCorner(2, 2) = sg[a - 1];
  m.bottomRightCorner(2, 2) = -sg[a - 1];
  return m;
}

const RepSet& rep_set(Rep r) {
  static const RepSet vec = build_vector();
  static const RepSet left = build_spinor(Rep::left);
  static const RepSet right = build_spinor(Rep::right);
  static const RepSet dirac = build_dirac();
  switch (r) {
    case Rep::vector4:
      return vec;
    case Rep::left:
      return left;
    case Rep::right:
      return right;
    case Rep::dirac:
      return dirac;
  }
  return dirac;
}

GroupPoint GroupPoint::rotation(int axis, double theta) {
  GroupPoint g;
  switch (axis) {
    case 1:
      g.y(5) = theta;
      break;
    case 2:
      g.y(4) = -theta;
      break;
    case 3:
      g.y(3) = theta;
      break;
    default:
      throw DomainError("rotation axis must be 1, 2 or 3");
  }
  return g;
}

GroupPoint GroupPoint::boost(int axis, double rapidity) {
  if (axis < 1 || axis > 3) throw DomainError("boost axis must be 1, 2 or 3");
  GroupPoint g;
  g.y(axis - 1) = -rapidity;
  return g;
}

std::array<Mat4, 6> real_generators() {
  std::array<Mat4, 6> t;
  for (int a = 0; a < 6; ++a) {
    const auto [m, n] = kPairs[a];
    Mat4 x = Mat4::Zero();
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q) x(p, q) = (p == m ? eta(n, q) : 0.0) - (p == n ? eta(m, q) : 0.0);
    t[a] = x;
  }
  return t;
}

CMat exp_map(const GroupPoint& g, Rep r) {
  const RepSet& rs = rep_set(r);
  CMat x = CMat::Zero(rs.dim, rs.dim);
  for (int a = 0; a < 6; ++a) x -= I * g.y(a) * rs.pair(a);
  return x.exp();
}

Mat4 lorentz_matrix(const Vec6& y) {
  static const auto t = real_generators();
  Mat4 x = Mat4::Zero();
  for (int a = 0; a < 6; ++a) x -= y(a) * t[a];
  return x.exp();
}

Mat4 lorentz_matrix(const GroupPoint& g) { return lorentz_matrix(g.y); }

Vec6 project_generators(const Mat4& m) {
  static const auto t = real_generators();
  Vec6 c;
  for (int a = 0; a < 6; ++a) c(a) = -(m.cwiseProduct(t[a])).sum() / 2.0;
  return c;
}

const std::array<Mat6, 6>& structure_constants() {
  static const std::array<Mat6, 6> f = [] {
    const auto t = real_generators();
    std::array<Mat6, 6> out;
    for (auto& m : out) m.setZero();
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        Vec6 c = -project_generators(t[a] * t[b] - t[b] * t[a]);
        for (int g = 0; g < 6; ++g) out[g](a, b) = c(g);
      }
    return out;
  }();
  return f;
}

Mat6 adjoint(const Mat4& d) {
  static const auto t = real_generators();
  const Mat4 dinv = d.inverse();
  Mat6 ad;
  for (int a = 0; a < 6; ++a) ad.col(a) = -project_generators(d * t[a] * dinv);
  return ad;
}

namespace {

double condition_number(const Mat6& m) {
  Eigen::JacobiSVD<Mat6> svd(m);
  const auto& s = svd.singularValues();
  return s(5) > 0.0 ? s(0) / s(5) : std::numeric_limits<double>::infinity();
}

void check_chart(MCForms& mc) {
  mc.condition = condition_number(mc.omega);
  if (!(mc.condition < kChartConditionLimit))
    throw ChartBreakdown("Maurer-Cartan matrix near singular (chart breakdown)", mc.condition);
}

}  // namespace

MCForms maurer_cartan_exact(const GroupPoint& y) {
  const auto& f = structure_constants();
  // (ad_X)_{γα} = Σ_δ x^δ f^γ_{δα}, x = −y.
  Mat6 ad = Mat6::Zero();
  for (int g = 0; g < 6; ++g)
    for (int a = 0; a < 6; ++a) {
      double acc = 0.0;
      for (int d = 0; d < 6; ++d) acc += -y.y(d) * f[g](d, a);
      ad(g, a) = acc;
    }
  // exp([[A, I], [0, 0]]) = [[e^A, φ(A)], [0, I]].
  Eigen::Matrix<double, 12, 12> block = Eigen::Matrix<double, 12, 12>::Zero();
  block.topLeftCorner<6, 6>() = ad;
  block.topRightCorner<6, 6>() = Mat6::Identity();
  Eigen::Matrix<double, 12, 12> e = block.exp();
  MCForms mc;
  mc.y = y;
  mc.omega = e.topRightCorner<6, 6>();
  check_chart(mc);
  return mc;
}

MCForms maurer_cartan(const GroupPoint& y, const DerivBackend& b) {
  numkit::Point p(std::span<const double>(y.y.data(), 6));
  auto dfun = [](const numkit::Point& q) -> Mat4 {
    Vec6 v;
    for (int a = 0; a < 6; ++a) v(a) = q[a];
    return lorentz_matrix(v);
  };
  const Mat4 dinv = lorentz_matrix(-y.y);
  MCForms mc;
  mc.y = y;
  for (int a = 0; a < 6; ++a) {
    Mat4 d = numkit::fd_derive(dfun, p, a, b);
    mc.omega.col(a) = project_generators(d * dinv);
  }
  check_chart(mc);
  return mc;
}

bool IdentityReport::all_pass() const {
  for (const auto& f : families)
    if (!f.pass) return false;
  return !families.empty();
}

IdentityReport identity_suite(double tol) {
  IdentityReport rep;
  rep.tolerance = tol;
  const RepSet& d = rep_set(Rep::dirac);
  const CMat id4 = CMat::Identity(4, 4);

  auto record = [&](IdentityFamily& fam, double res, const std::string& where) {
    ++fam.checks;
    fam.max_residual = std::max(fam.max_residual, res);
    if (!(res <= tol)) throw IdentityFailure(fam.name, where, res);
  };

  {
    IdentityFamily fam{"gamma_J_commutator"};
    for (int n = 0; n < 4; ++n)
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) {
          CMat jpq = d.upper(p, q);
          CMat lhs = d.gamma[n] * jpq - jpq * d.gamma[n];
          CMat rhs = -I * (eta(n, p) * d.gamma[q] - eta(n, q) * d.gamma[p]);
          record(fam, max_abs(lhs - rhs), tuple({n, p, q}));
        }
    fam.pass = true;
    rep.families.push_back(fam);
  }
  {
    IdentityFamily fam{"JJ_commutator"};
    for (Rep r : {Rep::vector4, Rep::left, Rep::right, Rep::dirac}) {
      const RepSet& s = rep_set(r);
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
          for (int rr = 0; rr < 4; ++rr)
            for (int ss = 0; ss < 4; ++ss) {
              CMat lhs = s.J[p][q] * s.J[rr][ss] - s.J[rr][ss] * s.J[p][q];
              CMat rhs = -I * (eta(p, ss) * s.J[q][rr] + eta(q, rr) * s.J[p][ss] - eta(p, rr) * s.J[q][ss] -
                               eta(q, ss) * s.J[p][rr]);
              record(fam, max_abs(lhs - rhs), rep_name(r) + tuple({p, q, rr, ss}));
            }
    }
    fam.pass = true;
    rep.families.push_back(fam);
  }
  {
    IdentityFamily fam{"gamma_gamma_product"};
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        CMat lhs = d.gamma[m] * d.gamma[n];
        CMat rhs = -eta(m, n) * id4 - 2.0 * I * d.upper(m, n);
        record(fam, max_abs(lhs - rhs), tuple({m, n}));
      }
    fam.pass = true;
    rep.families.push_back(fam);
  }
  {
    IdentityFamily fam{"JJ_anticommutator"};
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q)
        for (int m = 0; m < 4; ++m)
          for (int n = 0; n < 4; ++n) {
            CMat a = d.upper(p, q), b = d.upper(m, n);
            CMat lhs = a * b + b * a;
            CMat rhs = 0.5 * ((eta(p, m) * eta(q, n) - eta(p, n) * eta(q, m)) * id4 -
                              I * epsilon_upper(p, q, m, n) * d.gamma5);
            record(fam, max_abs(lhs - rhs), tuple({p, q, m, n}));
          }
    fam.pass = true;
    rep.families.push_back(fam);
  }
  {
    IdentityFamily fam{"casimir"};
    for (Rep r : {Rep::left, Rep::right, Rep::dirac}) {
      const RepSet& s = rep_set(r);
      CMat c = CMat::Zero(s.dim, s.dim);
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) c += 0.5 * s.J[m][n] * s.upper(m, n);
      record(fam, max_abs(c - 1.5 * s.identity()), rep_name(r));
      // J² − K² with J_a = ½ε_abc J_bc and K_a = J_a0.
      CMat j2 = CMat::Zero(s.dim, s.dim), k2 = j2;
      const int cyc[3][2] = {{2, 3}, {3, 1}, {1, 2}};
      for (int a = 0; a < 3; ++a) {
        CMat ja = s.J[cyc[a][0]][cyc[a][1]];
        CMat ka = s.J[a + 1][0];
        j2 += ja * ja;
        k2 += ka * ka;
      }
      record(fam, max_abs(j2 - k2 - 1.5 * s.identity()), rep_name(r) + " J^2-K^2");
    }
    fam.pass = true;
    rep.families.push_back(fam);
  }
  {
    IdentityFamily fam{"gamma5_block"};
    CMat expect = CMat::Zero(4, 4);
    expect.diagonal() << 1, 1, -1, -1;
    record(fam, max_abs(d.gamma5 - expect), "gamma5");
    record(fam, max_abs(d.gamma5 * d.gamma5 - id4), "gamma5^2");
    for (int m = 0; m < 4; ++m)
      record(fam, max_abs(d.gamma5 * d.gamma[m] + d.gamma[m] * d.gamma5), tuple({m}));
    fam.pass = true;
    rep.families.push_back(fam);
  }
  {
    IdentityFamily fam{"fj_decomposition"};
    // Deterministic antisymmetric samples exercising every component.
    for (int k = 0; k < 12; ++k) {
      Mat4 f = Mat4::Zero();
      for (int a = 0; a < 6; ++a) {
        const auto [m, n] = kPairs[a];
        double v = (k == a) ? 1.0 : (k == a + 6 ? -0.5 : 0.25 * ((a + k) % 3) - 0.125 * a);
        f(m, n) = v;
        f(n, m) = -v;
      }
      record(fam, max_abs(fj_matrix(f) - fj_reconstruct(fj_decompose(f))), tuple({k}));
    }
    fam.pass = true;
    rep.families.push_back(fam);
  }
  {
    IdentityFamily fam{"generator_tables"};
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        record(fam, max_abs(d.J[m][n] + d.J[n][m]), "antisym" + tuple({m, n}));
        const RepSet& l = rep_set(Rep::left);
        const RepSet& r = rep_set(Rep::right);
        // boosts flip sign between chiralities, rotations agree
        double s = (m == 0 || n == 0) ? -1.0 : 1.0;
        record(fam, max_abs(l.J[m][n] - s * r.J[m][n]), "left/right" + tuple({m, n}));
      }
    for (int a = 1; a <= 3; ++a) {
      record(fam, max_abs(d.J[0][a] + 0.5 * I * alpha_block(a)), "J0a" + tuple({a}));
      record(fam, max_abs(d.J[a][0] - 0.5 * I * alpha_block(a)), "Ja0" + tuple({a}));
    }
    record(fam, max_abs(d.J[1][2] - 0.5 * sigma_block(3)), "J12");
    record(fam, max_abs(d.J[1][3] + 0.5 * sigma_block(2)), "J13");
    record(fam, max_abs(d.J[2][3] - 0.5 * sigma_block(1)), "J23");
    fam.pass = true;
    rep.families.push_back(fam);
  }
  return rep;
}

FJParts fj_decompose(const Mat4& f) {
  const double scale = std::max(1.0, f.cwiseAbs().maxCoeff());
  if ((f + f.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw DomainError("fj_decompose requires an antisymmetric field tensor");
  FJParts p;
  p.sigma_part << f(2, 3), f(3, 1), f(1, 2);
  p.alpha_part << f(1, 0), f(2, 0), f(3, 0);
  return p;
}

CMat fj_matrix(const Mat4& f) {
  const RepSet& d = rep_set(Rep::dirac);
  CMat out = CMat::Zero(4, 4);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      if (f(m, n) != 0.0) out += f(m, n) * d.upper(m, n);
  return out;
}

CMat fj_reconstruct(const FJParts& parts) {
  CMat out = CMat::Zero(4, 4);
  for (int a = 1; a <= 3; ++a)
    out += parts.sigma_part(a - 1) * sigma_block(a) - I * parts.alpha_part(a - 1) * alpha_block(a);
  return out;
}

}  // namespace weylkk::lorentz
