#include "weylkk/kaluza.hpp"

#include <cmath>

namespace weylkk::kaluza {

using lorentz::GroupPoint;
using lorentz::kPairs;
using numkit::fd_derive;

KKConstants constants(double m_e, double e) {
  if (!(m_e > 0.0)) throw DomainError("electron mass must be positive");
  KKConstants k;
  k.m_e = m_e;
  k.lambda_C = 1.0 / m_e;
  k.e_charge = e;
  k.gamma = geometry::gamma_const(11);
  const double g2 = k.gamma * k.gamma;
  k.lambda0 = std::sqrt(1.0 + 4.0 * g2) / (k.gamma * m_e);
  k.lambda_e = e * k.lambda0;
  k.lambda_L = std::sqrt(1.5) * k.gamma * k.lambda0;
  return k;
}

Point spacetime_part(const Point& q) {
  if (q.dim() != 11) throw DomainError("expected an 11-D point");
  return Point{q[0], q[1], q[2], q[3]};
}

GroupPoint fiber_part(const Point& q) {
  GroupPoint y;
  for (int a = 0; a < 6; ++a) y.y(a) = q[4 + a];
  return y;
}

Point make_point11(const Point& x, const GroupPoint& y, double z) {
  Point q(11);
  for (int i = 0; i < 4; ++i) q[i] = x[i];
  for (int a = 0; a < 6; ++a) q[4 + a] = y.y(a);
  q[10] = z;
  return q;
}

std::string signature_name(FiberSignature s) {
  return s == FiberSignature::rotations_positive ? "rotations_positive" : "boosts_positive";
}

Mat11 eta11(FiberSignature s) {
  Vec11 d;
  const double boost = s == FiberSignature::rotations_positive ? -1.0 : 1.0;
  d << -1, 1, 1, 1, boost, boost, boost, -boost, -boost, -boost, 1;
  return d.asDiagonal();
}

namespace {

// Assemble the frame from precomputed pieces; rows 4..9 carry λ_L(ds^β + ω^β).
Mat11 assemble(const KKConstants& k, const Mat4& e, const Mat4Set& omega, const Eigen::Matrix<double, 6, 10>& ds,
               const Vec4& a, const Mat4& f_frame) {
  Mat11 fr = Mat11::Zero();
  fr.topLeftCorner<4, 4>() = e;
  for (int b = 0; b < 6; ++b) {
    const auto [m, n] = kPairs[b];
    for (int i = 0; i < 10; ++i) fr(4 + b, i) = k.lambda_L * ds(b, i);
    for (int mu = 0; mu < 4; ++mu) fr(4 + b, mu) += k.lambda_L * omega[mu](m, n);
  }
  fr(10, 10) = k.lambda0;
  for (int mu = 0; mu < 4; ++mu) fr(10, mu) = k.lambda_e * a(mu);
  for (int b = 0; b < 6; ++b) {
    const auto [m, n] = kPairs[b];
    fr.row(10) += k.lambda_e * k.lambda_L * f_frame(m, n) * fr.row(4 + b);
  }
  return fr;
}

}  // namespace

Frame11 frame(const Background4& bg, const KKConstants& k, const Point& q, FiberSignature s) {
  const Point x = spacetime_part(q);
  const GroupPoint y = fiber_part(q);
  const Mat4 e = vierbein(bg, x);
  Eigen::FullPivLU<Mat4> lu(e);
  if (!lu.isInvertible()) throw SingularPoint("singular vierbein");
  const Mat4Set omega = spin_connection(bg, x);
  const auto mc = lorentz::maurer_cartan_exact(y);
  Eigen::Matrix<double, 6, 10> ds = Eigen::Matrix<double, 6, 10>::Zero();
  ds.rightCols<6>() = mc.omega;
  const Vec4 a = bg.potential ? bg.potential(x) : Vec4::Zero();
  const Mat4 f = frame_field(bg, x);

  Frame11 out;
  out.q = q;
  out.e = assemble(k, e, omega, ds, a, f);
  Eigen::FullPivLU<Mat11> lu11(out.e);
  if (!lu11.isInvertible()) throw SingularPoint("singular 11-D frame");
  out.e_inv = lu11.inverse();
  out.eta11 = eta11(s);
  return out;
}

Mat11 metric11(const Background4& bg, const KKConstants& k, const Point& q, FiberSignature s) {
  const Frame11 fr = frame(bg, k, q, s);
  Mat11 g = fr.e.transpose() * fr.eta11 * fr.e;
  return 0.5 * (g + g.transpose());
}

geometry::MetricField metric_field11(const Background4& bg, const KKConstants& k, FiberSignature s) {
  geometry::MetricField m;
  m.name = "kk11:" + bg.name;
  m.dim = 11;
  m.signature = {4, 7};
  m.g = [bg, k, s](const Point& q) -> Eigen::MatrixXd { return metric11(bg, k, q, s); };
  if (bg.metric.guard) {
    auto guard4 = bg.metric.guard;
    m.guard = [guard4](const Point& q) { guard4(spacetime_part(q)); };
  }
  return m;
}

RbarTerms invariants(const Background4& bg, const Point& x) {
  const auto geo = geometry::curvature(bg.metric, x, bg.backend);
  const Mat4 ginv = geo.ginv;
  const Mat4 f = field_strength(bg, x);
  const Mat4 fup = ginv * f * ginv;
  const auto& R = geo.riemann_lower;
  RbarTerms t;
  t.r4 = geo.scalar;
  t.kretschmann = geo.kretschmann;
  t.ff = f.cwiseProduct(fup).sum();

  // P_κλ = F^μν R_μνκλ
  Mat4 p = Mat4::Zero();
  for (int kk = 0; kk < 4; ++kk)
    for (int l = 0; l < 4; ++l) {
      double acc = 0.0;
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) acc += fup(mu, nu) * R(mu, nu, kk, l);
      p(kk, l) = acc;
    }
  const Mat4 pup = ginv * p * ginv;
  t.ffr = fup.cwiseProduct(p).sum();
  t.ffrr = pup.cwiseProduct(p).sum();

  const Mat4Set dF = covariant_field_gradient(bg, x);
  double acc = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int r2 = 0; r2 < 4; ++r2) {
      if (ginv(r, r2) == 0.0) continue;
      const Mat4 up = ginv * dF[r2] * ginv;
      acc += ginv(r, r2) * dF[r].cwiseProduct(up).sum();
    }
  t.grad_f2 = acc;
  return t;
}

RbarTerms rbar_closed(const Background4& bg, const KKConstants& k, const Point& x) {
  RbarTerms t = invariants(bg, x);
  const double le2 = k.lambda_e * k.lambda_e, ll2 = k.lambda_L * k.lambda_L;
  t.fiber = 6.0 / ll2;
  t.total = t.r4 + t.fiber - 0.75 * le2 * t.ff - ll2 / 8.0 * t.kretschmann +
            le2 * ll2 / 8.0 * (t.ffr * 2.0 - ll2 * t.ffrr - 2.0 * t.grad_f2);
  return t;
}

DerivBackend oracle_backend() {
  DerivBackend b;
  b.scheme = numkit::Scheme::richardson;
  b.step = 1e-2;
  b.scale_with_coordinate = true;
  return b;
}

double rbar_bruteforce(const Background4& bg, const KKConstants& k, const Point& q, FiberSignature s,
                       const DerivBackend& b) {
  if (fiber_part(q).norm() > 0.5 + 1e-12)
    throw DomainError("fiber point outside the |y| <= 0.5 oracle region");
  return geometry::curvature(metric_field11(bg, k, s), q, b).scalar;
}

Vec11 directional_derivs(const Frame11& fr, const std::function<double(const Point&)>& f, const DerivBackend& b) {
  Vec11 grad;
  for (int i = 0; i < 11; ++i) grad(i) = fd_derive(f, fr.q, i, b);
  return fr.e_inv.transpose() * grad;
}

Background4 z_gauge(const Background4& bg, const KKConstants& k, std::function<double(const Point&)> chi) {
  if (k.lambda_e == 0.0) throw DomainError("z gauge shift needs a nonzero charge");
  Background4 out = bg;
  out.name = bg.name + "+zgauge";
  const double ratio = k.lambda0 / k.lambda_e;
  auto base = bg.potential;
  const DerivBackend b = bg.backend;
  out.potential = [base, chi, ratio, b](const Point& x) -> Vec4 {
    Vec4 a = base ? base(x) : Vec4::Zero();
    for (int mu = 0; mu < 4; ++mu) a(mu) -= ratio * fd_derive(chi, x, mu, b);
    return a;
  };
  return out;
}

Mat11 ygauge_metric(const Background4& bg, const KKConstants& k,
                    const std::function<lorentz::Vec6(const Point&)>& ybar, const Point& q, FiberSignature s) {
  Background4 rot = bg;
  auto base = bg.vierbein;
  rot.vierbein = [base, ybar](const Point& x) -> Mat4 { return lorentz::lorentz_matrix(ybar(x)) * base(x); };
  rot.name = bg.name + "+ygauge";

  const Point x = spacetime_part(q);
  auto dprime = [ybar](const Point& p) -> Mat4 {
    const Point xx{p[0], p[1], p[2], p[3]};
    lorentz::Vec6 y;
    for (int a = 0; a < 6; ++a) y(a) = p[4 + a];
    return lorentz::lorentz_matrix(ybar(xx)) * lorentz::lorentz_matrix(y);
  };
  Point q10(10);
  for (int i = 0; i < 10; ++i) q10[i] = q[i];
  const Mat4 dinv = dprime(q10).inverse();
  Eigen::Matrix<double, 6, 10> ds;
  for (int i = 0; i < 10; ++i) ds.col(i) = lorentz::project_generators(fd_derive(dprime, q10, i, bg.backend) * dinv);

  const Mat4 e = vierbein(rot, x);
  const Mat4Set omega = spin_connection(rot, x);
  const Vec4 a = bg.potential ? bg.potential(x) : Vec4::Zero();
  const Mat4 einv = e.inverse();
  const Mat4 f = einv.transpose() * field_strength(bg, x) * einv;
  const Mat11 fr = assemble(k, e, omega, ds, a, f);
  Mat11 g = fr.transpose() * eta11(s) * fr;
  return 0.5 * (g + g.transpose());
}

}  // namespace weylkk::kaluza
