#include <cmath>

#include "weylkk/kaluza.hpp"

namespace weylkk::kaluza {

using numkit::fd_derive;

Mat4 vierbein(const Background4& bg, const Point& x) {
  if (bg.metric.guard) bg.metric.guard(x);
  return bg.vierbein(x);
}

Mat4 inverse_vierbein(const Background4& bg, const Point& x) {
  const Mat4 e = vierbein(bg, x);
  Eigen::FullPivLU<Mat4> lu(e);
  if (!lu.isInvertible()) throw SingularPoint("singular vierbein");
  return lu.inverse();
}

Mat4Set tetrad_rotation(const Background4& bg, const Point& x) {
  const Mat4 e = vierbein(bg, x);
  const Mat4 einv = e.inverse();
  const auto gamma = geometry::christoffel(bg.metric, x, bg.backend);
  auto ef = [&bg](const Point& q) -> Mat4 { return vierbein(bg, q); };
  Mat4Set de;
  for (int mu = 0; mu < 4; ++mu) de[mu] = fd_derive(ef, x, mu, bg.backend);
  Mat4Set w;
  for (int mu = 0; mu < 4; ++mu) {
    // ∇_μ e^m_ν
    Mat4 nab;
    for (int m = 0; m < 4; ++m)
      for (int nu = 0; nu < 4; ++nu) {
        double v = de[mu](m, nu);
        for (int l = 0; l < 4; ++l) v -= gamma(l, mu, nu) * e(m, l);
        nab(m, nu) = v;
      }
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        double acc = 0.0;
        for (int nu = 0; nu < 4; ++nu) acc += einv(nu, n) * nab(m, nu);
        w[mu](m, n) = -lorentz::eta(n, n) * acc;
      }
  }
  return w;
}

Mat4Set spin_connection(const Background4& bg, const Point& x) {
  Mat4Set w = tetrad_rotation(bg, x);
  for (auto& m : w) m = -m;
  return w;
}

Mat4 field_strength(const Background4& bg, const Point& x) {
  if (bg.field) return bg.field(x);
  if (!bg.potential) return Mat4::Zero();
  auto af = [&bg](const Point& q) -> Vec4 { return bg.potential(q); };
  Mat4 f = Mat4::Zero();
  std::array<Vec4, 4> da;
  for (int mu = 0; mu < 4; ++mu) da[mu] = fd_derive(af, x, mu, bg.backend);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) f(mu, nu) = da[mu](nu) - da[nu](mu);
  return f;
}

Mat4Set field_gradient(const Background4& bg, const Point& x) {
  if (bg.field_deriv) return bg.field_deriv(x);
  Mat4Set d;
  if (!bg.potential && !bg.field) {
    for (auto& m : d) m.setZero();
    return d;
  }
  auto ff = [&bg](const Point& q) -> Mat4 { return field_strength(bg, q); };
  for (int r = 0; r < 4; ++r) d[r] = fd_derive(ff, x, r, bg.backend);
  return d;
}

Mat4Set covariant_field_gradient(const Background4& bg, const Point& x) {
  const Mat4 f = field_strength(bg, x);
  Mat4Set d = field_gradient(bg, x);
  const auto gamma = geometry::christoffel(bg.metric, x, bg.backend);
  for (int r = 0; r < 4; ++r)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        double v = 0.0;
        for (int l = 0; l < 4; ++l) v += gamma(l, r, mu) * f(l, nu) + gamma(l, r, nu) * f(mu, l);
        d[r](mu, nu) -= v;
      }
  return d;
}

Mat4 frame_field(const Background4& bg, const Point& x) {
  const Mat4 einv = inverse_vierbein(bg, x);
  return einv.transpose() * field_strength(bg, x) * einv;
}

Vec4 frame_potential(const Background4& bg, const Point& x) {
  if (!bg.potential) return Vec4::Zero();
  return inverse_vierbein(bg, x).transpose() * bg.potential(x);
}

double vierbein_residual(const Background4& bg, const Point& x) {
  const Mat4 e = vierbein(bg, x);
  const Mat4 g = bg.metric(x);
  return (e.transpose() * lorentz::eta_matrix() * e - g).cwiseAbs().maxCoeff();
}

Background4 diagonal_bg(const geometry::MetricField& m) {
  Background4 bg;
  bg.name = m.name;
  bg.metric = m;
  bg.vierbein = [m](const Point& x) -> Mat4 {
    const Eigen::MatrixXd g = m.g(x);
    Mat4 e = Mat4::Zero();
    for (int i = 0; i < 4; ++i) e(i, i) = std::sqrt(std::abs(g(i, i)));
    return e;
  };
  return bg;
}

Background4 minkowski_bg() {
  Background4 bg = diagonal_bg(geometry::minkowski(4));
  bg.vierbein = [](const Point&) -> Mat4 { return Mat4::Identity(); };
  return bg;
}

Background4 schwarzschild_bg(double r_s, double eps) { return diagonal_bg(geometry::schwarzschild(r_s, eps)); }

Background4 sphere_block_bg(double a) { return diagonal_bg(geometry::sphere_block(a)); }

Background4 einstein_static_bg(double a) { return diagonal_bg(geometry::einstein_static(a)); }

Background4 coulomb_bg(double q) {
  Background4 bg = minkowski_bg();
  bg.name = "coulomb";
  bg.metric.guard = [](const Point& x) {
    if (std::hypot(x[1], x[2], x[3]) < 1e-6) throw SingularPoint("Coulomb background sampled at the charge");
  };
  bg.potential = [q](const Point& x) -> Vec4 {
    const double r = std::hypot(x[1], x[2], x[3]);
    return Vec4(-q / r, 0.0, 0.0, 0.0);
  };
  bg.field = [q](const Point& x) -> Mat4 {
    const double r = std::hypot(x[1], x[2], x[3]);
    Mat4 f = Mat4::Zero();
    for (int a = 1; a <= 3; ++a) {
      f(a, 0) = q * x[a] / (r * r * r);
      f(0, a) = -f(a, 0);
    }
    return f;
  };
  bg.field_deriv = [q](const Point& x) -> Mat4Set {
    const double r = std::hypot(x[1], x[2], x[3]);
    const double r3 = r * r * r, r5 = r3 * r * r;
    Mat4Set d;
    for (auto& m : d) m.setZero();
    for (int b = 1; b <= 3; ++b)
      for (int a = 1; a <= 3; ++a) {
        double v = q * ((a == b ? 1.0 : 0.0) / r3 - 3.0 * x[a] * x[b] / r5);
        d[b](a, 0) = v;
        d[b](0, a) = -v;
      }
    return d;
  };
  return bg;
}

Background4 constant_field_bg(const Mat4& f) {
  if ((f + f.transpose()).cwiseAbs().maxCoeff() > 1e-14) throw DomainError("field tensor must be antisymmetric");
  Background4 bg = minkowski_bg();
  bg.name = "constant_F";
  bg.potential = [f](const Point& x) -> Vec4 {
    Vec4 xv(x[0], x[1], x[2], x[3]);
    return -0.5 * f * xv;
  };
  bg.field = [f](const Point&) -> Mat4 { return f; };
  bg.field_deriv = [](const Point&) -> Mat4Set {
    Mat4Set d;
    for (auto& m : d) m.setZero();
    return d;
  };
  return bg;
}

Background4 schwarzschild_coulomb_bg(double r_s, double q, double eps) {
  Background4 bg = schwarzschild_bg(r_s, eps);
  bg.name = "schwarzschild+coulomb";
  bg.potential = [q](const Point& x) -> Vec4 { return Vec4(-q / x[1], 0.0, 0.0, 0.0); };
  bg.field = [q](const Point& x) -> Mat4 {
    Mat4 f = Mat4::Zero();
    f(1, 0) = q / (x[1] * x[1]);
    f(0, 1) = -f(1, 0);
    return f;
  };
  bg.field_deriv = [q](const Point& x) -> Mat4Set {
    Mat4Set d;
    for (auto& m : d) m.setZero();
    d[1](1, 0) = -2.0 * q / (x[1] * x[1] * x[1]);
    d[1](0, 1) = -d[1](1, 0);
    return d;
  };
  return bg;
}

}  // namespace weylkk::kaluza
