#include "weylkk/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace weylkk::geometry {

using numkit::Variance;
using numkit::fd_derive;
using numkit::fd_second;

namespace {

constexpr Variance U = Variance::upper;
constexpr Variance L = Variance::lower;

void check_invertible(const Eigen::MatrixXd& g, const Point& p, const std::string& name) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(g);
  if (!lu.isInvertible() || !std::isfinite(g.norm())) {
    throw SingularPoint("metric '" + name + "' is singular at the sampled point");
  }
  (void)p;
}

}  // namespace

Eigen::MatrixXd MetricField::operator()(const Point& p) const {
  if (p.dim() != dim) throw DomainError("point dimension does not match metric '" + name + "'");
  if (guard) guard(p);
  return g(p);
}

MetricJet metric_jet(const MetricField& m, const Point& p, const DerivBackend& b, bool second) {
  MetricJet jet;
  jet.g = m(p);
  check_invertible(jet.g, p, m.name);
  jet.ginv = jet.g.inverse();
  const int n = m.dim;
  auto gf = [&m](const Point& q) -> Eigen::MatrixXd { return m(q); };
  if (m.d1) {
    jet.dg = m.d1(p);
  } else {
    jet.dg.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) jet.dg[static_cast<std::size_t>(k)] = fd_derive(gf, p, k, b);
  }
  if (!second) return jet;
  if (m.d2) {
    jet.ddg = m.d2(p);
  } else {
    jet.ddg.assign(static_cast<std::size_t>(n * n), Eigen::MatrixXd());
    for (int k = 0; k < n; ++k) {
      for (int l = k; l < n; ++l) {
        Eigen::MatrixXd v = fd_second(gf, p, k, l, b);
        jet.ddg[static_cast<std::size_t>(k * n + l)] = v;
        jet.ddg[static_cast<std::size_t>(l * n + k)] = v;
      }
    }
  }
  return jet;
}

namespace {

// Γ_{s,jk} with s the lowered slot.
std::vector<double> lower_christoffel(const MetricJet& jet) {
  const int n = static_cast<int>(jet.g.rows());
  std::vector<double> out(static_cast<std::size_t>(n * n * n));
  for (int s = 0; s < n; ++s)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        out[static_cast<std::size_t>((s * n + j) * n + k)] =
            0.5 * (jet.dg[j](s, k) + jet.dg[k](s, j) - jet.dg[s](j, k));
  return out;
}

}  // namespace

RealArray christoffel_from_jet(const MetricJet& jet) {
  const int n = static_cast<int>(jet.g.rows());
  const auto low = lower_christoffel(jet);
  RealArray gamma({n, n, n}, {U, L, L});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        double acc = 0.0;
        for (int s = 0; s < n; ++s) acc += jet.ginv(i, s) * low[static_cast<std::size_t>((s * n + j) * n + k)];
        gamma(i, j, k) = acc;
        gamma(i, k, j) = acc;
      }
  return gamma;
}

RealArray christoffel(const MetricField& m, const Point& p, const DerivBackend& b) {
  return christoffel_from_jet(metric_jet(m, p, b, false));
}

RealArray riemann_from_connection(const RealArray& gamma, const RealArray& dgamma) {
  const int n = gamma.shape()[0];
  RealArray r({n, n, n, n}, {U, L, L, L});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          double v = dgamma(i, j, l, k) - dgamma(i, j, k, l);
          for (int s = 0; s < n; ++s) v += gamma(i, s, k) * gamma(s, j, l) - gamma(i, s, l) * gamma(s, j, k);
          r(i, j, k, l) = v;
          r(i, j, l, k) = -v;
        }
  return r;
}

double connection_scalar(const RealArray& riemann, const Eigen::MatrixXd& ginv) {
  const int n = riemann.shape()[0];
  double acc = 0.0;
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      if (ginv(j, l) == 0.0) continue;
      double ric = 0.0;
      for (int k = 0; k < n; ++k) ric += riemann(k, j, k, l);
      acc += ginv(j, l) * ric;
    }
  return acc;
}

GeometrySample curvature_from_jet(const Point& p, const MetricJet& jet) {
  if (jet.ddg.empty()) throw DomainError("curvature requires second metric derivatives");
  const int n = static_cast<int>(jet.g.rows());
  GeometrySample s;
  s.point = p;
  s.g = jet.g;
  s.ginv = jet.ginv;
  s.christoffel = christoffel_from_jet(jet);
  const auto low = lower_christoffel(jet);

  // ∂_l Γ^i_{jk}, stored with the derivative slot last.
  RealArray dgamma({n, n, n, n}, {U, L, L, L});
  std::vector<Eigen::MatrixXd> dginv(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) dginv[l] = -jet.ginv * jet.dg[l] * jet.ginv;
  std::vector<double> dlow(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        for (int sidx = 0; sidx < n; ++sidx) {
          dlow[sidx] = 0.5 * (jet.ddg[l * n + j](sidx, k) + jet.ddg[l * n + k](sidx, j) -
                              jet.ddg[l * n + sidx](j, k));
        }
        for (int i = 0; i < n; ++i) {
          double acc = 0.0;
          for (int sidx = 0; sidx < n; ++sidx)
            acc += dginv[l](i, sidx) * low[static_cast<std::size_t>((sidx * n + j) * n + k)] +
                   jet.ginv(i, sidx) * dlow[sidx];
          dgamma(i, j, k, l) = acc;
          dgamma(i, k, j, l) = acc;
        }
      }
  }
  s.riemann = riemann_from_connection(s.christoffel, dgamma);

  s.riemann_lower = RealArray({n, n, n, n}, {L, L, L, L});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double acc = 0.0;
          for (int a = 0; a < n; ++a) acc += jet.g(i, a) * s.riemann(a, j, k, l);
          s.riemann_lower(i, j, k, l) = acc;
        }

  s.ricci = RealArray({n, n}, {L, L});
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += s.riemann(k, j, k, l);
      s.ricci(j, l) = acc;
    }
  s.scalar = 0.0;
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) s.scalar += jet.ginv(j, l) * s.ricci(j, l);

  // Raise all four slots one at a time.
  auto raise = [&](const RealArray& a, int slot) {
    RealArray out = a;
    for (auto& v : out.data()) v = 0.0;
    std::vector<int> idx(4), src(4);
    for (idx[0] = 0; idx[0] < n; ++idx[0])
      for (idx[1] = 0; idx[1] < n; ++idx[1])
        for (idx[2] = 0; idx[2] < n; ++idx[2])
          for (idx[3] = 0; idx[3] < n; ++idx[3]) {
            double acc = 0.0;
            src = idx;
            for (int t = 0; t < n; ++t) {
              double gi = jet.ginv(idx[slot], t);
              if (gi == 0.0) continue;
              src[slot] = t;
              acc += gi * a.at(src);
            }
            out.at(idx) = acc;
          }
    return out;
  };
  RealArray up = s.riemann_lower;
  for (int slot = 0; slot < 4; ++slot) up = raise(up, slot);
  double k = 0.0;
  auto lo = s.riemann_lower.data();
  auto hi = up.data();
  for (std::size_t i = 0; i < lo.size(); ++i) k += lo[i] * hi[i];
  s.kretschmann = k;
  return s;
}

GeometrySample curvature(const MetricField& m, const Point& p, const DerivBackend& b) {
  return curvature_from_jet(p, metric_jet(m, p, b, true));
}

double SymmetryResiduals::max() const {
  return std::max({christoffel_sym, antisym_kl, antisym_ij, pair_sym, bianchi});
}

SymmetryResiduals symmetry_residuals(const GeometrySample& s) {
  const int n = s.christoffel.shape()[0];
  SymmetryResiduals r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        r.christoffel_sym = std::max(r.christoffel_sym, std::abs(s.christoffel(i, j, k) - s.christoffel(i, k, j)));
  const auto& R = s.riemann_lower;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          r.antisym_kl = std::max(r.antisym_kl, std::abs(R(i, j, k, l) + R(i, j, l, k)));
          r.antisym_ij = std::max(r.antisym_ij, std::abs(R(i, j, k, l) + R(j, i, k, l)));
          r.pair_sym = std::max(r.pair_sym, std::abs(R(i, j, k, l) - R(k, l, i, j)));
          r.bianchi = std::max(r.bianchi, std::abs(R(i, j, k, l) + R(i, k, l, j) + R(i, l, j, k)));
        }
  return r;
}

namespace {

int perm_sign(int a, int b, int c, int d) {
  int p[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) sign = -sign;
    }
  return sign;
}

}  // namespace

double dual_scalar(const GeometrySample& s) {
  const int n = s.christoffel.shape()[0];
  if (n != 4) throw DomainError("dual_scalar is defined in four dimensions");
  const double vol = std::sqrt(std::abs(s.g.determinant()));
  // R^{klmn} with indices raised from R_{klmn}.
  RealArray up = s.riemann_lower;
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l)
      for (int m = 0; m < 4; ++m)
        for (int q = 0; q < 4; ++q) {
          double acc = 0.0;
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
              for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                  double w = s.ginv(k, a) * s.ginv(l, b) * s.ginv(m, c) * s.ginv(q, d);
                  if (w != 0.0) acc += w * s.riemann_lower(a, b, c, d);
                }
          up(k, l, m, q) = acc;
        }
  double acc = 0.0;
  for (int m = 0; m < 4; ++m)
    for (int q = 0; q < 4; ++q)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          int sg = perm_sign(m, q, k, l);
          if (sg != 0) acc += sg * vol * up(k, l, m, q);
        }
  return 0.5 * acc;
}

double dual_scalar(const MetricField& m, const Point& p, const DerivBackend& b) {
  return dual_scalar(curvature(m, p, b));
}

std::pair<int, int> signature_of(const Eigen::MatrixXd& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (g + g.transpose()), Eigen::EigenvaluesOnly);
  int neg = 0, pos = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) < 0) ++neg;
    else if (es.eigenvalues()(i) > 0) ++pos;
  }
  return {neg, pos};
}

// ---------------------------------------------------------------------------

double gamma_const(int N) {
  if (N < 3) throw DomainError("gamma_const requires N >= 3");
  return std::sqrt((N - 2.0) / (4.0 * (N - 1.0)));
}

Eigen::VectorXd weyl_vector(const ScalarField& rho, const Point& p, int N, const DerivBackend& b) {
  if (N < 3) throw DomainError("Weyl vector requires N >= 3");
  if (!(rho(p) > 0.0)) throw DomainError("density must be positive");
  auto lnrho = [&rho](const Point& q) {
    double v = rho(q);
    if (!(v > 0.0)) throw DomainError("density must be positive");
    return std::log(v);
  };
  Eigen::VectorXd phi(p.dim());
  for (int i = 0; i < p.dim(); ++i) phi(i) = fd_derive(lnrho, p, i, b) / (N - 2.0);
  return phi;
}

RealArray weyl_connection(const MetricField& m, const CovectorField& phi, const Point& p,
                          const DerivBackend& b) {
  const MetricJet jet = metric_jet(m, p, b, false);
  RealArray gamma = christoffel_from_jet(jet);
  const int n = m.dim;
  const Eigen::VectorXd f = phi(p);
  const Eigen::VectorXd fup = jet.ginv * f;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double add = -jet.g(j, k) * fup(i);
        if (i == j) add += f(k);
        if (i == k) add += f(j);
        gamma(i, j, k) += add;
      }
  return gamma;
}

RealArray weyl_connection(const MetricField& m, const ScalarField& rho, const Point& p,
                          const DerivBackend& b) {
  const int n = m.dim;
  CovectorField phi = [&rho, n, b](const Point& q) { return weyl_vector(rho, q, n, b); };
  return weyl_connection(m, phi, p, b);
}

double weyl_connection_scalar(const MetricField& m, const CovectorField& phi, const Point& p,
                              const DerivBackend& b) {
  const int n = m.dim;
  RealArray gamma = weyl_connection(m, phi, p, b);
  RealArray dgamma({n, n, n, n}, {Variance::upper, Variance::lower, Variance::lower, Variance::lower});
  auto conn = [&](const Point& q) { return weyl_connection(m, phi, q, b); };
  for (int l = 0; l < n; ++l) {
    RealArray d = fd_derive(conn, p, l, b);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) dgamma(i, j, k, l) = d(i, j, k);
  }
  RealArray riem = riemann_from_connection(gamma, dgamma);
  return connection_scalar(riem, m(p).inverse());
}

double weyl_connection_scalar(const MetricField& m, const ScalarField& rho, const Point& p,
                              const DerivBackend& b) {
  const int n = m.dim;
  // The inner Weyl vector uses a finer step so the outer stencil dominates the error.
  DerivBackend inner = b;
  inner.step = b.step * 0.5;
  CovectorField phi = [&rho, n, inner](const Point& q) { return weyl_vector(rho, q, n, inner); };
  return weyl_connection_scalar(m, phi, p, b);
}

namespace {

template <class V, class F>
V laplace_impl(const MetricJet& jet, const RealArray& gamma, F& f, const Point& p, const DerivBackend& b) {
  const int n = static_cast<int>(jet.g.rows());
  std::vector<V> grad(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) grad[k] = fd_derive(f, p, k, b);
  V acc{};
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double gij = jet.ginv(i, j);
      if (gij == 0.0) continue;
      V second = fd_second(f, p, i, j, b);
      V conn{};
      for (int k = 0; k < n; ++k) conn += gamma(k, i, j) * grad[k];
      acc += (i == j ? 1.0 : 2.0) * gij * (second - conn);
    }
  return acc;
}

}  // namespace

double laplace_beltrami(const MetricJet& jet, const RealArray& gamma, const ScalarField& f, const Point& p,
                        const DerivBackend& b) {
  return laplace_impl<double>(jet, gamma, f, p, b);
}

Complex laplace_beltrami(const MetricJet& jet, const RealArray& gamma, const ComplexField& f, const Point& p,
                         const DerivBackend& b) {
  return laplace_impl<Complex>(jet, gamma, f, p, b);
}

double laplace_beltrami(const MetricField& m, const ScalarField& f, const Point& p, const DerivBackend& b) {
  MetricJet jet = metric_jet(m, p, b, false);
  return laplace_beltrami(jet, christoffel_from_jet(jet), f, p, b);
}

Complex laplace_beltrami(const MetricField& m, const ComplexField& f, const Point& p, const DerivBackend& b) {
  MetricJet jet = metric_jet(m, p, b, false);
  return laplace_beltrami(jet, christoffel_from_jet(jet), f, p, b);
}

WeylScalar weyl_scalar(const MetricField& m, const ScalarField& rho, const Point& p, const DerivBackend& b) {
  if (!(rho(p) > 0.0)) throw DomainError("density must be positive");
  WeylScalar out;
  out.riemann_scalar = curvature(m, p, b).scalar;
  ScalarField sqrt_rho = [&rho](const Point& q) {
    double v = rho(q);
    if (!(v > 0.0)) throw DomainError("density must be positive");
    return std::sqrt(v);
  };
  const double g2 = gamma_const(m.dim) * gamma_const(m.dim);
  out.bohm = laplace_beltrami(m, sqrt_rho, p, b) / sqrt_rho(p) / g2;
  out.r_weyl = out.riemann_scalar - out.bohm;
  return out;
}

}  // namespace weylkk::geometry
