#include "weylkk/diracops.hpp"

#include <cmath>

#include "weylkk/errors.hpp"

namespace weylkk::diracops {

using kaluza::Mat4;
using kaluza::Mat4Set;
using lorentz::Rep;
using lorentz::rep_set;
using numkit::fd_derive;
using numkit::fd_second;

namespace {

const Complex I(0.0, 1.0);

const CMat4& dirac_J(int p, int q) {
  static const auto table = [] {
    std::array<std::array<CMat4, 4>, 4> t;
    const auto& d = rep_set(Rep::dirac);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) t[a][b] = d.lower(a, b);
    return t;
  }();
  return table[p][q];
}

using ConnPack = Eigen::Matrix<Complex, 4, 16>;

ConnPack pack(const std::array<CMat4, 4>& c) {
  ConnPack out;
  for (int nu = 0; nu < 4; ++nu) out.middleCols<4>(4 * nu) = c[nu];
  return out;
}

// Per-site data shared by the grid and pointwise operators.
struct OperatorLocal {
  SpinorLocal s;
  CMat4 fj = CMat4::Zero();
  double r4 = 0.0;
  double V = 0.0;
};

OperatorLocal operator_local(const Background4& bg, const Point& x, const SquareOptions& o) {
  OperatorLocal l;
  l.s = spinor_local(bg, x, o.e);
  if (o.kind != SquareKind::minimal) {
    l.fj = fj_term(bg, x);
    l.r4 = geometry::curvature(bg.metric, x, bg.backend).scalar;
  }
  if (o.kind == SquareKind::cqg) l.V = potential_V(bg, o.k, x).V;
  return l;
}

double curvature_coupling(const SquareOptions& o) {
  switch (o.kind) {
    case SquareKind::sqm:
      return 0.5;
    case SquareKind::cqg:
      return o.k.gamma * o.k.gamma;
    case SquareKind::minimal:
      return 0.0;
  }
  return 0.0;
}

// g^{μν}(𝒟_μ𝒟_νψ − Γ^λ_{μν}𝒟_λψ) from ψ, ∂ψ and ∂∂ψ at one point.
Spinor box_local(const SpinorLocal& l, const Spinor& psi, const std::array<Spinor, 4>& d1,
                 const std::array<std::array<Spinor, 4>, 4>& d2) {
  std::array<Spinor, 4> cov;
  for (int mu = 0; mu < 4; ++mu) cov[mu] = d1[mu] + l.conn[mu] * psi;
  Spinor out = Spinor::Zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const double gi = l.ginv(mu, nu);
      if (gi == 0.0) continue;
      Spinor t = d2[mu][nu] + l.dconn[mu][nu] * psi + l.conn[nu] * d1[mu] + l.conn[mu] * cov[nu];
      for (int lam = 0; lam < 4; ++lam) {
        const double g = l.christoffel(lam, mu, nu);
        if (g != 0.0) t -= g * cov[lam];
      }
      out += gi * t;
    }
  return out;
}

Spinor square_local(const OperatorLocal& l, const SquareOptions& o, const Spinor& psi, const Spinor& box) {
  const double mass = o.m_e * o.m_e + curvature_coupling(o) * l.r4 - l.V;
  Spinor out = -box + mass * psi;
  if (o.kind != SquareKind::minimal) out -= o.e * (l.fj * psi);
  return out;
}

struct GridDerivs {
  std::array<SpinorGrid, 4> d1;
  std::array<std::array<SpinorGrid, 4>, 4> d2;
};

GridDerivs grid_derivs(const SpinorGrid& g, bool second) {
  GridDerivs d;
  for (int mu = 0; mu < 4; ++mu) d.d1[mu] = grid_derivative(g, mu);
  if (!second) return d;
  for (int mu = 0; mu < 4; ++mu) {
    d.d2[mu][mu] = grid_second_derivative(g, mu);
    for (int nu = mu + 1; nu < 4; ++nu) {
      d.d2[mu][nu] = grid_derivative(d.d1[mu], nu);
      d.d2[nu][mu] = d.d2[mu][nu];
    }
  }
  return d;
}

std::array<bool, 4> merged_flags(const GridDerivs& d) {
  std::array<bool, 4> f{};
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < 4; ++a) f[a] = f[a] || d.d1[mu].one_sided[a];
  return f;
}

SpinorGrid empty_like(const SpinorGrid& g) {
  SpinorGrid out;
  out.lattice = g.lattice;
  out.values.assign(g.values.size(), Spinor::Zero());
  return out;
}

}  // namespace

std::array<CMat4, 4> spinor_connection(const Background4& bg, const Point& x, double e) {
  const Mat4Set w = kaluza::spin_connection(bg, x);
  const kaluza::Vec4 a = bg.potential ? bg.potential(x) : kaluza::Vec4::Zero();
  std::array<CMat4, 4> c;
  for (int mu = 0; mu < 4; ++mu) {
    CMat4 m = CMat4::Zero();
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q)
        if (w[mu](p, q) != 0.0) m += (-0.5 * I * w[mu](p, q)) * dirac_J(p, q);
    m -= I * e * a(mu) * CMat4::Identity();
    c[mu] = m;
  }
  return c;
}

SpinorLocal spinor_local(const Background4& bg, const Point& x, double e) {
  SpinorLocal l;
  const Eigen::MatrixXd g = bg.metric(x);
  l.ginv = Eigen::Matrix4d(g).inverse();
  l.einv = kaluza::inverse_vierbein(bg, x);
  l.christoffel = geometry::christoffel(bg.metric, x, bg.backend);
  l.conn = spinor_connection(bg, x, e);
  auto cn = [&bg, e](const Point& q) -> ConnPack { return pack(spinor_connection(bg, q, e)); };
  for (int mu = 0; mu < 4; ++mu) {
    const ConnPack d = fd_derive(cn, x, mu, bg.backend);
    for (int nu = 0; nu < 4; ++nu) l.dconn[mu][nu] = d.middleCols<4>(4 * nu);
  }
  return l;
}

SpinorGrid spinor_covariant_derivative(const Background4& bg, const SpinorGrid& grid, int m, double e) {
  if (m < 0 || m > 3) throw DomainError("frame index out of range");
  const GridDerivs d = grid_derivs(grid, false);
  SpinorGrid out = empty_like(grid);
  out.one_sided = merged_flags(d);
  numkit::parallel_for(grid.values.size(), [&](std::size_t s) {
    const Point x = grid.lattice.site(s);
    const Mat4 einv = kaluza::inverse_vierbein(bg, x);
    const auto c = spinor_connection(bg, x, e);
    Spinor v = Spinor::Zero();
    for (int mu = 0; mu < 4; ++mu)
      if (einv(mu, m) != 0.0) v += einv(mu, m) * (d.d1[mu].values[s] + c[mu] * grid.values[s]);
    out.values[s] = v;
  });
  return out;
}

Spinor spinor_covariant_derivative(const Background4& bg, const SpinorField& psi, const Point& x, int m, double e,
                                   const DerivBackend& b) {
  if (m < 0 || m > 3) throw DomainError("frame index out of range");
  const Mat4 einv = kaluza::inverse_vierbein(bg, x);
  const auto c = spinor_connection(bg, x, e);
  const Spinor p0 = psi(x);
  Spinor v = Spinor::Zero();
  for (int mu = 0; mu < 4; ++mu)
    if (einv(mu, m) != 0.0) v += einv(mu, m) * (fd_derive(psi, x, mu, b) + c[mu] * p0);
  return v;
}

SpinorGrid box_spin(const Background4& bg, const SpinorGrid& grid, double e) {
  const GridDerivs d = grid_derivs(grid, true);
  SpinorGrid out = empty_like(grid);
  out.one_sided = merged_flags(d);
  numkit::parallel_for(grid.values.size(), [&](std::size_t s) {
    const SpinorLocal l = spinor_local(bg, grid.lattice.site(s), e);
    std::array<Spinor, 4> d1;
    std::array<std::array<Spinor, 4>, 4> d2;
    for (int mu = 0; mu < 4; ++mu) {
      d1[mu] = d.d1[mu].values[s];
      for (int nu = 0; nu < 4; ++nu) d2[mu][nu] = d.d2[mu][nu].values[s];
    }
    out.values[s] = box_local(l, grid.values[s], d1, d2);
  });
  return out;
}

Spinor box_spin(const Background4& bg, const SpinorField& psi, const Point& x, double e, const DerivBackend& b) {
  const SpinorLocal l = spinor_local(bg, x, e);
  std::array<Spinor, 4> d1;
  std::array<std::array<Spinor, 4>, 4> d2;
  for (int mu = 0; mu < 4; ++mu) {
    d1[mu] = fd_derive(psi, x, mu, b);
    for (int nu = mu; nu < 4; ++nu) {
      d2[mu][nu] = fd_second(psi, x, mu, nu, b);
      d2[nu][mu] = d2[mu][nu];
    }
  }
  return box_local(l, psi(x), d1, d2);
}

double CommutatorSample::max_abs_diff() const {
  double m = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m = std::max(m, (closed[a][b] - numeric[a][b]).cwiseAbs().maxCoeff());
  return m;
}

double CommutatorSample::max_abs_closed() const {
  double m = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m = std::max(m, closed[a][b].cwiseAbs().maxCoeff());
  return m;
}

CommutatorSample curvature_commutator(const Background4& bg, const Point& x, double e, const DerivBackend& b) {
  CommutatorSample out;
  const auto geo = geometry::curvature(bg.metric, x, bg.backend);
  const Mat4 ev = kaluza::vierbein(bg, x);
  const Mat4 einv = kaluza::inverse_vierbein(bg, x);
  const Mat4 ff = kaluza::frame_field(bg, x);

  // R^{pq}_{mn} = e^p_ρ e^q_σ g^{σλ} R^ρ_{λμν} E^μ_m E^ν_n
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      CMat4 spin = CMat4::Zero();
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) {
          double r = 0.0;
          for (int rho = 0; rho < 4; ++rho)
            for (int sig = 0; sig < 4; ++sig) {
              const double epq = ev(p, rho) * ev(q, sig);
              if (epq == 0.0) continue;
              for (int lam = 0; lam < 4; ++lam) {
                if (geo.ginv(sig, lam) == 0.0) continue;
                for (int mu = 0; mu < 4; ++mu)
                  for (int nu = 0; nu < 4; ++nu)
                    r += epq * geo.ginv(sig, lam) * geo.riemann(rho, lam, mu, nu) * einv(mu, m) * einv(nu, n);
              }
            }
          spin += (0.5 * I * r) * dirac_J(p, q);
        }
      out.spin_part[m][n] = spin;
      out.closed[m][n] = spin - I * e * ff(m, n) * CMat4::Identity();
    }

  // Nested stencils: [𝒟_μ, 𝒟_ν] on Gaussian wave packets centred at x, one per basis spinor.
  std::array<std::array<CMat4, 4>, 4> coord;
  for (auto& row : coord)
    for (auto& c : row) c.setZero();
  const auto c0 = spinor_connection(bg, x, e);
  for (int a = 0; a < 4; ++a) {
    SpinorField psi = [x, a](const Point& q) -> Spinor {
      double r2 = 0.0, ph = 0.0;
      for (int mu = 0; mu < 4; ++mu) {
        const double d = q[mu] - x[mu];
        r2 += d * d;
        ph += (0.3 + 0.2 * mu) * d;
      }
      Spinor s = Spinor::Zero();
      s(a) = std::exp(-0.5 * r2) * std::exp(I * ph);
      return s;
    };
    std::array<Spinor, 4> chi0;
    for (int nu = 0; nu < 4; ++nu) chi0[nu] = fd_derive(psi, x, nu, b) + c0[nu] * psi(x);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu + 1; nu < 4; ++nu) {
        auto chi = [&](int k) {
          return [&, k](const Point& q) -> Spinor {
            return fd_derive(psi, q, k, b) + spinor_connection(bg, q, e)[k] * psi(q);
          };
        };
        const Spinor dmu_chinu = fd_derive(chi(nu), x, mu, b) + c0[mu] * chi0[nu];
        const Spinor dnu_chimu = fd_derive(chi(mu), x, nu, b) + c0[nu] * chi0[mu];
        const Spinor col = dmu_chinu - dnu_chimu;
        coord[mu][nu].col(a) = col;
        coord[nu][mu].col(a) = -col;
      }
  }
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      CMat4 acc = CMat4::Zero();
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          const double w = einv(mu, m) * einv(nu, n);
          if (w != 0.0) acc += w * coord[mu][nu];
        }
      out.numeric[m][n] = acc;
    }
  return out;
}

CMat4 fj_term(const Background4& bg, const Point& x) {
  return lorentz::fj_reconstruct(lorentz::fj_decompose(kaluza::frame_field(bg, x)));
}

PotentialSample potential_V(const Background4& bg, const KKConstants& k, const Point& x) {
  PotentialSample s;
  s.terms = kaluza::rbar_closed(bg, k, x);
  const double g2 = k.gamma * k.gamma;
  const double c = g2 * k.lambda0 * k.lambda0;  // (1 + 4γ²)λ_C²
  const double e2 = k.e_charge * k.e_charge;
  s.X = 4.0 * s.terms.ffr - 3.0 * c * s.terms.ffrr - 4.0 * s.terms.grad_f2;
  s.V = 3.0 * c / 32.0 * (2.0 * s.terms.kretschmann - c * e2 * s.X);
  return s;
}

SpinorGrid square_apply(const Background4& bg, const SpinorGrid& grid, const SquareOptions& o) {
  const GridDerivs d = grid_derivs(grid, true);
  SpinorGrid out = empty_like(grid);
  out.one_sided = merged_flags(d);
  numkit::parallel_for(grid.values.size(), [&](std::size_t s) {
    const OperatorLocal l = operator_local(bg, grid.lattice.site(s), o);
    std::array<Spinor, 4> d1;
    std::array<std::array<Spinor, 4>, 4> d2;
    for (int mu = 0; mu < 4; ++mu) {
      d1[mu] = d.d1[mu].values[s];
      for (int nu = 0; nu < 4; ++nu) d2[mu][nu] = d.d2[mu][nu].values[s];
    }
    const Spinor box = box_local(l.s, grid.values[s], d1, d2);
    out.values[s] = square_local(l, o, grid.values[s], box);
  });
  return out;
}

Spinor square_apply(const Background4& bg, const SpinorField& psi, const Point& x, const SquareOptions& o,
                    const DerivBackend& b) {
  const OperatorLocal l = operator_local(bg, x, o);
  std::array<Spinor, 4> d1;
  std::array<std::array<Spinor, 4>, 4> d2;
  for (int mu = 0; mu < 4; ++mu) {
    d1[mu] = fd_derive(psi, x, mu, b);
    for (int nu = mu; nu < 4; ++nu) {
      d2[mu][nu] = fd_second(psi, x, mu, nu, b);
      d2[nu][mu] = d2[mu][nu];
    }
  }
  const Spinor p0 = psi(x);
  return square_local(l, o, p0, box_local(l.s, p0, d1, d2));
}

SpinorGrid sqm_square_apply(const Background4& bg, const SpinorGrid& grid, double m_e, double e) {
  SquareOptions o;
  o.kind = SquareKind::sqm;
  o.m_e = m_e;
  o.e = e;
  return square_apply(bg, grid, o);
}

SpinorGrid cqg_square_apply(const Background4& bg, const KKConstants& k, const SpinorGrid& grid) {
  SquareOptions o;
  o.kind = SquareKind::cqg;
  o.m_e = k.m_e;
  o.e = k.e_charge;
  o.k = k;
  return square_apply(bg, grid, o);
}

SpinorGrid dirac_apply(const Background4& bg, const SpinorGrid& grid, double m_e, double e, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("dirac_apply sign must be +1 or -1");
  const GridDerivs d = grid_derivs(grid, false);
  const auto& gam = rep_set(Rep::dirac).gamma;
  SpinorGrid out = empty_like(grid);
  out.one_sided = merged_flags(d);
  numkit::parallel_for(grid.values.size(), [&](std::size_t s) {
    const Point x = grid.lattice.site(s);
    const Mat4 einv = kaluza::inverse_vierbein(bg, x);
    const auto c = spinor_connection(bg, x, e);
    Spinor v = sign * m_e * grid.values[s];
    for (int mu = 0; mu < 4; ++mu) {
      const Spinor cov = d.d1[mu].values[s] + c[mu] * grid.values[s];
      for (int m = 0; m < 4; ++m)
        if (einv(mu, m) != 0.0) v += (-I * einv(mu, m)) * (CMat4(gam[m]) * cov);
    }
    out.values[s] = v;
  });
  return out;
}

// ---------------------------------------------------------------------------

Spinor FiberHarmonic::dirac(const Point& x) const {
  Spinor s;
  s.head<2>() = psi_R(x);
  s.tail<2>() = psi_L(x);
  return s;
}

Complex FiberHarmonic::lift(const Spinor& blocks, const lorentz::GroupPoint& y, double z) {
  const lorentz::GroupPoint my = -y;
  const Eigen::MatrixXcd sl = lorentz::exp_map(my, Rep::left);
  const Eigen::MatrixXcd sr = lorentz::exp_map(my, Rep::right);
  const Eigen::VectorXcd up = sl * Eigen::VectorXcd(blocks.head<2>());
  const Eigen::VectorXcd lo = sr * Eigen::VectorXcd(blocks.tail<2>());
  return (up(0) + lo(0)) * std::exp(I * z);
}

Complex FiberHarmonic::operator()(const Point& q) const {
  return lift(dirac(kaluza::spacetime_part(q)), kaluza::fiber_part(q), q[10]);
}

GeneratorCheck generator_equivalence(const FiberHarmonic& fh, const Point& q, const DerivBackend& b) {
  const auto y = kaluza::fiber_part(q);
  const auto mc = lorentz::maurer_cartan_exact(y);
  const lorentz::Mat6 winv = mc.omega.inverse();
  std::array<Complex, 6> dy;
  for (int a = 0; a < 6; ++a) dy[a] = fd_derive(fh, q, 4 + a, b);
  const Spinor psi = fh.dirac(kaluza::spacetime_part(q));
  const auto& d = rep_set(Rep::dirac);
  GeneratorCheck out;
  double scale = std::abs(fh(q));
  for (int beta = 0; beta < 6; ++beta) {
    Complex xb = 0.0;
    for (int a = 0; a < 6; ++a) xb += winv(a, beta) * dy[a];
    const Complex rhs = FiberHarmonic::lift(CMat4(d.pair(beta)) * psi, y, q[10]);
    scale = std::max(scale, std::abs(rhs));
    out.max_rel_residual = std::max(out.max_rel_residual, std::abs(-I * xb - rhs));
  }
  out.max_rel_residual /= std::max(scale, 1e-300);
  const Complex dz = fd_derive(fh, q, 10, b);
  out.u1_residual = std::abs(-I * dz - fh(q)) / std::max(std::abs(fh(q)), 1e-300);
  return out;
}

Reduction harmonic_reduce(const Background4& bg, const KKConstants& k, const FiberHarmonic& fh, const Point& q,
                          double mass_shift, const DerivBackend& b) {
  Reduction r;
  const geometry::MetricField m11 = kaluza::metric_field11(bg, k);
  const geometry::ComplexField psi11 = [&fh](const Point& p) { return fh(p); };
  const Point x = kaluza::spacetime_part(q);
  const double rbar = kaluza::rbar_closed(bg, k, x).total;
  r.psi = fh(q);
  r.full11 = geometry::laplace_beltrami(m11, psi11, q, b) - k.gamma * k.gamma * rbar * r.psi;

  SquareOptions o;
  o.kind = SquareKind::cqg;
  o.m_e = std::sqrt(k.m_e * k.m_e + mass_shift);
  o.e = k.e_charge;
  o.k = k;
  SpinorField psi4 = [&fh](const Point& p) { return fh.dirac(p); };
  const Spinor r4 = square_apply(bg, psi4, x, o, b);
  r.reduced4 = -FiberHarmonic::lift(r4, kaluza::fiber_part(q), q[10]);
  r.rel_err = std::abs(r.full11 - r.reduced4) / std::max({std::abs(r.full11), std::abs(r.reduced4), 1e-300});
  return r;
}

}  // namespace weylkk::diracops
