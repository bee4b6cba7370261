#include "weylkk/cqg.hpp"

#include <cmath>

namespace weylkk::cqg {

using geometry::MetricJet;
using numkit::fd_derive;
using numkit::fd_second;
using numkit::RealArray;

namespace {

const Complex I(0.0, 1.0);

struct Local {
  MetricJet jet;
  RealArray gamma;
  double sqrt_g = 1.0;
};

Local local(const MetricField& m, const Point& p, const DerivBackend& b, bool second) {
  Local l;
  l.jet = geometry::metric_jet(m, p, b, second);
  l.gamma = geometry::christoffel_from_jet(l.jet);
  l.sqrt_g = std::sqrt(std::abs(l.jet.g.determinant()));
  return l;
}

Eigen::VectorXd gradient(const ScalarField& f, const Point& p, const DerivBackend& b) {
  Eigen::VectorXd g(p.dim());
  for (int i = 0; i < p.dim(); ++i) g(i) = fd_derive(f, p, i, b);
  return g;
}

Eigen::MatrixXd hessian(const ScalarField& f, const Point& p, const RealArray& gamma, const Eigen::VectorXd& grad,
                        const DerivBackend& b) {
  const int n = p.dim();
  Eigen::MatrixXd h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double v = fd_second(f, p, i, j, b);
      for (int k = 0; k < n; ++k) v -= gamma(k, i, j) * grad(k);
      h(i, j) = v;
      h(j, i) = v;
    }
  return h;
}

double positive(const ScalarField& rho, const Point& p) {
  const double v = rho(p);
  if (!(v > 0.0)) throw DomainError("density must be positive");
  return v;
}

}  // namespace

std::string convention_name(PsiConvention c) {
  return c == PsiConvention::phase_gamma ? "phase_gamma" : "real_exponent";
}

PsiField make_psi(const ScalarFields& f, PsiConvention c) {
  PsiField out;
  out.convention = c;
  out.chart = f.chart;
  const double g = geometry::gamma_const(f.chart.dim);
  auto rho = f.rho;
  auto sigma = f.sigma;
  if (c == PsiConvention::phase_gamma) {
    out.psi = [rho, sigma, g](const Point& p) { return std::sqrt(positive(rho, p)) * std::exp(I * (g * sigma(p))); };
  } else {
    out.psi = [rho, sigma, g](const Point& p) { return Complex(std::sqrt(positive(rho, p)) * std::exp(sigma(p) / g)); };
  }
  return out;
}

double hj_residual(const ScalarFields& f, const Point& p, const DerivBackend& b) {
  const Eigen::VectorXd ds = gradient(f.sigma, p, b);
  const Eigen::MatrixXd ginv = f.chart(p).inverse();
  return ds.dot(ginv * ds) + geometry::weyl_scalar(f.chart, f.rho, p, b).r_weyl;
}

double action_density(const ScalarFields& f, const Point& p, const DerivBackend& b) {
  const double rho = positive(f.rho, p);
  const Eigen::MatrixXd g = f.chart(p);
  return std::sqrt(std::abs(g.determinant())) * rho * hj_residual(f, p, b);
}

double continuity_residual(const ScalarFields& f, const Point& p, const DerivBackend& b) {
  const Local l = local(f.chart, p, b, false);
  const double rho = positive(f.rho, p);
  const Eigen::VectorXd ds = gradient(f.sigma, p, b);
  const Eigen::VectorXd dr = gradient(f.rho, p, b);
  return dr.dot(l.jet.ginv * ds) + rho * geometry::laplace_beltrami(l.jet, l.gamma, f.sigma, p, b);
}

Complex wave_residual(const PsiField& psi, const Point& p, int sign, const DerivBackend& b) {
  if (sign != 1 && sign != -1) throw DomainError("wave_residual sign must be +1 or -1");
  const MetricJet jet = geometry::metric_jet(psi.chart, p, b, true);
  const auto geo = geometry::curvature_from_jet(p, jet);
  const double g = geometry::gamma_const(psi.chart.dim);
  return geometry::laplace_beltrami(jet, geo.christoffel, psi.psi, p, b) +
         static_cast<double>(sign) * g * g * geo.scalar * psi.psi(p);
}

MadelungBreakdown madelung_breakdown(const ScalarFields& f, const Point& p, const DerivBackend& b) {
  const MetricJet jet = geometry::metric_jet(f.chart, p, b, true);
  const auto geo = geometry::curvature_from_jet(p, jet);
  const int n = f.chart.dim;
  const double g = geometry::gamma_const(n), g2 = g * g;
  const PsiField psi = make_psi(f, PsiConvention::phase_gamma);
  ScalarField sqrt_rho = [&f](const Point& q) { return std::sqrt(positive(f.rho, q)); };

  MadelungBreakdown out;
  out.psi = psi.psi(p);
  out.laplacian = geometry::laplace_beltrami(jet, geo.christoffel, psi.psi, p, b);
  out.riemann_scalar = geo.scalar;
  const double rho = positive(f.rho, p);
  const Eigen::VectorXd ds = gradient(f.sigma, p, b);
  const Eigen::VectorXd dr = gradient(f.rho, p, b);
  const double bohm = geometry::laplace_beltrami(jet, geo.christoffel, sqrt_rho, p, b) / std::sqrt(rho) / g2;
  out.hj = ds.dot(jet.ginv * ds) + geo.scalar - bohm;
  out.continuity = dr.dot(jet.ginv * ds) + rho * geometry::laplace_beltrami(jet, geo.christoffel, f.sigma, p, b);
  out.residual = out.laplacian - g2 * geo.scalar * out.psi - (-g2 * out.hj + I * g * out.continuity / rho) * out.psi;
  return out;
}

Complex madelung_identity(const ScalarFields& f, const Point& p, const DerivBackend& b) {
  return madelung_breakdown(f, p, b).residual;
}

WeightTable weight_table(int N) {
  WeightTable w;
  w.volume = N / 2.0;
  w.density = -(N - 2.0) / 2.0;
  return w;
}

MetricField weyl_transform(const MetricField& m, const GaugeChange& gc) {
  MetricField out;
  out.name = m.name + "+weyl";
  out.dim = m.dim;
  out.signature = m.signature;
  out.guard = m.guard;
  auto base = m.g;
  auto lam = gc.lambda;
  out.g = [base, lam](const Point& p) -> Eigen::MatrixXd {
    const double l = lam(p);
    if (!(l > 0.0)) throw DomainError("calibration factor must be positive");
    return l * base(p);
  };
  return out;
}

ScalarField weyl_transform_density(const ScalarField& rho, const GaugeChange& gc, int N) {
  const double w = weight_table(N).density;
  auto lam = gc.lambda;
  return [rho, lam, w](const Point& p) {
    const double l = lam(p);
    if (!(l > 0.0)) throw DomainError("calibration factor must be positive");
    return std::pow(l, w) * rho(p);
  };
}

geometry::CovectorField weyl_transform_vector(const geometry::CovectorField& phi, const GaugeChange& gc,
                                              const DerivBackend& b) {
  auto lam = gc.lambda;
  return [phi, lam, b](const Point& p) -> Eigen::VectorXd {
    auto lnl = [&lam](const Point& q) {
      const double l = lam(q);
      if (!(l > 0.0)) throw DomainError("calibration factor must be positive");
      return std::log(l);
    };
    Eigen::VectorXd v = phi(p);
    for (int i = 0; i < p.dim(); ++i) v(i) -= 0.5 * fd_derive(lnl, p, i, b);
    return v;
  };
}

ScalarFields weyl_transform(const ScalarFields& f, const GaugeChange& gc) {
  ScalarFields out;
  out.chart = weyl_transform(f.chart, gc);
  out.rho = weyl_transform_density(f.rho, gc, f.chart.dim);
  out.sigma = f.sigma;
  return out;
}

Eigen::MatrixXd StressTerms::total() const {
  return sigma_grad + sigma_trace + rho_grad + rho_trace + rho_hessian + rho_laplacian;
}

StressTerms stress_terms(const ScalarFields& f, const Point& p, const DerivBackend& b) {
  const Local l = local(f.chart, p, b, false);
  const double rho = positive(f.rho, p);
  const double g = geometry::gamma_const(f.chart.dim), g2 = g * g;
  const Eigen::VectorXd ds = gradient(f.sigma, p, b);
  const Eigen::VectorXd dr = gradient(f.rho, p, b);
  const Eigen::MatrixXd hr = hessian(f.rho, p, l.gamma, dr, b);
  const double box_sigma = geometry::laplace_beltrami(l.jet, l.gamma, f.sigma, p, b);
  const double box_rho = (l.jet.ginv.cwiseProduct(hr)).sum();
  const Eigen::MatrixXd& gm = l.jet.g;
  StressTerms t;
  t.sigma_grad = ds * ds.transpose();
  t.sigma_trace = -0.5 * gm * box_sigma;
  t.rho_grad = dr * dr.transpose() / (g2 * rho * rho);
  t.rho_trace = -0.5 * gm * box_rho / (g2 * rho * rho);
  t.rho_hessian = -hr / rho;
  t.rho_laplacian = gm * box_rho / rho;
  return t;
}

Eigen::MatrixXd stress_tensor(const ScalarFields& f, const Point& p, const DerivBackend& b) {
  return stress_terms(f, p, b).total();
}

Eigen::MatrixXd einstein_residual(const ScalarFields& f, const Point& p, const DerivBackend& b) {
  const auto geo = geometry::curvature(f.chart, p, b);
  const int n = f.chart.dim;
  Eigen::MatrixXd ric(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ric(i, j) = geo.ricci(i, j);
  return ric - 0.5 * geo.g * geo.scalar + stress_tensor(f, p, b);
}

}  // namespace weylkk::cqg
