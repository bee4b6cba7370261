#pragma once

// Levi-Civita curvature, metric jets and the Weyl-geometry layer.
//
// Riemann convention: R^i_{jkl} = ∂_kΓ^i_{jl} − ∂_lΓ^i_{jk} + Γ^i_{sk}Γ^s_{jl} − Γ^i_{sl}Γ^s_{jk},
// Ricci R_{jl} = R^k_{jkl}, scalar R = g^{jl}R_{jl}.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "weylkk/numkit.hpp"

namespace weylkk::geometry {

using numkit::Complex;
using numkit::DerivBackend;
using numkit::Point;
using numkit::RealArray;

using MetricFn = std::function<Eigen::MatrixXd(const Point&)>;
using MetricDerivFn = std::function<std::vector<Eigen::MatrixXd>(const Point&)>;
using ScalarField = std::function<double(const Point&)>;
using ComplexField = std::function<Complex(const Point&)>;

/// Evaluable metric g_ij(q) with optional exact derivative hooks.
struct MetricField {
  std::string name;
  int dim = 4;
  MetricFn g;
  MetricDerivFn d1;  // d1(p)[k] = ∂_k g
  MetricDerivFn d2;  // d2(p)[k*dim + l] = ∂_k∂_l g
  std::pair<int, int> signature{1, 3};  // (n_minus, n_plus)
  std::function<void(const Point&)> guard;  // throws SingularPoint outside the chart

  bool has_exact_hooks() const { return static_cast<bool>(d1) && static_cast<bool>(d2); }
  Eigen::MatrixXd operator()(const Point& p) const;
};

struct MetricJet {
  Eigen::MatrixXd g;
  Eigen::MatrixXd ginv;
  std::vector<Eigen::MatrixXd> dg;
  std::vector<Eigen::MatrixXd> ddg;  // empty when only first derivatives were requested
};

/// Metric, inverse and derivatives at p; exact hooks take precedence over stencils.
MetricJet metric_jet(const MetricField& m, const Point& p, const DerivBackend& b, bool second = true);

struct GeometrySample {
  Point point;
  Eigen::MatrixXd g;
  Eigen::MatrixXd ginv;
  RealArray christoffel;    // Γ^i_{jk}
  RealArray riemann;        // R^i_{jkl}
  RealArray riemann_lower;  // R_{ijkl}
  RealArray ricci;          // R_{jl}
  double scalar = 0.0;
  double kretschmann = 0.0;
};

RealArray christoffel(const MetricField& m, const Point& p, const DerivBackend& b);
RealArray christoffel_from_jet(const MetricJet& jet);

GeometrySample curvature(const MetricField& m, const Point& p, const DerivBackend& b);
GeometrySample curvature_from_jet(const Point& p, const MetricJet& jet);

/// Riemann tensor of an arbitrary torsion-free connection given Γ and ∂_lΓ^i_{jk} (slot order i,j,k,l).
RealArray riemann_from_connection(const RealArray& gamma, const RealArray& dgamma);

/// Contracts a connection's Riemann tensor into g^{jl}R^k_{jkl}.
double connection_scalar(const RealArray& riemann, const Eigen::MatrixXd& ginv);

struct SymmetryResiduals {
  double christoffel_sym = 0.0;
  double antisym_kl = 0.0;
  double antisym_ij = 0.0;
  double pair_sym = 0.0;
  double bianchi = 0.0;
  double max() const;
};
SymmetryResiduals symmetry_residuals(const GeometrySample& s);

/// Right-dual scalar ½ε_{mnkl}R^{klmn} in four dimensions.
double dual_scalar(const MetricField& m, const Point& p, const DerivBackend& b = {});
double dual_scalar(const GeometrySample& s);

/// Eigenvalue sign count (n_minus, n_plus) of a symmetric matrix.
std::pair<int, int> signature_of(const Eigen::MatrixXd& g);

// ---------------------------------------------------------------------------
// Weyl layer

double gamma_const(int N);

/// φ_i = ∂_i ln ρ /(N−2).
Eigen::VectorXd weyl_vector(const ScalarField& rho, const Point& p, int N, const DerivBackend& b = {});

using CovectorField = std::function<Eigen::VectorXd(const Point&)>;

/// Γ^i_{jk} = {i jk} + δ^i_jφ_k + δ^i_kφ_j − g_{jk}φ^i for a given Weyl vector.
RealArray weyl_connection(const MetricField& m, const CovectorField& phi, const Point& p,
                          const DerivBackend& b = {});
RealArray weyl_connection(const MetricField& m, const ScalarField& rho, const Point& p,
                          const DerivBackend& b = {});

/// g^{jl}R^k_{jkl} of the Weyl connection, differentiated numerically.
double weyl_connection_scalar(const MetricField& m, const CovectorField& phi, const Point& p,
                              const DerivBackend& b = {});
double weyl_connection_scalar(const MetricField& m, const ScalarField& rho, const Point& p,
                              const DerivBackend& b = {});

struct WeylScalar {
  double r_weyl = 0.0;
  double riemann_scalar = 0.0;
  double bohm = 0.0;  // γ^{-2} □√ρ/√ρ, so r_weyl = riemann_scalar − bohm
};
WeylScalar weyl_scalar(const MetricField& m, const ScalarField& rho, const Point& p,
                       const DerivBackend& b = {});

/// g^{ij}(∂_i∂_j f − Γ^k_{ij}∂_k f).
double laplace_beltrami(const MetricField& m, const ScalarField& f, const Point& p,
                        const DerivBackend& b = {});
Complex laplace_beltrami(const MetricField& m, const ComplexField& f, const Point& p,
                         const DerivBackend& b = {});
/// Same operator with a precomputed jet and Christoffel table.
double laplace_beltrami(const MetricJet& jet, const RealArray& gamma, const ScalarField& f,
                        const Point& p, const DerivBackend& b);
Complex laplace_beltrami(const MetricJet& jet, const RealArray& gamma, const ComplexField& f,
                         const Point& p, const DerivBackend& b);

// ---------------------------------------------------------------------------
// Built-in metrics

MetricField minkowski(int dim = 4);
/// Coordinates (t, r, θ, φ); exact hooks; guard r ≥ (1+eps)r_S.
MetricField schwarzschild(double r_s, double eps = 1e-3);
/// diag(−1, 1, a², a² sin²θ) in (t, x, θ, φ); scalar curvature 2/a².
MetricField sphere_block(double a);
/// Einstein static universe in (t, χ, θ, φ); scalar curvature 6/a².
MetricField einstein_static(double a);

}  // namespace weylkk::geometry
