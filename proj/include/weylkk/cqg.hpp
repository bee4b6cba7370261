#pragma once

// Scalar field layer: action density, continuity and Hamilton-Jacobi residuals,
// the complex field Ψ, the conformal wave operator, Weyl rescalings and the
// stress tensor.

#include <array>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "weylkk/geometry.hpp"

namespace weylkk::cqg {

using geometry::ComplexField;
using geometry::MetricField;
using geometry::ScalarField;
using numkit::Complex;
using numkit::DerivBackend;
using numkit::Point;

struct ScalarFields {
  ScalarField rho;
  ScalarField sigma;
  MetricField chart;
};

enum class PsiConvention {
  phase_gamma,  // Ψ = √ρ e^{iγσ}
  real_exponent,   // Ψ = √ρ e^{σ/γ}
};

std::string convention_name(PsiConvention c);

struct PsiField {
  ComplexField psi;
  PsiConvention convention = PsiConvention::phase_gamma;
  MetricField chart;
};

PsiField make_psi(const ScalarFields& f, PsiConvention c = PsiConvention::phase_gamma);

/// √|g| ρ (g^{ij}∂_iσ∂_jσ + R_weyl).
double action_density(const ScalarFields& f, const Point& p, const DerivBackend& b = {});
/// (1/√|g|) ∂_i(√|g| ρ g^{ij}∂_jσ).
double continuity_residual(const ScalarFields& f, const Point& p, const DerivBackend& b = {});
/// g^{ij}∂_iσ∂_jσ + R_weyl.
double hj_residual(const ScalarFields& f, const Point& p, const DerivBackend& b = {});
/// ∇²Ψ + sign·γ²R̄Ψ.
Complex wave_residual(const PsiField& psi, const Point& p, int sign = -1, const DerivBackend& b = {});

struct MadelungBreakdown {
  Complex laplacian;   // ∇²Ψ
  double riemann_scalar = 0.0;
  double hj = 0.0;
  double continuity = 0.0;
  Complex psi;
  Complex residual;    // ∇²Ψ − γ²R̄Ψ − (−γ² hj + iγ cont/ρ) Ψ
};

/// Identity tying the wave operator on Ψ = √ρ e^{iγσ} to the two field residuals.
MadelungBreakdown madelung_breakdown(const ScalarFields& f, const Point& p, const DerivBackend& b = {});
Complex madelung_identity(const ScalarFields& f, const Point& p, const DerivBackend& b = {});

// ---------------------------------------------------------------------------
// Weyl gauge

/// Weyl types under g → λg.
struct WeightTable {
  double metric = 1.0;
  double inverse_metric = -1.0;
  double volume = 0.0;  // N/2
  double connection = 0.0;
  double curvature = -1.0;
  double density = 0.0;  // −(N−2)/2
};
WeightTable weight_table(int N);

struct GaugeChange {
  ScalarField lambda;
};

MetricField weyl_transform(const MetricField& m, const GaugeChange& gc);
ScalarField weyl_transform_density(const ScalarField& rho, const GaugeChange& gc, int N);
/// φ_i − ½∂_i ln λ.
geometry::CovectorField weyl_transform_vector(const geometry::CovectorField& phi, const GaugeChange& gc,
                                              const DerivBackend& b = {});
ScalarFields weyl_transform(const ScalarFields& f, const GaugeChange& gc);

// ---------------------------------------------------------------------------
// Stress tensor

struct StressTerms {
  Eigen::MatrixXd sigma_grad;     // ∇_iσ∇_jσ
  Eigen::MatrixXd sigma_trace;    // −½ g_ij ∇_k∇^kσ
  Eigen::MatrixXd rho_grad;       // γ^{-2}ρ^{-2} ∇_iρ∇_jρ
  Eigen::MatrixXd rho_trace;      // −½ γ^{-2}ρ^{-2} g_ij ∇_k∇^kρ
  Eigen::MatrixXd rho_hessian;    // −ρ^{-1} ∇_i∇_jρ
  Eigen::MatrixXd rho_laplacian;  // +ρ^{-1} g_ij ∇_k∇^kρ
  Eigen::MatrixXd total() const;
};

StressTerms stress_terms(const ScalarFields& f, const Point& p, const DerivBackend& b = {});
Eigen::MatrixXd stress_tensor(const ScalarFields& f, const Point& p, const DerivBackend& b = {});
/// R̄_ij − ½g_ij R̄ + T_ij.
Eigen::MatrixXd einstein_residual(const ScalarFields& f, const Point& p, const DerivBackend& b = {});

}  // namespace weylkk::cqg
