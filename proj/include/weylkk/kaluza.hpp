#pragma once

// Space-time backgrounds, the eleven-dimensional frame over M4 × L₊ × U(1),
// its metric and the closed-form scalar curvature.
//
// 11-D chart: q = (x^0..x^3, y^0..y^5, z) with y in the pair basis of lorentz.hpp.

#include <array>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "weylkk/geometry.hpp"
#include "weylkk/lorentz.hpp"
#include "weylkk/numkit.hpp"

namespace weylkk::kaluza {

using numkit::DerivBackend;
using numkit::Point;
using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;
using Mat11 = Eigen::Matrix<double, 11, 11>;
using Vec11 = Eigen::Matrix<double, 11, 1>;
using Mat4Set = std::array<Mat4, 4>;

struct KKConstants {
  double m_e = 1.0;
  double lambda_C = 1.0;
  double e_charge = 0.0;
  double gamma = 0.0;
  double lambda0 = 0.0;
  double lambda_e = 0.0;
  double lambda_L = 0.0;
};

KKConstants constants(double m_e, double e);

/// Space-time data. Matrices use (frame, coordinate) for e^m_μ and
/// (coordinate, coordinate) for F_μν; Mat4Set entries are indexed by the
/// coordinate derivative direction.
struct Background4 {
  std::string name;
  geometry::MetricField metric;
  std::function<Mat4(const Point&)> vierbein;
  std::function<Vec4(const Point&)> potential;
  std::function<Mat4(const Point&)> field;           // optional exact F_μν
  std::function<Mat4Set(const Point&)> field_deriv;  // optional exact ∂_ρF_μν
  DerivBackend backend;                              // stencils for derived fields
};

Mat4 vierbein(const Background4& bg, const Point& x);
Mat4 inverse_vierbein(const Background4& bg, const Point& x);  // E(μ, m)
/// −η^{np}E^ν_p ∇_μ e^m_ν, entry [μ](m, n).
Mat4Set tetrad_rotation(const Background4& bg, const Point& x);
/// Gauge field entering the frame and the spinor derivative; equals −tetrad_rotation.
Mat4Set spin_connection(const Background4& bg, const Point& x);
Mat4 field_strength(const Background4& bg, const Point& x);
Mat4Set field_gradient(const Background4& bg, const Point& x);
/// ∇_ρF_μν, entry [ρ](μ, ν).
Mat4Set covariant_field_gradient(const Background4& bg, const Point& x);
/// Frame components F_mn = E^μ_m E^ν_n F_μν.
Mat4 frame_field(const Background4& bg, const Point& x);
Vec4 frame_potential(const Background4& bg, const Point& x);

/// Residual max |η_mn e^m_μ e^n_ν − g_μν|.
double vierbein_residual(const Background4& bg, const Point& x);

// Built-in backgrounds.
Background4 minkowski_bg();
Background4 schwarzschild_bg(double r_s, double eps = 1e-3);
/// Minkowski in Cartesian coordinates with A_0 = −Q/r.
Background4 coulomb_bg(double q);
/// Minkowski with A_μ = −½F_μν x^ν.
Background4 constant_field_bg(const Mat4& f);
/// Schwarzschild coordinates with A_t = −Q/r.
Background4 schwarzschild_coulomb_bg(double r_s, double q, double eps = 1e-3);
Background4 sphere_block_bg(double a);
Background4 einstein_static_bg(double a);
/// Background with a diagonal metric and the static vierbein diag(√|g_μμ|).
Background4 diagonal_bg(const geometry::MetricField& m);

// ---------------------------------------------------------------------------
// Eleven-dimensional frame

enum class FiberSignature {
  rotations_positive,  // η = +1 on (12),(13),(23), −1 on (01),(02),(03)
  boosts_positive,     // −½ ds̄_mn ds̄^mn read with η_mn lowering: +1 on boosts, −1 on rotations
};

std::string signature_name(FiberSignature s);

struct Frame11 {
  Point q;
  Mat11 e;      // e(A, i)
  Mat11 e_inv;  // e_inv(i, A)
  Mat11 eta11;
};

Mat11 eta11(FiberSignature s);

Frame11 frame(const Background4& bg, const KKConstants& k, const Point& q,
              FiberSignature s = FiberSignature::rotations_positive);
Mat11 metric11(const Background4& bg, const KKConstants& k, const Point& q,
               FiberSignature s = FiberSignature::rotations_positive);
geometry::MetricField metric_field11(const Background4& bg, const KKConstants& k,
                                     FiberSignature s = FiberSignature::rotations_positive);

struct RbarTerms {
  double r4 = 0.0;
  double fiber = 0.0;        // 6/λ_L²
  double ff = 0.0;           // F_μν F^μν
  double kretschmann = 0.0;  // R_μνρσ R^μνρσ
  double ffr = 0.0;          // F^μν F^ρσ R_μνρσ
  double ffrr = 0.0;         // F^μν F^ρσ R_μν^κλ R_ρσκλ
  double grad_f2 = 0.0;      // ∇_ρF_μν ∇^ρF^μν
  double total = 0.0;
};

/// Space-time invariants entering R̄ and the potentials.
RbarTerms invariants(const Background4& bg, const Point& x);
RbarTerms rbar_closed(const Background4& bg, const KKConstants& k, const Point& x);

/// Default stencil for the 11-D oracle.
DerivBackend oracle_backend();

/// Scalar curvature of metric11 by finite differences.
double rbar_bruteforce(const Background4& bg, const KKConstants& k, const Point& q,
                       FiberSignature s = FiberSignature::rotations_positive,
                       const DerivBackend& b = oracle_backend());

/// ∂f/∂s̄^A = E^i_A ∂_i f.
Vec11 directional_derivs(const Frame11& fr, const std::function<double(const Point&)>& f,
                         const DerivBackend& b = {});

/// A_μ → A_μ − (λ₀/λ_e)∂_μχ; pairs with z → z + χ(x).
Background4 z_gauge(const Background4& bg, const KKConstants& k, std::function<double(const Point&)> chi);

/// Metric after D(y) → D(ȳ(x))D(y), with the vierbein rotated by Λ(ȳ(x)) and
/// the spin connection recomputed from it, pulled back to the original chart.
Mat11 ygauge_metric(const Background4& bg, const KKConstants& k,
                    const std::function<lorentz::Vec6(const Point&)>& ybar, const Point& q,
                    FiberSignature s = FiberSignature::rotations_positive);

/// Space-time part x(q) and fiber part y(q) of an 11-D point.
Point spacetime_part(const Point& q);
lorentz::GroupPoint fiber_part(const Point& q);
Point make_point11(const Point& x, const lorentz::GroupPoint& y, double z);

}  // namespace weylkk::kaluza
