#pragma once

// Spinor covariant derivative, curvature commutator, squared Dirac operators
// and the fiber-harmonic reduction of the eleven-dimensional wave operator.
//
// 𝒟_m = E^μ_m(∂_μ − (i/2)ω^{pq}_μ J_pq − ieA_μ), with ω = kaluza::spin_connection.

#include <array>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "weylkk/kaluza.hpp"
#include "weylkk/lorentz.hpp"
#include "weylkk/numkit.hpp"

namespace weylkk::diracops {

using kaluza::Background4;
using kaluza::KKConstants;
using numkit::Complex;
using numkit::DerivBackend;
using numkit::Point;
using Spinor = Eigen::Vector4cd;
using Spinor2 = Eigen::Vector2cd;
using CMat4 = Eigen::Matrix4cd;
using SpinorField = std::function<Spinor(const Point&)>;

/// Rectangular 4-D lattice; site (i0..i3) sits at origin + i·spacing.
struct Lattice {
  std::array<int, 4> extent{16, 16, 16, 16};
  std::array<double, 4> spacing{0.1, 0.1, 0.1, 0.1};
  std::array<double, 4> origin{0.0, 0.0, 0.0, 0.0};
  std::array<bool, 4> periodic{false, false, false, false};

  std::size_t sites() const;
  std::size_t index(const std::array<int, 4>& i) const;
  std::array<int, 4> coords(std::size_t idx) const;
  Point site(std::size_t idx) const;
  /// True when every axis is at least `margin` sites from a non-periodic edge.
  bool interior(std::size_t idx, int margin) const;
};

/// Four-component field (Ψ_R upper, Ψ_L lower) on a lattice.
struct SpinorGrid {
  Lattice lattice;
  std::vector<Spinor> values;
  std::array<bool, 4> one_sided{false, false, false, false};  // closure used by the last stencil pass

  static SpinorGrid sample(const Lattice& l, const SpinorField& f);
  double max_norm(int margin = 0) const;
  SpinorGrid operator-(const SpinorGrid& o) const;
};

/// First-derivative grid along `axis` with central4 interior and one-sided 4th-order closure.
SpinorGrid grid_derivative(const SpinorGrid& g, int axis);
/// Pure second derivative along `axis` with matching closure.
SpinorGrid grid_second_derivative(const SpinorGrid& g, int axis);

/// Connection coefficients at a point: C_μ = −(i/2)ω^{pq}_μ J_pq − ieA_μ and ∂_μC_ν.
struct SpinorLocal {
  Eigen::Matrix4d ginv;
  Eigen::Matrix4d einv;  // E(μ, m)
  numkit::RealArray christoffel;
  std::array<CMat4, 4> conn;
  std::array<std::array<CMat4, 4>, 4> dconn;  // [μ][ν] = ∂_μ C_ν
};

std::array<CMat4, 4> spinor_connection(const Background4& bg, const Point& x, double e);
SpinorLocal spinor_local(const Background4& bg, const Point& x, double e);

/// Frame-direction derivative 𝒟_m on a grid.
SpinorGrid spinor_covariant_derivative(const Background4& bg, const SpinorGrid& grid, int m, double e);
/// Frame-direction derivative 𝒟_m of a continuous field at a point.
Spinor spinor_covariant_derivative(const Background4& bg, const SpinorField& psi, const Point& x, int m, double e,
                                   const DerivBackend& b = {});

/// g^{μν}(𝒟_μ𝒟_ν − Γ^λ_{μν}𝒟_λ)ψ.
SpinorGrid box_spin(const Background4& bg, const SpinorGrid& grid, double e);
Spinor box_spin(const Background4& bg, const SpinorField& psi, const Point& x, double e, const DerivBackend& b = {});

struct CommutatorSample {
  std::array<std::array<CMat4, 4>, 4> closed;   // (i/2)R^{pq}_{mn}J_pq − ieF_mn
  std::array<std::array<CMat4, 4>, 4> numeric;  // nested stencils on bump spinors
  std::array<std::array<CMat4, 4>, 4> spin_part;
  double max_abs_diff() const;
  double max_abs_closed() const;
};

CommutatorSample curvature_commutator(const Background4& bg, const Point& x, double e,
                                      const DerivBackend& b = {});

/// Σ_{m,n} F_mn J^{mn} from the frame field, assembled as H·Σ − iE·α.
CMat4 fj_term(const Background4& bg, const Point& x);

struct PotentialSample {
  double V = 0.0;
  double X = 0.0;
  kaluza::RbarTerms terms;
};

PotentialSample potential_V(const Background4& bg, const KKConstants& k, const Point& x);

enum class SquareKind {
  sqm,      // −Box − eF·J + (m² + ½R₄)
  cqg,      // −Box − eF·J + (m² + γ²R₄) − V
  minimal,  // −Box + m²
};

struct SquareOptions {
  SquareKind kind = SquareKind::sqm;
  double m_e = 1.0;
  double e = 0.0;
  KKConstants k{};  // used by cqg
};

SpinorGrid square_apply(const Background4& bg, const SpinorGrid& grid, const SquareOptions& o);
Spinor square_apply(const Background4& bg, const SpinorField& psi, const Point& x, const SquareOptions& o,
                    const DerivBackend& b = {});

SpinorGrid sqm_square_apply(const Background4& bg, const SpinorGrid& grid, double m_e, double e);
SpinorGrid cqg_square_apply(const Background4& bg, const KKConstants& k, const SpinorGrid& grid);

/// (−iγ^m𝒟_m + sign·m_e)ψ on a grid.
SpinorGrid dirac_apply(const Background4& bg, const SpinorGrid& grid, double m_e, double e, int sign);

// ---------------------------------------------------------------------------
// Fiber harmonic

struct FiberHarmonic {
  std::function<Spinor2(const Point&)> psi_R;
  std::function<Spinor2(const Point&)> psi_L;

  Spinor dirac(const Point& x) const;
  /// Row 0 of S_left(−y)ψ_R + S_right(−y)ψ_L, times e^{iz}.
  Complex operator()(const Point& q) const;
  /// Same assembly with the spinor blocks replaced by an arbitrary Dirac spinor.
  static Complex lift(const Spinor& blocks, const lorentz::GroupPoint& y, double z);
};

struct GeneratorCheck {
  double max_rel_residual = 0.0;
  double u1_residual = 0.0;
};

/// Compares −i X_(mn)Ψ with the harmonic of J_mn ψ, and −i∂_zΨ with Ψ.
GeneratorCheck generator_equivalence(const FiberHarmonic& fh, const Point& q, const DerivBackend& b = {});

struct Reduction {
  Complex full11;    // (∇² − γ²R̄)Ψ via the 11-D metric
  Complex reduced4;  // −lift of the four-component operator
  double rel_err = 0.0;
  Complex psi;
};

/// mass_shift adds to m_e² on the four-dimensional side (diagnostic use).
Reduction harmonic_reduce(const Background4& bg, const KKConstants& k, const FiberHarmonic& fh, const Point& q,
                          double mass_shift = 0.0, const DerivBackend& b = kaluza::oracle_backend());

}  // namespace weylkk::diracops
