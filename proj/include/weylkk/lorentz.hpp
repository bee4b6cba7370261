#pragma once

// Proper orthochronous Lorentz group: representations, exponential chart,
// Maurer-Cartan forms and the generator algebra.
//
// Pair basis: α = 0..5 ↔ (01),(02),(03),(12),(13),(23).
// Real vector generators (T_mn)^p_q = δ^p_m η_nq − δ^p_n η_mq, with T = iJ.
// Chart: D(y) = exp(−Σ_α y^α T_α), S(y) = exp(−i Σ_α y^α J_α) in every representation.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "weylkk/numkit.hpp"

namespace weylkk::lorentz {

using numkit::Complex;
using numkit::DerivBackend;
using CMat = Eigen::MatrixXcd;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec6 = Eigen::Matrix<double, 6, 1>;

enum class Rep { vector4, left, right, dirac };

std::string rep_name(Rep r);

inline constexpr std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Index of the unordered pair {m, n} in the pair basis, or −1 when m == n.
int pair_index(int m, int n);

double eta(int m, int n);
Mat4 eta_matrix();

/// Levi-Civita symbol with ε^{0123} = −1 (upper indices).
double epsilon_upper(int a, int b, int c, int d);

std::array<CMat, 3> pauli();
CMat sigma_block(int a);  // Σ_a = diag(σ_a, σ_a)
CMat alpha_block(int a);  // α_a = diag(σ_a, −σ_a)

/// Generator table J_mn (lower indices) of one representation, plus gamma matrices for dirac.
struct RepSet {
  Rep rep = Rep::dirac;
  int dim = 4;
  std::array<std::array<CMat, 4>, 4> J;
  std::array<CMat, 4> gamma;  // γ^m, dirac only
  CMat gamma5;

  const CMat& lower(int m, int n) const { return J[m][n]; }
  CMat upper(int m, int n) const { return eta(m, m) * eta(n, n) * J[m][n]; }
  const CMat& pair(int alpha) const { return J[kPairs[alpha].first][kPairs[alpha].second]; }
  CMat identity() const { return CMat::Identity(dim, dim); }
};

const RepSet& rep_set(Rep r);

/// Six chart parameters in the pair basis.
struct GroupPoint {
  Vec6 y = Vec6::Zero();

  static GroupPoint rotation(int axis, double theta);
  static GroupPoint boost(int axis, double rapidity);
  GroupPoint operator-() const { return GroupPoint{-y}; }
  double norm() const { return y.norm(); }
};

std::array<Mat4, 6> real_generators();

/// S(y) in the requested representation.
CMat exp_map(const GroupPoint& g, Rep r);
/// Real 4×4 Lorentz matrix D(y).
Mat4 lorentz_matrix(const GroupPoint& g);
Mat4 lorentz_matrix(const Vec6& y);

/// Coefficients c with M = −Σ c^β T_β (Frobenius projection).
Vec6 project_generators(const Mat4& m);

/// f[γ](α, β) = f^γ_{αβ} with [T_α, T_β] = f^γ_{αβ} T_γ.
const std::array<Mat6, 6>& structure_constants();

/// D T_α D^{-1} = Σ_β Ad(β, α) T_β.
Mat6 adjoint(const Mat4& d);

/// Ω^β_α: dD·D^{-1} = −Σ_β T_β Ω^β_α dy^α.
struct MCForms {
  GroupPoint y;
  Mat6 omega = Mat6::Identity();
  double condition = 1.0;
};

/// Finite-difference extraction by generator projection of ∂_αD·D^{-1}.
MCForms maurer_cartan(const GroupPoint& y, const DerivBackend& b = {});
/// Closed form φ(ad_X) with φ(z) = (e^z − 1)/z and X = −y·T.
MCForms maurer_cartan_exact(const GroupPoint& y);

inline constexpr double kChartConditionLimit = 1e8;

struct IdentityFamily {
  std::string name;
  double max_residual = 0.0;
  long checks = 0;
  bool pass = false;
};

struct IdentityReport {
  double tolerance = 1e-14;
  std::vector<IdentityFamily> families;
  bool all_pass() const;
};

/// Checks the generator algebra entrywise; throws IdentityFailure on the first violation.
IdentityReport identity_suite(double tol = 1e-14);

/// F_mn J^{mn} = H·Σ − iE·α in the dirac representation.
struct FJParts {
  Eigen::Vector3d sigma_part = Eigen::Vector3d::Zero();  // H_a = ½ε_abc F_bc
  Eigen::Vector3d alpha_part = Eigen::Vector3d::Zero();  // E_a = F_a0
};

FJParts fj_decompose(const Mat4& f);
CMat fj_matrix(const Mat4& f);  // Σ_{m,n} F_mn J^{mn}
CMat fj_reconstruct(const FJParts& parts);

}  // namespace weylkk::lorentz
