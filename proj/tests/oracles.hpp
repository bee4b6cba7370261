#pragma once

// Independent reference values for the test suites. Nothing here calls into
// the library beyond plain data types.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline const Complex I(0.0, 1.0);

inline double minkowski_eta(int m, int n) { return m != n ? 0.0 : (m == 0 ? -1.0 : 1.0); }

/// 12 r_S² / r⁶.
inline double schwarzschild_kretschmann(double r_s, double r) { return 12.0 * r_s * r_s / std::pow(r, 6); }

/// (N − 2) / (4(N − 1)).
inline double gamma_squared(int N) { return (N - 2.0) / (4.0 * (N - 1.0)); }

/// Scalar curvature of a bi-invariant metric on the six-dimensional Lorentz fiber with radius λ_L.
inline double fiber_curvature(double lambda_L) { return 6.0 / (lambda_L * lambda_L); }

/// λ_C^{2/3} r_S^{1/3} in the same units as the inputs.
inline double gravity_threshold(double lambda_C, double r_s) { return std::cbrt(lambda_C * lambda_C * r_s); }

inline std::array<CMat, 3> pauli() {
  CMat s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, -I, I, 0;
  s3 << 1, 0, 0, -1;
  return {s1, s2, s3};
}

/// Chiral gamma matrices with {γ^m, γ^n} = −2η^{mn}.
inline std::array<CMat, 4> chiral_gammas() {
  const auto s = pauli();
  std::array<CMat, 4> g;
  for (auto& m : g) m = CMat::Zero(4, 4);
  g[0].block(0, 2, 2, 2) = CMat::Identity(2, 2);
  g[0].block(2, 0, 2, 2) = CMat::Identity(2, 2);
  for (int a = 0; a < 3; ++a) {
    g[a + 1].block(0, 2, 2, 2) = s[a];
    g[a + 1].block(2, 0, 2, 2) = -s[a];
  }
  return g;
}

/// H·Σ − iE·α with H_a = ½ε_abc F_bc and E_a = F_a0.
inline CMat fj_from_fields(const Eigen::Matrix4d& f) {
  const auto s = pauli();
  CMat out = CMat::Zero(4, 4);
  const Eigen::Vector3d H(f(2, 3), f(3, 1), f(1, 2));
  const Eigen::Vector3d E(f(1, 0), f(2, 0), f(3, 0));
  for (int a = 0; a < 3; ++a) {
    out.block(0, 0, 2, 2) += H(a) * s[a] - I * E(a) * s[a];
    out.block(2, 2, 2, 2) += H(a) * s[a] + I * E(a) * s[a];
  }
  return out;
}

inline Eigen::Matrix4d rotation_z(double theta) {
  Eigen::Matrix4d r = Eigen::Matrix4d::Identity();
  r(1, 1) = std::cos(theta);
  r(1, 2) = -std::sin(theta);
  r(2, 1) = std::sin(theta);
  r(2, 2) = std::cos(theta);
  return r;
}

inline Eigen::Matrix4d boost_x(double chi) {
  Eigen::Matrix4d b = Eigen::Matrix4d::Identity();
  b(0, 0) = b(1, 1) = std::cosh(chi);
  b(0, 1) = b(1, 0) = std::sinh(chi);
  return b;
}

using Metric = std::function<Eigen::MatrixXd(const std::vector<double>&)>;

/// Γ^i_{jk} from second-order central differences of g with step h, flattened as i*n*n + j*n + k.
inline std::vector<double> christoffel(const Metric& g, const std::vector<double>& x, double h = 1e-5) {
  const int n = static_cast<int>(x.size());
  std::vector<Eigen::MatrixXd> dg(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    auto xp = x, xm = x;
    xp[static_cast<std::size_t>(k)] += h;
    xm[static_cast<std::size_t>(k)] -= h;
    dg[static_cast<std::size_t>(k)] = (g(xp) - g(xm)) / (2.0 * h);
  }
  const Eigen::MatrixXd gi = g(x).inverse();
  std::vector<double> out(static_cast<std::size_t>(n * n * n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
          s += gi(i, l) * (dg[j](l, k) + dg[k](l, j) - dg[l](j, k));
        out[static_cast<std::size_t>(i * n * n + j * n + k)] = 0.5 * s;
      }
  return out;
}

/// Ψ = f(x¹) e^{iγ k·x} with f = 1 + a sin x¹ on flat space, and its exact d'Alembertian.
struct ModulatedWave {
  double gamma = 0.0;
  double a = 0.3;
  std::array<double, 4> k{0.2, 0.5, -0.3, 0.1};  // lower components k_μ

  double f(double x1) const { return 1.0 + a * std::sin(x1); }
  double df(double x1) const { return a * std::cos(x1); }
  double ddf(double x1) const { return -a * std::sin(x1); }
  double kk() const {
    double s = 0.0;
    for (int m = 0; m < 4; ++m) s += minkowski_eta(m, m) * k[m] * k[m];
    return s;
  }
  double phase(const std::array<double, 4>& x) const {
    double s = 0.0;
    for (int m = 0; m < 4; ++m) s += k[m] * x[m];
    return s;
  }
  double rho(const std::array<double, 4>& x) const { return f(x[1]) * f(x[1]); }
  double sigma(const std::array<double, 4>& x) const { return phase(x); }
  Complex psi(const std::array<double, 4>& x) const { return f(x[1]) * std::exp(I * gamma * phase(x)); }
  Complex box(const std::array<double, 4>& x) const {
    const double x1 = x[1];
    return (ddf(x1) + 2.0 * I * gamma * k[1] * df(x1) - gamma * gamma * kk() * f(x1)) * std::exp(I * gamma * phase(x));
  }
  /// g^{ij}∂σ∂σ + R_weyl on flat space.
  double hj(const std::array<double, 4>& x) const { return kk() - ddf(x[1]) / (gamma * gamma * f(x[1])); }
  /// ∂_i(ρ g^{ij}∂_jσ).
  double continuity(const std::array<double, 4>& x) const { return 2.0 * f(x[1]) * df(x[1]) * k[1]; }
};

inline std::vector<double> uniform_samples(std::uint64_t seed, int n, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = u(rng);
  return v;
}

template <class A, class B>
double max_abs_diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace oracle
