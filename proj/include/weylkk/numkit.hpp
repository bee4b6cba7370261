#pragma once

// Dense multi-index arrays, chart points and finite-difference stencils.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "weylkk/errors.hpp"

namespace weylkk::numkit {

using Real = double;
using Complex = std::complex<double>;

inline constexpr int kMaxDim = 11;

/// Chart coordinates q^i of a single point (geometric units).
class Point {
 public:
  Point() = default;
  explicit Point(int dim);
  Point(std::initializer_list<double> coords);
  explicit Point(std::span<const double> coords);

  int dim() const { return dim_; }
  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  Point shifted(int dir, double dx) const {
    Point q = *this;
    q.c_[static_cast<std::size_t>(dir)] += dx;
    return q;
  }

  bool finite() const;
  std::span<const double> coords() const { return {c_.data(), static_cast<std::size_t>(dim_)}; }

 private:
  std::array<double, kMaxDim> c_{};
  int dim_ = 0;
};

enum class Variance : std::uint8_t { upper, lower };

/// Dense row-major tensor with per-slot variance flags.
template <class T>
class MultiArray {
 public:
  using value_type = T;

  MultiArray() = default;
  MultiArray(std::vector<int> shape, std::vector<Variance> variance, T fill = T{})
      : shape_(std::move(shape)), variance_(std::move(variance)) {
    if (shape_.size() != variance_.size()) throw ShapeError("shape/variance rank mismatch");
    std::size_t n = 1;
    for (int s : shape_) {
      if (s <= 0) throw ShapeError("non-positive extent");
      n *= static_cast<std::size_t>(s);
    }
    strides_.assign(shape_.size(), 1);
    for (int k = static_cast<int>(shape_.size()) - 2; k >= 0; --k)
      strides_[k] = strides_[k + 1] * shape_[k + 1];
    data_.assign(n, fill);
  }

  int rank() const { return static_cast<int>(shape_.size()); }
  const std::vector<int>& shape() const { return shape_; }
  const std::vector<Variance>& variance() const { return variance_; }
  std::size_t size() const { return data_.size(); }
  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }

  template <class... I>
  T& operator()(I... idx) {
    return data_[offset({static_cast<int>(idx)...})];
  }
  template <class... I>
  const T& operator()(I... idx) const {
    return data_[offset({static_cast<int>(idx)...})];
  }
  T& at(std::span<const int> idx) { return data_[offset(idx)]; }
  const T& at(std::span<const int> idx) const { return data_[offset(idx)]; }

  MultiArray& operator+=(const MultiArray& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  MultiArray& operator-=(const MultiArray& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  MultiArray& operator*=(double s) {
    for (auto& v : data_) v *= s;
    return *this;
  }
  friend MultiArray operator+(MultiArray a, const MultiArray& b) { return a += b; }
  friend MultiArray operator-(MultiArray a, const MultiArray& b) { return a -= b; }
  friend MultiArray operator*(MultiArray a, double s) { return a *= s; }
  friend MultiArray operator*(double s, MultiArray a) { return a *= s; }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, static_cast<double>(std::abs(v)));
    return m;
  }

 private:
  std::size_t offset(std::span<const int> idx) const {
    std::size_t off = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) off += static_cast<std::size_t>(idx[k] * strides_[k]);
    return off;
  }
  std::size_t offset(std::initializer_list<int> idx) const {
    return offset(std::span<const int>(idx.begin(), idx.size()));
  }
  void check_same(const MultiArray& o) const {
    if (o.shape_ != shape_) throw ShapeError("extent mismatch in elementwise operation");
  }

  std::vector<int> shape_;
  std::vector<Variance> variance_;
  std::vector<int> strides_;
  std::vector<T> data_;
};

using RealArray = MultiArray<double>;

/// Sums over the paired upper slot `slot_u` and lower slot `slot_l`.
template <class T>
MultiArray<T> contract(const MultiArray<T>& a, int slot_u, int slot_l) {
  const int r = a.rank();
  if (slot_u < 0 || slot_l < 0 || slot_u >= r || slot_l >= r || slot_u == slot_l)
    throw ShapeError("contract: invalid slots");
  if (a.variance()[slot_u] != Variance::upper || a.variance()[slot_l] != Variance::lower)
    throw VarianceError("contract pairs one upper with one lower slot");
  if (a.shape()[slot_u] != a.shape()[slot_l]) throw ShapeError("contract: extent mismatch");

  std::vector<int> shape;
  std::vector<Variance> var;
  for (int k = 0; k < r; ++k) {
    if (k == slot_u || k == slot_l) continue;
    shape.push_back(a.shape()[k]);
    var.push_back(a.variance()[k]);
  }
  if (shape.empty()) {
    shape.push_back(1);
    var.push_back(Variance::upper);
  }
  MultiArray<T> out(shape, var, T{});
  std::vector<int> idx(static_cast<std::size_t>(r), 0);
  std::vector<int> oidx;
  const int n = a.shape()[slot_u];
  // iterate over all output positions
  const std::size_t total = out.size();
  std::vector<int> pos(shape.size(), 0);
  for (std::size_t lin = 0; lin < total; ++lin) {
    int j = 0;
    for (int k = 0; k < r; ++k) {
      if (k == slot_u || k == slot_l) continue;
      idx[static_cast<std::size_t>(k)] = r == 2 ? 0 : pos[static_cast<std::size_t>(j++)];
    }
    T acc{};
    for (int s = 0; s < n; ++s) {
      idx[static_cast<std::size_t>(slot_u)] = s;
      idx[static_cast<std::size_t>(slot_l)] = s;
      acc += a.at(idx);
    }
    out.at(pos) = acc;
    for (int k = static_cast<int>(pos.size()) - 1; k >= 0; --k) {
      if (++pos[static_cast<std::size_t>(k)] < shape[static_cast<std::size_t>(k)]) break;
      pos[static_cast<std::size_t>(k)] = 0;
    }
  }
  return out;
}

/// Tensor product; slots of `a` come first.
template <class T>
MultiArray<T> outer(const MultiArray<T>& a, const MultiArray<T>& b) {
  std::vector<int> shape = a.shape();
  std::vector<Variance> var = a.variance();
  shape.insert(shape.end(), b.shape().begin(), b.shape().end());
  var.insert(var.end(), b.variance().begin(), b.variance().end());
  MultiArray<T> out(shape, var);
  auto od = out.data();
  auto ad = a.data();
  auto bd = b.data();
  for (std::size_t i = 0; i < ad.size(); ++i)
    for (std::size_t j = 0; j < bd.size(); ++j) od[i * bd.size() + j] = ad[i] * bd[j];
  return out;
}

// ---------------------------------------------------------------------------
// Finite differences

enum class Scheme { central2, central4, richardson };

struct DerivBackend {
  Scheme scheme = Scheme::central4;
  double step = 1e-3;
  // Multiply the step by max(1, |q^dir|) in each direction.
  bool scale_with_coordinate = false;

  double step_for(const Point& p, int dir) const {
    if (!(step > 0.0)) throw DomainError("derivative step must be positive");
    return scale_with_coordinate ? step * std::max(1.0, std::abs(p[dir])) : step;
  }
};

std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string& s);

namespace detail {

inline bool finite_value(double v) { return std::isfinite(v); }
inline bool finite_value(const Complex& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }
template <class Derived>
bool finite_value(const Eigen::DenseBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (!finite_value(m.derived().coeff(i))) return false;
  return true;
}
template <class T>
bool finite_value(const MultiArray<T>& a) {
  for (const auto& v : a.data())
    if (!finite_value(v)) return false;
  return true;
}
template <class T, std::size_t N>
bool finite_value(const std::array<T, N>& a) {
  for (const auto& v : a)
    if (!finite_value(v)) return false;
  return true;
}

template <class V>
V checked(V v) {
  if (!finite_value(v)) throw NonFiniteSample("non-finite sample in finite-difference stencil");
  return v;
}

template <class F, class V = std::decay_t<std::invoke_result_t<F&, const Point&>>>
V central2(F& f, const Point& p, int dir, double h) {
  V a = checked<V>(f(p.shifted(dir, h)));
  V b = checked<V>(f(p.shifted(dir, -h)));
  return (a - b) * (1.0 / (2.0 * h));
}

template <class F, class V = std::decay_t<std::invoke_result_t<F&, const Point&>>>
V central4(F& f, const Point& p, int dir, double h) {
  V f1 = checked<V>(f(p.shifted(dir, h)));
  V fm1 = checked<V>(f(p.shifted(dir, -h)));
  V f2 = checked<V>(f(p.shifted(dir, 2.0 * h)));
  V fm2 = checked<V>(f(p.shifted(dir, -2.0 * h)));
  V num = (f1 - fm1) * 8.0 - (f2 - fm2);
  return num * (1.0 / (12.0 * h));
}

template <class F, class V = std::decay_t<std::invoke_result_t<F&, const Point&>>>
V second_central2(F& f, const Point& p, int dir, double h) {
  V f0 = checked<V>(f(p));
  V a = checked<V>(f(p.shifted(dir, h)));
  V b = checked<V>(f(p.shifted(dir, -h)));
  return (a + b - f0 * 2.0) * (1.0 / (h * h));
}

template <class F, class V = std::decay_t<std::invoke_result_t<F&, const Point&>>>
V second_central4(F& f, const Point& p, int dir, double h) {
  V f0 = checked<V>(f(p));
  V f1 = checked<V>(f(p.shifted(dir, h)));
  V fm1 = checked<V>(f(p.shifted(dir, -h)));
  V f2 = checked<V>(f(p.shifted(dir, 2.0 * h)));
  V fm2 = checked<V>(f(p.shifted(dir, -2.0 * h)));
  V num = (f1 + fm1) * 16.0 - (f2 + fm2) - f0 * 30.0;
  return num * (1.0 / (12.0 * h * h));
}

}  // namespace detail

/// Approximates ∂f/∂q^dir at p.
template <class F>
auto fd_derive(F&& f, const Point& p, int dir, const DerivBackend& b)
    -> std::decay_t<std::invoke_result_t<F&, const Point&>> {
  using V = std::decay_t<std::invoke_result_t<F&, const Point&>>;
  if (dir < 0 || dir >= p.dim()) throw DomainError("fd_derive: direction out of range");
  const double h = b.step_for(p, dir);
  switch (b.scheme) {
    case Scheme::central2:
      return detail::central2(f, p, dir, h);
    case Scheme::central4:
      return detail::central4(f, p, dir, h);
    case Scheme::richardson: {
      V coarse = detail::central4(f, p, dir, h);
      V fine = detail::central4(f, p, dir, 0.5 * h);
      return (fine * 16.0 - coarse) * (1.0 / 15.0);
    }
  }
  throw DomainError("unknown scheme");
}

/// Approximates ∂²f/∂q^i∂q^j at p. Pure second derivatives use the
/// dedicated symmetric stencil; mixed ones nest two first-derivative passes.
template <class F>
auto fd_second(F&& f, const Point& p, int i, int j, const DerivBackend& b)
    -> std::decay_t<std::invoke_result_t<F&, const Point&>> {
  using V = std::decay_t<std::invoke_result_t<F&, const Point&>>;
  if (i != j) {
    auto inner = [&](const Point& q) -> V { return fd_derive(f, q, j, b); };
    return fd_derive(inner, p, i, b);
  }
  const double h = b.step_for(p, i);
  switch (b.scheme) {
    case Scheme::central2:
      return detail::second_central2(f, p, i, h);
    case Scheme::central4:
      return detail::second_central4(f, p, i, h);
    case Scheme::richardson: {
      V coarse = detail::second_central4(f, p, i, h);
      V fine = detail::second_central4(f, p, i, 0.5 * h);
      return (fine * 16.0 - coarse) * (1.0 / 15.0);
    }
  }
  throw DomainError("unknown scheme");
}

/// Runs body(i) for i in [0, n) on a fixed worker pool. Results must be
/// written to per-index slots; callers reduce afterwards in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Worker count: WEYLKK_THREADS if set, else hardware concurrency.
unsigned worker_count();

}  // namespace weylkk::numkit
