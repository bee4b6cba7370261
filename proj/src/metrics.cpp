#include <cmath>

#include "weylkk/geometry.hpp"

namespace weylkk::geometry {

namespace {

std::vector<Eigen::MatrixXd> zeros(int n, int count) {
  return std::vector<Eigen::MatrixXd>(static_cast<std::size_t>(count), Eigen::MatrixXd::Zero(n, n));
}

}  // namespace

MetricField minkowski(int dim) {
  MetricField m;
  m.name = "minkowski";
  m.dim = dim;
  m.signature = {1, dim - 1};
  Eigen::MatrixXd eta = Eigen::MatrixXd::Identity(dim, dim);
  eta(0, 0) = -1.0;
  m.g = [eta](const Point&) { return eta; };
  m.d1 = [dim](const Point&) { return zeros(dim, dim); };
  m.d2 = [dim](const Point&) { return zeros(dim, dim * dim); };
  return m;
}

MetricField schwarzschild(double r_s, double eps) {
  if (!(r_s > 0.0)) throw DomainError("Schwarzschild radius must be positive");
  MetricField m;
  m.name = "schwarzschild";
  m.dim = 4;
  m.signature = {1, 3};
  m.guard = [r_s, eps](const Point& p) {
    if (!(p[1] >= (1.0 + eps) * r_s))
      throw SingularPoint("Schwarzschild chart sampled inside the guard band r >= (1+eps) r_S");
    const double s = std::sin(p[2]);
    if (std::abs(s) < 1e-8) throw SingularPoint("Schwarzschild chart sampled on the polar axis");
  };
  m.g = [r_s](const Point& p) {
    const double r = p[1], th = p[2];
    const double f = 1.0 - r_s / r;
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(4, 4);
    g(0, 0) = -f;
    g(1, 1) = 1.0 / f;
    g(2, 2) = r * r;
    g(3, 3) = r * r * std::sin(th) * std::sin(th);
    return g;
  };
  m.d1 = [r_s](const Point& p) {
    const double r = p[1], th = p[2];
    const double f = 1.0 - r_s / r, fp = r_s / (r * r);
    auto d = zeros(4, 4);
    d[1](0, 0) = -fp;
    d[1](1, 1) = -fp / (f * f);
    d[1](2, 2) = 2.0 * r;
    d[1](3, 3) = 2.0 * r * std::sin(th) * std::sin(th);
    d[2](3, 3) = r * r * std::sin(2.0 * th);
    return d;
  };
  m.d2 = [r_s](const Point& p) {
    const double r = p[1], th = p[2];
    const double f = 1.0 - r_s / r, fp = r_s / (r * r), fpp = -2.0 * r_s / (r * r * r);
    auto d = zeros(4, 16);
    Eigen::MatrixXd& rr = d[1 * 4 + 1];
    rr(0, 0) = -fpp;
    rr(1, 1) = 2.0 * fp * fp / (f * f * f) - fpp / (f * f);
    rr(2, 2) = 2.0;
    rr(3, 3) = 2.0 * std::sin(th) * std::sin(th);
    d[1 * 4 + 2](3, 3) = 2.0 * r * std::sin(2.0 * th);
    d[2 * 4 + 1](3, 3) = 2.0 * r * std::sin(2.0 * th);
    d[2 * 4 + 2](3, 3) = 2.0 * r * r * std::cos(2.0 * th);
    return d;
  };
  return m;
}

MetricField sphere_block(double a) {
  if (!(a > 0.0)) throw DomainError("sphere radius must be positive");
  MetricField m;
  m.name = "sphere_block";
  m.dim = 4;
  m.signature = {1, 3};
  m.guard = [](const Point& p) {
    if (std::abs(std::sin(p[2])) < 1e-8) throw SingularPoint("sphere block sampled on the polar axis");
  };
  m.g = [a](const Point& p) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(4, 4);
    g(0, 0) = -1.0;
    g(1, 1) = 1.0;
    g(2, 2) = a * a;
    g(3, 3) = a * a * std::sin(p[2]) * std::sin(p[2]);
    return g;
  };
  return m;
}

MetricField einstein_static(double a) {
  if (!(a > 0.0)) throw DomainError("radius must be positive");
  MetricField m;
  m.name = "einstein_static";
  m.dim = 4;
  m.signature = {1, 3};
  m.guard = [](const Point& p) {
    if (std::abs(std::sin(p[1])) < 1e-8 || std::abs(std::sin(p[2])) < 1e-8)
      throw SingularPoint("Einstein static chart sampled on a coordinate axis");
  };
  m.g = [a](const Point& p) {
    const double sc = std::sin(p[1]), st = std::sin(p[2]);
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(4, 4);
    g(0, 0) = -1.0;
    g(1, 1) = a * a;
    g(2, 2) = a * a * sc * sc;
    g(3, 3) = a * a * sc * sc * st * st;
    return g;
  };
  return m;
}

}  // namespace weylkk::geometry
