#include <cmath>

#include "weylkk/diracops.hpp"
#include "weylkk/errors.hpp"

namespace weylkk::diracops {

std::size_t Lattice::sites() const {
  std::size_t n = 1;
  for (int e : extent) {
    if (e <= 0) throw ShapeError("lattice extents must be positive");
    n *= static_cast<std::size_t>(e);
  }
  return n;
}

std::size_t Lattice::index(const std::array<int, 4>& i) const {
  std::size_t idx = 0;
  for (int a = 0; a < 4; ++a) idx = idx * extent[a] + i[a];
  return idx;
}

std::array<int, 4> Lattice::coords(std::size_t idx) const {
  std::array<int, 4> i{};
  for (int a = 3; a >= 0; --a) {
    i[a] = static_cast<int>(idx % extent[a]);
    idx /= extent[a];
  }
  return i;
}

Point Lattice::site(std::size_t idx) const {
  const auto i = coords(idx);
  return Point{origin[0] + i[0] * spacing[0], origin[1] + i[1] * spacing[1], origin[2] + i[2] * spacing[2],
               origin[3] + i[3] * spacing[3]};
}

bool Lattice::interior(std::size_t idx, int margin) const {
  const auto i = coords(idx);
  for (int a = 0; a < 4; ++a) {
    if (periodic[a]) continue;
    if (i[a] < margin || i[a] >= extent[a] - margin) return false;
  }
  return true;
}

SpinorGrid SpinorGrid::sample(const Lattice& l, const SpinorField& f) {
  SpinorGrid g;
  g.lattice = l;
  g.values.resize(l.sites());
  numkit::parallel_for(g.values.size(), [&](std::size_t s) { g.values[s] = f(l.site(s)); });
  return g;
}

double SpinorGrid::max_norm(int margin) const {
  double m = 0.0;
  for (std::size_t s = 0; s < values.size(); ++s)
    if (margin == 0 || lattice.interior(s, margin)) m = std::max(m, values[s].norm());
  return m;
}

SpinorGrid SpinorGrid::operator-(const SpinorGrid& o) const {
  if (o.values.size() != values.size() || o.lattice.extent != lattice.extent)
    throw ShapeError("spinor grids differ in shape");
  SpinorGrid out = *this;
  for (std::size_t s = 0; s < values.size(); ++s) out.values[s] -= o.values[s];
  return out;
}

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

// Stencil weights (times 1/(12h) or 1/(12h²)) for site i of n along one axis.
struct Stencil {
  int start = 0;
  std::array<double, 6> w{};
  int len = 0;
};

Stencil first_stencil(int i, int n, bool periodic) {
  Stencil s;
  if (periodic || (i >= 2 && i <= n - 3)) {
    s.start = i - 2;
    s.w = {1, -8, 0, 8, -1, 0};
    s.len = 5;
    return s;
  }
  const bool left = i < 2;
  const int off = left ? i : n - 1 - i;
  std::array<double, 6> w = off == 0 ? std::array<double, 6>{-25, 48, -36, 16, -3, 0}
                                     : std::array<double, 6>{-3, -10, 18, -6, 1, 0};
  s.len = 5;
  if (left) {
    s.start = 0;
    s.w = w;
  } else {
    s.start = n - 5;
    for (int k = 0; k < 5; ++k) s.w[k] = -w[4 - k];
  }
  return s;
}

Stencil second_stencil(int i, int n, bool periodic) {
  Stencil s;
  if (periodic || (i >= 2 && i <= n - 3)) {
    s.start = i - 2;
    s.w = {-1, 16, -30, 16, -1, 0};
    s.len = 5;
    return s;
  }
  const bool left = i < 2;
  const int off = left ? i : n - 1 - i;
  std::array<double, 6> w = off == 0 ? std::array<double, 6>{45, -154, 214, -156, 61, -10}
                                     : std::array<double, 6>{10, -15, -4, 14, -6, 1};
  s.len = 6;
  if (left) {
    s.start = 0;
    s.w = w;
  } else {
    s.start = n - 6;
    for (int k = 0; k < 6; ++k) s.w[k] = w[5 - k];
  }
  return s;
}

SpinorGrid apply_axis(const SpinorGrid& g, int axis, bool second) {
  if (axis < 0 || axis > 3) throw DomainError("grid axis out of range");
  const Lattice& l = g.lattice;
  const int n = l.extent[axis];
  const bool per = l.periodic[axis];
  if (n < (per ? 5 : 6)) throw ShapeError("axis too short for fourth-order stencils");
  const double h = l.spacing[axis];
  if (!(h > 0.0)) throw DomainError("lattice spacing must be positive");
  const double scale = second ? 1.0 / (12.0 * h * h) : 1.0 / (12.0 * h);
  SpinorGrid out;
  out.lattice = l;
  out.values.resize(g.values.size());
  out.one_sided = g.one_sided;
  if (!per) out.one_sided[axis] = true;
  numkit::parallel_for(g.values.size(), [&](std::size_t s) {
    auto i = l.coords(s);
    const Stencil st = second ? second_stencil(i[axis], n, per) : first_stencil(i[axis], n, per);
    Spinor acc = Spinor::Zero();
    for (int k = 0; k < st.len; ++k) {
      if (st.w[k] == 0.0) continue;
      auto j = i;
      j[axis] = per ? wrap(st.start + k, n) : st.start + k;
      acc += st.w[k] * g.values[l.index(j)];
    }
    out.values[s] = numkit::detail::checked(Spinor(scale * acc));
  });
  return out;
}

}  // namespace

SpinorGrid grid_derivative(const SpinorGrid& g, int axis) { return apply_axis(g, axis, false); }

SpinorGrid grid_second_derivative(const SpinorGrid& g, int axis) { return apply_axis(g, axis, true); }

}  // namespace weylkk::diracops
