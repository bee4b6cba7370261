#include "weylkk/numkit.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace weylkk::numkit {

Point::Point(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim) throw DomainError("point dimension out of range");
}

Point::Point(std::initializer_list<double> coords) : Point(static_cast<int>(coords.size())) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Point::Point(std::span<const double> coords) : Point(static_cast<int>(coords.size())) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

bool Point::finite() const {
  for (int i = 0; i < dim_; ++i)
    if (!std::isfinite(c_[static_cast<std::size_t>(i)])) return false;
  return true;
}

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::central2:
      return "central2";
    case Scheme::central4:
      return "central4";
    case Scheme::richardson:
      return "richardson";
  }
  return "unknown";
}

Scheme parse_scheme(const std::string& s) {
  if (s == "central2") return Scheme::central2;
  if (s == "central4") return Scheme::central4;
  if (s == "richardson") return Scheme::richardson;
  throw DomainError("unknown derivative scheme: " + s);
}

unsigned worker_count() {
  if (const char* env = std::getenv("WEYLKK_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1u : hc;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace weylkk::numkit
