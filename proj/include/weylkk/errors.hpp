#pragma once

#include <stdexcept>
#include <string>

namespace weylkk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
  using Error::Error;
};
struct VarianceError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct NonFiniteSample : Error {
  using Error::Error;
};
struct SingularPoint : Error {
  using Error::Error;
};

/// Raised when the Maurer-Cartan matrix is too ill conditioned to invert.
struct ChartBreakdown : Error {
  ChartBreakdown(const std::string& what, double cond) : Error(what), condition(cond) {}
  double condition;
};

/// Raised by the algebra suite; carries the offending index tuple.
struct IdentityFailure : Error {
  IdentityFailure(const std::string& family, std::string tuple, double residual)
      : Error(family + " failed at " + tuple + " (residual " + std::to_string(residual) + ")"),
        family(family),
        indices(std::move(tuple)),
        residual(residual) {}
  std::string family;
  std::string indices;
  double residual;
};

struct UsageError : Error {
  using Error::Error;
};

}  // namespace weylkk
