#pragma once

#include <complex>
#include <stdexcept>

namespace edp {

using Complex = std::complex<double>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// An iterative process exhausted its budget before meeting tolerance.
struct ConvergenceError : Error {
  using Error::Error;
};

// Root bracketing or spectrum enumeration failed.
struct SolverError : Error {
  using Error::Error;
};

// A bound state was requested from a level whose validity flags are false.
struct InvalidLevelError : Error {
  using Error::Error;
};

}  // namespace edp
