#pragma once

#include <stdexcept>
#include <string>

namespace clusterlab {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand sizes disagree (site counts, vector lengths).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a hard size limit (dense limit, expansion limit).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Malformed or unsupported argument.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Site or range index outside its valid domain.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Algebraic structure assumption violated (e.g. products not proportional).
class StructureError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace clusterlab
