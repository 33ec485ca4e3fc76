#pragma once

#include <cstddef>

#include "clusterlab/types.hpp"

namespace clusterlab {

// Amplitudes over 2^n computational basis states; site 1 is the least
// significant bit of the basis index.
class StateVector {
 public:
  explicit StateVector(int n_sites);
  StateVector(int n_sites, Vector amplitudes);

  static StateVector basis(int n_sites, std::size_t index);
  static StateVector plus(int n_sites);

  int n_sites() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }
  Vector& amplitudes() { return amps_; }
  cplx operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }
  cplx& operator[](std::size_t i) { return amps_[static_cast<Eigen::Index>(i)]; }

  double norm() const { return amps_.norm(); }
  void normalize();

 private:
  int n_;
  Vector amps_;
};

}  // namespace clusterlab
