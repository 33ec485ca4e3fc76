#pragma once

#include <complex>
#include <cstdint>
#include <numbers>

#include <Eigen/Dense>

namespace clusterlab {

using cplx = std::complex<double>;
using Mask = std::uint64_t;

using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Largest chain handled by dense matrices (dim 2^14 = 16384).
inline constexpr int kDenseLimit = 14;
// Largest chain a StateVector may hold.
inline constexpr int kStateLimit = 30;
// Largest support of a phase polynomial expanded into Pauli terms.
inline constexpr int kExpansionLimit = 16;
// Coefficients below this magnitude are dropped.
inline constexpr double kPruneTol = 1e-12;
// PauliString masks are 64 bits wide.
inline constexpr int kMaxSites = 64;

inline Mask bit(int site) { return Mask{1} << (site - 1); }

}  // namespace clusterlab
