#pragma once

#include "clusterlab/pauli.hpp"
#include "clusterlab/types.hpp"

namespace clusterlab {

// Full spectrum of a Hermitian matrix plus eigenvectors for the lowest
// `keep` eigenvalues. Uses LAPACK tridiagonal reduction; the real symmetric
// path is taken when the input is real.
struct DenseEigen {
  RealVector values;  // ascending, all of them
  Matrix vectors;     // dim x keep
  bool real_path = false;
};

DenseEigen hermitian_eigen(const Matrix& h, int keep);
DenseEigen hermitian_eigen(const RealMatrix& h, int keep);
// Builds the dense matrix (real when possible) and diagonalizes it.
DenseEigen hermitian_eigen(const OperatorSum& h, int keep);

double lowest_eigenvalue(const OperatorSum& h);

RealMatrix opsum_to_real_matrix(const OperatorSum& op);

// Singular values, descending.
RealVector singular_values(const Matrix& m);

}  // namespace clusterlab
