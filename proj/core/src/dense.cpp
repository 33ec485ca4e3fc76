#include "clusterlab/dense.hpp"

#include <bit>
#include <complex>
#include <string>
#include <vector>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include "clusterlab/errors.hpp"

namespace clusterlab {

namespace {

lapack_complex_double* lc(cplx* p) { return reinterpret_cast<lapack_complex_double*>(p); }

void check(lapack_int info, const char* routine) {
  if (info != 0) {
    throw Error(std::string(routine) + " failed with info " + std::to_string(info));
  }
}

// Eigenvalues of the tridiagonal (d, e) and eigenvectors 1..keep.
void tridiagonal_solve(std::vector<double> d, std::vector<double> e, int keep, RealVector& values,
                       RealMatrix& z) {
  const lapack_int n = static_cast<lapack_int>(d.size());
  {
    std::vector<double> dd = d, ee = e;
    check(LAPACKE_dsterf(n, dd.data(), ee.data()), "dsterf");
    values = Eigen::Map<RealVector>(dd.data(), n);
  }
  if (keep <= 0) {
    z.resize(n, 0);
    return;
  }
  e.resize(static_cast<std::size_t>(n));
  lapack_int m = 0;
  std::vector<double> w(static_cast<std::size_t>(n));
  z.resize(n, keep);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(keep));
  lapack_logical tryrac = 1;
  check(LAPACKE_dstemr(LAPACK_COL_MAJOR, 'V', 'I', n, d.data(), e.data(), 0.0, 0.0, 1, keep, &m,
                       w.data(), z.data(), n, keep, isuppz.data(), &tryrac),
        "dstemr");
  if (m != keep) throw Error("dstemr returned fewer eigenvectors than requested");
}

}  // namespace

DenseEigen hermitian_eigen(const RealMatrix& h, int keep) {
  const lapack_int n = static_cast<lapack_int>(h.rows());
  if (h.cols() != n) throw DimensionError("matrix is not square");
  keep = std::min<int>(keep, static_cast<int>(n));
  DenseEigen out;
  out.real_path = true;
  RealMatrix a = h;
  std::vector<double> d(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(std::max<lapack_int>(n - 1, 1))),
      tau(static_cast<std::size_t>(std::max<lapack_int>(n - 1, 1)));
  check(LAPACKE_dsytrd(LAPACK_COL_MAJOR, 'L', n, a.data(), n, d.data(), e.data(), tau.data()), "dsytrd");
  RealMatrix z;
  e.resize(static_cast<std::size_t>(std::max<lapack_int>(n - 1, 0)));
  tridiagonal_solve(d, e, keep, out.values, z);
  if (keep > 0) {
    check(LAPACKE_dormtr(LAPACK_COL_MAJOR, 'L', 'L', 'N', n, keep, a.data(), n, tau.data(), z.data(), n),
          "dormtr");
    out.vectors = z.cast<cplx>();
  }
  return out;
}

DenseEigen hermitian_eigen(const Matrix& h, int keep) {
  const lapack_int n = static_cast<lapack_int>(h.rows());
  if (h.cols() != n) throw DimensionError("matrix is not square");
  keep = std::min<int>(keep, static_cast<int>(n));
  DenseEigen out;
  Matrix a = h;
  std::vector<double> d(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(std::max<lapack_int>(n - 1, 1)));
  std::vector<cplx> tau(static_cast<std::size_t>(std::max<lapack_int>(n - 1, 1)));
  check(LAPACKE_zhetrd(LAPACK_COL_MAJOR, 'L', n, lc(a.data()), n, d.data(), e.data(), lc(tau.data())), "zhetrd");
  RealMatrix z;
  e.resize(static_cast<std::size_t>(std::max<lapack_int>(n - 1, 0)));
  tridiagonal_solve(d, e, keep, out.values, z);
  if (keep > 0) {
    Matrix zc = z.cast<cplx>();
    check(LAPACKE_zunmtr(LAPACK_COL_MAJOR, 'L', 'L', 'N', n, keep, lc(a.data()), n, lc(tau.data()), lc(zc.data()), n),
          "zunmtr");
    out.vectors = std::move(zc);
  }
  return out;
}

RealMatrix opsum_to_real_matrix(const OperatorSum& op) {
  const int n = op.n_sites();
  if (n > kDenseLimit) {
    throw CapacityError("dense matrix requested for " + std::to_string(n) + " sites; limit is " +
                        std::to_string(kDenseLimit));
  }
  if (!op.is_real_matrix()) throw ArgumentError("operator has imaginary matrix entries");
  const Eigen::Index dim = Eigen::Index{1} << n;
  RealMatrix m = RealMatrix::Zero(dim, dim);
  for (const auto& [k, c] : op.terms()) {
    // real part of c * i^{#Y}
    const int ny = std::popcount(k.x & k.z) % 4;
    const double f = ny == 0 ? c.real() : ny == 1 ? -c.imag() : ny == 2 ? -c.real() : c.imag();
    for (Eigen::Index col = 0; col < dim; ++col) {
      const Mask b = static_cast<Mask>(col);
      m(static_cast<Eigen::Index>(b ^ k.x), col) += (std::popcount(b & k.z) & 1) ? -f : f;
    }
  }
  return m;
}

DenseEigen hermitian_eigen(const OperatorSum& h, int keep) {
  if (!h.is_hermitian()) throw ArgumentError("operator is not Hermitian");
  if (h.is_real_matrix()) return hermitian_eigen(opsum_to_real_matrix(h), keep);
  return hermitian_eigen(opsum_to_matrix(h), keep);
}

double lowest_eigenvalue(const OperatorSum& h) { return hermitian_eigen(h, 0).values[0]; }

RealVector singular_values(const Matrix& m) {
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues();
}

}  // namespace clusterlab
