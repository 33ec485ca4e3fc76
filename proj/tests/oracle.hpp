#pragma once
// Independent dense reference builders. Everything here goes through explicit
// Kronecker products of 2x2 matrices, nothing from the library's bit tricks.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "clusterlab/pauli.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat pauli(char c) {
  Mat m = Mat::Zero(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// letters[j-1] acts on site j; site 1 is the least significant bit, so it is
// the rightmost Kronecker factor.
inline Mat string_matrix(const std::string& letters) {
  Mat m = Mat::Identity(1, 1);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) m = kron(m, pauli(*it));
  return m;
}

inline Mat site_op(int n, int site, char c) {
  std::string s(static_cast<std::size_t>(n), 'I');
  s[static_cast<std::size_t>(site - 1)] = c;
  return string_matrix(s);
}

inline Mat product(int n, const std::vector<std::pair<int, char>>& letters) {
  Mat m = Mat::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (auto [s, c] : letters) m = m * site_op(n, s, c);
  return m;
}

inline Mat opsum(const clusterlab::OperatorSum& op) {
  const int n = op.n_sites();
  Mat m = Mat::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (const auto& [k, c] : op.terms()) {
    std::string s(static_cast<std::size_t>(n), 'I');
    for (int j = 1; j <= n; ++j) {
      const bool x = (k.x >> (j - 1)) & 1, z = (k.z >> (j - 1)) & 1;
      s[static_cast<std::size_t>(j - 1)] = x && z ? 'Y' : x ? 'X' : z ? 'Z' : 'I';
    }
    m += c * string_matrix(s);
  }
  return m;
}

// Diagonal unitary with phase f(bits), bits[j-1] = x_j.
inline Mat diagonal(int n, const std::function<double(const std::vector<int>&)>& f) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Mat m = Mat::Zero(dim, dim);
  std::vector<int> bits(static_cast<std::size_t>(n));
  for (Eigen::Index b = 0; b < dim; ++b) {
    for (int j = 0; j < n; ++j) bits[static_cast<std::size_t>(j)] = static_cast<int>((b >> j) & 1);
    m(b, b) = std::polar(1.0, f(bits));
  }
  return m;
}

inline Mat hadamard(int n, int site) {
  return (site_op(n, site, 'X') + site_op(n, site, 'Z')) / std::sqrt(2.0);
}

// exp(-i t P / 2) for an involutory P.
inline Mat rotation(const Mat& p, double t) {
  return std::cos(t / 2) * Mat::Identity(p.rows(), p.cols()) - cplx(0, std::sin(t / 2)) * p;
}

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

// Sorted eigenvalues by Eigen's own solver.
inline Eigen::VectorXd eigenvalues(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace oracle
