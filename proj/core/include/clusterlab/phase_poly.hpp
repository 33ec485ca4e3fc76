#pragma once

#include <initializer_list>
#include <map>
#include <span>

#include "clusterlab/pauli.hpp"
#include "clusterlab/types.hpp"

namespace clusterlab {

// theta(x) = sum_S c_S prod_{j in S} x_j over Boolean x, representing the
// diagonal unitary U|x> = e^{i theta(x)}|x>. Keys are site bitmasks; the empty
// mask is a global phase. Angles are kept reduced to [0, 2pi).
class PhasePolynomial {
 public:
  using Coeffs = std::map<Mask, double>;

  explicit PhasePolynomial(int n_sites);

  int n_sites() const { return n_; }
  const Coeffs& coefficients() const { return coeffs_; }

  void add_monomial(Mask sites, double angle);
  void add_monomial(std::initializer_list<int> sites, double angle);
  double coefficient(Mask sites) const;

  double evaluate(Mask x) const;
  // Union of all non-empty monomials.
  Mask support() const;
  bool is_zero() const { return coeffs_.empty(); }
  PhasePolynomial negated() const;
  // Largest circular difference between matching coefficients.
  double max_abs_diff(const PhasePolynomial& other) const;

  PhasePolynomial& operator+=(const PhasePolynomial& other);

 private:
  int n_;
  Coeffs coeffs_;
};

enum class DiagonalKind { CZ, CP, CCZ, CNZ, CNP, ZROT, ZZ };

// CZ, CCZ and CNZ ignore `angle`. ZROT(phi) = e^{-i phi Z/2} on one site,
// ZZ(phi) = e^{-i phi Z Z/4} on two sites.
PhasePolynomial from_gate(DiagonalKind kind, std::span<const int> sites, double angle, int n_sites);

PhasePolynomial compose(const PhasePolynomial& p, const PhasePolynomial& q);

// delta(x) = theta(x ^ flips) - theta(x).
PhasePolynomial delta(const PhasePolynomial& p, Mask flips);
PhasePolynomial delta(const PhasePolynomial& p, int site);

// e^{i theta} as a sum of Z-monomials.
OperatorSum exp_to_opsum(const PhasePolynomial& p);

// U X_j U^dagger = X_j exp(i delta_j).
OperatorSum conjugate_x(const PhasePolynomial& p, int site);

// U op U^dagger for an arbitrary Pauli sum.
OperatorSum conjugate(const PhasePolynomial& p, const OperatorSum& op);

// Diagonal entries e^{i theta(x)} for every basis index x.
Vector diagonal(const PhasePolynomial& p);

}  // namespace clusterlab
