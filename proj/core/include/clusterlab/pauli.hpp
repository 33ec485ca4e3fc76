#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>

#include "clusterlab/state.hpp"
#include "clusterlab/types.hpp"

namespace clusterlab {

enum class Letter : unsigned char { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(Letter l);

// i^phase times a tensor product of Hermitian letters, stored as x/z bit
// masks. Y is kept as its own letter, so the phase is exactly the prefactor.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n_sites);
  PauliString(int n_sites, Mask x, Mask z, int phase_exponent = 0);

  static PauliString single(int n_sites, int site, Letter l);
  // Parses "Z1 X2 Z3" (1-indexed). "I" or "" is the identity. An optional
  // leading "-", "i" or "-i" token sets the phase.
  static PauliString parse(std::string_view text, int n_sites);

  int n_sites() const { return n_; }
  Mask x_mask() const { return x_; }
  Mask z_mask() const { return z_; }
  int phase_exponent() const { return phase_; }
  cplx phase() const;

  Letter letter(int site) const;
  void set_letter(int site, Letter l);
  PauliString with_phase(int phase_exponent) const;

  int weight() const;
  int y_count() const;
  bool is_identity() const { return x_ == 0 && z_ == 0; }

  // Letters only, e.g. "Z1 Y2"; the identity prints as "I".
  std::string label() const;
  // Label prefixed with the phase ("-i Z1 Y2") when it is not +1.
  std::string to_string() const;

  bool operator==(const PauliString&) const = default;

 private:
  int n_ = 0;
  Mask x_ = 0;
  Mask z_ = 0;
  int phase_ = 0;
};

PauliString pauli_mul(const PauliString& a, const PauliString& b);
PauliString operator*(const PauliString& a, const PauliString& b);
bool commutes(const PauliString& a, const PauliString& b);

// Phase-free key of a Hermitian Pauli string.
struct PauliKey {
  Mask x = 0;
  Mask z = 0;
  auto operator<=>(const PauliKey&) const = default;
};

class OperatorSum {
 public:
  using Terms = std::map<PauliKey, cplx>;

  explicit OperatorSum(int n_sites);
  OperatorSum(const PauliString& p, cplx coeff = 1.0);

  static OperatorSum identity(int n_sites, cplx coeff = 1.0);
  static OperatorSum parse(std::string_view text, int n_sites, cplx coeff = 1.0);

  int n_sites() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(PauliKey key, cplx coeff);
  void add(const PauliString& p, cplx coeff = 1.0);
  // Coefficient of the Hermitian string with the letters of p (phase ignored).
  cplx coefficient(const PauliString& p) const;
  cplx coefficient(std::string_view label) const;

  void prune(double tol = kPruneTol);
  OperatorSum adjoint() const;
  bool is_hermitian(double tol = kPruneTol) const;
  // True when the dense matrix has no imaginary entries.
  bool is_real_matrix(double tol = kPruneTol) const;
  Mask support() const;
  double max_abs_diff(const OperatorSum& other) const;
  double max_abs_coefficient() const;

  OperatorSum& operator+=(const OperatorSum& other);
  OperatorSum& operator-=(const OperatorSum& other);
  OperatorSum& operator*=(cplx s);

  std::string to_string() const;

 private:
  int n_;
  Terms terms_;
};

OperatorSum opsum_combine(const OperatorSum& a, const OperatorSum& b, cplx ca, cplx cb);
OperatorSum opsum_mul(const OperatorSum& a, const OperatorSum& b);

OperatorSum operator+(const OperatorSum& a, const OperatorSum& b);
OperatorSum operator-(const OperatorSum& a, const OperatorSum& b);
OperatorSum operator*(const OperatorSum& a, const OperatorSum& b);
OperatorSum operator*(cplx s, const OperatorSum& a);
OperatorSum operator*(const OperatorSum& a, cplx s);

OperatorSum conjugate_by_hadamard(const OperatorSum& op, int site);

enum class Axis { X, Z };

// Axis X: conjugation by e^{-i angle X/2}, so Z -> Z cos - Y sin.
// Axis Z: conjugation by e^{+i angle Z/2}, so X -> X cos - Y sin.
OperatorSum conjugate_by_rotation(const OperatorSum& op, Axis axis, int site, double angle);

// Conjugation by a Pauli string: anticommuting terms change sign.
OperatorSum conjugate_by_pauli(const OperatorSum& op, const PauliString& p);

// Conjugation by e^{-i angle P/2} for a Hermitian Pauli string P.
OperatorSum conjugate_by_pauli_rotation(const OperatorSum& op, const PauliString& p, double angle);

// Conjugation by CX with the given control and target.
OperatorSum conjugate_by_cx(const OperatorSum& op, int control, int target);

Matrix opsum_to_matrix(const OperatorSum& op);

// Matrix-free y = op * x; x and y must not alias.
void opsum_apply(const OperatorSum& op, const cplx* x, cplx* y, std::size_t dim);
Vector opsum_apply(const OperatorSum& op, const Vector& v);
// Real arithmetic variant; requires op.is_real_matrix().
void opsum_apply_real(const OperatorSum& op, const double* x, double* y, std::size_t dim);
StateVector opsum_apply(const OperatorSum& op, const StateVector& v);

// <v|op|v>
cplx expectation(const OperatorSum& op, const StateVector& v);

}  // namespace clusterlab
