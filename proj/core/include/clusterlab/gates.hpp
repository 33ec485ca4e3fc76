#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clusterlab/phase_poly.hpp"
#include "clusterlab/types.hpp"

namespace clusterlab {

enum class GateKind { H, X, Y, Z, CX, CZ, CP, CCZ, CNZ, CNP, RX, RZ, ZZ, CR, MS };

// Rotation conventions:
//   RX(phi) = e^{-i phi X/2}, RZ(phi) = e^{-i phi Z/2}, ZZ(phi) = e^{-i phi Z Z/4},
//   CR(phi) = e^{-i phi Z(x)X/2}, MS(phi) = e^{-i phi X(x)X/2}.
// CX lists the control first. CNZ/CNP act on N+1 sites.
struct Gate {
  GateKind kind = GateKind::H;
  std::vector<int> sites;
  double angle = 0.0;

  static Gate h(int s) { return {GateKind::H, {s}, 0.0}; }
  static Gate x(int s) { return {GateKind::X, {s}, 0.0}; }
  static Gate y(int s) { return {GateKind::Y, {s}, 0.0}; }
  static Gate z(int s) { return {GateKind::Z, {s}, 0.0}; }
  static Gate cx(int c, int t) { return {GateKind::CX, {c, t}, 0.0}; }
  static Gate cz(int a, int b) { return {GateKind::CZ, {a, b}, 0.0}; }
  static Gate cp(int a, int b, double phi) { return {GateKind::CP, {a, b}, phi}; }
  static Gate ccz(int a, int b, int c) { return {GateKind::CCZ, {a, b, c}, 0.0}; }
  static Gate cnz(std::vector<int> s) { return {GateKind::CNZ, std::move(s), 0.0}; }
  static Gate cnp(std::vector<int> s, double phi) { return {GateKind::CNP, std::move(s), phi}; }
  static Gate rx(int s, double phi) { return {GateKind::RX, {s}, phi}; }
  static Gate rz(int s, double phi) { return {GateKind::RZ, {s}, phi}; }
  static Gate zz(int a, int b, double phi) { return {GateKind::ZZ, {a, b}, phi}; }
  static Gate cr(int a, int b, double phi) { return {GateKind::CR, {a, b}, phi}; }
  static Gate ms(int a, int b, double phi) { return {GateKind::MS, {a, b}, phi}; }

  bool is_diagonal() const;
  std::string name() const;
};

using Circuit = std::vector<Gate>;

// Throws ArgumentError on wrong arity, repeated or out-of-range sites.
void validate(const Gate& g, int n_sites);

// 2^k x 2^k matrix on the gate's own sites; the first listed site is the
// most significant bit of the local index (textbook ordering).
Matrix local_matrix(const Gate& g);

// Full 2^n x 2^n matrix under the global convention (site 1 = LSB).
Matrix gate_to_matrix(const Gate& g, int n_sites);
Matrix circuit_to_matrix(const Circuit& c, int n_sites);

// Phase polynomial of a diagonal gate; nullopt for non-diagonal kinds.
std::optional<PhasePolynomial> to_phase_polynomial(const Gate& g, int n_sites);

// Minimum over a global phase gamma of ||A - e^{i gamma} B||_max.
double phase_optimized_residual(const Matrix& a, const Matrix& b);

// Residual between a target gate and the ordered product of `circuit`
// (circuit[0] acts first), both on max-site-index qubits.
double verify_decomposition(const Gate& target, const Circuit& circuit);

}  // namespace clusterlab
