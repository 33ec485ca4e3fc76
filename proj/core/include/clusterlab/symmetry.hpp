#pragma once

#include <string>
#include <variant>
#include <vector>

#include "clusterlab/chain.hpp"
#include "clusterlab/models.hpp"
#include "clusterlab/pauli.hpp"

namespace clusterlab {

struct SymmetryOperator {
  std::string label;
  int n_sites = 0;
  std::variant<OperatorSum, Matrix> form;

  bool is_pauli_sum() const { return std::holds_alternative<OperatorSum>(form); }
  const OperatorSum& sum() const { return std::get<OperatorSum>(form); }
  Matrix dense() const;
};

// Circuit V = U * CZ_layer^{-1} carrying the ZXZ model onto `spec`'s model.
Circuit zxz_map_circuit(const ChainSpec& spec);
// V op V^dagger.
OperatorSum map_from_zxz(const ChainSpec& spec, const OperatorSum& op);

// (eta_even, eta_odd) = V (prod_{even/odd} X) V^dagger.
std::pair<SymmetryOperator, SymmetryOperator> eta_generators(const ChainSpec& spec);

// ||A H - H A||_max.
double commutator_norm(const SymmetryOperator& a, const OperatorSum& h);
double commutator_norm(const OperatorSum& a, const OperatorSum& b);

// P = (1 + eta_even eta_odd) / 2.
Matrix symmetric_projector(const ChainSpec& spec);
Matrix project_hamiltonian(const OperatorSum& h, const Matrix& p);

// Kramers-Wannier type operator D = T D_even D_odd (closed chains).
SymmetryOperator noninvertible_D(const ChainSpec& spec);

// min over gamma of ||D A - e^{i gamma} B D||_max.
double intertwine_check(const Matrix& d, const OperatorSum& a, const OperatorSum& b);

struct NoninvertibleReport {
  double hamiltonian_residual = 0.0;  // D H vs H D
  double map_residual = 0.0;          // max_j of D X_j vs Z_{j-1} Z_{j+1} D (mapped)
  double sector_residual = 0.0;       // ||D (1 - eta) / 2||_max
  double min_singular_value = 0.0;
};
NoninvertibleReport noninvertible_check(const ChainSpec& spec);

SymmetryOperator kt_operator(const ChainSpec& spec);

struct KtReport {
  double x_residual = 0.0;   // max_j (KT) X_j vs X_j (KT)
  double k_residual = 0.0;   // max_j (KT) K_j vs Z_{j-1} Z_{j+1} (KT)
  std::vector<double> x_per_site;
  std::vector<double> k_per_site;
};
KtReport kt_check(const ChainSpec& spec);

struct StringOrder {
  double real = 0.0;
  double imag = 0.0;
};

// Throws IndexError unless i < j and every site in [i, j] is retained.
void check_string_range(const ModelBundle& bundle, int i, int j);

// <g| K_i K_{i+1} ... K_j |g>
StringOrder string_order(const StateVector& state, const ModelBundle& bundle, int i, int j);
StringOrder string_order(const StateVector& state, const ChainSpec& spec, int i, int j);
OperatorSum string_operator(const ModelBundle& bundle, int i, int j);

enum class Edge { Left, Right };
std::string to_string(Edge e);

struct LogicalTriple {
  int site = 0;  // bare site the triple is dressed from
  OperatorSum x{1}, y{1}, z{1};
};

struct LogicalSet {
  int order = 0;
  std::vector<LogicalTriple> left;   // index n-1 holds X^n, Y^n, Z^n
  std::vector<LogicalTriple> right;
  const std::vector<LogicalTriple>& edge(Edge e) const { return e == Edge::Left ? left : right; }
};

LogicalSet edge_logicals(const ChainSpec& spec);

// omega with Ug Uh = omega Uh Ug; StructureError unless omega = +-1.
int projective_phase(const OperatorSum& ug, const OperatorSum& uh);

struct EdgeAction {
  Edge edge = Edge::Left;
  std::string generator;  // "even" or "odd"
  char logical = 'X';
  int index = 1;
  int sign = 0;           // eta L eta = sign L
};

std::vector<EdgeAction> edge_symmetry_action(const ChainSpec& spec);

// Edge operator whose conjugation reproduces the action of eta on that
// edge's logicals, built as a product of logical X/Y/Z.
OperatorSum edge_representation(const ChainSpec& spec, Edge edge, const std::string& generator);

struct AnomalyRow {
  std::string label;  // e.g. "X1_left,eta"
  double norm = 0.0;
};

std::vector<AnomalyRow> anomaly_check(const ChainSpec& spec);

}  // namespace clusterlab
