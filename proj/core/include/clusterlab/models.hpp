#pragma once

#include <optional>
#include <vector>

#include "clusterlab/chain.hpp"
#include "clusterlab/circuits.hpp"
#include "clusterlab/pauli.hpp"

namespace clusterlab {

// Largest chain for which build() also stores the reference state.
inline constexpr int kReferenceStateLimit = 20;

struct ModelBundle {
  ChainSpec spec;
  std::vector<int> retained;               // site j of each stabilizer
  std::vector<OperatorSum> stabilizers;    // K_j = U X_j U^dagger
  OperatorSum hamiltonian{1};              // -sum_j K_j
  Circuit generating_circuit;              // H layer followed by U
  std::optional<StateVector> reference_state;

  // Stabilizer K_j for a retained site j.
  const OperatorSum& stabilizer(int site) const;
};

ModelBundle build(const ChainSpec& spec);

// K_j for any site j, with the chain's boundary-truncated circuit.
OperatorSum stabilizer(const ChainSpec& spec, int site);

// -sum_j X_j over the retained sites.
OperatorSum transverse_field(const ChainSpec& spec);

// alpha * H_model + (1 - alpha) * H_X; model must be zxz, ccz or cnz.
OperatorSum interpolated(const ChainSpec& spec, double alpha);
OperatorSum interpolated(const ModelBundle& bundle, double alpha);

// sum_j Z_{j-1} Z_{j+1}; repeated bonds on small rings add up.
OperatorSum ising_nnn(const ChainSpec& spec);

struct FrustrationReport {
  double max_residual = 0.0;     // max_j ||K_j|g> - |g>||
  double ground_energy = 0.0;    // lowest eigenvalue of the Hamiltonian
  double expected_energy = 0.0;  // -(number of retained stabilizers)
  int n_stabilizers = 0;
};

FrustrationReport frustration_check(const ModelBundle& bundle);

// Coefficients of K_j = sum a_{zz'} Z_{j-1}^z X_j Z_{j+1}^z' + b_{zz'} Z_{j-1}^z Y_j Z_{j+1}^z'.
struct CpCoefficients {
  double a00 = 0, a10 = 0, a01 = 0, a11 = 0;
  double b00 = 0, b10 = 0, b01 = 0, b11 = 0;
};

// Closed forms for bond angles phi_left on (j-1, j) and phi_right on (j, j+1).
CpCoefficients cp_closed_form(double phi_left, double phi_right);
// The constant-angle special case written in half-angle form.
CpCoefficients cp_constant_angle(double phi);
// Reads the coefficients off a CP-model stabilizer.
CpCoefficients cp_extract(const OperatorSum& k, int site);

}  // namespace clusterlab
