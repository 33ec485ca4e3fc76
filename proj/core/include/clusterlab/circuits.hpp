#pragma once

#include "clusterlab/chain.hpp"
#include "clusterlab/gates.hpp"
#include "clusterlab/pauli.hpp"
#include "clusterlab/phase_poly.hpp"
#include "clusterlab/state.hpp"

namespace clusterlab {

void apply_gate_inplace(StateVector& v, const Gate& g);
StateVector apply_gate(StateVector v, const Gate& g);
StateVector apply_circuit(StateVector v, const Circuit& c);

// H on every site of |0...0>, then the model circuit.
StateVector cluster_state(const ChainSpec& spec);

// XZX state built with CNOTs: |+> on even sites, |0> on odd sites, CX from
// every even site onto its odd neighbours, then H on even sites.
StateVector xzx_cx_state(int sites, Boundary boundary);

// |<a|b>|
double fidelity(const StateVector& a, const StateVector& b);

// Sum of the phase polynomials of a run of diagonal gates.
PhasePolynomial circuit_phase_polynomial(const Circuit& c, int n_sites);

// U op U^dagger with U = c.back() * ... * c.front().
OperatorSum conjugate_by_circuit(const OperatorSum& op, const Circuit& c);

}  // namespace clusterlab
