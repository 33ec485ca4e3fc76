#include <gtest/gtest.h>

#include <random>

#include "clusterlab/chain.hpp"
#include "clusterlab/circuits.hpp"
#include "clusterlab/errors.hpp"
#include "clusterlab/gates.hpp"
#include "clusterlab/models.hpp"
#include "oracle.hpp"

using namespace clusterlab;

namespace {

const cplx I(0, 1);

oracle::Mat projector(int n, int site, int value) {
  const oracle::Mat z = oracle::site_op(n, site, 'Z');
  const oracle::Mat id = oracle::Mat::Identity(z.rows(), z.cols());
  return value == 0 ? oracle::Mat((id + z) / 2.0) : oracle::Mat((id - z) / 2.0);
}

// Reference matrices for each gate on n sites, built from Pauli Kronecker products.
oracle::Mat reference(const Gate& g, int n) {
  const auto& s = g.sites;
  const double a = g.angle;
  auto phase_on_all = [&](double phi) {
    return oracle::diagonal(n, [&](const std::vector<int>& x) {
      int prod = 1;
      for (int q : s) prod *= x[static_cast<std::size_t>(q - 1)];
      return phi * prod;
    });
  };
  switch (g.kind) {
    case GateKind::H: return oracle::hadamard(n, s[0]);
    case GateKind::X: return oracle::site_op(n, s[0], 'X');
    case GateKind::Y: return oracle::site_op(n, s[0], 'Y');
    case GateKind::Z: return oracle::site_op(n, s[0], 'Z');
    case GateKind::CX: return projector(n, s[0], 0) + projector(n, s[0], 1) * oracle::site_op(n, s[1], 'X');
    case GateKind::CZ:
    case GateKind::CCZ:
    case GateKind::CNZ: return phase_on_all(kPi);
    case GateKind::CP:
    case GateKind::CNP: return phase_on_all(a);
    case GateKind::RX: return oracle::rotation(oracle::site_op(n, s[0], 'X'), a);
    case GateKind::RZ: return oracle::rotation(oracle::site_op(n, s[0], 'Z'), a);
    case GateKind::ZZ: return oracle::rotation(oracle::site_op(n, s[0], 'Z') * oracle::site_op(n, s[1], 'Z'), a / 2);
    case GateKind::CR: return oracle::rotation(oracle::site_op(n, s[0], 'Z') * oracle::site_op(n, s[1], 'X'), a);
    case GateKind::MS: return oracle::rotation(oracle::site_op(n, s[0], 'X') * oracle::site_op(n, s[1], 'X'), a);
  }
  return {};
}

std::vector<Gate> all_gates(double a) {
  return {Gate::h(2),          Gate::x(1),          Gate::y(3),          Gate::z(2),
          Gate::cx(3, 1),      Gate::cz(1, 3),      Gate::cp(2, 3, a),   Gate::ccz(1, 2, 3),
          Gate::cnz({1, 2, 3, 4}), Gate::cnp({4, 2, 3}, a), Gate::rx(4, a), Gate::rz(1, a),
          Gate::zz(2, 4, a),   Gate::cr(3, 2, a),   Gate::ms(1, 4, a)};
}

StateVector random_state(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Vector v(Eigen::Index{1} << n);
  for (auto& x : v) x = cplx(g(rng), g(rng));
  StateVector s(n, v);
  s.normalize();
  return s;
}

}  // namespace

TEST(Gates, MatricesMatchKroneckerReference) {
  for (const Gate& g : all_gates(0.73)) {
    EXPECT_LT(oracle::max_abs(gate_to_matrix(g, 4) - reference(g, 4)), 1e-14) << g.name();
  }
}

TEST(Gates, CrAndMsBlockStructure) {
  const double phi = 0.6, c = std::cos(phi / 2), s = std::sin(phi / 2);
  // local matrices list the first site as the most significant bit
  oracle::Mat cr(4, 4);
  cr << c, -I * s, 0, 0, -I * s, c, 0, 0, 0, 0, c, I * s, 0, 0, I * s, c;
  EXPECT_LT(oracle::max_abs(local_matrix(Gate::cr(1, 2, phi)) - cr), 1e-15);
  oracle::Mat ms(4, 4);
  ms << c, 0, 0, -I * s, 0, c, -I * s, 0, 0, -I * s, c, 0, -I * s, 0, 0, c;
  EXPECT_LT(oracle::max_abs(local_matrix(Gate::ms(1, 2, phi)) - ms), 1e-15);
  EXPECT_LT(oracle::max_abs(gate_to_matrix(Gate::zz(1, 2, 0.0), 2) - oracle::Mat::Identity(4, 4)), 1e-15);
}

TEST(Gates, ValidationErrors) {
  EXPECT_THROW(validate(Gate::cz(1, 1), 3), ArgumentError);
  EXPECT_THROW(validate(Gate::h(4), 3), ArgumentError);
  EXPECT_THROW(validate(Gate{GateKind::CCZ, {1, 2}, 0.0}, 3), ArgumentError);
  EXPECT_THROW(gate_to_matrix(Gate::h(1), kDenseLimit + 1), CapacityError);
}

TEST(Gates, PhasePolynomialsOfDiagonalGates) {
  for (const Gate& g : all_gates(1.1)) {
    const auto p = to_phase_polynomial(g, 4);
    EXPECT_EQ(p.has_value(), g.is_diagonal()) << g.name();
    if (!p) continue;
    const oracle::Mat d = oracle::diagonal(4, [&](const std::vector<int>& bits) {
      Mask x = 0;
      for (std::size_t j = 0; j < bits.size(); ++j) x |= static_cast<Mask>(bits[j]) << j;
      return p->evaluate(x);
    });
    EXPECT_LT(oracle::max_abs(d - reference(g, 4)), 1e-14) << g.name();
  }
}

TEST(Decomposition, CpFourFactorProduct) {
  // e^{i phi Z1/4} e^{i phi Z2/4} e^{-i phi Z1 Z2/4} carries e^{-i phi} on |11>
  for (double phi : {kPi, 0.7, -2.1}) {
    const Circuit c = {Gate::rz(1, -phi / 2), Gate::rz(2, -phi / 2), Gate::zz(1, 2, phi)};
    EXPECT_LT(verify_decomposition(Gate::cp(1, 2, -phi), c), 1e-12);
    const Circuit flipped = {Gate::rz(1, phi / 2), Gate::rz(2, phi / 2), Gate::zz(1, 2, -phi)};
    EXPECT_LT(verify_decomposition(Gate::cp(1, 2, phi), flipped), 1e-12);
  }
  EXPECT_GT(verify_decomposition(Gate::cp(1, 2, 0.7), {Gate::rz(1, -0.35), Gate::rz(2, -0.35), Gate::zz(1, 2, 0.7)}),
            0.1);
  EXPECT_LT(verify_decomposition(Gate::zz(1, 2, 0.6), {Gate::h(2), Gate::cr(1, 2, 0.3), Gate::h(2)}), 1e-12);
  EXPECT_GT(verify_decomposition(Gate::cz(1, 2), {Gate::h(1)}), 0.1);
}

TEST(Decomposition, PhaseOptimizedResidualIgnoresGlobalPhase) {
  const oracle::Mat a = gate_to_matrix(Gate::cr(1, 2, 0.4), 2);
  EXPECT_LT(phase_optimized_residual(a, std::polar(1.0, 1.3) * a), 1e-14);
  EXPECT_GT(phase_optimized_residual(a, gate_to_matrix(Gate::h(1), 2)), 0.1);
}

TEST(Circuits, CircuitOrderIsFirstGateFirst) {
  const Circuit c = {Gate::h(1), Gate::cx(1, 2), Gate::rz(2, 0.4)};
  const oracle::Mat want = reference(c[2], 2) * reference(c[1], 2) * reference(c[0], 2);
  EXPECT_LT(oracle::max_abs(circuit_to_matrix(c, 2) - want), 1e-14);
}

TEST(Circuits, ApplyGateMatchesMatrix) {
  std::mt19937_64 rng(10);
  for (const Gate& g : all_gates(-0.45)) {
    const StateVector v = random_state(rng, 4);
    const StateVector w = apply_gate(v, g);
    EXPECT_LT((w.amplitudes() - reference(g, 4) * v.amplitudes()).cwiseAbs().maxCoeff(), 1e-14) << g.name();
  }
  EXPECT_THROW(apply_gate(StateVector::plus(2), Gate::cz(1, 3)), ArgumentError);
}

TEST(Circuits, SmallExamples) {
  const StateVector plus = apply_gate(StateVector::basis(1, 0), Gate::h(1));
  EXPECT_NEAR(std::abs(plus[0] - 1 / std::sqrt(2.0)), 0, 1e-15);
  EXPECT_NEAR(std::abs(plus[1] - 1 / std::sqrt(2.0)), 0, 1e-15);
  const StateVector cz = apply_gate(StateVector::plus(2), Gate::cz(1, 2));
  const cplx want[] = {0.5, 0.5, 0.5, -0.5};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(cz[i] - want[i]), 0, 1e-15);
}

TEST(Circuits, ClusterStates) {
  ChainSpec s;
  s.model = ModelKind::ZXZ;
  s.sites = 2;
  s.boundary = Boundary::Open;
  EXPECT_GT(fidelity(cluster_state(s), apply_gate(StateVector::plus(2), Gate::cz(1, 2))), 1 - 1e-14);

  s.model = ModelKind::CCZ;
  s.sites = 6;
  const StateVector ccz = cluster_state(s);
  for (std::size_t b = 0; b < 64; ++b) {
    int phase = 0;
    for (int j = 0; j + 2 < 6; ++j) phase += ((b >> j) & 1) * ((b >> (j + 1)) & 1) * ((b >> (j + 2)) & 1);
    EXPECT_NEAR(std::abs(ccz[b] - (phase % 2 ? -1.0 : 1.0) / 8.0), 0, 1e-15);
  }

  s.model = ModelKind::XZX;
  s.sites = 4;
  EXPECT_GT(fidelity(cluster_state(s), xzx_cx_state(4, Boundary::Open)), 1 - 1e-12);
  s.boundary = Boundary::Closed;
  EXPECT_GT(fidelity(cluster_state(s), xzx_cx_state(4, Boundary::Closed)), 1 - 1e-12);
}

TEST(Circuits, Fidelity) {
  std::mt19937_64 rng(11);
  const StateVector v = random_state(rng, 3);
  EXPECT_NEAR(fidelity(v, v), 1.0, 1e-14);
  EXPECT_NEAR(fidelity(StateVector::basis(1, 0), StateVector::basis(1, 1)), 0.0, 1e-15);
  StateVector w(3, std::polar(1.0, 0.77) * v.amplitudes());
  EXPECT_NEAR(fidelity(v, w), 1.0, 1e-14);
  EXPECT_THROW(fidelity(v, StateVector::plus(2)), DimensionError);
}

TEST(Circuits, ConjugateByCircuitMatchesDense) {
  const Circuit c = {Gate::h(1),       Gate::cz(1, 2),    Gate::ccz(2, 3, 4), Gate::rx(3, 0.3),
                     Gate::cp(1, 4, 1.2), Gate::cx(2, 1),  Gate::cr(4, 3, -0.8), Gate::ms(1, 2, 0.5),
                     Gate::rz(2, 0.9),  Gate::zz(1, 3, 0.4), Gate::y(4)};
  const oracle::Mat u = circuit_to_matrix(c, 4);
  for (const char* label : {"X1", "Z2 Y3", "Y1 X4", "Z4"}) {
    const auto op = OperatorSum::parse(label, 4);
    EXPECT_LT(oracle::max_abs(oracle::opsum(conjugate_by_circuit(op, c)) - u * oracle::opsum(op) * u.adjoint()),
              1e-12)
        << label;
  }
}

TEST(Circuits, CircuitPhasePolynomial) {
  const Circuit c = {Gate::cz(1, 2), Gate::cp(2, 3, 0.4), Gate::ccz(1, 2, 3)};
  const auto p = circuit_phase_polynomial(c, 3);
  EXPECT_NEAR(p.coefficient(bit(1) | bit(2)), kPi, 1e-15);
  EXPECT_NEAR(p.coefficient(bit(2) | bit(3)), 0.4, 1e-15);
  EXPECT_NEAR(p.coefficient(bit(1) | bit(2) | bit(3)), kPi, 1e-15);
  EXPECT_THROW(circuit_phase_polynomial({Gate::h(1)}, 3), ArgumentError);
}
