#include "clusterlab/gates.hpp"

#include <algorithm>
#include <cmath>

#include "clusterlab/errors.hpp"

namespace clusterlab {

namespace {

Matrix pauli2(char c) {
  Matrix m(2, 2);
  const cplx i{0.0, 1.0};
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m = Matrix::Identity(2, 2);
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

// e^{-i phi/2 P} for an involution P.
Matrix involution_exp(const Matrix& p, double phi) {
  return std::cos(phi / 2) * Matrix::Identity(p.rows(), p.cols()) -
         cplx{0.0, std::sin(phi / 2)} * p;
}

std::size_t arity(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::RX:
    case GateKind::RZ: return 1;
    case GateKind::CCZ: return 3;
    case GateKind::CNZ:
    case GateKind::CNP: return 0;
    default: return 2;
  }
}

}  // namespace

bool Gate::is_diagonal() const {
  switch (kind) {
    case GateKind::Z:
    case GateKind::CZ:
    case GateKind::CP:
    case GateKind::CCZ:
    case GateKind::CNZ:
    case GateKind::CNP:
    case GateKind::RZ:
    case GateKind::ZZ: return true;
    default: return false;
  }
}

std::string Gate::name() const {
  static const char* names[] = {"H",  "X",   "Y",  "Z",  "CX", "CZ", "CP", "CCZ",
                                "CNZ", "CNP", "RX", "RZ", "ZZ", "CR", "MS"};
  std::string s = names[static_cast<int>(kind)];
  s += '(';
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(sites[i]);
  }
  s += ')';
  return s;
}

void validate(const Gate& g, int n_sites) {
  const std::size_t want = arity(g.kind);
  if (want == 0 ? g.sites.size() < 2 : g.sites.size() != want) {
    throw ArgumentError("gate " + g.name() + " has the wrong number of sites");
  }
  Mask seen = 0;
  for (int s : g.sites) {
    if (s < 1 || s > n_sites) {
      throw ArgumentError("gate " + g.name() + " site " + std::to_string(s) + " outside [1, " +
                          std::to_string(n_sites) + "]");
    }
    if (seen & bit(s)) throw ArgumentError("gate " + g.name() + " repeats a site");
    seen |= bit(s);
  }
}

Matrix local_matrix(const Gate& g) {
  const cplx i{0.0, 1.0};
  Matrix m;
  switch (g.kind) {
    case GateKind::H:
      m = Matrix(2, 2);
      m << 1, 1, 1, -1;
      return m / std::sqrt(2.0);
    case GateKind::X: return pauli2('X');
    case GateKind::Y: return pauli2('Y');
    case GateKind::Z: return pauli2('Z');
    case GateKind::CX:
      m = Matrix::Identity(4, 4);
      m.block(2, 2, 2, 2) = pauli2('X');
      return m;
    case GateKind::RX: return involution_exp(pauli2('X'), g.angle);
    case GateKind::RZ: return involution_exp(pauli2('Z'), g.angle);
    case GateKind::ZZ: return involution_exp(kron(pauli2('Z'), pauli2('Z')), g.angle / 2);
    case GateKind::CR: return involution_exp(kron(pauli2('Z'), pauli2('X')), g.angle);
    case GateKind::MS: return involution_exp(kron(pauli2('X'), pauli2('X')), g.angle);
    default: break;
  }
  // Remaining kinds are controlled phases: only the all-ones entry differs.
  const Eigen::Index dim = Eigen::Index{1} << g.sites.size();
  m = Matrix::Identity(dim, dim);
  const double phi = (g.kind == GateKind::CP || g.kind == GateKind::CNP) ? g.angle : kPi;
  m(dim - 1, dim - 1) = std::exp(i * phi);
  return m;
}

Matrix gate_to_matrix(const Gate& g, int n_sites) {
  if (n_sites > kDenseLimit) {
    throw CapacityError("dense matrix requested for " + std::to_string(n_sites) +
                        " sites; limit is " + std::to_string(kDenseLimit));
  }
  validate(g, n_sites);
  const Matrix loc = local_matrix(g);
  const int k = static_cast<int>(g.sites.size());
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  Matrix out = Matrix::Zero(dim, dim);
  Mask gate_mask = 0;
  for (int s : g.sites) gate_mask |= bit(s);
  // local index bit (k-1-t) <-> site g.sites[t]
  auto local_of = [&](Mask b) {
    Eigen::Index l = 0;
    for (int t = 0; t < k; ++t) {
      if (b & bit(g.sites[t])) l |= Eigen::Index{1} << (k - 1 - t);
    }
    return l;
  };
  auto global_of = [&](Mask rest, Eigen::Index l) {
    Mask b = rest;
    for (int t = 0; t < k; ++t) {
      if (l & (Eigen::Index{1} << (k - 1 - t))) b |= bit(g.sites[t]);
    }
    return static_cast<Eigen::Index>(b);
  };
  for (Eigen::Index col = 0; col < dim; ++col) {
    const Mask b = static_cast<Mask>(col);
    const Eigen::Index lc = local_of(b);
    const Mask rest = b & ~gate_mask;
    for (Eigen::Index lr = 0; lr < loc.rows(); ++lr) {
      const cplx v = loc(lr, lc);
      if (v != 0.0) out(global_of(rest, lr), col) = v;
    }
  }
  return out;
}

Matrix circuit_to_matrix(const Circuit& c, int n_sites) {
  if (n_sites > kDenseLimit) {
    throw CapacityError("dense matrix requested for " + std::to_string(n_sites) +
                        " sites; limit is " + std::to_string(kDenseLimit));
  }
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  Matrix u = Matrix::Identity(dim, dim);
  for (const Gate& g : c) u = gate_to_matrix(g, n_sites) * u;
  return u;
}

std::optional<PhasePolynomial> to_phase_polynomial(const Gate& g, int n_sites) {
  validate(g, n_sites);
  const std::span<const int> s(g.sites);
  switch (g.kind) {
    case GateKind::Z: {
      PhasePolynomial p(n_sites);
      p.add_monomial(bit(g.sites[0]), kPi);
      return p;
    }
    case GateKind::CZ: return from_gate(DiagonalKind::CZ, s, 0.0, n_sites);
    case GateKind::CP: return from_gate(DiagonalKind::CP, s, g.angle, n_sites);
    case GateKind::CCZ: return from_gate(DiagonalKind::CCZ, s, 0.0, n_sites);
    case GateKind::CNZ: return from_gate(DiagonalKind::CNZ, s, 0.0, n_sites);
    case GateKind::CNP: return from_gate(DiagonalKind::CNP, s, g.angle, n_sites);
    case GateKind::RZ: return from_gate(DiagonalKind::ZROT, s, g.angle, n_sites);
    case GateKind::ZZ: return from_gate(DiagonalKind::ZZ, s, g.angle, n_sites);
    default: return std::nullopt;
  }
}

double phase_optimized_residual(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix shapes differ");
  }
  const cplx overlap = (b.adjoint() * a).trace();
  const cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx{1.0};
  return (a - phase * b).cwiseAbs().maxCoeff();
}

double verify_decomposition(const Gate& target, const Circuit& circuit) {
  int n = 0;
  for (int s : target.sites) n = std::max(n, s);
  for (const Gate& g : circuit) {
    for (int s : g.sites) n = std::max(n, s);
  }
  return phase_optimized_residual(gate_to_matrix(target, n), circuit_to_matrix(circuit, n));
}

}  // namespace clusterlab
