#include "clusterlab/circuits.hpp"

#include <bit>
#include <cmath>

#include "clusterlab/errors.hpp"

namespace clusterlab {

namespace {

void apply_diagonal(StateVector& v, const Gate& g) {
  Mask m = 0;
  for (int s : g.sites) m |= bit(s);
  const long long dim = static_cast<long long>(v.dim());
  cplx* a = v.amplitudes().data();
  const cplx i{0.0, 1.0};
  switch (g.kind) {
    case GateKind::Z:
    case GateKind::CZ:
    case GateKind::CCZ:
    case GateKind::CNZ:
    case GateKind::CP:
    case GateKind::CNP: {
      const bool pi = g.kind == GateKind::Z || g.kind == GateKind::CZ || g.kind == GateKind::CCZ ||
                      g.kind == GateKind::CNZ;
      const cplx ph = pi ? cplx{-1.0} : std::exp(i * g.angle);
#pragma omp parallel for schedule(static) if (dim >= 16384)
      for (long long b = 0; b < dim; ++b) {
        if ((static_cast<Mask>(b) & m) == m) a[b] *= ph;
      }
      break;
    }
    case GateKind::RZ: {
      const cplx p0 = std::exp(-i * g.angle / 2.0), p1 = std::exp(i * g.angle / 2.0);
#pragma omp parallel for schedule(static) if (dim >= 16384)
      for (long long b = 0; b < dim; ++b) a[b] *= (static_cast<Mask>(b) & m) ? p1 : p0;
      break;
    }
    case GateKind::ZZ: {
      const cplx even = std::exp(-i * g.angle / 4.0), odd = std::exp(i * g.angle / 4.0);
#pragma omp parallel for schedule(static) if (dim >= 16384)
      for (long long b = 0; b < dim; ++b) {
        a[b] *= (std::popcount(static_cast<Mask>(b) & m) & 1) ? odd : even;
      }
      break;
    }
    default: throw ArgumentError("not a diagonal gate");
  }
}

void apply_dense_local(StateVector& v, const Gate& g) {
  const Matrix loc = local_matrix(g);
  const int k = static_cast<int>(g.sites.size());
  const long long ldim = 1LL << k;
  Mask m = 0;
  for (int s : g.sites) m |= bit(s);
  std::vector<Mask> offset(static_cast<std::size_t>(ldim));
  for (long long l = 0; l < ldim; ++l) {
    Mask b = 0;
    for (int t = 0; t < k; ++t) {
      if (l & (1LL << (k - 1 - t))) b |= bit(g.sites[static_cast<std::size_t>(t)]);
    }
    offset[static_cast<std::size_t>(l)] = b;
  }
  const long long dim = static_cast<long long>(v.dim());
  cplx* a = v.amplitudes().data();
#pragma omp parallel for schedule(static) if (dim >= 16384)
  for (long long base = 0; base < dim; ++base) {
    if (static_cast<Mask>(base) & m) continue;
    // Non-diagonal gates act on at most two sites.
    cplx pin[4], pout[4];
    for (long long l = 0; l < ldim; ++l) pin[l] = a[static_cast<Mask>(base) | offset[static_cast<std::size_t>(l)]];
    for (long long r = 0; r < ldim; ++r) {
      cplx acc = 0.0;
      for (long long c = 0; c < ldim; ++c) acc += loc(r, c) * pin[c];
      pout[r] = acc;
    }
    for (long long l = 0; l < ldim; ++l) a[static_cast<Mask>(base) | offset[static_cast<std::size_t>(l)]] = pout[l];
  }
}

}  // namespace

void apply_gate_inplace(StateVector& v, const Gate& g) {
  validate(g, v.n_sites());
  if (g.is_diagonal()) {
    apply_diagonal(v, g);
  } else {
    apply_dense_local(v, g);
  }
}

StateVector apply_gate(StateVector v, const Gate& g) {
  apply_gate_inplace(v, g);
  return v;
}

StateVector apply_circuit(StateVector v, const Circuit& c) {
  for (const Gate& g : c) apply_gate_inplace(v, g);
  return v;
}

StateVector cluster_state(const ChainSpec& spec) {
  validate(spec);
  StateVector v = apply_circuit(StateVector(spec.sites), reference_circuit(spec));
  v.normalize();
  return v;
}

StateVector xzx_cx_state(int sites, Boundary boundary) {
  ChainSpec spec;
  spec.sites = sites;
  spec.boundary = boundary;
  spec.model = ModelKind::XZX;
  validate(spec);
  StateVector v(sites);
  for (int j = 2; j <= sites; j += 2) apply_gate_inplace(v, Gate::h(j));
  for (int j = 2; j <= sites; j += 2) {
    const int left = j - 1;
    int right = j + 1;
    if (right > sites) {
      if (boundary == Boundary::Open) right = 0;
      else right = 1;
    }
    apply_gate_inplace(v, Gate::cx(j, left));
    if (right != 0) apply_gate_inplace(v, Gate::cx(j, right));
  }
  for (int j = 2; j <= sites; j += 2) apply_gate_inplace(v, Gate::h(j));
  return v;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("state dimensions differ");
  return std::abs(a.amplitudes().dot(b.amplitudes()));
}

PhasePolynomial circuit_phase_polynomial(const Circuit& c, int n_sites) {
  PhasePolynomial p(n_sites);
  for (const Gate& g : c) {
    auto q = to_phase_polynomial(g, n_sites);
    if (!q) throw ArgumentError("gate " + g.name() + " is not diagonal");
    p += *q;
  }
  return p;
}

OperatorSum conjugate_by_circuit(const OperatorSum& op, const Circuit& c) {
  const int n = op.n_sites();
  OperatorSum out = op;
  std::size_t i = 0;
  while (i < c.size()) {
    if (c[i].is_diagonal()) {
      PhasePolynomial p(n);
      while (i < c.size() && c[i].is_diagonal()) p += *to_phase_polynomial(c[i++], n);
      out = conjugate(p, out);
      continue;
    }
    const Gate& g = c[i++];
    validate(g, n);
    const auto& s = g.sites;
    switch (g.kind) {
      case GateKind::H: out = conjugate_by_hadamard(out, s[0]); break;
      case GateKind::X: out = conjugate_by_pauli(out, PauliString::single(n, s[0], Letter::X)); break;
      case GateKind::Y: out = conjugate_by_pauli(out, PauliString::single(n, s[0], Letter::Y)); break;
      case GateKind::RX: out = conjugate_by_rotation(out, Axis::X, s[0], g.angle); break;
      case GateKind::CX: out = conjugate_by_cx(out, s[0], s[1]); break;
      case GateKind::CR: {
        PauliString p(n);
        p.set_letter(s[0], Letter::Z);
        p.set_letter(s[1], Letter::X);
        out = conjugate_by_pauli_rotation(out, p, g.angle);
        break;
      }
      case GateKind::MS: {
        PauliString p(n);
        p.set_letter(s[0], Letter::X);
        p.set_letter(s[1], Letter::X);
        out = conjugate_by_pauli_rotation(out, p, g.angle);
        break;
      }
      default: throw ArgumentError("cannot conjugate by " + g.name());
    }
  }
  return out;
}

}  // namespace clusterlab
