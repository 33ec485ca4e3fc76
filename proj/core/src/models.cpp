#include "clusterlab/models.hpp"

#include <cmath>

#include "clusterlab/dense.hpp"
#include "clusterlab/errors.hpp"
#include "clusterlab/phase_poly.hpp"

namespace clusterlab {

const OperatorSum& ModelBundle::stabilizer(int site) const {
  for (std::size_t i = 0; i < retained.size(); ++i) {
    if (retained[i] == site) return stabilizers[i];
  }
  throw IndexError("site " + std::to_string(site) + " has no retained stabilizer");
}

namespace {

OperatorSum dress(const PhasePolynomial& diag, const Circuit& single, int site) {
  return conjugate_by_circuit(conjugate_x(diag, site), single);
}

}  // namespace

OperatorSum stabilizer(const ChainSpec& spec, int site) {
  validate(spec);
  if (site < 1 || site > spec.sites) throw IndexError("site out of range");
  const PhasePolynomial diag = circuit_phase_polynomial(diagonal_layer(spec), spec.sites);
  return dress(diag, single_site_layer(spec), site);
}

ModelBundle build(const ChainSpec& spec) {
  validate(spec);
  ModelBundle b;
  b.spec = spec;
  b.retained = retained_sites(spec);
  b.generating_circuit = reference_circuit(spec);
  const int n = spec.sites;
  const PhasePolynomial diag = circuit_phase_polynomial(diagonal_layer(spec), n);
  const Circuit single = single_site_layer(spec);
  b.stabilizers.assign(b.retained.size(), OperatorSum(n));
  const long long count = static_cast<long long>(b.retained.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    b.stabilizers[static_cast<std::size_t>(i)] = dress(diag, single, b.retained[static_cast<std::size_t>(i)]);
  }
  b.hamiltonian = OperatorSum(n);
  for (const auto& k : b.stabilizers) b.hamiltonian -= k;
  b.hamiltonian.prune();
  if (n <= kReferenceStateLimit) b.reference_state = cluster_state(spec);
  return b;
}

OperatorSum transverse_field(const ChainSpec& spec) {
  OperatorSum h(spec.sites);
  for (int j : retained_sites(spec)) h.add(PauliString::single(spec.sites, j, Letter::X), -1.0);
  return h;
}

OperatorSum interpolated(const ModelBundle& bundle, double alpha) {
  const ModelKind m = bundle.spec.model;
  if (m != ModelKind::ZXZ && m != ModelKind::CCZ && m != ModelKind::CNZ) {
    throw ArgumentError("interpolation is defined for zxz, ccz and cnz, not " + to_string(m));
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ArgumentError("alpha must lie in [0, 1]");
  return opsum_combine(bundle.hamiltonian, transverse_field(bundle.spec), alpha, 1.0 - alpha);
}

OperatorSum interpolated(const ChainSpec& spec, double alpha) {
  return interpolated(build(spec), alpha);
}

OperatorSum ising_nnn(const ChainSpec& spec) {
  const int n = spec.sites;
  OperatorSum h(n);
  auto zz = [&](int a, int b) {
    PauliString p(n);
    p.set_letter(a, Letter::Z);
    p.set_letter(b, Letter::Z);
    h.add(p, 1.0);
  };
  if (spec.closed()) {
    for (int j = 1; j <= n; ++j) zz((j + n - 2) % n + 1, j % n + 1);
  } else {
    for (int j = 2; j <= n - 1; ++j) zz(j - 1, j + 1);
  }
  return h;
}

FrustrationReport frustration_check(const ModelBundle& bundle) {
  if (!bundle.reference_state) throw CapacityError("bundle has no reference state");
  FrustrationReport r;
  const StateVector& g = *bundle.reference_state;
  for (const auto& k : bundle.stabilizers) {
    const Vector d = opsum_apply(k, g.amplitudes()) - g.amplitudes();
    r.max_residual = std::max(r.max_residual, d.norm());
  }
  r.n_stabilizers = static_cast<int>(bundle.stabilizers.size());
  r.expected_energy = -static_cast<double>(r.n_stabilizers);
  r.ground_energy = lowest_eigenvalue(bundle.hamiltonian);
  return r;
}

CpCoefficients cp_closed_form(double a, double b) {
  // f(s) = cos, g(s) = sin of the accumulated angle for x_{j-1}, x_{j+1}.
  CpCoefficients c;
  const double f00 = 1.0, f10 = std::cos(a), f01 = std::cos(b), f11 = std::cos(a + b);
  const double g00 = 0.0, g10 = std::sin(a), g01 = std::sin(b), g11 = std::sin(a + b);
  c.a00 = (f00 + f10 + f01 + f11) / 4;
  c.a10 = (f00 - f10 + f01 - f11) / 4;
  c.a01 = (f00 + f10 - f01 - f11) / 4;
  c.a11 = (f00 - f10 - f01 + f11) / 4;
  c.b00 = (g00 + g10 + g01 + g11) / 4;
  c.b10 = (g00 - g10 + g01 - g11) / 4;
  c.b01 = (g00 + g10 - g01 - g11) / 4;
  c.b11 = (g00 - g10 - g01 + g11) / 4;
  return c;
}

CpCoefficients cp_constant_angle(double phi) {
  const double c2 = std::pow(std::cos(phi / 2), 2), s2 = std::pow(std::sin(phi / 2), 2);
  CpCoefficients c;
  c.a00 = c2 * std::cos(phi);
  c.b00 = c2 * std::sin(phi);
  c.a10 = c.a01 = std::pow(std::sin(phi), 2) / 2;
  c.b10 = c.b01 = -std::sin(2 * phi) / 4;
  c.a11 = -s2 * std::cos(phi);
  c.b11 = -s2 * std::sin(phi);
  return c;
}

CpCoefficients cp_extract(const OperatorSum& k, int site) {
  const int n = k.n_sites();
  const int l = (site + n - 2) % n + 1, r = site % n + 1;
  auto coef = [&](bool zl, Letter mid, bool zr) {
    PauliString p(n);
    if (zl) p.set_letter(l, Letter::Z);
    p.set_letter(site, mid);
    if (zr) p.set_letter(r, Letter::Z);
    return k.coefficient(p).real();
  };
  CpCoefficients c;
  c.a00 = coef(false, Letter::X, false);
  c.a10 = coef(true, Letter::X, false);
  c.a01 = coef(false, Letter::X, true);
  c.a11 = coef(true, Letter::X, true);
  c.b00 = coef(false, Letter::Y, false);
  c.b10 = coef(true, Letter::Y, false);
  c.b01 = coef(false, Letter::Y, true);
  c.b11 = coef(true, Letter::Y, true);
  return c;
}

}  // namespace clusterlab
