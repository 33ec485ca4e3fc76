#include "clusterlab/symmetry.hpp"

#include <algorithm>
#include <cmath>

#include "clusterlab/dense.hpp"
#include "clusterlab/errors.hpp"

namespace clusterlab {

namespace {

void require_dense(int n) {
  if (n > kDenseLimit) {
    throw CapacityError("dense symmetry operator requested for " + std::to_string(n) +
                        " sites; limit is " + std::to_string(kDenseLimit));
  }
}

void require_closed(const ChainSpec& spec, const char* what) {
  if (!spec.closed()) throw ArgumentError(std::string(what) + " needs a closed chain");
}

void require_open(const ChainSpec& spec, const char* what) {
  if (spec.closed()) throw ArgumentError(std::string(what) + " needs an open chain");
}

// M <- op M, column by column.
void left_apply(const OperatorSum& op, Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    opsum_apply(op, m.col(c).data(), out.col(c).data(), static_cast<std::size_t>(m.rows()));
  }
  m.swap(out);
}

PauliString letters(int n, std::initializer_list<std::pair<int, Letter>> ls) {
  PauliString p(n);
  for (auto [s, l] : ls) p.set_letter(s, l);
  return p;
}

// e^{-i pi/4 P} = (I - i P) / sqrt(2)
OperatorSum quarter_rotation(const PauliString& p) {
  OperatorSum r = OperatorSum::identity(p.n_sites(), 1.0 / std::sqrt(2.0));
  r.add(p, cplx{0.0, -1.0 / std::sqrt(2.0)});
  return r;
}

OperatorSum x_string(int n, int parity) {
  Mask m = 0;
  for (int j = parity == 0 ? 2 : 1; j <= n; j += 2) m |= bit(j);
  return OperatorSum(PauliString(n, m, 0));
}

OperatorSum half_plus(const OperatorSum& eta) {
  return opsum_combine(OperatorSum::identity(eta.n_sites()), eta, 0.5, 0.5);
}

// D_even or D_odd of the ZXZ chain without its projector.
void apply_sublattice(int n, int parity, Matrix& m) {
  const int first = parity == 0 ? 2 : 1;
  for (int j = first; j + 2 <= n; j += 2) {
    left_apply(quarter_rotation(letters(n, {{j, Letter::X}})), m);
    left_apply(quarter_rotation(letters(n, {{j, Letter::Z}, {j + 2, Letter::Z}})), m);
  }
  const int last = parity == 0 ? n : n - 1;
  left_apply(quarter_rotation(letters(n, {{last, Letter::X}})), m);
  left_apply(half_plus(x_string(n, parity)), m);
}

// D_even D_odd of the ZXZ chain.
Matrix zxz_a(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Identity(dim, dim);
  apply_sublattice(n, 1, m);
  apply_sublattice(n, 0, m);
  return m;
}

// T|b> = |b shifted one site up>, so T X_j T^dagger = X_{j+1}.
Matrix translation(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Mask full = (Mask{1} << n) - 1;
  Matrix t = Matrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const Mask x = static_cast<Mask>(b);
    const Mask r = ((x << 1) | (x >> (n - 1))) & full;
    t(static_cast<Eigen::Index>(r), b) = 1.0;
  }
  return t;
}

Matrix map_dense(const ChainSpec& spec, const Matrix& m) {
  const Matrix v = circuit_to_matrix(zxz_map_circuit(spec), spec.sites);
  return v * m * v.adjoint();
}

OperatorSum zz_nnn(int n, int j) {
  const int a = (j + n - 2) % n + 1, b = j % n + 1;
  return OperatorSum(letters(n, {{a, Letter::Z}, {b, Letter::Z}}));
}

int conjugation_sign(const OperatorSum& eta, const OperatorSum& l) {
  const OperatorSum img = opsum_mul(opsum_mul(eta, l), eta);
  const double scale = std::max(1.0, l.max_abs_coefficient());
  if (img.max_abs_diff(l) < 1e-10 * scale) return 1;
  if (img.max_abs_diff(-1.0 * l) < 1e-10 * scale) return -1;
  throw StructureError("symmetry does not map the logical to plus or minus itself");
}

}  // namespace

Matrix SymmetryOperator::dense() const {
  if (is_pauli_sum()) return opsum_to_matrix(sum());
  return std::get<Matrix>(form);
}

Circuit zxz_map_circuit(const ChainSpec& spec) {
  validate(spec);
  Circuit c = cz_layer(spec);
  const Circuit u = model_circuit(spec);
  c.insert(c.end(), u.begin(), u.end());
  return c;
}

OperatorSum map_from_zxz(const ChainSpec& spec, const OperatorSum& op) {
  return conjugate_by_circuit(op, zxz_map_circuit(spec));
}

std::pair<SymmetryOperator, SymmetryOperator> eta_generators(const ChainSpec& spec) {
  validate(spec);
  const int n = spec.sites;
  if (spec.model == ModelKind::X) {
    return {SymmetryOperator{"eta_even", n, x_string(n, 0)}, SymmetryOperator{"eta_odd", n, x_string(n, 1)}};
  }
  SymmetryOperator e{"eta_even", n, map_from_zxz(spec, x_string(n, 0))};
  SymmetryOperator o{"eta_odd", n, map_from_zxz(spec, x_string(n, 1))};
  return {std::move(e), std::move(o)};
}

double commutator_norm(const OperatorSum& a, const OperatorSum& b) {
  require_dense(a.n_sites());
  const OperatorSum c = opsum_mul(a, b) - opsum_mul(b, a);
  if (c.empty()) return 0.0;
  return opsum_to_matrix(c).cwiseAbs().maxCoeff();
}

double commutator_norm(const SymmetryOperator& a, const OperatorSum& h) {
  if (a.is_pauli_sum()) return commutator_norm(a.sum(), h);
  require_dense(h.n_sites());
  const Matrix ad = a.dense();
  const Matrix hd = opsum_to_matrix(h);
  return (ad * hd - hd * ad).cwiseAbs().maxCoeff();
}

Matrix symmetric_projector(const ChainSpec& spec) {
  require_dense(spec.sites);
  const auto [e, o] = eta_generators(spec);
  return opsum_to_matrix(half_plus(opsum_mul(e.sum(), o.sum())));
}

Matrix project_hamiltonian(const OperatorSum& h, const Matrix& p) {
  require_dense(h.n_sites());
  const Matrix hd = opsum_to_matrix(h);
  if (hd.rows() != p.rows()) throw DimensionError("projector and Hamiltonian sizes differ");
  return p * hd * p;
}

SymmetryOperator noninvertible_D(const ChainSpec& spec) {
  validate(spec);
  require_closed(spec, "the non-invertible operator");
  require_dense(spec.sites);
  const int n = spec.sites;
  Matrix d = translation(n) * zxz_a(n);
  if (spec.model != ModelKind::ZXZ) d = map_dense(spec, d);
  return {"D", n, d};
}

double intertwine_check(const Matrix& d, const OperatorSum& a, const OperatorSum& b) {
  const Eigen::Index dim = Eigen::Index{1} << a.n_sites();
  if (a.n_sites() != b.n_sites() || d.rows() != dim || d.cols() != dim) {
    throw DimensionError("operator sizes differ");
  }
  // D A and B D without forming dense A, B.
  Matrix da = d.adjoint();
  left_apply(a.adjoint(), da);
  Matrix bd = d;
  left_apply(b, bd);
  return phase_optimized_residual(da.adjoint(), bd);
}

NoninvertibleReport noninvertible_check(const ChainSpec& spec) {
  const SymmetryOperator dop = noninvertible_D(spec);
  const Matrix& d = std::get<Matrix>(dop.form);
  const int n = spec.sites;
  NoninvertibleReport r;
  const ModelBundle b = build(spec);
  r.hamiltonian_residual = intertwine_check(d, b.hamiltonian, b.hamiltonian);
  for (int j = 1; j <= n; ++j) {
    const OperatorSum xj = map_from_zxz(spec, OperatorSum(PauliString::single(n, j, Letter::X)));
    const OperatorSum zz = map_from_zxz(spec, zz_nnn(n, j));
    r.map_residual = std::max(r.map_residual, intertwine_check(d, xj, zz));
  }
  const auto [e, o] = eta_generators(spec);
  for (const OperatorSum& eta : {e.sum(), o.sum(), opsum_mul(e.sum(), o.sum())}) {
    Matrix m = d.adjoint();
    left_apply(opsum_combine(OperatorSum::identity(n), eta, 0.5, -0.5).adjoint(), m);
    r.sector_residual = std::max(r.sector_residual, m.cwiseAbs().maxCoeff());
  }
  const RealVector sv = singular_values(d);
  r.min_singular_value = sv[sv.size() - 1];
  return r;
}

SymmetryOperator kt_operator(const ChainSpec& spec) {
  validate(spec);
  require_closed(spec, "the KT transformation");
  require_dense(spec.sites);
  const int n = spec.sites;
  const Matrix a = zxz_a(n);
  Matrix kt = a.adjoint() * circuit_to_matrix(cz_layer(spec), n) * a;
  if (spec.model != ModelKind::ZXZ) kt = map_dense(spec, kt);
  return {"KT", n, kt};
}

KtReport kt_check(const ChainSpec& spec) {
  const SymmetryOperator kop = kt_operator(spec);
  const Matrix& kt = std::get<Matrix>(kop.form);
  const int n = spec.sites;
  ChainSpec zxz = spec;
  zxz.model = ModelKind::ZXZ;
  zxz.angles.clear();
  zxz.zz_angles.clear();
  zxz.order = 0;
  KtReport r;
  for (int j = 1; j <= n; ++j) {
    const OperatorSum xj = map_from_zxz(spec, OperatorSum(PauliString::single(n, j, Letter::X)));
    const OperatorSum kj = map_from_zxz(spec, stabilizer(zxz, j));
    const OperatorSum zz = map_from_zxz(spec, zz_nnn(n, j));
    r.x_per_site.push_back(intertwine_check(kt, xj, xj));
    r.k_per_site.push_back(intertwine_check(kt, kj, zz));
    r.x_residual = std::max(r.x_residual, r.x_per_site.back());
    r.k_residual = std::max(r.k_residual, r.k_per_site.back());
  }
  return r;
}

void check_string_range(const ModelBundle& bundle, int i, int j) {
  if (!(i < j)) throw IndexError("string order needs i < j");
  for (int s = i; s <= j; ++s) {
    if (std::find(bundle.retained.begin(), bundle.retained.end(), s) == bundle.retained.end()) {
      throw IndexError("site " + std::to_string(s) + " has no retained stabilizer");
    }
  }
}

StringOrder string_order(const StateVector& state, const ModelBundle& bundle, int i, int j) {
  check_string_range(bundle, i, j);
  if (state.n_sites() != bundle.spec.sites) throw DimensionError("state and chain sizes differ");
  Vector v = state.amplitudes();
  Vector w(v.size());
  for (int s = j; s >= i; --s) {
    opsum_apply(bundle.stabilizer(s), v.data(), w.data(), static_cast<std::size_t>(v.size()));
    v.swap(w);
  }
  const cplx e = state.amplitudes().dot(v);
  return {e.real(), e.imag()};
}

StringOrder string_order(const StateVector& state, const ChainSpec& spec, int i, int j) {
  return string_order(state, build(spec), i, j);
}

OperatorSum string_operator(const ModelBundle& bundle, int i, int j) {
  check_string_range(bundle, i, j);
  OperatorSum p = OperatorSum::identity(bundle.spec.sites);
  for (int s = i; s <= j; ++s) p = opsum_mul(p, bundle.stabilizer(s));
  return p;
}

std::string to_string(Edge e) { return e == Edge::Left ? "left" : "right"; }

LogicalSet edge_logicals(const ChainSpec& spec) {
  validate(spec);
  require_open(spec, "edge logicals");
  if (spec.edge_terms != EdgeTerms::Drop) throw ArgumentError("edge logicals need edge_terms=drop");
  const int n = spec.sites;
  const int order = spec.interaction_order();
  const Circuit u = model_circuit(spec);
  LogicalSet ls;
  ls.order = order;
  auto triple = [&](int site) {
    LogicalTriple t;
    t.site = site;
    t.x = conjugate_by_circuit(OperatorSum(PauliString::single(n, site, Letter::X)), u);
    t.y = conjugate_by_circuit(OperatorSum(PauliString::single(n, site, Letter::Y)), u);
    t.z = conjugate_by_circuit(OperatorSum(PauliString::single(n, site, Letter::Z)), u);
    return t;
  };
  for (int k = 1; k <= order; ++k) {
    ls.left.push_back(triple(k));
    ls.right.push_back(triple(n + 1 - k));
  }
  return ls;
}

int projective_phase(const OperatorSum& ug, const OperatorSum& uh) {
  const OperatorSum gh = opsum_mul(ug, uh);
  const OperatorSum hg = opsum_mul(uh, ug);
  if (hg.empty() || gh.empty()) throw StructureError("representation products vanish");
  auto best = hg.terms().begin();
  for (auto it = hg.terms().begin(); it != hg.terms().end(); ++it) {
    if (std::abs(it->second) > std::abs(best->second)) best = it;
  }
  auto other = gh.terms().find(best->first);
  if (other == gh.terms().end()) throw StructureError("products are not proportional");
  const cplx omega = other->second / best->second;
  const double scale = std::max(1.0, gh.max_abs_coefficient());
  if (gh.max_abs_diff(omega * hg) > 1e-10 * scale) throw StructureError("products are not proportional");
  if (std::abs(omega - 1.0) < 1e-10) return 1;
  if (std::abs(omega + 1.0) < 1e-10) return -1;
  throw StructureError("projective phase is not +-1");
}

std::vector<EdgeAction> edge_symmetry_action(const ChainSpec& spec) {
  const LogicalSet ls = edge_logicals(spec);
  const auto [e, o] = eta_generators(spec);
  std::vector<EdgeAction> rows;
  for (Edge edge : {Edge::Left, Edge::Right}) {
    for (const auto& [gname, eta] : {std::pair<std::string, const OperatorSum*>{"even", &e.sum()},
                                     std::pair<std::string, const OperatorSum*>{"odd", &o.sum()}}) {
      const auto& triples = ls.edge(edge);
      for (std::size_t k = 0; k < triples.size(); ++k) {
        const LogicalTriple& t = triples[k];
        for (auto [c, l] : {std::pair<char, const OperatorSum*>{'X', &t.x},
                            std::pair<char, const OperatorSum*>{'Y', &t.y},
                            std::pair<char, const OperatorSum*>{'Z', &t.z}}) {
          rows.push_back({edge, gname, c, static_cast<int>(k) + 1, conjugation_sign(*eta, *l)});
        }
      }
    }
  }
  return rows;
}

OperatorSum edge_representation(const ChainSpec& spec, Edge edge, const std::string& generator) {
  if (generator != "even" && generator != "odd") throw ArgumentError("generator must be even or odd");
  const LogicalSet ls = edge_logicals(spec);
  const auto [e, o] = eta_generators(spec);
  const OperatorSum& eta = generator == "even" ? e.sum() : o.sum();
  OperatorSum rep = OperatorSum::identity(spec.sites);
  for (const LogicalTriple& t : ls.edge(edge)) {
    const int sx = conjugation_sign(eta, t.x), sz = conjugation_sign(eta, t.z);
    // Conjugation by Z flips X only, by X flips Z only, by Y flips both.
    if (sx < 0 && sz > 0) rep = opsum_mul(rep, t.z);
    else if (sx > 0 && sz < 0) rep = opsum_mul(rep, t.x);
    else if (sx < 0 && sz < 0) rep = opsum_mul(rep, t.y);
  }
  return rep;
}

std::vector<AnomalyRow> anomaly_check(const ChainSpec& spec) {
  require_open(spec, "the anomaly check");
  const LogicalSet ls = edge_logicals(spec);
  const auto [e, o] = eta_generators(spec);
  const OperatorSum eta = opsum_mul(e.sum(), o.sum());
  std::vector<AnomalyRow> rows;
  for (Edge edge : {Edge::Left, Edge::Right}) {
    const auto& triples = ls.edge(edge);
    for (std::size_t k = 0; k < triples.size(); ++k) {
      const LogicalTriple& t = triples[k];
      for (auto [c, l] : {std::pair<char, const OperatorSum*>{'X', &t.x},
                          std::pair<char, const OperatorSum*>{'Z', &t.z}}) {
        const std::string base = std::string(1, c) + std::to_string(k + 1) + "_" + to_string(edge);
        rows.push_back({base + ",eta", commutator_norm(*l, eta)});
        rows.push_back({base + ",eta_even", commutator_norm(*l, e.sum())});
        rows.push_back({base + ",eta_odd", commutator_norm(*l, o.sum())});
      }
    }
  }
  return rows;
}

}  // namespace clusterlab
