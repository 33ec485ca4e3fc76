#include "clusterlab/chain.hpp"

#include <algorithm>
#include <cctype>

#include "clusterlab/errors.hpp"

namespace clusterlab {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c == '_') c = '-';
  }
  return out;
}

std::vector<double> broadcast(const std::vector<double>& v, std::size_t n, const char* what) {
  if (v.size() == 1) return std::vector<double>(n, v[0]);
  if (v.size() != n) {
    throw ArgumentError(std::string(what) + " needs " + std::to_string(n) + " values (or one), got " +
                        std::to_string(v.size()));
  }
  return v;
}

bool uses_site_angles(ModelKind m) {
  return m == ModelKind::BitFlip || m == ModelKind::PhaseFlip || m == ModelKind::IsingZZ;
}

}  // namespace

int ChainSpec::interaction_order() const {
  switch (model) {
    case ModelKind::X: return 0;
    case ModelKind::CCZ: return 2;
    case ModelKind::CNZ:
    case ModelKind::CNP: return order;
    default: return 1;
  }
}

std::string to_string(ModelKind m) {
  switch (m) {
    case ModelKind::X: return "x";
    case ModelKind::ZXZ: return "zxz";
    case ModelKind::XZX: return "xzx";
    case ModelKind::ZZZ_XXX: return "zzz-xxx";
    case ModelKind::BitFlip: return "bitflip";
    case ModelKind::PhaseFlip: return "phaseflip";
    case ModelKind::CP: return "cp";
    case ModelKind::CCZ: return "ccz";
    case ModelKind::CNZ: return "cnz";
    case ModelKind::CNP: return "cnp";
    case ModelKind::IsingZZ: return "ising-zz";
  }
  return "?";
}

std::string to_string(Boundary b) { return b == Boundary::Open ? "open" : "closed"; }
std::string to_string(EdgeTerms e) { return e == EdgeTerms::Include ? "include" : "drop"; }

ModelKind parse_model(std::string_view s) {
  const std::string k = lower(s);
  if (k == "x") return ModelKind::X;
  if (k == "zxz") return ModelKind::ZXZ;
  if (k == "xzx") return ModelKind::XZX;
  if (k == "zzz-xxx" || k == "zzzxxx") return ModelKind::ZZZ_XXX;
  if (k == "bitflip" || k == "bit-flip") return ModelKind::BitFlip;
  if (k == "phaseflip" || k == "phase-flip") return ModelKind::PhaseFlip;
  if (k == "cp") return ModelKind::CP;
  if (k == "ccz") return ModelKind::CCZ;
  if (k == "cnz") return ModelKind::CNZ;
  if (k == "cnp") return ModelKind::CNP;
  if (k == "ising-zz" || k == "isingzz") return ModelKind::IsingZZ;
  throw ArgumentError("unknown model '" + std::string(s) + "'");
}

Boundary parse_boundary(std::string_view s) {
  const std::string k = lower(s);
  if (k == "open") return Boundary::Open;
  if (k == "closed" || k == "periodic") return Boundary::Closed;
  throw ArgumentError("unknown boundary '" + std::string(s) + "'");
}

EdgeTerms parse_edge_terms(std::string_view s) {
  const std::string k = lower(s);
  if (k == "include") return EdgeTerms::Include;
  if (k == "drop") return EdgeTerms::Drop;
  throw ArgumentError("unknown edge_terms '" + std::string(s) + "'");
}

void validate(const ChainSpec& spec) {
  const int n = spec.sites;
  if (n < 2 || n % 2 != 0) {
    throw ArgumentError("sites must be an even integer >= 2, got " + std::to_string(n));
  }
  if (n > kMaxSites) throw ArgumentError("sites must be <= 64");
  const bool high = spec.model == ModelKind::CNZ || spec.model == ModelKind::CNP;
  if (high && spec.order < 1) throw ArgumentError("order must be >= 1 for cnz/cnp");
  if (!high && spec.order != 0 && !(spec.model == ModelKind::CCZ && spec.order == 2)) {
    throw ArgumentError("order is only meaningful for cnz/cnp");
  }
  const int N = spec.interaction_order();
  if (spec.model == ModelKind::CCZ || high) {
    if (n < 2 * N + 2) {
      throw ArgumentError("order " + std::to_string(N) + " needs at least " +
                          std::to_string(2 * N + 2) + " sites");
    }
  } else if (spec.closed() && n < 4) {
    throw ArgumentError("closed chains need at least 4 sites");
  }
  // Throws on a wrong count.
  site_angles(spec);
  bond_angles(spec);
  window_angles(spec);
  const bool wants_angles = uses_site_angles(spec.model) || spec.model == ModelKind::CP ||
                            spec.model == ModelKind::CNP;
  if (!wants_angles && !spec.angles.empty()) {
    throw ArgumentError("model " + to_string(spec.model) + " takes no angles");
  }
  if (spec.model != ModelKind::IsingZZ && !spec.zz_angles.empty()) {
    throw ArgumentError("zz_angles only apply to ising-zz");
  }
  if (wants_angles && spec.angles.empty()) {
    throw ArgumentError("model " + to_string(spec.model) + " requires angles");
  }
  if (spec.model == ModelKind::IsingZZ && spec.zz_angles.empty()) {
    throw ArgumentError("ising-zz requires zz_angles");
  }
}

std::vector<double> site_angles(const ChainSpec& spec) {
  if (!uses_site_angles(spec.model) || spec.angles.empty()) return {};
  return broadcast(spec.angles, static_cast<std::size_t>(spec.sites), "angles");
}

std::vector<double> bond_angles(const ChainSpec& spec) {
  const std::size_t nb = static_cast<std::size_t>(spec.closed() ? spec.sites : spec.sites - 1);
  if (spec.model == ModelKind::CP && !spec.angles.empty()) {
    return broadcast(spec.angles, nb, "angles");
  }
  if (spec.model == ModelKind::IsingZZ && !spec.zz_angles.empty()) {
    return broadcast(spec.zz_angles, nb, "zz_angles");
  }
  return {};
}

std::vector<double> window_angles(const ChainSpec& spec) {
  if (spec.model != ModelKind::CNP || spec.angles.empty()) return {};
  const std::size_t nw = windows(spec, spec.order).size();
  return broadcast(spec.angles, nw, "angles");
}

std::vector<std::vector<int>> windows(const ChainSpec& spec, int order) {
  const int n = spec.sites;
  std::vector<std::vector<int>> out;
  const int count = spec.closed() ? n : n - order;
  for (int k = 1; k <= count; ++k) {
    std::vector<int> w;
    for (int t = 0; t <= order; ++t) w.push_back((k - 1 + t) % n + 1);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<int> retained_sites(const ChainSpec& spec) {
  const int n = spec.sites;
  const int N = spec.interaction_order();
  std::vector<int> out;
  int lo = 1, hi = n;
  if (!spec.closed() && spec.edge_terms == EdgeTerms::Drop) {
    lo = N + 1;
    hi = n - N;
  }
  for (int j = lo; j <= hi; ++j) out.push_back(j);
  return out;
}

Circuit cz_layer(const ChainSpec& spec) {
  Circuit c;
  for (const auto& w : windows(spec, 1)) c.push_back(Gate::cz(w[0], w[1]));
  return c;
}

Circuit diagonal_layer(const ChainSpec& spec) {
  Circuit c;
  switch (spec.model) {
    case ModelKind::X: break;
    case ModelKind::ZXZ:
    case ModelKind::XZX:
    case ModelKind::ZZZ_XXX:
    case ModelKind::BitFlip:
    case ModelKind::PhaseFlip: c = cz_layer(spec); break;
    case ModelKind::CP: {
      const auto phi = bond_angles(spec);
      const auto w = windows(spec, 1);
      for (std::size_t b = 0; b < w.size(); ++b) c.push_back(Gate::cp(w[b][0], w[b][1], phi[b]));
      break;
    }
    case ModelKind::CCZ:
      for (const auto& w : windows(spec, 2)) c.push_back(Gate::ccz(w[0], w[1], w[2]));
      break;
    case ModelKind::CNZ:
      for (const auto& w : windows(spec, spec.order)) c.push_back(Gate::cnz(w));
      break;
    case ModelKind::CNP: {
      const auto phi = window_angles(spec);
      const auto w = windows(spec, spec.order);
      for (std::size_t b = 0; b < w.size(); ++b) c.push_back(Gate::cnp(w[b], phi[b]));
      break;
    }
    case ModelKind::IsingZZ: {
      // e^{+i phi/4 Z} = RZ(-phi/2)
      const auto pz = site_angles(spec);
      for (int j = 1; j <= spec.sites; ++j) c.push_back(Gate::rz(j, -pz[static_cast<std::size_t>(j - 1)] / 2));
      const auto pzz = bond_angles(spec);
      const auto w = windows(spec, 1);
      for (std::size_t b = 0; b < w.size(); ++b) c.push_back(Gate::zz(w[b][0], w[b][1], pzz[b]));
      break;
    }
  }
  return c;
}

Circuit single_site_layer(const ChainSpec& spec) {
  Circuit c;
  const int n = spec.sites;
  switch (spec.model) {
    case ModelKind::XZX:
      for (int j = 1; j <= n; ++j) c.push_back(Gate::h(j));
      break;
    case ModelKind::ZZZ_XXX:
      for (int j = 2; j <= n; j += 2) c.push_back(Gate::h(j));
      break;
    case ModelKind::BitFlip: {
      const auto phi = site_angles(spec);
      for (int j = 1; j <= n; ++j) c.push_back(Gate::rx(j, phi[static_cast<std::size_t>(j - 1)]));
      break;
    }
    case ModelKind::PhaseFlip: {
      // e^{+i phi Z/2} = RZ(-phi)
      const auto phi = site_angles(spec);
      for (int j = 1; j <= n; ++j) c.push_back(Gate::rz(j, -phi[static_cast<std::size_t>(j - 1)]));
      break;
    }
    default: break;
  }
  return c;
}

Circuit model_circuit(const ChainSpec& spec) {
  Circuit c = diagonal_layer(spec);
  const Circuit r = single_site_layer(spec);
  c.insert(c.end(), r.begin(), r.end());
  return c;
}

Circuit reference_circuit(const ChainSpec& spec) {
  Circuit c;
  for (int j = 1; j <= spec.sites; ++j) c.push_back(Gate::h(j));
  const Circuit u = model_circuit(spec);
  c.insert(c.end(), u.begin(), u.end());
  return c;
}

}  // namespace clusterlab
