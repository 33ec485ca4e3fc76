#include "clusterlab/phase_poly.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <unordered_map>

#include "clusterlab/errors.hpp"

namespace clusterlab {

namespace {

constexpr double kAngleTol = 1e-12;

double reduce(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

bool negligible(double reduced) { return reduced < kAngleTol || kTwoPi - reduced < kAngleTol; }

void check_sites(int a, int b) {
  if (a != b) {
    throw DimensionError("site count mismatch: " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

Mask sites_to_mask(std::span<const int> sites, int n) {
  Mask m = 0;
  for (int s : sites) {
    if (s < 1 || s > n) {
      throw ArgumentError("site " + std::to_string(s) + " outside [1, " + std::to_string(n) + "]");
    }
    if (m & bit(s)) throw ArgumentError("repeated site " + std::to_string(s));
    m |= bit(s);
  }
  return m;
}

// Iterates every submask of m, including 0 and m.
template <class F>
void for_each_submask(Mask m, F&& f) {
  Mask a = m;
  while (true) {
    f(a);
    if (a == 0) break;
    a = (a - 1) & m;
  }
}

}  // namespace

PhasePolynomial::PhasePolynomial(int n_sites) : n_(n_sites) {
  if (n_sites < 1 || n_sites > kMaxSites) {
    throw ArgumentError("site count " + std::to_string(n_sites) + " outside [1, 64]");
  }
}

void PhasePolynomial::add_monomial(Mask sites, double angle) {
  if (n_ < 64 && (sites >> n_) != 0) throw IndexError("monomial outside the chain");
  const double r = reduce(coefficient(sites) + angle);
  if (negligible(r)) {
    coeffs_.erase(sites);
  } else {
    coeffs_[sites] = r;
  }
}

void PhasePolynomial::add_monomial(std::initializer_list<int> sites, double angle) {
  add_monomial(sites_to_mask(std::span<const int>(sites.begin(), sites.size()), n_), angle);
}

double PhasePolynomial::coefficient(Mask sites) const {
  auto it = coeffs_.find(sites);
  return it == coeffs_.end() ? 0.0 : it->second;
}

double PhasePolynomial::evaluate(Mask x) const {
  double t = 0.0;
  for (const auto& [m, c] : coeffs_) {
    if ((x & m) == m) t += c;
  }
  return t;
}

Mask PhasePolynomial::support() const {
  Mask s = 0;
  for (const auto& [m, c] : coeffs_) s |= m;
  return s;
}

PhasePolynomial PhasePolynomial::negated() const {
  PhasePolynomial out(n_);
  for (const auto& [m, c] : coeffs_) out.add_monomial(m, -c);
  return out;
}

double PhasePolynomial::max_abs_diff(const PhasePolynomial& other) const {
  check_sites(n_, other.n_);
  double d = 0.0;
  auto circ = [](double a) {
    const double r = reduce(a);
    return std::min(r, kTwoPi - r);
  };
  for (const auto& [m, c] : coeffs_) d = std::max(d, circ(c - other.coefficient(m)));
  for (const auto& [m, c] : other.coeffs_) d = std::max(d, circ(c - coefficient(m)));
  return d;
}

PhasePolynomial& PhasePolynomial::operator+=(const PhasePolynomial& other) {
  check_sites(n_, other.n_);
  for (const auto& [m, c] : other.coeffs_) add_monomial(m, c);
  return *this;
}

PhasePolynomial from_gate(DiagonalKind kind, std::span<const int> sites, double angle, int n_sites) {
  PhasePolynomial p(n_sites);
  const Mask m = sites_to_mask(sites, n_sites);
  const auto arity = sites.size();
  auto need = [&](std::size_t k, const char* name) {
    if (arity != k) {
      throw ArgumentError(std::string(name) + " acts on " + std::to_string(k) + " sites, got " +
                          std::to_string(arity));
    }
  };
  switch (kind) {
    case DiagonalKind::CZ:
      need(2, "CZ");
      p.add_monomial(m, kPi);
      break;
    case DiagonalKind::CP:
      need(2, "CP");
      p.add_monomial(m, angle);
      break;
    case DiagonalKind::CCZ:
      need(3, "CCZ");
      p.add_monomial(m, kPi);
      break;
    case DiagonalKind::CNZ:
      if (arity < 2) throw ArgumentError("CNZ needs at least 2 sites");
      p.add_monomial(m, kPi);
      break;
    case DiagonalKind::CNP:
      if (arity < 2) throw ArgumentError("CNP needs at least 2 sites");
      p.add_monomial(m, angle);
      break;
    case DiagonalKind::ZROT:
      // e^{-i phi Z/2}: Z = 1 - 2x.
      need(1, "ZROT");
      p.add_monomial(0, -angle / 2);
      p.add_monomial(m, angle);
      break;
    case DiagonalKind::ZZ: {
      // e^{-i phi Z_a Z_b/4}: Z_a Z_b = 1 - 2x_a - 2x_b + 4x_a x_b.
      need(2, "ZZ");
      p.add_monomial(0, -angle / 4);
      p.add_monomial(bit(sites[0]), angle / 2);
      p.add_monomial(bit(sites[1]), angle / 2);
      p.add_monomial(m, -angle);
      break;
    }
  }
  return p;
}

PhasePolynomial compose(const PhasePolynomial& p, const PhasePolynomial& q) {
  PhasePolynomial out(p);
  out += q;
  return out;
}

PhasePolynomial delta(const PhasePolynomial& p, Mask flips) {
  PhasePolynomial out(p.n_sites());
  for (const auto& [m, c] : p.coefficients()) {
    const Mask f = m & flips;
    if (f == 0) continue;
    const Mask rest = m & ~flips;
    // prod_{k in f} (1 - x_k) = sum_{A subset f} (-1)^{|A|} x^A
    for_each_submask(f, [&](Mask a) {
      const double sign = (std::popcount(a) & 1) ? -1.0 : 1.0;
      out.add_monomial(a | rest, sign * c);
    });
    out.add_monomial(m, -c);
  }
  return out;
}

PhasePolynomial delta(const PhasePolynomial& p, int site) {
  if (site < 1 || site > p.n_sites()) {
    throw IndexError("site " + std::to_string(site) + " outside [1, " +
                     std::to_string(p.n_sites()) + "]");
  }
  return delta(p, bit(site));
}

OperatorSum exp_to_opsum(const PhasePolynomial& p) {
  const int s = std::popcount(p.support());
  if (s > kExpansionLimit) {
    throw CapacityError("phase polynomial support of " + std::to_string(s) +
                        " sites exceeds the expansion limit " + std::to_string(kExpansionLimit));
  }
  // Z-monomial mask -> coefficient; the factors commute so the product is a
  // plain convolution over XOR.
  std::unordered_map<Mask, cplx> acc{{Mask{0}, cplx{1.0}}};
  for (const auto& [m, c] : p.coefficients()) {
    const cplx w = (std::exp(cplx{0.0, c}) - 1.0) / static_cast<double>(Mask{1} << std::popcount(m));
    std::unordered_map<Mask, cplx> factor{{Mask{0}, cplx{1.0}}};
    for_each_submask(m, [&](Mask a) {
      factor[a] += (std::popcount(a) & 1) ? -w : w;
    });
    std::unordered_map<Mask, cplx> next;
    next.reserve(acc.size() * factor.size());
    for (const auto& [ka, ca] : acc) {
      for (const auto& [kb, cb] : factor) {
        if (cb == 0.0) continue;
        next[ka ^ kb] += ca * cb;
      }
    }
    std::erase_if(next, [](const auto& kv) { return std::abs(kv.second) < kPruneTol; });
    acc.swap(next);
  }
  OperatorSum out(p.n_sites());
  for (const auto& [z, c] : acc) out.add(PauliKey{0, z}, c);
  out.prune();
  return out;
}

OperatorSum conjugate_x(const PhasePolynomial& p, int site) {
  const PhasePolynomial d = delta(p, site);
  return opsum_mul(OperatorSum(PauliString::single(p.n_sites(), site, Letter::X)), exp_to_opsum(d));
}

OperatorSum conjugate(const PhasePolynomial& p, const OperatorSum& op) {
  if (p.n_sites() != op.n_sites()) {
    throw DimensionError("site count mismatch: " + std::to_string(p.n_sites()) + " vs " +
                         std::to_string(op.n_sites()));
  }
  const int n = op.n_sites();
  std::map<Mask, OperatorSum> dressed;  // X^S exp(i delta_S)
  OperatorSum out(n);
  for (const auto& [k, c] : op.terms()) {
    auto it = dressed.find(k.x);
    if (it == dressed.end()) {
      OperatorSum xs(PauliString(n, k.x, 0));
      it = dressed.emplace(k.x, opsum_mul(xs, exp_to_opsum(delta(p, k.x)))).first;
    }
    // Hermitian letters = i^{#Y} X^S Z^T
    const PauliString zt(n, 0, k.z, std::popcount(k.x & k.z));
    out += opsum_mul(it->second, OperatorSum(zt, c));
  }
  out.prune();
  return out;
}

Vector diagonal(const PhasePolynomial& p) {
  const int n = p.n_sites();
  if (n > kStateLimit) throw CapacityError("diagonal too large");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Vector d(dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    d[x] = std::exp(cplx{0.0, p.evaluate(static_cast<Mask>(x))});
  }
  return d;
}

}  // namespace clusterlab
