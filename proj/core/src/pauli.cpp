#include "clusterlab/pauli.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "clusterlab/errors.hpp"

namespace clusterlab {

namespace {

const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int popcount(Mask m) { return std::popcount(m); }

void check_sites(int a, int b) {
  if (a != b) {
    throw DimensionError("site count mismatch: " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

void check_site(int site, int n) {
  if (site < 1 || site > n) {
    throw IndexError("site " + std::to_string(site) + " outside [1, " + std::to_string(n) +
                     "]");
  }
}

Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Exponent k with (letters a)(letters b) = i^k (letters a^b).
int product_phase(Mask ax, Mask az, Mask bx, Mask bz) {
  const Mask xa = ax & ~az, ya = ax & az, za = ~ax & az;
  const Mask xb = bx & ~bz, yb = bx & bz, zb = ~bx & bz;
  const int plus = popcount((xa & yb) | (ya & zb) | (za & xb));
  const int minus = popcount((ya & xb) | (za & yb) | (xa & zb));
  return ((plus - minus) % 4 + 4) % 4;
}

}  // namespace

char letter_char(Letter l) {
  switch (l) {
    case Letter::I: return 'I';
    case Letter::X: return 'X';
    case Letter::Y: return 'Y';
    case Letter::Z: return 'Z';
  }
  return '?';
}

// ---------------------------------------------------------------- StateVector

StateVector::StateVector(int n_sites) : n_(n_sites) {
  if (n_sites < 1 || n_sites > kStateLimit) {
    throw CapacityError("state vector size " + std::to_string(n_sites) + " outside [1, " +
                        std::to_string(kStateLimit) + "]");
  }
  amps_ = Vector::Zero(Eigen::Index{1} << n_sites);
  amps_[0] = 1.0;
}

StateVector::StateVector(int n_sites, Vector amplitudes) : n_(n_sites), amps_(std::move(amplitudes)) {
  if (n_sites < 1 || n_sites > kStateLimit) {
    throw CapacityError("state vector size " + std::to_string(n_sites) + " outside [1, " +
                        std::to_string(kStateLimit) + "]");
  }
  if (amps_.size() != (Eigen::Index{1} << n_sites)) {
    throw DimensionError("amplitude count " + std::to_string(amps_.size()) +
                         " does not match 2^" + std::to_string(n_sites));
  }
}

StateVector StateVector::basis(int n_sites, std::size_t index) {
  StateVector v(n_sites);
  if (index >= v.dim()) throw IndexError("basis index out of range");
  v.amps_[0] = 0.0;
  v.amps_[static_cast<Eigen::Index>(index)] = 1.0;
  return v;
}

StateVector StateVector::plus(int n_sites) {
  StateVector v(n_sites);
  v.amps_.setConstant(1.0 / std::sqrt(static_cast<double>(v.dim())));
  return v;
}

void StateVector::normalize() {
  const double nrm = amps_.norm();
  if (nrm == 0.0) throw ArgumentError("cannot normalize the zero vector");
  amps_ /= nrm;
}

// ---------------------------------------------------------------- PauliString

PauliString::PauliString(int n_sites) : PauliString(n_sites, 0, 0, 0) {}

PauliString::PauliString(int n_sites, Mask x, Mask z, int phase_exponent)
    : n_(n_sites), x_(x), z_(z), phase_(((phase_exponent % 4) + 4) % 4) {
  if (n_sites < 1 || n_sites > kMaxSites) {
    throw ArgumentError("site count " + std::to_string(n_sites) + " outside [1, 64]");
  }
  if ((x | z) & ~full_mask(n_sites)) throw IndexError("Pauli mask exceeds site count");
}

PauliString PauliString::single(int n_sites, int site, Letter l) {
  PauliString p(n_sites);
  p.set_letter(site, l);
  return p;
}

PauliString PauliString::parse(std::string_view text, int n_sites) {
  PauliString p(n_sites);
  std::istringstream in{std::string(text)};
  std::string tok;
  bool first = true;
  Mask seen = 0;
  while (in >> tok) {
    if (first && (tok == "-" || tok == "i" || tok == "-i" || tok == "+i")) {
      p.phase_ = tok == "-" ? 2 : (tok == "-i" ? 3 : 1);
      first = false;
      continue;
    }
    first = false;
    if (tok == "I") continue;
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    Letter l;
    switch (c) {
      case 'I': l = Letter::I; break;
      case 'X': l = Letter::X; break;
      case 'Y': l = Letter::Y; break;
      case 'Z': l = Letter::Z; break;
      default: throw ArgumentError("bad Pauli token '" + tok + "'");
    }
    int site = 0;
    const char* b = tok.data() + 1;
    const char* e = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(b, e, site);
    if (ec != std::errc() || ptr != e || b == e) {
      throw ArgumentError("bad Pauli token '" + tok + "'");
    }
    check_site(site, n_sites);
    if (seen & bit(site)) throw ArgumentError("site " + std::to_string(site) + " repeated");
    seen |= bit(site);
    p.set_letter(site, l);
  }
  return p;
}

cplx PauliString::phase() const { return kIPow[phase_]; }

Letter PauliString::letter(int site) const {
  check_site(site, n_);
  const bool xb = x_ & bit(site), zb = z_ & bit(site);
  if (xb && zb) return Letter::Y;
  if (xb) return Letter::X;
  if (zb) return Letter::Z;
  return Letter::I;
}

void PauliString::set_letter(int site, Letter l) {
  check_site(site, n_);
  const Mask b = bit(site);
  x_ &= ~b;
  z_ &= ~b;
  if (l == Letter::X || l == Letter::Y) x_ |= b;
  if (l == Letter::Z || l == Letter::Y) z_ |= b;
}

PauliString PauliString::with_phase(int k) const { return PauliString(n_, x_, z_, k); }

int PauliString::weight() const { return popcount(x_ | z_); }
int PauliString::y_count() const { return popcount(x_ & z_); }

std::string PauliString::label() const {
  if (is_identity()) return "I";
  std::string out;
  for (int s = 1; s <= n_; ++s) {
    const Letter l = letter(s);
    if (l == Letter::I) continue;
    if (!out.empty()) out += ' ';
    out += letter_char(l);
    out += std::to_string(s);
  }
  return out;
}

std::string PauliString::to_string() const {
  static const char* prefix[4] = {"", "i ", "- ", "-i "};
  return prefix[phase_] + label();
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
  check_sites(a.n_sites(), b.n_sites());
  const int k = a.phase_exponent() + b.phase_exponent() +
                product_phase(a.x_mask(), a.z_mask(), b.x_mask(), b.z_mask());
  return PauliString(a.n_sites(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask(), k);
}

PauliString operator*(const PauliString& a, const PauliString& b) { return pauli_mul(a, b); }

bool commutes(const PauliString& a, const PauliString& b) {
  check_sites(a.n_sites(), b.n_sites());
  return popcount((a.x_mask() & b.z_mask()) ^ (a.z_mask() & b.x_mask())) % 2 == 0;
}

// ---------------------------------------------------------------- OperatorSum

OperatorSum::OperatorSum(int n_sites) : n_(n_sites) {
  if (n_sites < 1 || n_sites > kMaxSites) {
    throw ArgumentError("site count " + std::to_string(n_sites) + " outside [1, 64]");
  }
}

OperatorSum::OperatorSum(const PauliString& p, cplx coeff) : OperatorSum(p.n_sites()) {
  add(p, coeff);
}

OperatorSum OperatorSum::identity(int n_sites, cplx coeff) {
  OperatorSum s(n_sites);
  s.add(PauliKey{}, coeff);
  return s;
}

OperatorSum OperatorSum::parse(std::string_view text, int n_sites, cplx coeff) {
  return OperatorSum(PauliString::parse(text, n_sites), coeff);
}

void OperatorSum::add(PauliKey key, cplx coeff) {
  if ((key.x | key.z) & ~full_mask(n_)) throw IndexError("Pauli mask exceeds site count");
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (std::abs(coeff) >= kPruneTol) terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (std::abs(it->second) < kPruneTol) terms_.erase(it);
}

void OperatorSum::add(const PauliString& p, cplx coeff) {
  check_sites(n_, p.n_sites());
  add(PauliKey{p.x_mask(), p.z_mask()}, coeff * p.phase());
}

cplx OperatorSum::coefficient(const PauliString& p) const {
  check_sites(n_, p.n_sites());
  auto it = terms_.find(PauliKey{p.x_mask(), p.z_mask()});
  return it == terms_.end() ? cplx{0.0} : it->second;
}

cplx OperatorSum::coefficient(std::string_view label) const {
  return coefficient(PauliString::parse(label, n_));
}

void OperatorSum::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) < tol; });
}

OperatorSum OperatorSum::adjoint() const {
  OperatorSum out(n_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, std::conj(c));
  return out;
}

bool OperatorSum::is_hermitian(double tol) const {
  for (const auto& [k, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

bool OperatorSum::is_real_matrix(double tol) const {
  for (const auto& [k, c] : terms_) {
    const cplx f = c * kIPow[popcount(k.x & k.z) % 4];
    if (std::abs(f.imag()) > tol) return false;
  }
  return true;
}

Mask OperatorSum::support() const {
  Mask m = 0;
  for (const auto& [k, c] : terms_) m |= k.x | k.z;
  return m;
}

double OperatorSum::max_abs_diff(const OperatorSum& other) const {
  check_sites(n_, other.n_);
  double d = 0.0;
  for (const auto& [k, c] : terms_) {
    auto it = other.terms_.find(k);
    d = std::max(d, std::abs(c - (it == other.terms_.end() ? cplx{0.0} : it->second)));
  }
  for (const auto& [k, c] : other.terms_) {
    if (!terms_.contains(k)) d = std::max(d, std::abs(c));
  }
  return d;
}

double OperatorSum::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& other) {
  check_sites(n_, other.n_);
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

OperatorSum& OperatorSum::operator-=(const OperatorSum& other) {
  check_sites(n_, other.n_);
  for (const auto& [k, c] : other.terms_) add(k, -c);
  return *this;
}

OperatorSum& OperatorSum::operator*=(cplx s) {
  for (auto& [k, c] : terms_) c *= s;
  prune();
  return *this;
}

std::string OperatorSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real();
    if (c.imag() != 0.0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
    os << ") " << PauliString(n_, k.x, k.z).label();
  }
  return os.str();
}

OperatorSum opsum_combine(const OperatorSum& a, const OperatorSum& b, cplx ca, cplx cb) {
  check_sites(a.n_sites(), b.n_sites());
  OperatorSum out(a.n_sites());
  for (const auto& [k, c] : a.terms()) out.add(k, ca * c);
  for (const auto& [k, c] : b.terms()) out.add(k, cb * c);
  out.prune();
  return out;
}

OperatorSum opsum_mul(const OperatorSum& a, const OperatorSum& b) {
  check_sites(a.n_sites(), b.n_sites());
  OperatorSum out(a.n_sites());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const int ph = product_phase(ka.x, ka.z, kb.x, kb.z);
      out.add(PauliKey{ka.x ^ kb.x, ka.z ^ kb.z}, ca * cb * kIPow[ph]);
    }
  }
  out.prune();
  return out;
}

OperatorSum operator+(const OperatorSum& a, const OperatorSum& b) { return opsum_combine(a, b, 1.0, 1.0); }
OperatorSum operator-(const OperatorSum& a, const OperatorSum& b) { return opsum_combine(a, b, 1.0, -1.0); }
OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) { return opsum_mul(a, b); }
OperatorSum operator*(cplx s, const OperatorSum& a) {
  OperatorSum out(a);
  out *= s;
  return out;
}
OperatorSum operator*(const OperatorSum& a, cplx s) { return s * a; }

OperatorSum conjugate_by_hadamard(const OperatorSum& op, int site) {
  check_site(site, op.n_sites());
  const Mask b = bit(site);
  OperatorSum out(op.n_sites());
  for (const auto& [k, c] : op.terms()) {
    const bool xb = k.x & b, zb = k.z & b;
    PauliKey nk = k;
    nk.x = (k.x & ~b) | (zb ? b : 0);
    nk.z = (k.z & ~b) | (xb ? b : 0);
    out.add(nk, (xb && zb) ? -c : c);
  }
  return out;
}

OperatorSum conjugate_by_rotation(const OperatorSum& op, Axis axis, int site, double angle) {
  check_site(site, op.n_sites());
  const Mask b = bit(site);
  const double cs = std::cos(angle), sn = std::sin(angle);
  OperatorSum out(op.n_sites());
  for (const auto& [k, c] : op.terms()) {
    const bool xb = k.x & b, zb = k.z & b;
    const Letter l = xb ? (zb ? Letter::Y : Letter::X) : (zb ? Letter::Z : Letter::I);
    const Letter fixed = axis == Axis::X ? Letter::X : Letter::Z;
    if (l == Letter::I || l == fixed) {
      out.add(k, c);
      continue;
    }
    // Rotating letter r maps to r cos + s sin with s the partner letter.
    Letter partner;
    double sign;
    if (axis == Axis::X) {
      // Z -> Z cos - Y sin ; Y -> Y cos + Z sin
      partner = l == Letter::Z ? Letter::Y : Letter::Z;
      sign = l == Letter::Z ? -1.0 : 1.0;
    } else {
      // X -> X cos - Y sin ; Y -> Y cos + X sin
      partner = l == Letter::X ? Letter::Y : Letter::X;
      sign = l == Letter::X ? -1.0 : 1.0;
    }
    PauliKey pk = k;
    pk.x &= ~b;
    pk.z &= ~b;
    if (partner == Letter::X || partner == Letter::Y) pk.x |= b;
    if (partner == Letter::Z || partner == Letter::Y) pk.z |= b;
    out.add(k, c * cs);
    out.add(pk, c * sign * sn);
  }
  out.prune();
  return out;
}

OperatorSum conjugate_by_pauli(const OperatorSum& op, const PauliString& p) {
  check_sites(op.n_sites(), p.n_sites());
  OperatorSum out(op.n_sites());
  for (const auto& [k, c] : op.terms()) {
    const bool anti = popcount((k.x & p.z_mask()) ^ (k.z & p.x_mask())) % 2 == 1;
    out.add(k, anti ? -c : c);
  }
  return out;
}

OperatorSum conjugate_by_pauli_rotation(const OperatorSum& op, const PauliString& p, double angle) {
  check_sites(op.n_sites(), p.n_sites());
  if (p.phase_exponent() % 2 != 0) throw ArgumentError("rotation generator must be Hermitian");
  const double cs = std::cos(angle), sn = std::sin(angle);
  const cplx sign = p.phase();
  OperatorSum out(op.n_sites());
  for (const auto& [k, c] : op.terms()) {
    const bool anti = popcount((k.x & p.z_mask()) ^ (k.z & p.x_mask())) % 2 == 1;
    if (!anti) {
      out.add(k, c);
      continue;
    }
    // e^{-i t P/2} Q e^{i t P/2} = Q cos t - i sin t P Q
    out.add(k, c * cs);
    const int ph = product_phase(p.x_mask(), p.z_mask(), k.x, k.z);
    out.add(PauliKey{k.x ^ p.x_mask(), k.z ^ p.z_mask()}, c * sign * cplx{0.0, -sn} * kIPow[ph]);
  }
  out.prune();
  return out;
}

OperatorSum conjugate_by_cx(const OperatorSum& op, int control, int target) {
  check_site(control, op.n_sites());
  check_site(target, op.n_sites());
  if (control == target) throw ArgumentError("CX control equals target");
  const int n = op.n_sites();
  const Mask bc = bit(control), bt = bit(target);
  // Images: X_c -> X_c X_t, Z_t -> Z_c Z_t, X_t and Z_c fixed.
  auto image = [&](Mask x, Mask z) {
    PauliString out(n);
    for (int s = 1; s <= n; ++s) {
      const Mask b = bit(s);
      if (!((x | z) & b)) continue;
      PauliString xs(n), zs(n);
      if (x & b) xs = s == control ? PauliString(n, bc | bt, 0) : PauliString(n, b, 0);
      if (z & b) zs = s == target ? PauliString(n, 0, bc | bt) : PauliString(n, 0, b);
      // letter = i^{[Y]} X^x Z^z on this site
      const PauliString letter = pauli_mul(xs, zs).with_phase(
          pauli_mul(xs, zs).phase_exponent() + ((x & z & b) ? 1 : 0));
      out = pauli_mul(out, letter);
    }
    return out;
  };
  OperatorSum result(n);
  for (const auto& [k, c] : op.terms()) result.add(image(k.x, k.z), c);
  result.prune();
  return result;
}

Matrix opsum_to_matrix(const OperatorSum& op) {
  const int n = op.n_sites();
  if (n > kDenseLimit) {
    throw CapacityError("dense matrix requested for " + std::to_string(n) +
                        " sites; limit is " + std::to_string(kDenseLimit));
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& [k, c] : op.terms()) {
    const cplx f = c * kIPow[popcount(k.x & k.z) % 4];
    for (Eigen::Index col = 0; col < dim; ++col) {
      const Mask b = static_cast<Mask>(col);
      const double s = (popcount(b & k.z) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(b ^ k.x), col) += s * f;
    }
  }
  return m;
}

void opsum_apply(const OperatorSum& op, const cplx* x, cplx* y, std::size_t dim) {
  if (dim != (std::size_t{1} << op.n_sites())) {
    throw DimensionError("vector length " + std::to_string(dim) + " does not match 2^" +
                         std::to_string(op.n_sites()));
  }
  struct Term {
    Mask x, z;
    cplx f;
  };
  std::vector<Term> ts;
  ts.reserve(op.size());
  for (const auto& [k, c] : op.terms()) {
    ts.push_back({k.x, k.z, c * kIPow[popcount(k.x & k.z) % 4]});
  }
  const long long n = static_cast<long long>(dim);
  // P|b> = f (-1)^{b.z} |b^x>, so y[a] gathers x[a^x] and results do not
  // depend on the thread partition.
#pragma omp parallel for schedule(static) if (n >= 4096)
  for (long long a = 0; a < n; ++a) {
    cplx acc = 0.0;
    for (const Term& t : ts) {
      const Mask b = static_cast<Mask>(a) ^ t.x;
      const cplx v = x[b] * t.f;
      acc += (popcount(b & t.z) & 1) ? -v : v;
    }
    y[a] = acc;
  }
}

void opsum_apply_real(const OperatorSum& op, const double* x, double* y, std::size_t dim) {
  if (dim != (std::size_t{1} << op.n_sites())) {
    throw DimensionError("vector length " + std::to_string(dim) + " does not match 2^" +
                         std::to_string(op.n_sites()));
  }
  if (!op.is_real_matrix()) throw ArgumentError("operator has imaginary matrix entries");
  struct Term {
    Mask x, z;
    double f;
  };
  std::vector<Term> ts;
  ts.reserve(op.size());
  for (const auto& [k, c] : op.terms()) {
    ts.push_back({k.x, k.z, (c * kIPow[popcount(k.x & k.z) % 4]).real()});
  }
  const long long n = static_cast<long long>(dim);
#pragma omp parallel for schedule(static) if (n >= 4096)
  for (long long a = 0; a < n; ++a) {
    double acc = 0.0;
    for (const Term& t : ts) {
      const Mask b = static_cast<Mask>(a) ^ t.x;
      const double v = x[b] * t.f;
      acc += (popcount(b & t.z) & 1) ? -v : v;
    }
    y[a] = acc;
  }
}

Vector opsum_apply(const OperatorSum& op, const Vector& v) {
  Vector out(v.size());
  opsum_apply(op, v.data(), out.data(), static_cast<std::size_t>(v.size()));
  return out;
}

StateVector opsum_apply(const OperatorSum& op, const StateVector& v) {
  check_sites(op.n_sites(), v.n_sites());
  return StateVector(v.n_sites(), opsum_apply(op, v.amplitudes()));
}

cplx expectation(const OperatorSum& op, const StateVector& v) {
  return v.amplitudes().dot(opsum_apply(op, v.amplitudes()));
}

}  // namespace clusterlab
