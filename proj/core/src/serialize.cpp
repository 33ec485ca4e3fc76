#include "clusterlab/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <limits>
#include <sstream>

#include "clusterlab/errors.hpp"

namespace clusterlab {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

namespace {

std::string fixed(double v, int digits = 2) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  return std::string(buf, p);
}

double number(const Json& j, const std::string& key) {
  if (!j.is_number()) throw ArgumentError("'" + key + "' must be a number");
  return j.get<double>();
}

std::vector<double> number_list(const Json& j, const std::string& key) {
  if (j.is_number()) return {j.get<double>()};
  if (!j.is_array()) throw ArgumentError("'" + key + "' must be a number or a list of numbers");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(number(v, key));
  return out;
}

std::string mask_key(Mask m) {
  std::string s;
  for (int i = 1; i <= 64; ++i) {
    if (m & bit(i)) {
      if (!s.empty()) s += ',';
      s += std::to_string(i);
    }
  }
  return s;
}

}  // namespace

Json to_json(const OperatorSum& op) {
  Json arr = Json::array();
  for (const auto& [k, c] : op.terms()) {
    arr.push_back({{"pauli", PauliString(op.n_sites(), k.x, k.z).label()}, {"re", c.real()}, {"im", c.imag()}});
  }
  return arr;
}

OperatorSum opsum_from_json(const Json& j, int n_sites) {
  if (!j.is_array()) throw ArgumentError("operator sum must be a JSON array");
  OperatorSum op(n_sites);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("pauli")) throw ArgumentError("term needs a 'pauli' field");
    for (const auto& [k, v] : t.items()) {
      if (k != "pauli" && k != "re" && k != "im") throw ArgumentError("unknown term key '" + k + "'");
    }
    const double re = t.contains("re") ? number(t["re"], "re") : 0.0;
    const double im = t.contains("im") ? number(t["im"], "im") : 0.0;
    op.add(PauliString::parse(t["pauli"].get<std::string>(), n_sites), cplx{re, im});
  }
  op.prune();
  return op;
}

Json to_json(const PhasePolynomial& p) {
  Json obj = Json::object();
  for (const auto& [m, c] : p.coefficients()) obj[mask_key(m)] = c;
  return obj;
}

PhasePolynomial phase_poly_from_json(const Json& j, int n_sites) {
  if (!j.is_object()) throw ArgumentError("phase polynomial must be a JSON object");
  PhasePolynomial p(n_sites);
  for (const auto& [key, v] : j.items()) {
    Mask m = 0;
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      int s = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), s);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || s < 1 || s > n_sites) {
        throw ArgumentError("bad monomial key '" + key + "'");
      }
      if (m & bit(s)) throw ArgumentError("repeated site in monomial '" + key + "'");
      m |= bit(s);
    }
    p.add_monomial(m, number(v, key));
  }
  return p;
}

Json to_json(const ChainSpec& spec) {
  Json j;
  j["sites"] = spec.sites;
  j["boundary"] = to_string(spec.boundary);
  j["model"] = to_string(spec.model);
  j["order"] = spec.order;
  j["angles"] = spec.angles;
  j["zz_angles"] = spec.zz_angles;
  j["edge_terms"] = to_string(spec.edge_terms);
  return j;
}

ChainSpec chain_from_json(const Json& j) {
  if (!j.is_object()) throw ArgumentError("chain spec must be a JSON object");
  ChainSpec spec;
  for (const auto& [key, v] : j.items()) {
    if (key == "sites") {
      if (!v.is_number_integer()) throw ArgumentError("'sites' must be an integer");
      spec.sites = v.get<int>();
    } else if (key == "boundary") {
      spec.boundary = parse_boundary(v.get<std::string>());
    } else if (key == "model") {
      spec.model = parse_model(v.get<std::string>());
    } else if (key == "order") {
      if (!v.is_number_integer()) throw ArgumentError("'order' must be an integer");
      spec.order = v.get<int>();
    } else if (key == "angles") {
      spec.angles = number_list(v, key);
    } else if (key == "zz_angles") {
      spec.zz_angles = number_list(v, key);
    } else if (key == "edge_terms") {
      spec.edge_terms = parse_edge_terms(v.get<std::string>());
    } else {
      throw ArgumentError("unknown config key '" + key + "'");
    }
  }
  if (spec.model == ModelKind::CCZ && spec.order == 0) spec.order = 0;
  return spec;
}

Json to_json(const SpectrumResult& s) {
  Json j;
  j["eigenvalues"] = s.eigenvalues;
  Json cl = Json::array();
  for (const auto& c : s.clusters) cl.push_back(Json::array({c.value, c.multiplicity}));
  j["clusters"] = cl;
  j["gap"] = s.gap ? Json(*s.gap) : Json(nullptr);
  j["residual_max"] = s.residual_max();
  j["seed"] = s.seed;
  j["method"] = s.method == Method::Dense ? "dense" : "iterative";
  return j;
}

Json to_json(const StateVector& v) {
  Json arr = Json::array();
  const int n = v.n_sites();
  for (std::size_t b = 0; b < v.dim(); ++b) {
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int s = 1; s <= n; ++s) {
      if (b & (std::size_t{1} << (s - 1))) bits[static_cast<std::size_t>(n - s)] = '1';
    }
    arr.push_back({{"basis", bits}, {"re", v[b].real()}, {"im", v[b].imag()}});
  }
  return arr;
}

std::string to_binary(const StateVector& v) {
  std::string out;
  out.reserve(v.dim() * 16);
  auto put = [&](double d) {
    unsigned char bytes[8];
    std::uint64_t u;
    std::memcpy(&u, &d, 8);
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(u >> (8 * i));
    out.append(reinterpret_cast<const char*>(bytes), 8);
  };
  for (std::size_t b = 0; b < v.dim(); ++b) {
    put(v[b].real());
    put(v[b].imag());
  }
  return out;
}

std::string to_csv(const SweepTable& t, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "alpha";
  for (int i = 0; i < t.m; ++i) out += ",e" + std::to_string(i);
  out += ",gap,string_order\n";
  for (const auto& r : t.rows) {
    out += format_double(r.alpha);
    for (int i = 0; i < t.m; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      out += "," + format_double(idx < r.energies.size() ? r.energies[idx]
                                                         : std::numeric_limits<double>::quiet_NaN());
    }
    out += "," + format_double(r.gap.value_or(std::numeric_limits<double>::quiet_NaN()));
    out += "," + format_double(r.string_order) + "\n";
  }
  return out;
}

std::string to_svg(const SweepTable& t, const std::string& title) {
  const double w = 640, x0 = 70, x1 = 620;
  struct Panel {
    double top, bottom;
    std::string label;
  };
  const Panel pe{40, 270, "energy"}, ps{320, 550, "string order"};
  auto px = [&](double a) { return x0 + a * (x1 - x0); };

  double emin = std::numeric_limits<double>::infinity(), emax = -emin;
  for (const auto& r : t.rows) {
    for (double e : r.energies) {
      if (std::isfinite(e)) {
        emin = std::min(emin, e);
        emax = std::max(emax, e);
      }
    }
  }
  if (!std::isfinite(emin)) emin = 0, emax = 1;
  if (emax - emin < 1e-12) emin -= 1, emax += 1;
  double smin = 0, smax = 1;
  for (const auto& r : t.rows) {
    if (std::isfinite(r.string_order)) {
      smin = std::min(smin, r.string_order);
      smax = std::max(smax, r.string_order);
    }
  }

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"600\" viewBox=\"0 0 640 600\">\n";
  s += "<rect width=\"640\" height=\"600\" fill=\"white\"/>\n";
  if (!title.empty()) s += "<text x=\"320\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" + title + "</text>\n";
  auto frame = [&](const Panel& p, double lo, double hi) {
    s += "<rect x=\"" + fixed(x0) + "\" y=\"" + fixed(p.top) + "\" width=\"" + fixed(x1 - x0) +
         "\" height=\"" + fixed(p.bottom - p.top) + "\" fill=\"none\" stroke=\"black\"/>\n";
    s += "<text x=\"15\" y=\"" + fixed((p.top + p.bottom) / 2) + "\" font-size=\"12\" transform=\"rotate(-90 15 " +
         fixed((p.top + p.bottom) / 2) + ")\" text-anchor=\"middle\">" + p.label + "</text>\n";
    s += "<text x=\"" + fixed(x0 - 4) + "\" y=\"" + fixed(p.top + 4) + "\" font-size=\"10\" text-anchor=\"end\">" +
         fixed(hi, 3) + "</text>\n";
    s += "<text x=\"" + fixed(x0 - 4) + "\" y=\"" + fixed(p.bottom + 4) + "\" font-size=\"10\" text-anchor=\"end\">" +
         fixed(lo, 3) + "</text>\n";
    s += "<text x=\"" + fixed(x0) + "\" y=\"" + fixed(p.bottom + 16) + "\" font-size=\"10\" text-anchor=\"middle\">0</text>\n";
    s += "<text x=\"" + fixed(x1) + "\" y=\"" + fixed(p.bottom + 16) + "\" font-size=\"10\" text-anchor=\"middle\">1</text>\n";
    s += "<text x=\"" + fixed((x0 + x1) / 2) + "\" y=\"" + fixed(p.bottom + 16) +
         "\" font-size=\"10\" text-anchor=\"middle\">alpha</text>\n";
  };
  auto line = [&](const Panel& p, double lo, double hi, auto value, const char* colour) {
    std::string pts;
    for (const auto& r : t.rows) {
      const double v = value(r);
      if (!std::isfinite(v)) continue;
      const double y = p.bottom - (v - lo) / (hi - lo) * (p.bottom - p.top);
      if (!pts.empty()) pts += ' ';
      pts += fixed(px(r.alpha)) + "," + fixed(y);
    }
    s += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
  };
  frame(pe, emin, emax);
  static const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  for (int i = 0; i < t.m; ++i) {
    line(pe, emin, emax, [i](const SweepRow& r) {
      const auto idx = static_cast<std::size_t>(i);
      return idx < r.energies.size() ? r.energies[idx] : std::numeric_limits<double>::quiet_NaN();
    }, colours[i % 6]);
  }
  frame(ps, smin, smax);
  line(ps, smin, smax, [](const SweepRow& r) { return r.string_order; }, "black");
  s += "</svg>\n";
  (void)w;
  return s;
}

}  // namespace clusterlab
