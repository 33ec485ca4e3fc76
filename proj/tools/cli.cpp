#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "clusterlab/circuits.hpp"
#include "clusterlab/errors.hpp"
#include "clusterlab/models.hpp"
#include "clusterlab/parallel.hpp"
#include "clusterlab/symmetry.hpp"
#include "clusterlab/version.hpp"

namespace clusterlab::cli {

namespace {

const char* kChainKeys[] = {"model", "sites", "boundary", "edge_terms", "order", "angles", "zz_angles"};

bool is_chain_key(const std::string& k) {
  return std::find(std::begin(kChainKeys), std::end(kChainKeys), k) != std::end(kChainKeys);
}

int json_int(const Json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ArgumentError("'" + key + "' must be an integer");
  return v.get<int>();
}

double json_number(const Json& v, const std::string& key) {
  if (!v.is_number()) throw ArgumentError("'" + key + "' must be a number");
  return v.get<double>();
}

std::string json_string(const Json& v, const std::string& key) {
  if (!v.is_string()) throw ArgumentError("'" + key + "' must be a string");
  return v.get<std::string>();
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ArgumentError("string range must look like i,j");
  try {
    std::size_t a = 0, b = 0;
    const int i = std::stoi(s.substr(0, comma), &a);
    const int j = std::stoi(s.substr(comma + 1), &b);
    if (a != comma || b != s.size() - comma - 1) throw ArgumentError("bad string range '" + s + "'");
    return {i, j};
  } catch (const std::logic_error&) {
    throw ArgumentError("bad string range '" + s + "'");
  }
}

bool known_command(const std::string& c) {
  return std::find(std::begin(kCommands), std::end(kCommands), c) != std::end(kCommands);
}

Json header(const RunConfig& c) {
  Json j;
  j["version"] = kVersion;
  j["command"] = c.command;
  j["config"] = config_to_json(c);
  return j;
}

std::vector<std::string> comment_lines(const RunConfig& c) {
  return {std::string("clusterlab ") + kVersion, "command " + c.command, "config " + config_to_json(c).dump()};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json sweep_json(const SweepTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row;
    row["alpha"] = r.alpha;
    row["energies"] = r.energies;
    row["gap"] = r.gap ? Json(*r.gap) : Json(nullptr);
    row["string_order"] = r.string_order;
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(row);
  }
  Json j;
  j["axis"] = to_string(t.axis);
  j["m"] = t.m;
  j["string_range"] = {t.string_range.first, t.string_range.second};
  j["rows"] = rows;
  return j;
}

int expected_edge_degeneracy(const ChainSpec& spec) {
  const int order = spec.interaction_order();
  return 1 << (2 * order);
}

// --- commands -----------------------------------------------------------

std::string cmd_state(const RunConfig& c) {
  const StateVector s = cluster_state(c.chain);
  if (effective_format(c) == "binary") {
    // one JSON header line, then little-endian (re, im) doubles
    return header(c).dump() + "\n" + to_binary(s);
  }
  Json j = header(c);
  j["result"] = {{"n_sites", s.n_sites()}, {"norm", s.norm()}, {"amplitudes", to_json(s)}};
  return dump(j);
}

std::string cmd_spectrum(const RunConfig& c) {
  const ModelBundle bundle = build(c.chain);
  SpectrumResult r;
  if (c.k || c.chain.sites > kDenseLimit) {
    IterativeOptions o;
    o.seed = c.seed;
    r = ground_subspace(bundle.hamiltonian, c.k.value_or(8), c.tol, o);
  } else {
    r = diagonalize_dense(bundle.hamiltonian, 1);
  }
  if (effective_format(c) == "csv") {
    std::string s;
    for (const auto& l : comment_lines(c)) s += "# " + l + "\n";
    s += "index,energy\n";
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
      s += std::to_string(i) + "," + format_double(r.eigenvalues[i]) + "\n";
    }
    return s;
  }
  Json j = header(c);
  j["result"] = to_json(r);
  j["result"]["ground_degeneracy"] = degeneracy_count(r);
  return dump(j);
}

std::string cmd_sweep(const RunConfig& c) {
  SweepOptions o;
  o.axis = c.axis;
  o.string_range = c.string_range;
  o.jobs = current_jobs();
  o.seed = c.seed;
  const SweepTable t = sweep_alpha(c.chain, uniform_grid(c.grid), c.m, o);
  const std::string f = effective_format(c);
  if (f == "csv") return to_csv(t, comment_lines(c));
  if (f == "svg") {
    std::string svg = to_svg(t, to_string(c.chain.model) + " " + std::to_string(c.chain.sites) + " sites, " +
                                    to_string(c.chain.boundary));
    const std::string meta = "<!-- clusterlab " + std::string(kVersion) + " " + config_to_json(c).dump() + " -->\n";
    const auto pos = svg.find('\n');
    return svg.substr(0, pos + 1) + meta + svg.substr(pos + 1);
  }
  Json j = header(c);
  j["result"] = sweep_json(t);
  return dump(j);
}

StateVector chosen_state(const RunConfig& c, const ModelBundle& bundle) {
  if (c.state == "plus") return StateVector::plus(c.chain.sites);
  if (c.state == "ground") {
    const SpectrumResult r = c.chain.sites <= kDenseLimit
                                 ? diagonalize_dense(bundle.hamiltonian, 1)
                                 : ground_subspace(bundle.hamiltonian, 1, c.tol, IterativeOptions{.seed = c.seed});
    return StateVector(c.chain.sites, r.eigenvectors.col(0));
  }
  return bundle.reference_state ? *bundle.reference_state : cluster_state(c.chain);
}

std::string cmd_string_order(const RunConfig& c) {
  const ModelBundle bundle = build(c.chain);
  const auto [i, j] = c.string_range.value_or(default_string_range(c.chain));
  const StringOrder o = string_order(chosen_state(c, bundle), bundle, i, j);
  Json out = header(c);
  out["result"] = {{"state", c.state}, {"string_range", {i, j}}, {"re", o.real}, {"im", o.imag}};
  return dump(out);
}

struct Check {
  std::string name;
  double residual;
};

std::vector<Check> run_checks(const RunConfig& c) {
  const ChainSpec& spec = c.chain;
  const ModelBundle bundle = build(spec);
  std::vector<Check> checks;
  checks.push_back({"hermitian", bundle.hamiltonian.max_abs_diff(bundle.hamiltonian.adjoint())});
  double comm = 0;
  for (std::size_t a = 0; a < bundle.stabilizers.size(); ++a) {
    for (std::size_t b = a + 1; b < bundle.stabilizers.size(); ++b) {
      comm = std::max(comm, commutator_norm(bundle.stabilizers[a], bundle.stabilizers[b]));
    }
  }
  checks.push_back({"stabilizers_commute", comm});
  if (bundle.reference_state) {
    const FrustrationReport f = frustration_check(bundle);
    checks.push_back({"frustration_free", f.max_residual});
    if (spec.sites <= kDenseLimit) checks.push_back({"ground_energy", std::abs(f.ground_energy - f.expected_energy)});
    const auto [i, j] = default_string_range(spec);
    const StringOrder o = string_order(*bundle.reference_state, bundle, i, j);
    checks.push_back({"string_order", std::hypot(o.real - 1.0, o.imag)});
  }
  if (spec.sites <= kDenseLimit) {
    const auto [e, o] = eta_generators(spec);
    checks.push_back({"symmetry_even", commutator_norm(e, bundle.hamiltonian)});
    checks.push_back({"symmetry_odd", commutator_norm(o, bundle.hamiltonian)});
  }
  const ModelKind m = spec.model;
  const bool interpolates = m == ModelKind::ZXZ || m == ModelKind::CCZ || m == ModelKind::CNZ;
  if (spec.closed() && interpolates) {
    const OperatorSum h = interpolated(bundle, 0.3);
    const OperatorSum d = conjugate_by_circuit(h, diagonal_layer(spec));
    checks.push_back({"duality", d.max_abs_diff(interpolated(bundle, 0.7))});
  }
  if (spec.closed() && m == ModelKind::ZXZ && spec.sites <= 8) {
    const NoninvertibleReport r = noninvertible_check(spec);
    checks.push_back({"noninvertible_hamiltonian", r.hamiltonian_residual});
    checks.push_back({"noninvertible_map", r.map_residual});
    checks.push_back({"noninvertible_kernel", r.min_singular_value});
    const KtReport kt = kt_check(spec);
    checks.push_back({"kennedy_tasaki_x", kt.x_residual});
    checks.push_back({"kennedy_tasaki_k", kt.k_residual});
  }
  if (!spec.closed() && spec.edge_terms == EdgeTerms::Drop && spec.sites <= kDenseLimit) {
    const SpectrumResult r = diagonalize_dense(bundle.hamiltonian, 0);
    checks.push_back({"edge_degeneracy",
                      std::abs(static_cast<double>(degeneracy_count(r) - expected_edge_degeneracy(spec)))});
  }
  return checks;
}

std::string cmd_verify(const RunConfig& c, bool& all_pass) {
  Json records = Json::array();
  all_pass = true;
  for (const Check& k : run_checks(c)) {
    const bool pass = k.residual < c.check_tol;
    all_pass = all_pass && pass;
    records.push_back({{"check", k.name},
                       {"model", to_string(c.chain.model)},
                       {"sites", c.chain.sites},
                       {"residual", k.residual},
                       {"pass", pass}});
  }
  Json j = header(c);
  j["result"] = {{"pass", all_pass}, {"checks", records}};
  return dump(j);
}

std::string cmd_expand(const RunConfig& c) {
  const ModelBundle bundle = build(c.chain);
  Json stabs = Json::array();
  for (std::size_t i = 0; i < bundle.retained.size(); ++i) {
    const int s = bundle.retained[i];
    if (c.site && *c.site != s) continue;
    stabs.push_back({{"site", s}, {"terms", to_json(bundle.stabilizers[i])}});
  }
  Json j = header(c);
  j["result"]["stabilizers"] = stabs;
  const Circuit layer = diagonal_layer(c.chain);
  if (std::all_of(layer.begin(), layer.end(), [](const Gate& g) { return g.is_diagonal(); })) {
    j["result"]["phase_polynomial"] = to_json(circuit_phase_polynomial(layer, c.chain.sites));
  }
  return dump(j);
}

std::string cmd_logicals(const RunConfig& c) {
  const LogicalSet ls = edge_logicals(c.chain);
  Json j = header(c);
  Json edges;
  for (Edge e : {Edge::Left, Edge::Right}) {
    Json list = Json::array();
    for (const auto& t : ls.edge(e)) {
      list.push_back({{"site", t.site}, {"x", to_json(t.x)}, {"y", to_json(t.y)}, {"z", to_json(t.z)}});
    }
    edges[to_string(e)] = list;
  }
  j["result"]["order"] = ls.order;
  j["result"]["logicals"] = edges;
  Json actions = Json::array();
  for (const auto& a : edge_symmetry_action(c.chain)) {
    actions.push_back({{"edge", to_string(a.edge)},
                       {"generator", a.generator},
                       {"logical", std::string(1, a.logical)},
                       {"index", a.index},
                       {"sign", a.sign}});
  }
  j["result"]["actions"] = actions;
  std::vector<std::pair<std::string, OperatorSum>> reps;
  Json rep_json;
  for (Edge e : {Edge::Left, Edge::Right}) {
    for (const char* g : {"even", "odd"}) {
      const std::string name = to_string(e) + "_" + g;
      reps.emplace_back(name, edge_representation(c.chain, e, g));
      rep_json[name] = to_json(reps.back().second);
    }
  }
  j["result"]["representations"] = rep_json;
  Json omega = Json::array();
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      omega.push_back({{"g", reps[a].first}, {"h", reps[b].first},
                       {"omega", projective_phase(reps[a].second, reps[b].second)}});
    }
  }
  j["result"]["omega"] = omega;
  return dump(j);
}

void write_output(const RunConfig& c, const std::string& content, std::ostream& out) {
  if (c.out.empty()) {
    out << content;
    out.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open '" + c.out + "' for writing");
  f << content;
  if (!f) throw std::ios_base::failure("write to '" + c.out + "' failed");
}

void error_record(std::ostream& err, const std::string& kind, const std::string& message, const RunConfig* c) {
  Json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  j["version"] = kVersion;
  if (c) j["config"] = config_to_json(*c);
  err << j.dump() << "\n";
}

}  // namespace

std::vector<double> parse_angle_list(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body[0] == '@') {
    std::ifstream f(body.substr(1));
    if (!f) throw ArgumentError("cannot read angle file '" + body.substr(1) + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    body = ss.str();
  }
  std::replace_if(body.begin(), body.end(), [](char ch) { return ch == ',' || ch == '\n' || ch == '\t'; }, ' ');
  std::istringstream in(body);
  in.imbue(std::locale::classic());
  std::vector<double> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != tok.size()) throw ArgumentError("bad angle '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ArgumentError("empty angle list");
  return out;
}

Json config_to_json(const RunConfig& c) {
  Json j = to_json(c.chain);
  j["grid"] = c.grid;
  j["m"] = c.m;
  j["k"] = c.k ? Json(*c.k) : Json(nullptr);
  j["tol"] = c.tol;
  j["check_tol"] = c.check_tol;
  j["axis"] = to_string(c.axis);
  j["string_range"] = c.string_range ? Json::array({c.string_range->first, c.string_range->second}) : Json(nullptr);
  j["state"] = c.state;
  j["site"] = c.site ? Json(*c.site) : Json(nullptr);
  j["seed"] = c.seed;
  j["jobs"] = c.jobs ? Json(*c.jobs) : Json(nullptr);
  j["out"] = c.out;
  j["format"] = effective_format(c);
  return j;
}

RunConfig config_from_json(const Json& j, RunConfig base) {
  if (!j.is_object()) throw ArgumentError("config must be a JSON object");
  Json chain = to_json(base.chain);
  for (const auto& [key, v] : j.items()) {
    if (is_chain_key(key)) {
      chain[key] = v;
    } else if (key == "command") {
      base.command = json_string(v, key);
    } else if (key == "grid") {
      base.grid = json_int(v, key);
    } else if (key == "m") {
      base.m = json_int(v, key);
    } else if (key == "k") {
      base.k = v.is_null() ? std::nullopt : std::optional<int>(json_int(v, key));
    } else if (key == "tol") {
      base.tol = json_number(v, key);
    } else if (key == "check_tol") {
      base.check_tol = json_number(v, key);
    } else if (key == "axis") {
      base.axis = parse_sweep_axis(json_string(v, key));
    } else if (key == "string_range") {
      if (v.is_null()) {
        base.string_range.reset();
      } else if (v.is_array() && v.size() == 2) {
        base.string_range = std::make_pair(json_int(v[0], key), json_int(v[1], key));
      } else {
        throw ArgumentError("'string_range' must be a pair [i, j]");
      }
    } else if (key == "state") {
      base.state = json_string(v, key);
    } else if (key == "site") {
      base.site = v.is_null() ? std::nullopt : std::optional<int>(json_int(v, key));
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) throw ArgumentError("'seed' must be a non-negative integer");
      base.seed = v.get<std::uint64_t>();
    } else if (key == "jobs") {
      base.jobs = v.is_null() ? std::nullopt : std::optional<int>(json_int(v, key));
    } else if (key == "out") {
      base.out = json_string(v, key);
    } else if (key == "format") {
      base.format = json_string(v, key);
    } else {
      throw ArgumentError("unknown config key '" + key + "'");
    }
  }
  base.chain = chain_from_json(chain);
  return base;
}

std::string effective_format(const RunConfig& c) {
  if (!c.format.empty()) return c.format;
  return c.command == "sweep" ? "csv" : "json";
}

void validate(const RunConfig& c) {
  if (!known_command(c.command)) throw ArgumentError("unknown command '" + c.command + "'");
  clusterlab::validate(c.chain);
  const std::string f = effective_format(c);
  auto allow = [&](std::initializer_list<const char*> fs) {
    for (const char* x : fs)
      if (f == x) return;
    throw ArgumentError("format '" + f + "' is not available for " + c.command);
  };
  if (c.command == "state") allow({"json", "binary"});
  else if (c.command == "spectrum") allow({"json", "csv"});
  else if (c.command == "sweep") allow({"csv", "json", "svg"});
  else allow({"json"});
  if (c.grid < 1) throw ArgumentError("empty alpha grid");
  if (c.m < 1) throw ArgumentError("m must be >= 1");
  if (c.k && *c.k < 1) throw ArgumentError("k must be >= 1");
  if (!(c.tol > 0)) throw ArgumentError("tol must be positive");
  if (!(c.check_tol > 0)) throw ArgumentError("check_tol must be positive");
  if (c.jobs && *c.jobs < 1) throw ArgumentError("jobs must be >= 1");
  if (c.state != "cluster" && c.state != "plus" && c.state != "ground") {
    throw ArgumentError("state must be cluster, plus or ground");
  }
  const ModelKind m = c.chain.model;
  if (c.command == "sweep" && m != ModelKind::ZXZ && m != ModelKind::CCZ && m != ModelKind::CNZ) {
    throw ArgumentError("sweep is defined for zxz, ccz and cnz, not " + to_string(m));
  }
  if (c.command == "sweep" && c.chain.sites > kDenseLimit) {
    throw CapacityError("sweep uses dense diagonalization; at most " + std::to_string(kDenseLimit) + " sites");
  }
  if (c.command == "state" && c.chain.sites > kStateLimit) {
    throw CapacityError("state vectors are limited to " + std::to_string(kStateLimit) + " sites");
  }
  if ((c.command == "sweep" || c.command == "string-order") && c.string_range) {
    const ModelBundle bundle = build(c.chain);
    check_string_range(bundle, c.string_range->first, c.string_range->second);
  }
  if (c.command == "expand" && c.site) {
    const auto r = retained_sites(c.chain);
    if (std::find(r.begin(), r.end(), *c.site) == r.end()) {
      throw IndexError("site " + std::to_string(*c.site) + " has no retained stabilizer");
    }
  }
  if (c.command == "logicals") {
    if (c.chain.closed()) throw ArgumentError("logicals needs an open chain");
    if (c.chain.edge_terms != EdgeTerms::Drop) throw ArgumentError("logicals needs edge_terms=drop");
  }
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
  } catch (const std::exception& e) {
    error_record(err, "validation", e.what(), &c);
    return kValidationError;
  }
  try {
    set_jobs(resolve_jobs(c.jobs));
    std::string content;
    bool pass = true;
    if (c.command == "state") content = cmd_state(c);
    else if (c.command == "spectrum") content = cmd_spectrum(c);
    else if (c.command == "sweep") content = cmd_sweep(c);
    else if (c.command == "string-order") content = cmd_string_order(c);
    else if (c.command == "verify") content = cmd_verify(c, pass);
    else if (c.command == "expand") content = cmd_expand(c);
    else content = cmd_logicals(c);
    write_output(c, content, out);
    if (!pass) {
      error_record(err, "verification", "one or more checks failed", &c);
      return kComputationError;
    }
    return kOk;
  } catch (const ConvergenceError& e) {
    Json j;
    j["error"] = {{"kind", "convergence"}, {"message", e.what()}, {"best_residual", e.best_residual()}};
    j["version"] = kVersion;
    j["config"] = config_to_json(c);
    err << j.dump() << "\n";
    return kComputationError;
  } catch (const std::exception& e) {
    error_record(err, "computation", e.what(), &c);
    return kComputationError;
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"clusterlab: cluster-state stabilizer Hamiltonians and exact diagonalization"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string model, boundary, edge_terms, angles, zz_angles, axis, range, state, config_path, out_path, format;
  int sites = 0, order = 0, grid = 0, m = 0, k = 0, site = 0, jobs = 0;
  double tol = 0, check_tol = 0;
  std::uint64_t seed = 0;

  auto* o_config = app.add_option("--config", config_path, "JSON config file; flags override its values");
  auto* o_model = app.add_option("--model", model, "x, zxz, xzx, zzz-xxx, bitflip, phaseflip, cp, ccz, cnz, cnp, ising-zz");
  auto* o_sites = app.add_option("--sites", sites, "number of sites (even)");
  auto* o_boundary = app.add_option("--boundary", boundary, "open or closed");
  auto* o_edge = app.add_option("--edge-terms", edge_terms, "open chains: drop or include");
  auto* o_order = app.add_option("--order", order, "N for cnz and cnp");
  auto* o_angles = app.add_option("--angles", angles, "comma separated angles or @file");
  auto* o_zz = app.add_option("--zz-angles", zz_angles, "ising-zz bond angles, comma separated or @file");
  auto* o_seed = app.add_option("--seed", seed, "random seed for iterative solvers");
  auto* o_jobs = app.add_option("--jobs", jobs, "worker threads (default CLUSTERLAB_JOBS, then all cores)");
  auto* o_out = app.add_option("--out", out_path, "output file (default stdout)");
  auto* o_format = app.add_option("--format", format, "json, csv, svg or binary");
  auto* o_grid = app.add_option("--grid", grid, "sweep: number of alpha points");
  auto* o_m = app.add_option("--m", m, "sweep: energies per row");
  auto* o_k = app.add_option("--k", k, "spectrum: use the iterative solver for the lowest k states");
  auto* o_tol = app.add_option("--tol", tol, "iterative residual tolerance");
  auto* o_check_tol = app.add_option("--check-tol", check_tol, "verify: pass threshold");
  auto* o_axis = app.add_option("--axis", axis, "sweep: formula or figure");
  auto* o_range = app.add_option("--range", range, "string range i,j");
  auto* o_state = app.add_option("--state", state, "string-order: cluster, plus or ground");
  auto* o_site = app.add_option("--site", site, "expand: only this stabilizer");

  const char* blurbs[] = {"cluster state amplitudes",
                          "energy spectrum and ground degeneracy",
                          "alpha sweep of energies, gap and string order",
                          "string order parameter on a state",
                          "run the consistency checks",
                          "stabilizer and phase polynomial expansion",
                          "open-chain edge logicals and their projective phases"};
  static_assert(std::size(kCommands) == std::size(blurbs));
  for (std::size_t i = 0; i < std::size(kCommands); ++i) app.add_subcommand(kCommands[i], blurbs[i])->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << e.what() << "\n";
    return kValidationError;
  }

  RunConfig c;
  try {
    if (*o_config) {
      std::ifstream f(config_path);
      if (!f) throw ArgumentError("cannot read config file '" + config_path + "'");
      Json j;
      try {
        j = Json::parse(f);
      } catch (const Json::parse_error& e) {
        throw ArgumentError(std::string("config file is not valid JSON: ") + e.what());
      }
      c = config_from_json(j);
    }
    c.command = app.get_subcommands().front()->get_name();
    Json flags = Json::object();
    if (*o_model) flags["model"] = model;
    if (*o_sites) flags["sites"] = sites;
    if (*o_boundary) flags["boundary"] = boundary;
    if (*o_edge) flags["edge_terms"] = edge_terms;
    if (*o_order) flags["order"] = order;
    if (*o_angles) flags["angles"] = parse_angle_list(angles);
    if (*o_zz) flags["zz_angles"] = parse_angle_list(zz_angles);
    if (*o_seed) flags["seed"] = seed;
    if (*o_jobs) flags["jobs"] = jobs;
    if (*o_out) flags["out"] = out_path;
    if (*o_format) flags["format"] = format;
    if (*o_grid) flags["grid"] = grid;
    if (*o_m) flags["m"] = m;
    if (*o_k) flags["k"] = k;
    if (*o_tol) flags["tol"] = tol;
    if (*o_check_tol) flags["check_tol"] = check_tol;
    if (*o_axis) flags["axis"] = axis;
    if (*o_range) {
      const auto r = parse_range(range);
      flags["string_range"] = {r.first, r.second};
    }
    if (*o_state) flags["state"] = state;
    if (*o_site) flags["site"] = site;
    c = config_from_json(flags, c);
  } catch (const std::exception& e) {
    error_record(err, "validation", e.what(), nullptr);
    return kValidationError;
  }
  return run(c, out, err);
}

}  // namespace clusterlab::cli
