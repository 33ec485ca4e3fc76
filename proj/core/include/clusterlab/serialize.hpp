#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "clusterlab/chain.hpp"
#include "clusterlab/pauli.hpp"
#include "clusterlab/phase_poly.hpp"
#include "clusterlab/spectra.hpp"
#include "clusterlab/state.hpp"

namespace clusterlab {

using Json = nlohmann::ordered_json;

// Shortest round-trip decimal form; "nan" for NaN. Locale independent.
std::string format_double(double v);

// [{"pauli": "Z1 X2 Z3", "re": .., "im": ..}, ...]
Json to_json(const OperatorSum& op);
OperatorSum opsum_from_json(const Json& j, int n_sites);

// {"1,2": angle, ...}; the global phase uses the key "".
Json to_json(const PhasePolynomial& p);
PhasePolynomial phase_poly_from_json(const Json& j, int n_sites);

// {"sites", "boundary", "model", "order", "angles", "zz_angles", "edge_terms"}
Json to_json(const ChainSpec& spec);
// Unknown keys raise ArgumentError naming the key.
ChainSpec chain_from_json(const Json& j);

// {"eigenvalues", "clusters", "gap", "residual_max", "seed", "method"}
Json to_json(const SpectrumResult& s);

// {"basis": "x_n...x_1", "re", "im"} per amplitude.
Json to_json(const StateVector& v);
// Interleaved little-endian doubles re0 im0 re1 im1 ...
std::string to_binary(const StateVector& v);

// Lines starting with '#' precede the header alpha,e0,...,gap,string_order.
std::string to_csv(const SweepTable& t, const std::vector<std::string>& comments = {});
// Two stacked line charts: energies and string order against alpha.
std::string to_svg(const SweepTable& t, const std::string& title = "");

}  // namespace clusterlab
