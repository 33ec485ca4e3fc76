#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "clusterlab/gates.hpp"

namespace clusterlab {

enum class Boundary { Open, Closed };
enum class EdgeTerms { Include, Drop };
enum class ModelKind { X, ZXZ, XZX, ZZZ_XXX, BitFlip, PhaseFlip, CP, CCZ, CNZ, CNP, IsingZZ };

// Chain of `sites` qubits (even). Angle conventions:
//   BitFlip, PhaseFlip: one angle per site.
//   CP: one angle per bond (sites for closed, sites-1 for open).
//   CNP: one angle per (order+1)-site window (sites, or sites-order for open).
//   IsingZZ: `angles` per site for the Z layer, `zz_angles` per bond.
// A single value is broadcast.
struct ChainSpec {
  int sites = 4;
  Boundary boundary = Boundary::Closed;
  ModelKind model = ModelKind::ZXZ;
  int order = 0;
  std::vector<double> angles;
  std::vector<double> zz_angles;
  EdgeTerms edge_terms = EdgeTerms::Drop;

  bool closed() const { return boundary == Boundary::Closed; }
  // Range N of the entangling gates; 0 for the trivial X model.
  int interaction_order() const;
};

std::string to_string(ModelKind m);
std::string to_string(Boundary b);
std::string to_string(EdgeTerms e);
ModelKind parse_model(std::string_view s);
Boundary parse_boundary(std::string_view s);
EdgeTerms parse_edge_terms(std::string_view s);

void validate(const ChainSpec& spec);

// Angles after broadcasting; empty for models without angles.
std::vector<double> site_angles(const ChainSpec& spec);
std::vector<double> bond_angles(const ChainSpec& spec);
std::vector<double> window_angles(const ChainSpec& spec);

// (order+1)-site windows k..k+order: wrapped for closed chains, in range for
// open chains.
std::vector<std::vector<int>> windows(const ChainSpec& spec, int order);

// Sites j whose stabilizer K_j enters the Hamiltonian.
std::vector<int> retained_sites(const ChainSpec& spec);

// Entangling diagonal layer of the model.
Circuit diagonal_layer(const ChainSpec& spec);
// Single-site layer applied after the diagonal layer.
Circuit single_site_layer(const ChainSpec& spec);
// U = single_site_layer * diagonal_layer, in application order.
Circuit model_circuit(const ChainSpec& spec);
// H on all sites followed by the model circuit.
Circuit reference_circuit(const ChainSpec& spec);
// CZ on every bond of the chain.
Circuit cz_layer(const ChainSpec& spec);

}  // namespace clusterlab
