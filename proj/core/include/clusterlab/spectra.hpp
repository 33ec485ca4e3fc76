#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clusterlab/chain.hpp"
#include "clusterlab/pauli.hpp"
#include "clusterlab/types.hpp"

namespace clusterlab {

inline constexpr double kClusterTol = 1e-8;

enum class Method { Dense, Iterative };

struct Cluster {
  double value = 0.0;
  int multiplicity = 0;
};

struct SpectrumResult {
  std::vector<double> eigenvalues;     // ascending
  std::vector<Cluster> clusters;
  std::optional<double> gap;           // absent when only one cluster was computed
  Method method = Method::Dense;
  std::vector<double> residuals;       // for the stored eigenvectors
  Matrix eigenvectors;                 // columns match the lowest eigenvalues
  std::uint64_t seed = 0;

  double residual_max() const;
};

// Gap-based grouping: neighbours closer than `tol` share a cluster.
std::vector<Cluster> cluster_values(const std::vector<double>& sorted, double tol = kClusterTol);

SpectrumResult diagonalize_dense(const OperatorSum& h, int keep_vectors = 1,
                                 double cluster_tol = kClusterTol);
SpectrumResult diagonalize_dense(const Matrix& h, int keep_vectors = 1,
                                 double cluster_tol = kClusterTol);

struct IterativeOptions {
  int degeneracy_bound = 0;  // 0: use k
  int extra_block = 4;       // block size = degeneracy_bound + extra_block
  int krylov_blocks = 0;     // blocks per restart cycle; 0 picks a size
  int max_iterations = 5000; // restart cycles
  std::uint64_t seed = 20240607;
  double cluster_tol = kClusterTol;
};

struct IterativeStats {
  int iterations = 0;
  long long matvecs = 0;
};

// Lowest k eigenpairs by restarted block Lanczos with full
// reorthogonalization; the operator is only applied matrix-free.
SpectrumResult ground_subspace(const OperatorSum& h, int k, double tol = 1e-8,
                               const IterativeOptions& options = {},
                               IterativeStats* stats = nullptr);

int degeneracy_count(const SpectrumResult& s, double cluster_tol = kClusterTol);

// formula: H(alpha) = alpha H_model + (1 - alpha) H_X.
// figure:  alpha runs the other way, so alpha = 0 is the cluster model.
enum class SweepAxis { Formula, Figure };

std::string to_string(SweepAxis a);
SweepAxis parse_sweep_axis(std::string_view s);

struct SweepOptions {
  SweepAxis axis = SweepAxis::Formula;
  // Stabilizer range (i, j) for the string order; default picks the open
  // chain's retained range or (1, sites/2) on a ring.
  std::optional<std::pair<int, int>> string_range;
  int jobs = 0;  // 0: current OpenMP setting
  std::uint64_t seed = 20240607;
  double cluster_tol = kClusterTol;
  // Rows with more sites than this use the block Lanczos solver.
  int dense_sites = 10;
};

struct SweepRow {
  double alpha = 0.0;
  std::vector<double> energies;  // lowest m
  std::optional<double> gap;
  double string_order = 0.0;
  std::string error;             // non-empty when the row failed
};

struct SweepTable {
  ChainSpec spec;
  int m = 0;
  SweepAxis axis = SweepAxis::Formula;
  std::pair<int, int> string_range{0, 0};
  std::vector<SweepRow> rows;
};

std::vector<double> uniform_grid(int points);
std::pair<int, int> default_string_range(const ChainSpec& spec);

SweepTable sweep_alpha(const ChainSpec& spec, const std::vector<double>& grid, int m,
                       const SweepOptions& options = {});

}  // namespace clusterlab
