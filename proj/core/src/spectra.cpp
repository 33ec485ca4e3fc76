#include "clusterlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <omp.h>

#include "clusterlab/dense.hpp"
#include "clusterlab/errors.hpp"
#include "clusterlab/models.hpp"
#include "clusterlab/symmetry.hpp"

namespace clusterlab {

double SpectrumResult::residual_max() const {
  double r = 0.0;
  for (double x : residuals) r = std::max(r, x);
  return r;
}

std::vector<Cluster> cluster_values(const std::vector<double>& sorted, double tol) {
  std::vector<Cluster> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i == sorted.size() || sorted[i] - sorted[i - 1] >= tol) {
      double sum = 0.0;
      for (std::size_t t = start; t < i; ++t) sum += sorted[t];
      out.push_back({sum / static_cast<double>(i - start), static_cast<int>(i - start)});
      start = i;
    }
  }
  return out;
}

namespace {

void finish(SpectrumResult& r, double cluster_tol) {
  r.clusters = cluster_values(r.eigenvalues, cluster_tol);
  if (r.clusters.size() > 1) {
    const auto m0 = static_cast<std::size_t>(r.clusters[0].multiplicity);
    r.gap = r.eigenvalues[m0] - r.eigenvalues[m0 - 1];
  }
}

SpectrumResult from_dense(const DenseEigen& de, double cluster_tol) {
  SpectrumResult r;
  r.method = Method::Dense;
  r.eigenvalues.assign(de.values.data(), de.values.data() + de.values.size());
  r.eigenvectors = de.vectors;
  finish(r, cluster_tol);
  return r;
}

}  // namespace

SpectrumResult diagonalize_dense(const OperatorSum& h, int keep_vectors, double cluster_tol) {
  if (h.n_sites() > kDenseLimit) {
    throw CapacityError("dense diagonalization limited to " + std::to_string(kDenseLimit) + " sites");
  }
  SpectrumResult r = from_dense(hermitian_eigen(h, keep_vectors), cluster_tol);
  for (Eigen::Index c = 0; c < r.eigenvectors.cols(); ++c) {
    const Vector v = r.eigenvectors.col(c);
    r.residuals.push_back((opsum_apply(h, v) - r.eigenvalues[static_cast<std::size_t>(c)] * v).norm());
  }
  return r;
}

SpectrumResult diagonalize_dense(const Matrix& h, int keep_vectors, double cluster_tol) {
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, h.cwiseAbs().maxCoeff())) {
    throw ArgumentError("matrix is not Hermitian");
  }
  const bool real = h.imag().cwiseAbs().maxCoeff() == 0.0;
  DenseEigen de = real ? hermitian_eigen(RealMatrix(h.real()), keep_vectors) : hermitian_eigen(h, keep_vectors);
  SpectrumResult r = from_dense(de, cluster_tol);
  for (Eigen::Index c = 0; c < r.eigenvectors.cols(); ++c) {
    const Vector v = r.eigenvectors.col(c);
    r.residuals.push_back((h * v - r.eigenvalues[static_cast<std::size_t>(c)] * v).norm());
  }
  return r;
}

int degeneracy_count(const SpectrumResult& s, double cluster_tol) {
  if (s.eigenvalues.empty()) throw ArgumentError("empty spectrum");
  return cluster_values(s.eigenvalues, cluster_tol).front().multiplicity;
}

// ------------------------------------------------------------ block Lanczos

namespace {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
S random_scalar(std::mt19937_64& rng, std::normal_distribution<double>& nd) {
  if constexpr (std::is_same_v<S, double>) {
    return nd(rng);
  } else {
    const double re = nd(rng);
    return S(re, nd(rng));
  }
}

template <class S>
void apply_block(const OperatorSum& h, const Mat<S>& x, Mat<S>& y, long long& matvecs) {
  y.resize(x.rows(), x.cols());
  const auto dim = static_cast<std::size_t>(x.rows());
  for (Eigen::Index c = 0; c < x.cols(); ++c) {
    if constexpr (std::is_same_v<S, double>) {
      opsum_apply_real(h, x.col(c).data(), y.col(c).data(), dim);
    } else {
      opsum_apply(h, x.col(c).data(), y.col(c).data(), dim);
    }
    ++matvecs;
  }
}

// Orthonormalizes the columns of r against `q` and each other; columns that
// vanish are replaced by fresh random directions.
template <class S>
void orthonormalize(Mat<S>& r, const Mat<S>& q, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  for (Eigen::Index c = 0; c < r.cols(); ++c) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      const double before = r.col(c).norm();
      for (int pass = 0; pass < 2; ++pass) {
        if (q.cols() > 0) r.col(c) -= q * (q.adjoint() * r.col(c));
        for (Eigen::Index p = 0; p < c; ++p) r.col(c) -= r.col(p) * (r.col(p).adjoint() * r.col(c))(0, 0);
      }
      const double after = r.col(c).norm();
      if (after > 1e-10 * std::max(before, 1e-300) && after > 1e-300) {
        r.col(c) /= after;
        break;
      }
      for (Eigen::Index i = 0; i < r.rows(); ++i) r(i, c) = random_scalar<S>(rng, nd);
    }
  }
}

template <class S>
SpectrumResult block_lanczos(const OperatorSum& h, int k, double tol, const IterativeOptions& o,
                             IterativeStats* stats) {
  const Eigen::Index dim = Eigen::Index{1} << h.n_sites();
  std::mt19937_64 rng(o.seed);
  std::normal_distribution<double> nd;
  long long matvecs = 0;
  const int bound = std::max(k, o.degeneracy_bound);
  const Eigen::Index b = std::min<Eigen::Index>(bound + o.extra_block, dim);

  SpectrumResult res;
  res.method = Method::Iterative;
  res.seed = o.seed;

  if (dim <= 2 * b) {
    // Too small for a Krylov space: assemble the matrix column by column.
    Mat<S> eye = Mat<S>::Identity(dim, dim), hm;
    apply_block<S>(h, eye, hm, matvecs);
    Eigen::SelfAdjointEigenSolver<Mat<S>> es((hm + hm.adjoint()) / 2.0);
    for (int i = 0; i < k; ++i) res.eigenvalues.push_back(es.eigenvalues()[i]);
    res.eigenvectors = es.eigenvectors().leftCols(k).template cast<cplx>();
    for (int i = 0; i < k; ++i) {
      res.residuals.push_back((hm * es.eigenvectors().col(i) - es.eigenvalues()[i] * es.eigenvectors().col(i)).norm());
    }
    if (stats) *stats = {1, matvecs};
    finish(res, o.cluster_tol);
    return res;
  }

  Eigen::Index p = o.krylov_blocks > 0 ? o.krylov_blocks
                                       : std::max<Eigen::Index>(3, (60 + b - 1) / b);
  p = std::min<Eigen::Index>(p, dim / b - 1);
  const Eigen::Index m = b * (p + 1);

  Mat<S> v(dim, b);
  for (Eigen::Index c = 0; c < b; ++c) {
    for (Eigen::Index i = 0; i < dim; ++i) v(i, c) = random_scalar<S>(rng, nd);
  }
  orthonormalize<S>(v, Mat<S>(dim, 0), rng);
  Mat<S> hv;
  apply_block<S>(h, v, hv, matvecs);

  Mat<S> q(dim, m), t(m, m), w, r;
  double best = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= o.max_iterations; ++it) {
    q.leftCols(b) = v;
    t.setZero();
    Eigen::Index ncols = b;
    for (Eigen::Index i = 0; i <= p; ++i) {
      if (i == 0) {
        w = hv;
      } else {
        apply_block<S>(h, Mat<S>(q.middleCols(i * b, b)), w, matvecs);
      }
      t.block(0, i * b, ncols, b) = q.leftCols(ncols).adjoint() * w;
      if (i == p) break;
      r = w - q.leftCols(ncols) * t.block(0, i * b, ncols, b);
      orthonormalize<S>(r, Mat<S>(q.leftCols(ncols)), rng);
      q.middleCols(ncols, b) = r;
      t.block(ncols, i * b, b, b) = r.adjoint() * w;
      ncols += b;
    }
    // Entries below the band come from the later columns by symmetry.
    for (Eigen::Index i = 0; i <= p; ++i) {
      const Eigen::Index r0 = (i + 2) * b;
      if (r0 < m) t.block(r0, i * b, m - r0, b) = t.block(i * b, r0, b, m - r0).adjoint();
    }
    const Mat<S> ts = (t + t.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Mat<S>> es(ts);
    v = q * es.eigenvectors().leftCols(b);
    apply_block<S>(h, v, hv, matvecs);
    double worst = 0.0;
    std::vector<double> resid(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
      resid[static_cast<std::size_t>(c)] = (hv.col(c) - es.eigenvalues()[c] * v.col(c)).norm();
      worst = std::max(worst, resid[static_cast<std::size_t>(c)]);
    }
    best = std::min(best, worst);
    if (worst < tol) {
      for (int c = 0; c < k; ++c) res.eigenvalues.push_back(es.eigenvalues()[c]);
      res.eigenvectors = v.leftCols(k).template cast<cplx>();
      res.residuals = resid;
      if (stats) *stats = {it, matvecs};
      finish(res, o.cluster_tol);
      return res;
    }
  }
  throw ConvergenceError("block Lanczos did not converge in " + std::to_string(o.max_iterations) +
                             " restarts; best residual " + std::to_string(best),
                         best);
}

}  // namespace

SpectrumResult ground_subspace(const OperatorSum& h, int k, double tol, const IterativeOptions& options,
                               IterativeStats* stats) {
  if (k < 1) throw ArgumentError("k must be >= 1");
  if (h.n_sites() > kStateLimit) throw CapacityError("chain too long for a state vector");
  if (!h.is_hermitian()) throw ArgumentError("operator is not Hermitian");
  if (static_cast<double>(k) > std::ldexp(1.0, h.n_sites())) throw ArgumentError("k exceeds the dimension");
  if (h.is_real_matrix()) return block_lanczos<double>(h, k, tol, options, stats);
  return block_lanczos<cplx>(h, k, tol, options, stats);
}

// ------------------------------------------------------------ sweeps

std::string to_string(SweepAxis a) { return a == SweepAxis::Formula ? "formula" : "figure"; }

SweepAxis parse_sweep_axis(std::string_view s) {
  if (s == "formula") return SweepAxis::Formula;
  if (s == "figure") return SweepAxis::Figure;
  throw ArgumentError("unknown sweep axis '" + std::string(s) + "'");
}

std::vector<double> uniform_grid(int points) {
  if (points < 1) throw ArgumentError("grid needs at least one point");
  if (points == 1) return {0.0};
  std::vector<double> g;
  for (int i = 0; i < points; ++i) g.push_back(static_cast<double>(i) / (points - 1));
  return g;
}

std::pair<int, int> default_string_range(const ChainSpec& spec) {
  if (spec.closed()) return {1, spec.sites / 2};
  const auto r = retained_sites(spec);
  return {r.front(), r.back()};
}

SweepTable sweep_alpha(const ChainSpec& spec, const std::vector<double>& grid, int m,
                       const SweepOptions& options) {
  if (grid.empty()) throw ArgumentError("empty alpha grid");
  if (m < 1) throw ArgumentError("m must be >= 1");
  for (double a : grid) {
    if (!(a >= 0.0 && a <= 1.0)) throw ArgumentError("alpha grid values must lie in [0, 1]");
  }
  const ModelBundle bundle = build(spec);
  interpolated(bundle, 0.0);  // rejects unsupported models up front
  SweepTable table;
  table.spec = spec;
  table.m = m;
  table.axis = options.axis;
  table.string_range = options.string_range.value_or(default_string_range(spec));
  check_string_range(bundle, table.string_range.first, table.string_range.second);
  table.rows.resize(grid.size());
  const bool dense = spec.sites <= std::min(kDenseLimit, options.dense_sites);
  const int jobs = options.jobs > 0 ? options.jobs : omp_get_max_threads();
  const long long count = static_cast<long long>(grid.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
  for (long long i = 0; i < count; ++i) {
    SweepRow& row = table.rows[static_cast<std::size_t>(i)];
    row.alpha = grid[static_cast<std::size_t>(i)];
    try {
      const double a = options.axis == SweepAxis::Formula ? row.alpha : 1.0 - row.alpha;
      const OperatorSum h = interpolated(bundle, a);
      SpectrumResult s;
      if (dense) {
        s = diagonalize_dense(h, 1, options.cluster_tol);
      } else {
        IterativeOptions io;
        io.seed = options.seed;
        io.cluster_tol = options.cluster_tol;
        // a few extra levels so the gap survives a degenerate ground cluster
        s = ground_subspace(h, std::max(m, 4), 1e-9, io);
      }
      const auto mm = std::min<std::size_t>(static_cast<std::size_t>(m), s.eigenvalues.size());
      row.energies.assign(s.eigenvalues.begin(), s.eigenvalues.begin() + static_cast<long>(mm));
      row.gap = s.gap;
      StateVector g(spec.sites, s.eigenvectors.col(0));
      row.string_order = string_order(g, bundle, table.string_range.first, table.string_range.second).real;
    } catch (const std::exception& e) {
      row.error = e.what();
      row.energies.assign(static_cast<std::size_t>(m), std::numeric_limits<double>::quiet_NaN());
      row.string_order = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return table;
}

}  // namespace clusterlab
