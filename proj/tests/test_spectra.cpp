#include <gtest/gtest.h>

#include <random>

#include "clusterlab/dense.hpp"
#include "clusterlab/errors.hpp"
#include "clusterlab/models.hpp"
#include "clusterlab/spectra.hpp"
#include "oracle.hpp"

using namespace clusterlab;

namespace {

ChainSpec chain(ModelKind m, int n, Boundary b, int order = 0, std::vector<double> angles = {}) {
  ChainSpec s;
  s.model = m;
  s.sites = n;
  s.boundary = b;
  s.order = order;
  s.angles = std::move(angles);
  return s;
}

OperatorSum random_hamiltonian(std::mt19937_64& rng, int n, int terms, bool real) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::normal_distribution<double> g;
  OperatorSum h(n);
  for (int t = 0; t < terms; ++t) {
    PauliString p(n);
    for (int j = 1; j <= n; ++j) p.set_letter(j, static_cast<Letter>(letter(rng)));
    if (real && p.y_count() % 2) continue;
    h.add(p, g(rng));
  }
  return h;
}

}  // namespace

TEST(Clusters, Grouping) {
  const auto c = cluster_values({-2.0, -2.0 + 1e-12, 0.0, 0.0, 0.0, 1.5});
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].multiplicity, 2);
  EXPECT_EQ(c[1].multiplicity, 3);
  EXPECT_NEAR(c[2].value, 1.5, 1e-15);
}

TEST(Dense, TransverseField) {
  const auto r = diagonalize_dense(transverse_field(chain(ModelKind::X, 4, Boundary::Closed)), 1);
  const int mult[] = {1, 4, 6, 4, 1};
  ASSERT_EQ(r.clusters.size(), 5u);
  for (int k = 0; k < 5; ++k) {
    EXPECT_NEAR(r.clusters[static_cast<std::size_t>(k)].value, -4.0 + 2 * k, 1e-12);
    EXPECT_EQ(r.clusters[static_cast<std::size_t>(k)].multiplicity, mult[k]);
  }
  EXPECT_NEAR(*r.gap, 2.0, 1e-12);
  EXPECT_EQ(degeneracy_count(diagonalize_dense(build(chain(ModelKind::X, 6, Boundary::Closed)).hamiltonian)), 1);
}

TEST(Dense, OpenZxz) {
  const auto r = diagonalize_dense(build(chain(ModelKind::ZXZ, 6, Boundary::Open)).hamiltonian);
  EXPECT_EQ(degeneracy_count(r), 4);
  EXPECT_NEAR(*r.gap, 2.0, 1e-10);
  EXPECT_LT(r.residual_max(), 1e-10);
}

TEST(Dense, AgreesWithEigen) {
  std::mt19937_64 rng(13);
  for (bool real : {true, false}) {
    const auto h = random_hamiltonian(rng, 6, 25, real);
    const auto r = diagonalize_dense(h, 3);
    const auto ev = oracle::eigenvalues(oracle::opsum(h));
    for (Eigen::Index i = 0; i < ev.size(); ++i) EXPECT_NEAR(r.eigenvalues[static_cast<std::size_t>(i)], ev(i), 1e-10);
    EXPECT_LT(r.residual_max(), 1e-10);
    const Matrix v = r.eigenvectors;
    EXPECT_LT((v.adjoint() * v - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Dense, Errors) {
  EXPECT_THROW(diagonalize_dense(OperatorSum::parse("X1", 2, cplx(0, 1))), ArgumentError);
  EXPECT_THROW(diagonalize_dense(OperatorSum(kDenseLimit + 1)), CapacityError);
}

TEST(Dense, IntegerSpectraForCommutingStabilizers) {
  const auto b = build(chain(ModelKind::CCZ, 8, Boundary::Open));
  const auto r = diagonalize_dense(b.hamiltonian, 0);
  const double parity = static_cast<double>(b.stabilizers.size() % 2);
  for (double e : r.eigenvalues) {
    EXPECT_NEAR(e, std::round(e), 1e-9);
    EXPECT_NEAR(std::fmod(std::abs(std::round(e)), 2.0), parity, 1e-9);
  }
}

TEST(Iterative, AgreesWithDense) {
  std::mt19937_64 rng(14);
  for (bool real : {true, false}) {
    const auto h = random_hamiltonian(rng, 8, 30, real);
    const auto d = diagonalize_dense(h, 0);
    const auto it = ground_subspace(h, 5, 1e-9);
    ASSERT_EQ(it.eigenvalues.size(), 5u);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(it.eigenvalues[i], d.eigenvalues[i], 1e-8);
    EXPECT_LT(it.residual_max(), 1e-8);
    EXPECT_EQ(it.method, Method::Iterative);
  }
}

TEST(Iterative, DegenerateClusters) {
  const auto h = build(chain(ModelKind::CCZ, 10, Boundary::Open)).hamiltonian;
  IterativeOptions o;
  o.degeneracy_bound = 16;
  const auto r = ground_subspace(h, 20, 1e-8, o);
  EXPECT_EQ(degeneracy_count(r), 16);
  EXPECT_NEAR(r.eigenvalues[0], -6.0, 1e-8);
  EXPECT_NEAR(r.eigenvalues[16], -4.0, 1e-8);
}

TEST(Iterative, TransverseFieldFast) {
  IterativeStats stats;
  const auto r = ground_subspace(transverse_field(chain(ModelKind::X, 12, Boundary::Closed)), 1, 1e-8, {}, &stats);
  EXPECT_NEAR(r.eigenvalues[0], -12.0, 1e-8);
  EXPECT_LE(stats.iterations, 3);
}

TEST(Iterative, SeedIsDeterministic) {
  const auto h = build(chain(ModelKind::ZXZ, 10, Boundary::Open)).hamiltonian;
  IterativeOptions o;
  o.seed = 99;
  const auto a = ground_subspace(h, 4, 1e-9, o), b = ground_subspace(h, 4, 1e-9, o);
  EXPECT_EQ(a.eigenvalues, b.eigenvalues);
  EXPECT_EQ(a.seed, 99u);
  EXPECT_EQ(degeneracy_count(a), 4);
}

TEST(Iterative, ConvergenceErrorCarriesResidual) {
  std::mt19937_64 rng(15);
  const auto h = random_hamiltonian(rng, 10, 40, true);
  IterativeOptions o;
  o.max_iterations = 1;
  o.krylov_blocks = 3;
  try {
    ground_subspace(h, 3, 1e-14, o);
    FAIL() << "expected a convergence error";
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.best_residual(), 0.0);
  }
  EXPECT_THROW(ground_subspace(h, 0), ArgumentError);
}

TEST(Sweep, ClosedZxzSymmetryAndGap) {
  const auto spec = chain(ModelKind::ZXZ, 8, Boundary::Closed);
  const auto t = sweep_alpha(spec, {0.25, 0.3, 0.5, 0.7, 0.75}, 3);
  ASSERT_EQ(t.rows.size(), 5u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(t.rows[1].energies[i], t.rows[3].energies[i], 1e-10);
  EXPECT_LT(*t.rows[2].gap, *t.rows[0].gap);
  EXPECT_LT(*t.rows[2].gap, *t.rows[4].gap);
  EXPECT_EQ(t.string_range, (std::pair<int, int>{1, 4}));
}

TEST(Sweep, CczGapStaysOpen) {
  const auto t = sweep_alpha(chain(ModelKind::CCZ, 8, Boundary::Closed), {0.5}, 2);
  EXPECT_GT(*t.rows[0].gap, 0.3);
}

TEST(Sweep, GroundEnergyIsConcave) {
  const auto t = sweep_alpha(chain(ModelKind::ZXZ, 8, Boundary::Closed), uniform_grid(21), 1);
  for (std::size_t i = 1; i + 1 < t.rows.size(); ++i) {
    const double mid = t.rows[i].energies[0];
    EXPECT_GE(mid, (t.rows[i - 1].energies[0] + t.rows[i + 1].energies[0]) / 2 - 1e-10);
  }
}

TEST(Sweep, AxesMirrorEachOther) {
  const auto spec = chain(ModelKind::ZXZ, 6, Boundary::Closed);
  SweepOptions fig;
  fig.axis = SweepAxis::Figure;
  const auto a = sweep_alpha(spec, {0.2}, 2);
  const auto b = sweep_alpha(spec, {0.8}, 2, fig);
  EXPECT_NEAR(a.rows[0].string_order, b.rows[0].string_order, 1e-12);
  EXPECT_NEAR(a.rows[0].energies[0], b.rows[0].energies[0], 1e-12);
}

TEST(Sweep, Errors) {
  const auto spec = chain(ModelKind::ZXZ, 6, Boundary::Closed);
  EXPECT_THROW(sweep_alpha(spec, {}, 2), ArgumentError);
  EXPECT_THROW(sweep_alpha(spec, {0.5}, 0), ArgumentError);
  EXPECT_THROW(sweep_alpha(chain(ModelKind::XZX, 6, Boundary::Closed), {0.5}, 1), ArgumentError);
  EXPECT_THROW(uniform_grid(0), ArgumentError);
  EXPECT_EQ(uniform_grid(101).size(), 101u);
  EXPECT_EQ(uniform_grid(5), (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(parse_sweep_axis(to_string(SweepAxis::Figure)), SweepAxis::Figure);
}
