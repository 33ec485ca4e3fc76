#include <gtest/gtest.h>

#include "clusterlab/circuits.hpp"
#include "clusterlab/dense.hpp"
#include "clusterlab/errors.hpp"
#include "clusterlab/models.hpp"
#include "clusterlab/spectra.hpp"
#include "clusterlab/symmetry.hpp"
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

std::vector<ChainSpec> zoo(int n, Boundary b) {
  std::vector<ChainSpec> out = {chain(ModelKind::X, n, b),         chain(ModelKind::ZXZ, n, b),
                                chain(ModelKind::XZX, n, b),       chain(ModelKind::ZZZ_XXX, n, b),
                                chain(ModelKind::BitFlip, n, b, 0, {0.4}), chain(ModelKind::PhaseFlip, n, b, 0, {-0.9}),
                                chain(ModelKind::CP, n, b, 0, {1.3}),      chain(ModelKind::CCZ, n, b),
                                chain(ModelKind::CNZ, n, b, 2),            chain(ModelKind::CNP, n, b, 2, {0.6})};
  ChainSpec iz = chain(ModelKind::IsingZZ, n, b, 0, {0.5});
  iz.zz_angles = {0.8};
  out.push_back(iz);
  return out;
}

bool valid(const ChainSpec& s) {
  try {
    validate(s);
    return true;
  } catch (const Error&) {
    return false;
  }
}

oracle::Mat x_string(int n, int parity) {
  std::vector<std::pair<int, char>> l;
  for (int j = parity == 0 ? 2 : 1; j <= n; j += 2) l.push_back({j, 'X'});
  return oracle::product(n, l);
}

}  // namespace

TEST(Eta, ZxzGenerators) {
  const auto [e, o] = eta_generators(chain(ModelKind::ZXZ, 4, Boundary::Closed));
  EXPECT_LT(oracle::max_abs(e.dense() - x_string(4, 0)), 1e-15);
  EXPECT_LT(oracle::max_abs(o.dense() - x_string(4, 1)), 1e-15);
}

TEST(Eta, CczEvenGeneratorForm) {
  const auto s = chain(ModelKind::CCZ, 8, Boundary::Closed);
  const auto [e, o] = eta_generators(s);
  // flipping the even sites under the CCZ layer leaves CZ_{j,j+2} on odd j,
  // CZ on every bond and Z on odd sites
  const oracle::Mat cz = oracle::diagonal(8, [](const std::vector<int>& x) {
    double ph = 0;
    for (int j = 1; j <= 8; j += 2) {
      ph += kPi * x[static_cast<std::size_t>(j - 1)] * (x[static_cast<std::size_t>((j + 1) % 8)] + 1);
    }
    for (int j = 0; j < 8; ++j) ph += kPi * x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>((j + 1) % 8)];
    return ph;
  });
  const oracle::Mat want = cz * x_string(8, 0);
  // CZ_{j,j+2} times the X string alone does not commute with H
  const oracle::Mat odd_only = oracle::diagonal(8, [](const std::vector<int>& x) {
    double ph = 0;
    for (int j = 1; j <= 8; j += 2) ph += kPi * x[static_cast<std::size_t>(j - 1)] * x[static_cast<std::size_t>((j + 1) % 8)];
    return ph;
  }) * x_string(8, 0);
  const oracle::Mat h = opsum_to_matrix(build(s).hamiltonian);
  EXPECT_GT(oracle::max_abs(odd_only * h - h * odd_only), 0.1);
  EXPECT_LT(phase_optimized_residual(e.dense(), want), 1e-12);
  EXPECT_LT(commutator_norm(e, build(s).hamiltonian), 1e-12);
  EXPECT_LT(commutator_norm(o, build(s).hamiltonian), 1e-12);
}

TEST(Eta, InvolutionsCommutingWithHamiltonian) {
  for (int n : {4, 6, 8}) {
    for (Boundary b : {Boundary::Closed, Boundary::Open}) {
      for (const auto& s : zoo(n, b)) {
        if (!valid(s)) continue;
        const auto h = build(s).hamiltonian;
        const auto [e, o] = eta_generators(s);
        for (const auto* g : {&e, &o}) {
          const oracle::Mat d = g->dense();
          EXPECT_LT(oracle::max_abs(d * d - oracle::Mat::Identity(d.rows(), d.cols())), 1e-12) << to_string(s.model);
          EXPECT_LT(commutator_norm(*g, h), 1e-12) << to_string(s.model) << " " << n << " " << to_string(b);
        }
      }
    }
  }
}

TEST(Commutator, FakeSymmetry) {
  const auto h = build(chain(ModelKind::ZXZ, 6, Boundary::Closed)).hamiltonian;
  EXPECT_GT(commutator_norm(OperatorSum::parse("X1", 6), h), 1.0);
  EXPECT_THROW(commutator_norm(OperatorSum::parse("X1", 4), h), DimensionError);
}

TEST(Projector, OpenZxzKillsEdgeTerm) {
  const auto s = chain(ModelKind::ZXZ, 6, Boundary::Open);
  const Matrix p = symmetric_projector(s);
  EXPECT_LT((p * p - p).cwiseAbs().maxCoeff(), 1e-12);
  const Matrix k1 = p * opsum_to_matrix(OperatorSum::parse("X1 Z2", 6)) * p;
  EXPECT_LT(k1.cwiseAbs().maxCoeff(), 1e-12);
  const Matrix hp = project_hamiltonian(build(s).hamiltonian, p);
  EXPECT_LT((hp - hp.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Noninvertible, ZxzChecks) {
  for (int n : {4, 6}) {
    const auto r = noninvertible_check(chain(ModelKind::ZXZ, n, Boundary::Closed));
    EXPECT_LT(r.hamiltonian_residual, 1e-10);
    EXPECT_LT(r.map_residual, 1e-10);
    EXPECT_LT(r.sector_residual, 1e-10);
    EXPECT_LT(r.min_singular_value, 1e-10);
  }
  EXPECT_THROW(noninvertible_D(chain(ModelKind::ZXZ, 6, Boundary::Open)), ArgumentError);
}

TEST(Noninvertible, IntertwineExamples) {
  const auto s = chain(ModelKind::ZXZ, 4, Boundary::Closed);
  const Matrix d = noninvertible_D(s).dense();
  const auto h = build(s).hamiltonian;
  EXPECT_LT(intertwine_check(d, h, h), 1e-10);
  const auto a = OperatorSum::parse("Z1 X2", 4);
  EXPECT_LT(intertwine_check(Matrix::Identity(16, 16), a, a), 1e-15);
  const auto xzx = chain(ModelKind::XZX, 4, Boundary::Closed);
  const Matrix dx = noninvertible_D(xzx).dense();
  EXPECT_LT(intertwine_check(dx, OperatorSum::parse("Z2", 4), OperatorSum::parse("X1 X3", 4)), 1e-10);
  EXPECT_LT(intertwine_check(dx, build(xzx).hamiltonian, build(xzx).hamiltonian), 1e-10);
}

TEST(KennedyTasaki, ZxzAndZzzXxx) {
  const auto r = kt_check(chain(ModelKind::ZXZ, 4, Boundary::Closed));
  EXPECT_LT(r.x_residual, 1e-10);
  EXPECT_LT(r.k_residual, 1e-10);
  EXPECT_EQ(r.x_per_site.size(), 4u);
  const auto s = chain(ModelKind::ZZZ_XXX, 4, Boundary::Closed);
  const auto z = kt_check(s);
  EXPECT_LT(z.k_residual, 1e-10);
  const Matrix kt = kt_operator(s).dense();
  EXPECT_LT(intertwine_check(kt, OperatorSum::identity(4), OperatorSum::identity(4)), 1e-15);
}

TEST(KennedyTasaki, MapsToNnnIsing) {
  const auto s = chain(ModelKind::ZXZ, 6, Boundary::Closed);
  const Matrix kt = kt_operator(s).dense();
  const auto h = build(s).hamiltonian;
  // at 2L=6 the closed next-nearest bonds are all distinct
  EXPECT_LT(intertwine_check(kt, h, -1.0 * ising_nnn(s)), 1e-10);
}

TEST(StringOrder, Values) {
  const auto s = chain(ModelKind::ZXZ, 8, Boundary::Closed);
  const auto b = build(s);
  for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 4}, std::pair{2, 7}}) {
    EXPECT_NEAR(string_order(*b.reference_state, b, i, j).real, 1.0, 1e-12);
    EXPECT_NEAR(string_order(StateVector::plus(8), b, i, j).real, 0.0, 1e-12);
  }
  EXPECT_THROW(string_order(*b.reference_state, b, 3, 3), IndexError);
  EXPECT_THROW(string_order(*b.reference_state, b, 0, 3), IndexError);
  const auto open = build(chain(ModelKind::CCZ, 8, Boundary::Open));
  EXPECT_THROW(check_string_range(open, 1, 5), IndexError);
}

TEST(StringOrder, NearTrivialEndOfSweep) {
  const auto s = chain(ModelKind::ZXZ, 10, Boundary::Closed);
  const auto b = build(s);
  const auto r = diagonalize_dense(interpolated(b, 0.9), 1);
  const StateVector g(10, r.eigenvectors.col(0));
  const double o = string_order(g, b, 1, 9).real;
  EXPECT_GT(o, 0.9);
  EXPECT_LT(o, 1.0);
}

TEST(StringOrder, OperatorMatchesProduct) {
  const auto b = build(chain(ModelKind::ZXZ, 6, Boundary::Closed));
  const auto op = string_operator(b, 2, 4);
  const auto want = opsum_mul(opsum_mul(b.stabilizer(2), b.stabilizer(3)), b.stabilizer(4));
  EXPECT_LT(op.max_abs_diff(want), 1e-14);
}

TEST(EdgeLogicals, Zxz) {
  const auto ls = edge_logicals(chain(ModelKind::ZXZ, 6, Boundary::Open));
  ASSERT_EQ(ls.left.size(), 1u);
  EXPECT_LT(ls.left[0].x.max_abs_diff(OperatorSum::parse("X1 Z2", 6)), 1e-15);
  EXPECT_LT(ls.left[0].z.max_abs_diff(OperatorSum::parse("Z1", 6)), 1e-15);
  EXPECT_LT(ls.right[0].x.max_abs_diff(OperatorSum::parse("Z5 X6", 6)), 1e-15);
  EXPECT_LT(ls.right[0].z.max_abs_diff(OperatorSum::parse("Z6", 6)), 1e-15);
  EXPECT_THROW(edge_logicals(chain(ModelKind::ZXZ, 6, Boundary::Closed)), ArgumentError);
}

TEST(EdgeLogicals, Ccz) {
  const auto ls = edge_logicals(chain(ModelKind::CCZ, 8, Boundary::Open));
  ASSERT_EQ(ls.left.size(), 2u);
  OperatorSum want(8);
  for (const char* l : {"X1", "X1 Z2", "X1 Z3"}) want.add(PauliString::parse(l, 8), 0.5);
  want.add(PauliString::parse("X1 Z2 Z3", 8), -0.5);
  EXPECT_LT(ls.left[0].x.max_abs_diff(want), 1e-14);
}

TEST(EdgeLogicals, CnzCommuteWithBulkAndFormQubits) {
  const auto s = chain(ModelKind::CNZ, 10, Boundary::Open, 3);
  const auto ls = edge_logicals(s);
  const auto b = build(s);
  EXPECT_EQ(b.stabilizers.size(), 4u);
  for (Edge e : {Edge::Left, Edge::Right}) {
    ASSERT_EQ(ls.edge(e).size(), 3u);
    for (const auto& t : ls.edge(e)) {
      for (const auto& k : b.stabilizers) {
        EXPECT_LT(commutator_norm(t.x, k), 1e-12);
        EXPECT_LT(commutator_norm(t.z, k), 1e-12);
      }
      EXPECT_EQ(projective_phase(t.x, t.z), -1);
    }
  }
}

TEST(Projective, PhaseExamples) {
  const auto ls = edge_logicals(chain(ModelKind::ZXZ, 8, Boundary::Open));
  EXPECT_EQ(projective_phase(ls.left[0].x, ls.left[0].z), -1);
  EXPECT_EQ(projective_phase(ls.left[0].x, ls.left[0].x), 1);
  EXPECT_EQ(projective_phase(ls.right[0].x, ls.right[0].z), -1);
  EXPECT_EQ(projective_phase(ls.left[0].x, ls.right[0].z), 1);
  const auto sum = OperatorSum::parse("X1", 2) + OperatorSum::parse("Z1", 2);
  EXPECT_THROW(projective_phase(sum, OperatorSum::parse("X1", 2)), StructureError);
}

TEST(Projective, EdgeActionSigns) {
  const auto s = chain(ModelKind::ZXZ, 8, Boundary::Open);
  auto sign = [&](Edge e, const char* g, char l) {
    for (const auto& a : edge_symmetry_action(s))
      if (a.edge == e && a.generator == g && a.logical == l && a.index == 1) return a.sign;
    return 0;
  };
  EXPECT_EQ(sign(Edge::Left, "even", 'X'), -1);
  EXPECT_EQ(sign(Edge::Left, "odd", 'Z'), -1);
  EXPECT_EQ(sign(Edge::Left, "odd", 'X'), 1);
  EXPECT_EQ(sign(Edge::Left, "even", 'Z'), 1);
}

TEST(Anomaly, Norms) {
  const auto rows = anomaly_check(chain(ModelKind::ZXZ, 8, Boundary::Open));
  auto find = [&](const std::string& label) {
    for (const auto& r : rows)
      if (r.label == label) return r.norm;
    return -1.0;
  };
  EXPECT_GT(find("X1_left,eta"), 1.0);
  EXPECT_NEAR(find("X1_left,eta_odd"), 0.0, 1e-12);
  EXPECT_NEAR(commutator_norm(OperatorSum::parse("Z1", 8), eta_generators(chain(ModelKind::ZXZ, 8, Boundary::Open)).first.sum()),
              0.0, 1e-15);
}
