#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <limits>

#include "clusterlab/errors.hpp"
#include "clusterlab/models.hpp"
#include "clusterlab/serialize.hpp"

using namespace clusterlab;

namespace {

ChainSpec ring(ModelKind m, int n) {
  ChainSpec s;
  s.model = m;
  s.sites = n;
  s.boundary = Boundary::Closed;
  return s;
}

}  // namespace

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-6.0), "-6");
  EXPECT_EQ(format_double(std::numeric_limits<double>::quiet_NaN()), "nan");
  for (double v : {1.0 / 3.0, 2.0e-300, -1.2345678901234567e10, kPi}) EXPECT_EQ(std::stod(format_double(v)), v);
}

TEST(Json, OperatorSumRoundTrip) {
  const auto h = build(ring(ModelKind::CCZ, 6)).hamiltonian;
  const auto back = opsum_from_json(to_json(h), 6);
  EXPECT_EQ(back.size(), h.size());
  EXPECT_LT(back.max_abs_diff(h), 1e-15);
  const Json first = to_json(h)[0];
  EXPECT_TRUE(first.contains("pauli") && first.contains("re") && first.contains("im"));
  Json bad = to_json(h);
  bad[0]["extra"] = 1;
  EXPECT_THROW(opsum_from_json(bad, 6), ArgumentError);
}

TEST(Json, PhasePolynomialRoundTrip) {
  PhasePolynomial p(4);
  p.add_monomial({1, 2}, 0.5);
  p.add_monomial({2, 3, 4}, kPi);
  p.add_monomial(Mask{0}, 0.25);
  const Json j = to_json(p);
  EXPECT_TRUE(j.contains("1,2"));
  EXPECT_TRUE(j.contains(""));
  const auto back = phase_poly_from_json(j, 4);
  for (Mask x = 0; x < 16; ++x) EXPECT_NEAR(back.evaluate(x), p.evaluate(x), 1e-15);
}

TEST(Json, ChainSpecRoundTripAndUnknownKey) {
  ChainSpec s = ring(ModelKind::CP, 6);
  s.angles = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  const ChainSpec back = chain_from_json(to_json(s));
  EXPECT_EQ(to_json(back), to_json(s));
  Json j = to_json(s);
  j["colour"] = "red";
  try {
    chain_from_json(j);
    FAIL() << "expected an argument error";
  } catch (const ArgumentError& e) {
    EXPECT_NE(std::string(e.what()).find("colour"), std::string::npos);
  }
  const ChainSpec scalar = chain_from_json(Json::parse(R"({"model":"cp","sites":4,"boundary":"closed","angles":0.5})"));
  // a scalar angle is kept as a one-element list and broadcast by build()
  EXPECT_EQ(scalar.angles, std::vector<double>{0.5});
  EXPECT_NO_THROW(build(scalar));
}

TEST(Json, SpectrumFields) {
  const auto r = diagonalize_dense(build(ring(ModelKind::ZXZ, 4)).hamiltonian, 1);
  const Json j = to_json(r);
  for (const char* k : {"eigenvalues", "clusters", "gap", "residual_max", "seed"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_NEAR(j["clusters"][0][0].get<double>(), -4.0, 1e-12);
  EXPECT_EQ(j["clusters"][0][1].get<int>(), 1);
  EXPECT_EQ(j["eigenvalues"].size(), 16u);
}

TEST(Binary, LengthAndLayout) {
  const StateVector v = StateVector::plus(3);
  const std::string b = to_binary(v);
  ASSERT_EQ(b.size(), 8u * 2 * sizeof(double));
  double re = 0;
  std::memcpy(&re, b.data(), sizeof re);
  EXPECT_DOUBLE_EQ(re, 1 / std::sqrt(8.0));
  EXPECT_EQ(to_json(v).size(), 8u);
}

TEST(Csv, HeaderAndRows) {
  const auto t = sweep_alpha(ring(ModelKind::ZXZ, 4), uniform_grid(5), 2);
  const std::string csv = to_csv(t, {"model zxz"});
  EXPECT_EQ(csv.rfind("# model zxz\nalpha,e0,e1,gap,string_order\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
}

TEST(Svg, StableBytes) {
  const auto t = sweep_alpha(ring(ModelKind::ZXZ, 4), uniform_grid(11), 2);
  const std::string a = to_svg(t, "zxz"), b = to_svg(t, "zxz");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("<svg", 0), 0u);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
}
