#include <gtest/gtest.h>

#include "countforge/error.hpp"
#include "countforge/oracles.hpp"
#include "countforge/pipelines.hpp"
#include "countforge/reduce_oracle.hpp"

using namespace countforge;
using namespace countforge::pipelines;
using oracles::ZVariant;

namespace {
Multigraph k2() { return Multigraph(2, {{0, 1}}); }
Multigraph triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
Multigraph c5() { return Multigraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }

EvalOracle subset_z(const Rational& q, const Rational& w) {
  return [q, w](const Multigraph& h) { return oracles::z_subset_sum(h, q, w, ZVariant::z); };
}
EvalOracle reduced_z(const Rational& q, const Rational& w, ZVariant v = ZVariant::z) {
  return [q, w, v](const Multigraph& h) { return reduce::z_reduced(h, q, w, v); };
}
}  // namespace

TEST(Thickening, K2AndPath) {
  const Rational q = 3;
  EXPECT_EQ(coeffs_by_thickening(k2(), q, 1, subset_z(q, 1)), Poly({q * q, q}));
  const Multigraph p3(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(coeffs_by_thickening(p3, q, 1, subset_z(q, 1)), oracles::z_subset_sum_poly(p3, q, {}, ZVariant::z));
  EXPECT_THROW(coeffs_by_thickening(k2(), q, -1, subset_z(q, -1)), UnsupportedPoint);
}

TEST(Theta, IdentityBackedOracle) {
  const Multigraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 1}});
  for (const auto& [q, w] : std::vector<std::pair<Rational, Rational>>{{2, 1}, {Rational(1, 2), 1}, {-1, 2}}) {
    EXPECT_EQ(coeffs_by_theta(g, q, w, reduced_z(q, w)), oracles::z_subset_sum_poly(g, q, {}, ZVariant::z));
  }
}

TEST(Theta, DegeneratePointsArePreprocessed) {
  // q = -w and q = -2w.
  const Multigraph g = triangle();
  for (const auto& [q, w] : std::vector<std::pair<Rational, Rational>>{{3, -3}, {-2, 1}, {3, Rational(-3, 2)}}) {
    EXPECT_EQ(coeffs_by_theta(g, q, w, reduced_z(q, w)), oracles::z_subset_sum_poly(g, q, {}, ZVariant::z));
  }
  EXPECT_THROW(coeffs_by_theta(g, 1, 1, reduced_z(1, 1)), UnsupportedPoint);
}

TEST(Theta, GenuineOracleOnK2) {
  EXPECT_EQ(coeffs_by_theta(k2(), 2, 1, subset_z(2, 1)), Poly({4, 2}));
}

TEST(Wump, IdentityBackedOracle) {
  for (const Rational& w : {Rational(12), Rational(1), Rational(-1, 2), Rational(-3)}) {
    EXPECT_EQ(coeffs_by_wump(triangle(), w, reduced_z(0, w, ZVariant::z0)),
              oracles::z_subset_sum_poly(triangle(), 0, {}, ZVariant::z0))
        << to_string(w);
  }
  EXPECT_THROW(coeffs_by_wump(triangle(), 0, reduced_z(0, 0, ZVariant::z0)), UnsupportedPoint);
}

TEST(MaxcutIsing, Examples) {
  const auto k = maxcut_from_ising(k2());
  EXPECT_EQ(k.distribution, (std::vector<Integer>{2, 2}));
  EXPECT_EQ(k.maxcut, (oracles::CutCount{1, 2}));
  const auto t = maxcut_from_ising(triangle());
  EXPECT_EQ(t.distribution, (std::vector<Integer>{2, 0, 6, 0}));
  EXPECT_EQ(oracles::z_subset_sum_poly(triangle(), 2, {}, ZVariant::z), Poly({8, 12, 6, 2}));
}

TEST(ThreeTerminal, Examples) {
  const TerminalTriple star{Multigraph(4, {{0, 1}, {0, 2}, {0, 3}}), 1, 2, 3};
  EXPECT_EQ(tmc3_from_z0(star, 3), 3);
  EXPECT_EQ(tmc3_from_z0(TerminalTriple{triangle(), 0, 1, 2}, 3), 1);
  EXPECT_THROW(tmc3_from_z0(star, 2), UnsupportedPoint);
}

TEST(TElimination, GenuineOracle) {
  // Triangle T = {0, 1, 2} with two more edges keeping its endpoints joined;
  // then K4 with T a triangle.
  const Multigraph five(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}, {1, 2}});
  const Multigraph k4(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  for (const Multigraph& g : {five, k4}) {
    const EdgeSet tee = {0, 1, 2};
    for (const Rational& q : {Rational(0), Rational(2), Rational(-1, 3)}) {
      auto oracle = [q](const Multigraph& h, const Rational& w) {
        EXPECT_TRUE(h.is_simple());
        return oracles::z_subset_sum(h, q, w, ZVariant::z0);
      };
      EXPECT_EQ(eliminate_T_edges(g, tee, q, oracle), oracles::z_subset_sum_poly(g, q, tee, ZVariant::z0));
    }
  }
}

TEST(TElimination, BridgeRejected) {
  const Multigraph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {0, 3}});
  auto oracle = [](const Multigraph& h, const Rational& w) { return oracles::z_subset_sum(h, 2, w, ZVariant::z0); };
  EXPECT_THROW(eliminate_T_edges(g, {0, 1, 3}, 2, oracle), InvalidArgument);
}

TEST(Linial, Routes) {
  auto colourings = [](unsigned c) {
    return [c](const Multigraph& h) { return Rational(oracles::count_colourings(h, c)); };
  };
  EXPECT_EQ(chromatic3_via_linial(c5(), 5, colourings(5)), 30);
  const Multigraph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
  const Rational q(7, 2);
  EXPECT_EQ(chromatic3_via_linial(g, q, [q](const Multigraph& h) { return oracles::chromatic_polynomial(h)(q); }),
            Rational(oracles::count_colourings(g, 3)));
  EXPECT_EQ(join_clique(k2(), 2).edge_count(), 1u + 4u + 1u);
}

TEST(Reliability, FromTutte) {
  EXPECT_EQ(reliability_from_tutte(c5(), Rational(1, 3)), Rational(112, 243));
  EXPECT_EQ(reliability_from_tutte(k2(), Rational(2, 9)), Rational(7, 9));
  EXPECT_THROW(reliability_from_tutte(Multigraph(2), Rational(1, 2)), InvalidArgument);
}
