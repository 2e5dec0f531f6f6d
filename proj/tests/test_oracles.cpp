#include <gtest/gtest.h>

#include <cstdlib>

#include "countforge/error.hpp"
#include "countforge/oracles.hpp"
#include "countforge/reduce_oracle.hpp"

using namespace countforge;
using namespace countforge::oracles;

namespace {
Multigraph k2() { return Multigraph(2, {{0, 1}}); }
Multigraph triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
Multigraph k4() { return Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Multigraph c5() { return Multigraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }
}  // namespace

TEST(CountSat, Examples) {
  EXPECT_EQ(count_sat(Cnf{3, {}}), 8);
  EXPECT_EQ(count_sat(Cnf{1, {{1}}}), 1);
  EXPECT_EQ(count_sat(Cnf{3, {{1, 2, 3}}}), 7);
  EXPECT_EQ(count_sat(Cnf{1, {{}}}), 0);
  EXPECT_THROW(count_sat(Cnf{40, {}}), CapacityError);
}

TEST(CountNae, Examples) {
  EXPECT_EQ(count_nae(Cnf{3, {{1, 2, 3}}}), 6);
  EXPECT_EQ(count_nae(Cnf{2, {}}), 4);
  EXPECT_EQ(count_nae(Cnf{1, {{1, 1, 1}}}), 0);
}

TEST(IndependentSets, Examples) {
  EXPECT_EQ(count_independent_sets(Multigraph(3)), 8);
  EXPECT_EQ(count_independent_sets(k2()), 3);
  EXPECT_EQ(count_independent_sets(triangle()), 4);
  EXPECT_THROW(count_independent_sets(Multigraph(1, {{0, 0}})), InvalidArgument);
  // 100 disjoint edges: 3^100, through the component split.
  Multigraph matching(200);
  for (VertexId v = 0; v < 200; v += 2) matching.add_edge(v, v + 1);
  EXPECT_THROW(count_independent_sets(matching), CapacityError);
  Multigraph half(120);
  for (VertexId v = 0; v < 120; v += 2) half.add_edge(v, v + 1);
  EXPECT_EQ(count_independent_sets(half), pow(Integer(3), 60UL));
}

TEST(MaxCut, Examples) {
  EXPECT_EQ(count_maxcut(k2()), (CutCount{1, 2}));
  EXPECT_EQ(count_maxcut(triangle()), (CutCount{2, 6}));
  EXPECT_EQ(count_maxcut(k4()), (CutCount{4, 6}));
  EXPECT_EQ(count_maxcut(Multigraph(2, {{0, 1}, {0, 1}})), (CutCount{2, 2}));
  EXPECT_EQ(cut_size_distribution(triangle()), (std::vector<Integer>{2, 0, 6, 0}));
}

TEST(MaxCut, ChainCompressionMatchesDistribution) {
  // A long cycle with a chord: most vertices sit on degree-2 chains.
  Multigraph g(20);
  for (VertexId v = 0; v < 20; ++v) g.add_edge(v, (v + 1) % 20);
  g.add_edge(0, 9);
  const auto dist = cut_size_distribution(g);
  std::size_t top = dist.size() - 1;
  while (dist[top] == 0) --top;
  EXPECT_EQ(count_maxcut(g, 4), (CutCount{top, dist[top]}));
}

TEST(ThreeTerminalCut, Examples) {
  EXPECT_EQ(count_3tmc(TerminalTriple{Multigraph(4, {{0, 1}, {0, 2}, {0, 3}}), 1, 2, 3}), (CutCount{2, 3}));
  EXPECT_EQ(count_3tmc(TerminalTriple{triangle(), 0, 1, 2}), (CutCount{3, 1}));
  EXPECT_EQ(count_3tmc(TerminalTriple{Multigraph(3, {{0, 1}}), 0, 1, 2}), (CutCount{1, 1}));
}

TEST(Colourings, Examples) {
  EXPECT_EQ(count_colourings(triangle(), 3), 6);
  EXPECT_EQ(count_colourings(k4(), 3), 0);
  EXPECT_EQ(count_colourings(k2(), 3), 6);
  EXPECT_EQ(count_colourings(Multigraph(1, {{0, 0}}), 3), 0);
  EXPECT_EQ(chromatic_polynomial(k2()), Poly({0, -1, 1}));
  EXPECT_EQ(chromatic_polynomial(c5())(3), 30);
}

TEST(Permanent, Examples) {
  RationalMatrix id(3, 3), ones(3, 3), anti(2, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    id(i, i) = 1;
    for (std::size_t j = 0; j < 3; ++j) ones(i, j) = 1;
  }
  anti(0, 1) = 2;
  anti(1, 0) = 1;
  for (auto m : {PermanentMethod::naive, PermanentMethod::ryser, PermanentMethod::cycle_cover}) {
    EXPECT_EQ(permanent(id, m), 1);
    EXPECT_EQ(permanent(ones, m), 6);
    EXPECT_EQ(permanent(anti, m), 2);
  }
  EXPECT_THROW(permanent(RationalMatrix(2, 3), PermanentMethod::naive), InvalidArgument);
  EXPECT_THROW(permanent(RationalMatrix(12, 12), PermanentMethod::naive), CapacityError);
}

TEST(Permanent, CycleCoverHandlesLargeSparseDigraphs) {
  // A 200-vertex directed cycle plus every loop: covers are all-loops or the cycle.
  Digraph d(200);
  for (VertexId v = 0; v < 200; ++v) {
    d.add_arc(v, (v + 1) % 200);
    d.add_arc(v, v, 2);
  }
  EXPECT_EQ(permanent(d, PermanentMethod::cycle_cover), pow(Rational(2), 200) + 1);
}

TEST(ZSubsetSum, Examples) {
  EXPECT_EQ(z_subset_sum(k2(), 2, 1, ZVariant::z), 6);
  EXPECT_EQ(z_subset_sum(k2(), 3, 2, ZVariant::z), 15);
  const Rational q(5, 3), w(-2, 7);
  EXPECT_EQ(z_subset_sum(Multigraph(1, {{0, 0}}), q, w, ZVariant::z), q * (1 + w));
  EXPECT_EQ(z_subset_sum(Multigraph(3), q, w, ZVariant::z), q * q * q);
  EXPECT_EQ(z_subset_sum_poly(k2(), 2, {}), Poly({2, 1}));
}

TEST(ZSubsetSum, FixedMinusOneEdges) {
  // K2 with its edge fixed at -1: Z0 = 1 + (-1) q^{1-1}... evaluated directly.
  const Rational q = 3;
  const Poly p = z_subset_sum_poly(k2(), q, {0});
  EXPECT_EQ(p, Poly::constant(z_subset_sum(k2(), q, -1, ZVariant::z0)));
  const Multigraph g(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}});
  const Poly tp = z_subset_sum_poly(g, q, {0, 2});
  for (const Rational& w : {Rational(0), Rational(2), Rational(-1, 3)}) {
    EXPECT_EQ(tp(w), z_subset_sum(g, q, WeightMap{-1, w, -1, w}, ZVariant::z0));
  }
}

TEST(ZSubsetSum, Guard) {
  Multigraph g(2);
  for (int i = 0; i < 23; ++i) g.add_edge(0, 1);
  EXPECT_THROW(z_subset_sum(g, 2, 1, ZVariant::z), CapacityError);
  EXPECT_EQ(z_subset_sum(g, 2, 1, ZVariant::z, 23), 4 + 2 * (pow(Rational(2), 23) - 1));
}

TEST(ZSubsetSum, EnvironmentOverride) {
  Multigraph g(2);
  for (int i = 0; i < 23; ++i) g.add_edge(0, 1);
  setenv("COUNTFORGE_MAX_SUBSET_BITS", "23", 1);
  EXPECT_NO_THROW(z_subset_sum(g, 2, 1, ZVariant::z));
  unsetenv("COUNTFORGE_MAX_SUBSET_BITS");
  EXPECT_THROW(z_subset_sum(g, 2, 1, ZVariant::z), CapacityError);
}

TEST(ZDelcon, MatchesSubsetSum) {
  const Multigraph g(3, {{0, 1}, {1, 2}, {0, 2}, {2, 2}, {0, 1}});
  const WeightMap w = {Rational(1, 2), -3, 2, Rational(-1, 5), 1};
  for (const Rational& q : {Rational(0), Rational(7, 3), Rational(-2)}) {
    EXPECT_EQ(z_delcon(g, q, w, ZVariant::z), z_subset_sum(g, q, w, ZVariant::z));
    EXPECT_EQ(z_delcon(g, q, w, ZVariant::z0), z_subset_sum(g, q, w, ZVariant::z0));
  }
  const Multigraph looped(1, {{0, 0}});
  EXPECT_EQ(z_delcon(looped, 4, WeightMap{3}, ZVariant::z), 4 * 4);
}

TEST(Tutte, Examples) {
  EXPECT_EQ(tutte_subset_sum(triangle(), 1, 1), 3);
  EXPECT_EQ(tutte_subset_sum(k2(), Rational(5, 2), 7), Rational(5, 2));
  EXPECT_EQ(tutte_subset_sum(Multigraph(1, {{0, 0}}), 4, Rational(-1, 3)), Rational(-1, 3));
  EXPECT_EQ(convert_z_tutte(triangle(), 2, 2), 8);
  EXPECT_EQ(convert_z_tutte(k2(), 3, 2), 3);
  EXPECT_THROW(convert_z_tutte(k2(), 1, 2), UnsupportedPoint);
}

TEST(Chromatic, FromTutte) {
  EXPECT_EQ(chromatic_from_tutte(k2(), 3), 6);
  EXPECT_EQ(chromatic_from_tutte(triangle(), 3), 6);
  EXPECT_EQ(chromatic_from_tutte(c5(), 3), 30);
}

TEST(Reliability, Examples) {
  EXPECT_EQ(reliability_bruteforce(c5(), Rational(1, 3)), Rational(112, 243));
  EXPECT_EQ(reliability_bruteforce(k2(), Rational(2, 7)), Rational(5, 7));
  EXPECT_EQ(reliability_bruteforce(c5(), 1), 0);
  EXPECT_EQ(reliability_bruteforce(Multigraph(2), Rational(1, 2)), 0);
}

TEST(Reduce, AgreesWithSubsetSum) {
  const Multigraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 1}, {1, 3}});
  const WeightMap w = {1, 2, Rational(-1, 2), 3, -2, Rational(1, 3), 5};
  for (const Rational& q : {Rational(0), Rational(2), Rational(-3, 4)}) {
    for (auto v : {ZVariant::z, ZVariant::z0}) EXPECT_EQ(reduce::z_reduced(g, q, w, v), z_subset_sum(g, q, w, v));
  }
  // Pure series/parallel graphs collapse to nothing regardless of size.
  Multigraph path(401);
  for (VertexId v = 0; v < 400; ++v) path.add_edge(v, v + 1);
  EXPECT_EQ(reduce::z_reduced(path, 3, 1, ZVariant::z, 0), 3 * pow(Rational(4), 400));
}
