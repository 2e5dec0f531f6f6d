#include <gtest/gtest.h>

#include "countforge/oracles.hpp"
#include "countforge/satchain.hpp"

using namespace countforge;
using namespace countforge::satchain;

TEST(Plant, AddsOneModel) {
  EXPECT_EQ(oracles::count_sat(plant_assignment(Cnf{3, {{1, 2, 3}}})), 8);
  EXPECT_EQ(oracles::count_sat(plant_assignment(Cnf{1, {{1}, {-1}}})), 1);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(oracles::count_sat(plant_assignment(Cnf{n, {}})), (1 << n) + 1);
  EXPECT_EQ(oracles::count_sat(plant_assignment(Cnf{2, {{}}})), 1);
}

TEST(SatToNae, Counts) {
  const NaeInstance inst = sat_to_nae(Cnf{3, {{1, 2, 3}}});
  EXPECT_EQ(inst.relation_constant, 2);
  EXPECT_EQ(oracles::count_nae(inst.formula), 16);
  EXPECT_EQ(oracles::count_nae(sat_to_nae(Cnf{1, {{1}, {-1}}}).formula), 2);
  for (const auto& c : inst.formula.clauses) EXPECT_EQ(c.size(), 3u);
}

TEST(NaeToMaxcut, SingleClause) {
  const MaxcutInstance inst = nae_to_maxcut(Cnf{3, {{1, 2, 3}}});
  EXPECT_EQ(inst.graph.vertex_count(), 6u);
  EXPECT_EQ(inst.graph.edge_count(), 6u);
  EXPECT_EQ(inst.target, 5u);
  EXPECT_EQ(oracles::count_maxcut(inst.graph), (oracles::CutCount{5, 6}));
}

TEST(MaxcutToSimple, DoubledEdge) {
  const Multigraph g(2, {{0, 1}, {0, 1}});
  const Multigraph s = maxcut_to_simple(g);
  EXPECT_TRUE(s.is_simple());
  EXPECT_EQ(oracles::count_maxcut(s), (oracles::CutCount{6, 2}));
}
