#include <gtest/gtest.h>

#include "countforge/error.hpp"
#include "countforge/isetred.hpp"
#include "countforge/oracles.hpp"

using namespace countforge;
using namespace countforge::isetred;

TEST(IndsetGraph, Sizes) {
  const IndsetInstance inst = sat_to_indset_graph(Cnf{3, {{1, 2, 3}}});
  EXPECT_EQ(inst.graph.vertex_count(), 17u);
  EXPECT_EQ(inst.graph.edge_count(), 58u);
  EXPECT_TRUE(inst.graph.is_simple());
}

TEST(IndsetGraph, Parity) {
  const Cnf repeated{3, {{1, 1, 1}}};
  const Cnf one{3, {{1, 2, 3}, {1, -2, 3}, {1, 2, -3}, {1, -2, -3}, {-1, 2, 3}, {-1, -2, 3}, {-1, 2, -3}}};
  ASSERT_EQ(oracles::count_sat(one), 1);
  EXPECT_EQ(oracles::count_independent_sets(sat_to_indset_graph(one).graph) % 2, 1);
  const Cnf none{3, {{1, 2, 3}, {1, -2, 3}, {1, 2, -3}, {1, -2, -3}, {-1, 2, 3}, {-1, -2, 3}, {-1, 2, -3}, {-1, -2, -3}}};
  EXPECT_EQ(oracles::count_independent_sets(sat_to_indset_graph(none).graph) % 2, 0);
  EXPECT_THROW(sat_to_indset_graph(repeated), InvalidArgument);
  EXPECT_THROW(sat_to_indset_graph(Cnf{3, {{1, 2}}}), InvalidArgument);
}

TEST(IndsetTo2Sat, Examples) {
  const Cnf f = indset_to_2sat(Multigraph(2, {{0, 1}}));
  EXPECT_EQ(f, (Cnf{2, {{-1, -2}}}));
  EXPECT_EQ(oracles::count_sat(f), 3);
  EXPECT_EQ(indset_to_2sat(Multigraph(4)), (Cnf{4, {}}));
  EXPECT_EQ(oracles::count_sat(indset_to_2sat(Multigraph(4))), 16);
  EXPECT_THROW(indset_to_2sat(Multigraph(2, {{0, 0}})), InvalidArgument);
}
