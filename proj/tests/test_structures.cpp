#include <gtest/gtest.h>

#include "countforge/error.hpp"
#include "countforge/structures.hpp"

using namespace countforge;

namespace {
Multigraph triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
}  // namespace

TEST(Surgery, ContractTriangleEdge) {
  const auto r = edge_surgery(triangle(), 0, SurgeryKind::contract);
  EXPECT_EQ(r.graph.vertex_count(), 2u);
  ASSERT_EQ(r.graph.edge_count(), 2u);
  for (const auto& e : r.graph.edges()) EXPECT_EQ(e, (Edge{0, 1}));
  EXPECT_FALSE(r.edge_map[0].has_value());
}

TEST(Surgery, DeleteK2Edge) {
  const auto r = edge_surgery(Multigraph(2, {{0, 1}}), 0, SurgeryKind::remove);
  EXPECT_EQ(r.graph.vertex_count(), 2u);
  EXPECT_EQ(r.graph.edge_count(), 0u);
}

TEST(Surgery, ContractLoopDeletesIt) {
  const Multigraph g(2, {{0, 0}, {0, 1}});
  const auto r = edge_surgery(g, 0, SurgeryKind::contract);
  EXPECT_EQ(r.graph, Multigraph(2, {{0, 1}}));
}

TEST(Components, Examples) {
  const Multigraph t = triangle();
  EXPECT_EQ(component_count(t, EdgeSet{}), 3u);
  EXPECT_EQ(component_count(t, EdgeSet{0, 1, 2}), 1u);
  const Multigraph p3(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(component_count(p3, EdgeSet{0}), 2u);
}

TEST(Components, Bridges) {
  const Multigraph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  EXPECT_FALSE(is_bridge(g, 0));
  EXPECT_TRUE(is_bridge(g, 3));
  EXPECT_TRUE(is_connected(g));
  EXPECT_FALSE(is_connected(Multigraph(2)));
}

TEST(Multigraph, SimpleAndDegrees) {
  Multigraph g(2, {{0, 1}, {1, 0}});
  EXPECT_FALSE(g.is_simple());
  g = Multigraph(2, {{0, 0}});
  EXPECT_TRUE(g.has_loops());
  EXPECT_EQ(g.degrees(), (std::vector<std::size_t>{2, 0}));
  EXPECT_THROW(Multigraph(2, {{0, 2}}), InvalidArgument);
}

TEST(RollbackDsu, UndoesUnions) {
  RollbackDisjointSets d(4);
  EXPECT_TRUE(d.unite(0, 1));
  EXPECT_TRUE(d.unite(2, 3));
  EXPECT_FALSE(d.unite(1, 0));
  EXPECT_EQ(d.components(), 2u);
  d.rollback();
  EXPECT_EQ(d.components(), 3u);
  EXPECT_NE(d.find(2), d.find(3));
  EXPECT_EQ(d.find(0), d.find(1));
}

TEST(Cnf, Validation) {
  EXPECT_THROW((Cnf{2, {{1, 3}}}.validate()), InvalidArgument);
  EXPECT_THROW((Cnf{2, {{0}}}.validate()), InvalidArgument);
  EXPECT_NO_THROW((Cnf{2, {{1, -2}}}.validate()));
  EXPECT_EQ((Cnf{3, {{1}, {1, 2, 3}}}.max_width()), 3u);
}

TEST(Digraph, ToMatrixSumsParallelArcs) {
  Digraph d(2);
  d.add_arc(0, 1, 2);
  d.add_arc(0, 1, 3);
  d.add_arc(1, 0);
  const RationalMatrix a = to_matrix(d);
  EXPECT_EQ(a(0, 1), 5);
  EXPECT_EQ(a(1, 0), 1);
  EXPECT_EQ(a(0, 0), 0);
}
