#include <gtest/gtest.h>

#include "countforge/error.hpp"
#include "countforge/textio.hpp"

using namespace countforge;
using namespace countforge::textio;

TEST(Dimacs, ParseAndRoundTrip) {
  const Cnf f = parse_dimacs("c comment\np cnf 3 1\n1 2 3 0\n");
  EXPECT_EQ(f, (Cnf{3, {{1, 2, 3}}}));
  EXPECT_EQ(parse_dimacs(serialize(f)), f);
  EXPECT_EQ(parse_dimacs("p cnf 2 2\n1 -2 0 -1\n0\n"), (Cnf{2, {{1, -2}, {-1}}}));
}

TEST(Dimacs, Errors) {
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p dnf 2 1\n1 0\n"), ParseError);
  try {
    parse_dimacs("p cnf 2 1\n\n1 x 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Graph, ParseAndRoundTrip) {
  const WeightedGraph g = parse_graph("# K2\ngraph 2 1\n0 1\n");
  EXPECT_EQ(g.graph, Multigraph(2, {{0, 1}}));
  EXPECT_EQ(g.weights, WeightMap{1});
  const WeightedGraph w = parse_graph("graph 3 3\n0 1 -2/4\n1 1\n2 0 3\n");
  EXPECT_EQ(w.weights, (WeightMap{Rational(-1, 2), 1, 3}));
  EXPECT_EQ(parse_graph(serialize(w)), w);
}

TEST(Graph, Errors) {
  try {
    parse_graph("graph 2 1\n0 5\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_graph("graph 2 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("graph 2 1\n0 1 1/0\n"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
}

TEST(Digraph, RoundTrip) {
  const Digraph d = parse_digraph("digraph 2 3\n0 1\n1 0 -1\n1 1 5/3\n");
  EXPECT_EQ(d.arc_count(), 3u);
  EXPECT_EQ(d.arc(1).weight, -1);
  EXPECT_EQ(parse_digraph(serialize(d)), d);
}

TEST(Matrix, RoundTrip) {
  const RationalMatrix a = parse_matrix("matrix 2\n1 -1/2\n0 3\n");
  EXPECT_EQ(a(0, 1), Rational(-1, 2));
  EXPECT_EQ(parse_matrix(serialize(a)), a);
  EXPECT_THROW(parse_matrix("matrix 2\n1 2\n3\n"), ParseError);
}
