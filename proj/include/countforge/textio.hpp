#ifndef COUNTFORGE_TEXTIO_HPP
#define COUNTFORGE_TEXTIO_HPP

#include <string>
#include <string_view>

#include "countforge/structures.hpp"

// Text formats. DIMACS CNF: `p cnf <vars> <clauses>`, 0-terminated clauses,
// `c` comment lines. Graph and digraph: `graph|digraph <n> <m>`, then m lines
// `u v [weight]` with 0-based vertices and weight 1 when omitted. Matrix:
// `matrix <n>` followed by n rows of n rationals. Blank lines and `#`
// comments are ignored outside DIMACS. Errors raise ParseError with the
// 1-based line number.
namespace countforge::textio {

struct WeightedGraph {
  Multigraph graph;
  WeightMap weights;
  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

Cnf parse_dimacs(std::string_view text);
WeightedGraph parse_graph(std::string_view text);
Digraph parse_digraph(std::string_view text);
RationalMatrix parse_matrix(std::string_view text);

std::string serialize(const Cnf& f);
std::string serialize(const Multigraph& g);
std::string serialize(const WeightedGraph& g);
std::string serialize(const Digraph& d);
std::string serialize(const RationalMatrix& a);

}  // namespace countforge::textio

#endif  // COUNTFORGE_TEXTIO_HPP
