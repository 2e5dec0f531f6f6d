#ifndef COUNTFORGE_SATCHAIN_HPP
#define COUNTFORGE_SATCHAIN_HPP

#include <cstddef>

#include "countforge/structures.hpp"

// #3-SAT -> #NAE-3-SAT -> #MaxCut on multigraphs -> #MaxCut on simple graphs.
namespace countforge::satchain {

struct NaeInstance {
  Cnf formula;
  // count_nae(formula) = relation_constant * (count_sat(source) + 1).
  int relation_constant = 2;
};

// Adds a switch variable y (n+1) and, per clause, definition variables
// b <-> l2 v l3 and a <-> l1 v b, then (-y a) per clause and (y x) per
// variable. y true reproduces the models of f; y false admits one more.
Cnf plant_assignment(const Cnf& f);

// Plants, rewrites every width-3 clause (a b c) as (x -a)(x -b)(-x a b)(x c)
// with fresh x, then adds a fresh z to every narrower clause and pads to
// width three by repeating a literal.
NaeInstance sat_to_nae(const Cnf& f);

struct MaxcutInstance {
  Multigraph graph;
  // Cuts of size exactly `target` correspond to NAE assignments.
  std::size_t target = 0;
};

// Literal vertices 2(v-1) and 2(v-1)+1, the edge between them, and a
// triangle per clause; repeated literals give loops or parallel edges.
MaxcutInstance nae_to_maxcut(const Cnf& f);

// The 3-stretch; count_maxcut goes from (k, c) to (2m + k, 3^{m-k} c).
Multigraph maxcut_to_simple(const Multigraph& g);

}  // namespace countforge::satchain

#endif  // COUNTFORGE_SATCHAIN_HPP
