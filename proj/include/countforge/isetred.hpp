#ifndef COUNTFORGE_ISETRED_HPP
#define COUNTFORGE_ISETRED_HPP

#include <cstddef>

#include "countforge/structures.hpp"

namespace countforge::isetred {

struct IndsetInstance {
  Multigraph graph;
  std::size_t n_src = 0;
  std::size_t m_src = 0;
};

// Vertex layout: variable i (0-based) owns 3i (x), 3i+1 (not x) and 3i+2
// (guard); clause j owns 3n+8j .. 3n+8j+6 for its seven satisfying partial
// assignments and 3n+8j+7 for its guard. Partial assignment t = 1..7 gives
// literal 1, 2, 3 the bits 4, 2, 1 of t.
// The number of independent sets has the parity of #SAT.
IndsetInstance sat_to_indset_graph(const Cnf& f);

// Variable v+1 per vertex v and the clause (-u -v) per edge.
Cnf indset_to_2sat(const Multigraph& g);

}  // namespace countforge::isetred

#endif  // COUNTFORGE_ISETRED_HPP
