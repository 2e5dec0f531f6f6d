#ifndef COUNTFORGE_REDUCE_ORACLE_HPP
#define COUNTFORGE_REDUCE_ORACLE_HPP

#include <cstddef>

#include "countforge/oracles.hpp"

namespace countforge::reduce {

// Z or Z0 of a weighted multigraph, evaluated by peeling loops, merging
// parallel edges, removing pendant and isolated vertices and contracting
// series pairs, then enumerating edge subsets of whatever is left. Lets the
// pipelines query inflated graphs far beyond brute-force size. Throws
// CapacityError if the residual graph exceeds max_residual_edges.
Rational z_reduced(const Multigraph& g, const Rational& q, const WeightMap& w, oracles::ZVariant variant,
                   std::size_t max_residual_edges = 0);

Rational z_reduced(const Multigraph& g, const Rational& q, const Rational& w, oracles::ZVariant variant,
                   std::size_t max_residual_edges = 0);

}  // namespace countforge::reduce

#endif  // COUNTFORGE_REDUCE_ORACLE_HPP
