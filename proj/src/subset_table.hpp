#ifndef COUNTFORGE_SRC_SUBSET_TABLE_HPP
#define COUNTFORGE_SRC_SUBSET_TABLE_HPP

#include <cstdint>
#include <vector>

#include "countforge/structures.hpp"

namespace countforge::detail {

// table[k][a] = sum over edge subsets A with k(A) = k and |A \ M| = a of
// (-1)^{|A & M|}, where M is the set of edges flagged in `minus`.
using SubsetTable = std::vector<std::vector<std::int64_t>>;

SubsetTable subset_table(const Multigraph& g, const std::vector<char>& minus);

inline SubsetTable subset_table(const Multigraph& g) {
  return subset_table(g, std::vector<char>(g.edge_count(), 0));
}

}  // namespace countforge::detail

#endif  // COUNTFORGE_SRC_SUBSET_TABLE_HPP
