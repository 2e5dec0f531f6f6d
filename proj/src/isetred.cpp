#include "countforge/isetred.hpp"

#include <cstdlib>
#include <string>

#include "countforge/error.hpp"

namespace countforge::isetred {

IndsetInstance sat_to_indset_graph(const Cnf& f) {
  f.validate();
  const std::size_t n = static_cast<std::size_t>(f.num_vars);
  const std::size_t m = f.clauses.size();
  IndsetInstance inst{Multigraph(3 * n + 8 * m), n, m};
  Multigraph& g = inst.graph;
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge(3 * i, 3 * i + 1);
    g.add_edge(3 * i + 2, 3 * i);
    g.add_edge(3 * i + 2, 3 * i + 1);
  }
  for (std::size_t j = 0; j < m; ++j) {
    const Clause& c = f.clauses[j];
    if (c.size() != 3) throw InvalidArgument("clause " + std::to_string(j) + " does not have three literals");
    if (std::abs(c[0]) == std::abs(c[1]) || std::abs(c[0]) == std::abs(c[2]) || std::abs(c[1]) == std::abs(c[2])) {
      throw InvalidArgument("clause " + std::to_string(j) + " repeats a variable");
    }
    const VertexId base = 3 * n + 8 * j;
    for (VertexId a = 0; a < 7; ++a) {
      for (VertexId b = a + 1; b < 7; ++b) g.add_edge(base + a, base + b);
    }
    for (VertexId a = 0; a < 7; ++a) g.add_edge(base + 7, base + a);
    for (unsigned t = 1; t <= 7; ++t) {
      const VertexId cv = base + t - 1;
      for (int k = 0; k < 3; ++k) {
        const Literal lit = c[static_cast<std::size_t>(k)];
        const bool literal_true = (t >> (2 - k)) & 1;
        const bool variable_true = literal_true == (lit > 0);
        const std::size_t var = static_cast<std::size_t>(std::abs(lit)) - 1;
        // Conflicts with the literal vertex of the opposite value.
        g.add_edge(cv, variable_true ? 3 * var + 1 : 3 * var);
      }
    }
  }
  return inst;
}

Cnf indset_to_2sat(const Multigraph& g) {
  if (!g.is_simple()) throw InvalidArgument("independent-set reduction expects a simple graph");
  Cnf out{static_cast<int>(g.vertex_count()), {}};
  for (const auto& e : g.edges()) {
    out.clauses.push_back({-static_cast<Literal>(e.u + 1), -static_cast<Literal>(e.v + 1)});
  }
  return out;
}

}  // namespace countforge::isetred
