#include "countforge/satchain.hpp"

#include <cstdlib>
#include <string>

#include "countforge/error.hpp"
#include "countforge/inflate.hpp"

namespace countforge::satchain {

Cnf plant_assignment(const Cnf& f) {
  f.validate();
  Cnf out{f.num_vars + 1, {}};
  const Literal y = f.num_vars + 1;
  for (const auto& c : f.clauses) {
    if (c.size() > 3) throw InvalidArgument("planting expects clauses of width at most three");
    const Literal a = ++out.num_vars;
    const Literal b = ++out.num_vars;
    if (c.empty()) {
      out.clauses.push_back({-a});
      out.clauses.push_back({-b});
    } else {
      Clause p = c;
      while (p.size() < 3) p.push_back(p.back());
      const Literal l1 = p[0], l2 = p[1], l3 = p[2];
      out.clauses.push_back({-b, l2, l3});
      out.clauses.push_back({b, -l2});
      out.clauses.push_back({b, -l3});
      out.clauses.push_back({-a, l1, b});
      out.clauses.push_back({a, -l1});
      out.clauses.push_back({a, -b});
    }
    out.clauses.push_back({-y, a});
  }
  for (Literal x = 1; x <= f.num_vars; ++x) out.clauses.push_back({y, x});
  return out;
}

NaeInstance sat_to_nae(const Cnf& f) {
  const Cnf planted = plant_assignment(f);
  Cnf rewritten{planted.num_vars, {}};
  for (const auto& c : planted.clauses) {
    if (c.size() != 3) {
      rewritten.clauses.push_back(c);
      continue;
    }
    const Literal x = ++rewritten.num_vars;
    rewritten.clauses.push_back({x, -c[0]});
    rewritten.clauses.push_back({x, -c[1]});
    rewritten.clauses.push_back({-x, c[0], c[1]});
    rewritten.clauses.push_back({x, c[2]});
  }
  const Literal z = ++rewritten.num_vars;
  for (auto& c : rewritten.clauses) {
    if (c.size() < 3) {
      c.push_back(z);
      while (c.size() < 3) c.push_back(c.back());
    }
  }
  return {std::move(rewritten), 2};
}

MaxcutInstance nae_to_maxcut(const Cnf& f) {
  f.validate();
  const std::size_t n = static_cast<std::size_t>(f.num_vars);
  MaxcutInstance out{Multigraph(2 * n), 2 * f.clauses.size() + n};
  auto vertex = [](Literal l) -> VertexId {
    return 2 * (static_cast<VertexId>(std::abs(l)) - 1) + (l < 0 ? 1 : 0);
  };
  for (std::size_t v = 0; v < n; ++v) out.graph.add_edge(2 * v, 2 * v + 1);
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const Clause& c = f.clauses[j];
    if (c.size() != 3) throw InvalidArgument("clause " + std::to_string(j) + " does not have three literals");
    out.graph.add_edge(vertex(c[0]), vertex(c[1]));
    out.graph.add_edge(vertex(c[1]), vertex(c[2]));
    out.graph.add_edge(vertex(c[0]), vertex(c[2]));
  }
  return out;
}

Multigraph maxcut_to_simple(const Multigraph& g) { return inflate::stretch(g, 3); }

}  // namespace countforge::satchain
