#include "countforge/structures.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>

#include "countforge/error.hpp"

namespace countforge {

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  edges_.reserve(edges.size());
  for (const auto& e : edges) add_edge(e.u, e.v);
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
  if (u >= n_ || v >= n_)
    throw InvalidArgument("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
  edges_.push_back({std::min(u, v), std::max(u, v)});
  return edges_.size() - 1;
}

bool Multigraph::has_loops() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Multigraph::is_simple() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : edges_) {
    if (e.is_loop() || !seen.insert({e.u, e.v}).second) return false;
  }
  return true;
}

std::vector<std::size_t> Multigraph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

WeightMap uniform_weights(const Multigraph& g, const Rational& w) { return WeightMap(g.edge_count(), w); }

std::size_t Digraph::add_arc(VertexId from, VertexId to, const Rational& weight) {
  if (from >= n_ || to >= n_) throw InvalidArgument("arc endpoint out of range");
  arcs_.push_back({from, to, weight});
  return arcs_.size() - 1;
}

RationalMatrix to_matrix(const Digraph& d) {
  RationalMatrix m(d.vertex_count(), d.vertex_count());
  for (const auto& a : d.arcs()) m(a.from, a.to) += a.weight;
  return m;
}

void Cnf::validate() const {
  if (num_vars < 0) throw InvalidArgument("negative variable count");
  for (const auto& c : clauses)
    for (Literal l : c)
      if (l == 0 || std::abs(l) > num_vars) throw InvalidArgument("literal " + std::to_string(l) + " out of range");
}

std::size_t Cnf::max_width() const {
  std::size_t w = 0;
  for (const auto& c : clauses) w = std::max(w, c.size());
  return w;
}

void TwoTerminalGraph::validate() const {
  if (terminal_left == terminal_right) throw InvalidArgument("terminals must be distinct");
  if (terminal_left >= graph.vertex_count() || terminal_right >= graph.vertex_count())
    throw InvalidArgument("terminal out of range");
}

void TerminalTriple::validate() const {
  const auto n = graph.vertex_count();
  if (t1 >= n || t2 >= n || t3 >= n) throw InvalidArgument("terminal out of range");
  if (t1 == t2 || t2 == t3 || t1 == t3) throw InvalidArgument("terminals must be distinct");
}

SurgeryResult edge_surgery(const Multigraph& g, EdgeId e, SurgeryKind kind) {
  if (e >= g.edge_count()) throw InvalidArgument("invalid EdgeId " + std::to_string(e));
  const Edge removed = g.edge(e);
  const bool contract = kind == SurgeryKind::contract && !removed.is_loop();

  SurgeryResult out;
  out.vertex_map.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!contract) {
      out.vertex_map[v] = v;
    } else if (v == removed.v) {
      out.vertex_map[v] = removed.u;
    } else {
      out.vertex_map[v] = v > removed.v ? v - 1 : v;
    }
  }
  out.graph = Multigraph(contract ? g.vertex_count() - 1 : g.vertex_count());
  out.edge_map.resize(g.edge_count());
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    if (i == e) continue;
    const auto& edge = g.edge(i);
    out.edge_map[i] = out.graph.add_edge(out.vertex_map[edge.u], out.vertex_map[edge.v]);
  }
  return out;
}

std::size_t component_count(const Multigraph& g, std::span<const EdgeId> subset) {
  RollbackDisjointSets dsu(g.vertex_count());
  for (EdgeId e : subset) {
    const auto& edge = g.edge(e);
    dsu.unite(edge.u, edge.v);
  }
  return dsu.components();
}

std::size_t component_count(const Multigraph& g) {
  RollbackDisjointSets dsu(g.vertex_count());
  for (const auto& edge : g.edges()) dsu.unite(edge.u, edge.v);
  return dsu.components();
}

bool is_connected(const Multigraph& g) { return component_count(g) <= 1; }

bool is_bridge(const Multigraph& g, EdgeId e) {
  if (e >= g.edge_count()) throw InvalidArgument("invalid EdgeId " + std::to_string(e));
  if (g.edge(e).is_loop()) return false;
  RollbackDisjointSets dsu(g.vertex_count());
  for (EdgeId i = 0; i < g.edge_count(); ++i)
    if (i != e) dsu.unite(g.edge(i).u, g.edge(i).v);
  return dsu.find(g.edge(e).u) != dsu.find(g.edge(e).v);
}

RollbackDisjointSets::RollbackDisjointSets(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
}

std::size_t RollbackDisjointSets::find(std::size_t x) const {
  while (parent_[x] != x) x = parent_[x];
  return x;
}

bool RollbackDisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  history_.push_back(b);
  --components_;
  return true;
}

void RollbackDisjointSets::rollback() {
  const std::size_t b = history_.back();
  history_.pop_back();
  const std::size_t a = parent_[b];
  size_[a] -= size_[b];
  parent_[b] = b;
  ++components_;
}

}  // namespace countforge
