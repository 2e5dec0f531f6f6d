#ifndef COUNTFORGE_STRUCTURES_HPP
#define COUNTFORGE_STRUCTURES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "countforge/exactmath.hpp"

namespace countforge {

using VertexId = std::size_t;
using EdgeId = std::size_t;
using EdgeSet = std::vector<EdgeId>;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph on vertices 0..n-1. Loops and parallel edges are
// kept as distinct edges, told apart only by their dense EdgeId.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count) : n_(vertex_count) {}
  Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

  VertexId add_vertex() { return n_++; }
  EdgeId add_edge(VertexId u, VertexId v);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool has_loops() const noexcept;
  // No loops and no parallel edges.
  bool is_simple() const;
  // Edge multiplicity counts towards the degree; a loop adds two.
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// Per-EdgeId weight.
using WeightMap = std::vector<Rational>;
WeightMap uniform_weights(const Multigraph& g, const Rational& w);

struct Arc {
  VertexId from = 0;
  VertexId to = 0;
  Rational weight = 1;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Arc-weighted directed multigraph; self-loops and parallel arcs allowed.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t vertex_count) : n_(vertex_count) {}

  VertexId add_vertex() { return n_++; }
  std::size_t add_arc(VertexId from, VertexId to, const Rational& weight = 1);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  Arc& arc(std::size_t i) { return arcs_.at(i); }
  const Arc& arc(std::size_t i) const { return arcs_.at(i); }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
};

// Dense square-or-not matrix of rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Entry (u,v) is the sum of the weights of all arcs u->v.
RationalMatrix to_matrix(const Digraph& d);

// Literal: nonzero signed 1-based variable index.
using Literal = int;
using Clause = std::vector<Literal>;

struct Cnf {
  int num_vars = 0;
  std::vector<Clause> clauses;

  // Throws InvalidArgument if a literal is zero or out of range.
  void validate() const;
  std::size_t max_width() const;
  friend bool operator==(const Cnf&, const Cnf&) = default;
};

struct TwoTerminalGraph {
  Multigraph graph;
  VertexId terminal_left = 0;
  VertexId terminal_right = 1;

  void validate() const;
};

struct TerminalTriple {
  Multigraph graph;
  VertexId t1 = 0;
  VertexId t2 = 1;
  VertexId t3 = 2;

  void validate() const;
};

enum class SurgeryKind { remove, contract };

struct SurgeryResult {
  Multigraph graph;
  // old EdgeId -> new EdgeId; empty for the removed edge.
  std::vector<std::optional<EdgeId>> edge_map;
  // old VertexId -> new VertexId.
  std::vector<VertexId> vertex_map;
};

// Deletes or contracts edge e. Contracting a loop deletes it. Contraction
// keeps the smaller endpoint, removes the larger one and renumbers the
// vertices above it. The input is never modified.
SurgeryResult edge_surgery(const Multigraph& g, EdgeId e, SurgeryKind kind);

// k(A): connected components of (V, A), isolated vertices included.
std::size_t component_count(const Multigraph& g, std::span<const EdgeId> subset);
std::size_t component_count(const Multigraph& g);

bool is_connected(const Multigraph& g);
// True when removing e increases the number of components. Loops never are.
bool is_bridge(const Multigraph& g, EdgeId e);

// Union-find with undo, used by every subset enumerator.
class RollbackDisjointSets {
 public:
  explicit RollbackDisjointSets(std::size_t n);
  std::size_t find(std::size_t x) const;
  // Returns true if two components were merged.
  bool unite(std::size_t a, std::size_t b);
  void rollback();  // undoes the most recent successful unite
  std::size_t components() const noexcept { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
  std::size_t components_;
};

}  // namespace countforge

#endif  // COUNTFORGE_STRUCTURES_HPP
