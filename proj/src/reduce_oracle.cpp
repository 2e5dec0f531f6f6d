#include "countforge/reduce_oracle.hpp"

#include <deque>
#include <unordered_map>

#include "countforge/error.hpp"

namespace countforge::reduce {

namespace {

struct WorkEdge {
  VertexId u, v;
  Rational w;
  bool alive = true;
};

class Reducer {
 public:
  Reducer(const Multigraph& g, const Rational& q, const WeightMap& w, oracles::ZVariant variant)
      : q_(q), variant_(variant), vertex_alive_(g.vertex_count(), 1), incident_(g.vertex_count()) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) add_edge(g.edge(e).u, g.edge(e).v, w[e]);
  }

  Rational run(std::size_t max_residual_edges) {
    std::deque<VertexId> queue;
    std::vector<char> queued(incident_.size(), 1);
    for (VertexId v = 0; v < incident_.size(); ++v) queue.push_back(v);
    auto touch = [&](VertexId v) {
      if (!queued[v] && vertex_alive_[v]) {
        queued[v] = 1;
        queue.push_back(v);
      }
    };
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      queued[v] = 0;
      if (!vertex_alive_[v]) continue;
      compact(v);
      // Loops at v.
      for (EdgeId e : incident_[v]) {
        WorkEdge& we = edges_[e];
        if (we.alive && we.u == we.v) {
          factor_ *= 1 + we.w;
          we.alive = false;
        }
      }
      compact(v);
      // Parallel edges at v.
      std::unordered_map<VertexId, EdgeId> by_neighbour;
      for (EdgeId e : incident_[v]) {
        WorkEdge& we = edges_[e];
        if (!we.alive) continue;
        const VertexId other = we.u == v ? we.v : we.u;
        auto [it, inserted] = by_neighbour.emplace(other, e);
        if (!inserted) {
          WorkEdge& keep = edges_[it->second];
          keep.w = (1 + keep.w) * (1 + we.w) - 1;
          we.alive = false;
          touch(other);
        }
      }
      compact(v);
      const auto& inc = incident_[v];
      if (inc.empty()) {
        if (variant_ == oracles::ZVariant::z) factor_ *= q_;
        vertex_alive_[v] = 0;
      } else if (inc.size() == 1) {
        WorkEdge& we = edges_[inc[0]];
        const VertexId other = we.u == v ? we.v : we.u;
        factor_ *= q_ + we.w;
        we.alive = false;
        vertex_alive_[v] = 0;
        touch(other);
      } else if (inc.size() == 2) {
        WorkEdge& e1 = edges_[inc[0]];
        WorkEdge& e2 = edges_[inc[1]];
        const Rational denom = q_ + e1.w + e2.w;
        if (denom != 0) {
          const VertexId a = e1.u == v ? e1.v : e1.u;
          const VertexId b = e2.u == v ? e2.v : e2.u;
          factor_ *= denom;
          const Rational merged = e1.w * e2.w / denom;
          e1.alive = false;
          e2.alive = false;
          vertex_alive_[v] = 0;
          add_edge(a, b, merged);
          touch(a);
          touch(b);
        }
      }
    }
    return factor_ * residual(max_residual_edges);
  }

 private:
  void add_edge(VertexId u, VertexId v, const Rational& w) {
    const EdgeId id = edges_.size();
    edges_.push_back({u, v, w, true});
    incident_[u].push_back(id);
    if (v != u) incident_[v].push_back(id);
  }

  void compact(VertexId v) {
    auto& inc = incident_[v];
    std::erase_if(inc, [&](EdgeId e) { return !edges_[e].alive; });
  }

  Rational residual(std::size_t max_residual_edges) const {
    std::vector<VertexId> index(incident_.size(), 0);
    Multigraph g;
    for (VertexId v = 0; v < incident_.size(); ++v) {
      if (vertex_alive_[v]) index[v] = g.add_vertex();
    }
    WeightMap w;
    for (const auto& e : edges_) {
      if (!e.alive) continue;
      g.add_edge(index[e.u], index[e.v]);
      w.push_back(e.w);
    }
    return oracles::z_subset_sum(g, q_, w, variant_, max_residual_edges);
  }

  Rational q_;
  oracles::ZVariant variant_;
  Rational factor_ = 1;
  std::vector<char> vertex_alive_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<WorkEdge> edges_;
};

}  // namespace

Rational z_reduced(const Multigraph& g, const Rational& q, const WeightMap& w, oracles::ZVariant variant,
                   std::size_t max_residual_edges) {
  if (w.size() != g.edge_count()) throw InvalidArgument("weight map size does not match the edge count");
  return Reducer(g, q, w, variant).run(max_residual_edges);
}

Rational z_reduced(const Multigraph& g, const Rational& q, const Rational& w, oracles::ZVariant variant,
                   std::size_t max_residual_edges) {
  return z_reduced(g, q, uniform_weights(g, w), variant, max_residual_edges);
}

}  // namespace countforge::reduce
