#include "countforge/pipelines.hpp"

#include <bit>
#include <optional>
#include <set>
#include <string>

#include "countforge/error.hpp"
#include "countforge/inflate.hpp"

namespace countforge::pipelines {

namespace {

long as_long(std::size_t v) { return static_cast<long>(v); }

Integer to_integer(const Rational& r, const char* what) {
  if (!is_integer(r)) throw ConstructionError(std::string(what) + " is not an integer: " + to_string(r));
  return r.get_num();
}

// Left terminal 0, right terminal 1, middle vertex 2; each side a k-bundle.
TwoTerminalGraph two_path_of_bundles(std::size_t k) {
  TwoTerminalGraph h{Multigraph(3), 0, 1};
  for (std::size_t i = 0; i < k; ++i) h.graph.add_edge(0, 2);
  for (std::size_t i = 0; i < k; ++i) h.graph.add_edge(2, 1);
  return h;
}

// k internally disjoint 2-paths between the terminals.
TwoTerminalGraph parallel_two_paths(std::size_t k) {
  TwoTerminalGraph h{Multigraph(2), 0, 1};
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId mid = h.graph.add_vertex();
    h.graph.add_edge(0, mid);
    h.graph.add_edge(mid, 1);
  }
  return h;
}

constexpr std::size_t kMaxPreprocessingWidth = 64;

}  // namespace

Poly coeffs_by_thickening(const Multigraph& g, const Rational& q, const Rational& w, const EvalOracle& oracle) {
  if (w == 0 || w == -1 || w == -2) throw UnsupportedPoint("thickening needs w not in {0, -1, -2}");
  if (q == 1) throw UnsupportedPoint("thickening pipeline excludes q = 1");
  const std::size_t m = g.edge_count();
  std::vector<InterpolationPoint> points;
  for (std::size_t k = 1; k <= m + 1; ++k) {
    const Rational wk = pow(1 + w, as_long(k)) - 1;
    points.emplace_back(wk, oracle(inflate::thicken(g, k)));
  }
  return lagrange_interpolate(points);
}

Poly coeffs_by_theta(const Multigraph& g, const Rational& q, const Rational& w, const EvalOracle& oracle) {
  if (q == 0 || q == 1) throw UnsupportedPoint("theta pipeline needs q not in {0, 1}");
  if (w == 0) throw UnsupportedPoint("theta pipeline needs w != 0");
  if ((q == 4 && w == -2) || (q == 2 && w == -1) || (q == 2 && w == -2)) {
    throw UnsupportedPoint("theta pipeline excludes (q, w) = " + to_string(q) + ", " + to_string(w));
  }
  const std::size_t m = g.edge_count();
  Rational effective = w;
  Rational pre_factor = 1;
  std::optional<TwoTerminalGraph> pre;
  if (q == -w || q == -2 * w) {
    for (std::size_t k = 1; k <= kMaxPreprocessingWidth && !pre; ++k) {
      const Rational bundle = pow(1 + w, as_long(k)) - 1;
      const Rational denom = q + 2 * bundle;
      if (bundle == 0 || denom == 0) continue;
      const Rational shifted = bundle * bundle / denom;
      if (shifted == 0 || q == -shifted || q == -2 * shifted) continue;
      effective = shifted;
      pre_factor = denom;
      pre = two_path_of_bundles(k);
    }
    if (!pre) throw UnsupportedPoint("no bundle width leaves the degenerate set");
  }
  std::vector<InterpolationPoint> points;
  for (const auto& spec : inflate::generate_theta_sets(q, effective, m)) {
    const inflate::ShiftResult shift = inflate::theta_shift(q, effective, spec);
    Multigraph inflated = inflate::inflate(g, inflate::theta_graph(spec));
    const std::size_t inflated_edges = inflated.edge_count();
    if (pre) inflated = inflate::inflate(inflated, *pre);
    const Rational value = oracle(inflated);
    const Rational scale = pow(shift.per_edge_factor, as_long(m)) * pow(pre_factor, as_long(inflated_edges));
    points.emplace_back(shift.shifted_weight, value / scale);
  }
  return lagrange_interpolate(points);
}

Poly coeffs_by_wump(const Multigraph& g, const Rational& w, const EvalOracle& oracle) {
  if (w == 0) throw UnsupportedPoint("wump pipeline needs w != 0");
  const std::size_t m = g.edge_count();
  Rational effective = w;
  Rational pre_factor = 1;
  std::optional<TwoTerminalGraph> pre;
  if (w <= -1) {
    // Smallest k > |w|, so that w/k lies in (-1, 0).
    const Integer k = Integer(mpz_class(-w.get_num()) / w.get_den()) + 1;
    const std::size_t kk = k.get_ui();
    effective = w / Rational(k);
    pre_factor = Rational(k) * pow(w, as_long(kk) - 1);
    pre = inflate::path_graph(kk);
  } else if (w > 0 && w <= 9) {
    std::size_t k = 1;
    while (!(pow(1 + w / 2, as_long(k)) - 1 > 9)) ++k;
    effective = pow(1 + w / 2, as_long(k)) - 1;
    pre_factor = pow(2 * w, as_long(k));
    pre = parallel_two_paths(k);
  }
  std::vector<InterpolationPoint> points;
  for (const auto& spec : inflate::generate_wump_sequences(effective, m)) {
    const inflate::ShiftResult shift = inflate::wump_shift(effective, spec);
    Multigraph inflated = inflate::inflate(g, inflate::wump_graph(spec));
    const std::size_t inflated_edges = inflated.edge_count();
    if (pre) inflated = inflate::inflate(inflated, *pre);
    const Rational value = oracle(inflated);
    const Rational scale = pow(shift.per_edge_factor, as_long(m)) * pow(pre_factor, as_long(inflated_edges));
    points.emplace_back(shift.shifted_weight, value / scale);
  }
  return lagrange_interpolate(points);
}

MaxcutFromIsing maxcut_from_ising(const Multigraph& g) {
  const std::size_t m = g.edge_count();
  const Poly ising = oracles::z_subset_sum_poly(g, 2, {}, oracles::ZVariant::z);
  // Z(G;2,w) = sum_C (1+w)^{m - |cut(C)|}.
  const Poly rebased = shift_substitute(ising, -1);
  MaxcutFromIsing out;
  for (std::size_t c = 0; c <= m; ++c) out.distribution.push_back(to_integer(rebased.coefficient(m - c), "cut count"));
  for (std::size_t c = m + 1; c-- > 0;) {
    if (out.distribution[c] != 0) {
      out.maxcut = {c, out.distribution[c]};
      break;
    }
  }
  return out;
}

Integer tmc3_from_z0(const TerminalTriple& t, const Rational& q) {
  if (q == 1 || q == 2) throw UnsupportedPoint("3-terminal cut extraction needs q not in {1, 2}");
  t.validate();
  if (!is_connected(t.graph)) throw InvalidArgument("3-terminal cut extraction needs a connected graph");
  Multigraph g = t.graph;
  const std::size_t m = g.edge_count();
  const EdgeSet triangle{g.add_edge(t.t1, t.t2), g.add_edge(t.t2, t.t3), g.add_edge(t.t1, t.t3)};
  const Poly p = oracles::z_subset_sum_poly(g, q, triangle, oracles::ZVariant::z0);
  const Rational big_q = (q - 1) * (q - 2);
  // Only edge sets B keeping the terminals apart survive, each contributing
  // Q q^{k(B)-3} w^{|B|}; the largest such B are complements of minimum cuts
  // and leave exactly three components.
  const int top = p.degree();
  if (top < 0 || static_cast<std::size_t>(top) > m) throw ConstructionError("unexpected polynomial degree");
  return to_integer(p.coefficient(static_cast<std::size_t>(top)) / big_q, "minimum cut count");
}

Poly eliminate_T_edges(const Multigraph& g, const EdgeSet& minus_one, const Rational& q, const WeightedOracle& oracle) {
  if (minus_one.size() != 3 || std::set<EdgeId>(minus_one.begin(), minus_one.end()).size() != 3) {
    throw InvalidArgument("expected three distinct weight -1 edges");
  }
  for (EdgeId e : minus_one) {
    if (e >= g.edge_count()) throw InvalidArgument("edge id out of range");
  }
  // Every T-edge must stay a non-bridge whatever happens to the other two.
  {
    RollbackDisjointSets dsu(g.vertex_count());
    std::set<EdgeId> in_t(minus_one.begin(), minus_one.end());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!in_t.count(e)) dsu.unite(g.edge(e).u, g.edge(e).v);
    }
    for (EdgeId e : minus_one) {
      if (dsu.find(g.edge(e).u) != dsu.find(g.edge(e).v)) {
        throw InvalidArgument("edge " + std::to_string(e) + " of T is a bridge once T is removed");
      }
    }
  }
  const std::size_t rest = g.edge_count() - 3;
  std::vector<Multigraph> stretched;
  for (unsigned mask = 0; mask < 8; ++mask) {
    Multigraph cur = g;
    EdgeSet ids = minus_one;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto kind = (mask >> i) & 1 ? SurgeryKind::contract : SurgeryKind::remove;
      SurgeryResult r = edge_surgery(cur, ids[i], kind);
      for (std::size_t j = i + 1; j < 3; ++j) ids[j] = *r.edge_map[ids[j]];
      cur = std::move(r.graph);
    }
    stretched.push_back(inflate::stretch(cur, 3));
  }
  std::vector<InterpolationPoint> points;
  for (long node = 1; points.size() < rest + 1; ++node) {
    const Rational wp = node;
    Rational w;
    Rational f;
    if (q == 0) {
      w = wp / 3;
      f = 3 * wp * wp;
    } else {
      if (q == -2 * wp) continue;
      const inflate::ShiftResult s = inflate::theta_shift(q, wp, {3});
      w = s.shifted_weight;
      f = s.per_edge_factor;
    }
    Rational total = 0;
    for (unsigned mask = 0; mask < 8; ++mask) {
      const Rational v = oracle(stretched[mask], wp);
      if (std::popcount(mask) % 2 == 0) {
        total += v;
      } else {
        total -= v;
      }
    }
    points.emplace_back(w, total / pow(f, as_long(rest)));
  }
  return lagrange_interpolate(points);
}

Multigraph join_clique(const Multigraph& g, std::size_t i) {
  Multigraph out = g;
  for (std::size_t k = 0; k < i; ++k) {
    const VertexId v = out.add_vertex();
    for (VertexId u = 0; u < v; ++u) out.add_edge(u, v);
  }
  return out;
}

Rational chromatic3_via_linial(const Multigraph& g, const Rational& q, const ChromaticOracle& oracle) {
  if (q == 0 || q == 1 || q == 2) throw UnsupportedPoint("Linial route needs q not in {0, 1, 2}");
  if (is_integer(q) && q >= 3) {
    const unsigned i = static_cast<unsigned>(Integer(q.get_num() - 3).get_ui());
    return oracle(join_clique(g, i)) / falling_factorial(q, i);
  }
  std::vector<InterpolationPoint> points;
  for (std::size_t i = 0; i <= g.vertex_count(); ++i) {
    const Rational value = oracle(join_clique(g, i)) / falling_factorial(q, static_cast<unsigned>(i));
    points.emplace_back(q - as_long(i), value);
  }
  return lagrange_interpolate(points)(3);
}

Rational reliability_from_tutte(const Multigraph& g, const Rational& p) {
  if (!(p > 0 && p < 1)) throw InvalidArgument("reliability conversion needs 0 < p < 1");
  if (!is_connected(g)) throw InvalidArgument("reliability conversion needs a connected graph");
  const long m = as_long(g.edge_count());
  const long n = as_long(g.vertex_count());
  return pow(p, m - n + 1) * pow(1 - p, n - 1) * oracles::tutte_subset_sum(g, 1, 1 / p);
}

}  // namespace countforge::pipelines
