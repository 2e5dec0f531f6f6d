#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <vector>

#include "countforge/error.hpp"
#include "countforge/inflate.hpp"
#include "countforge/isetred.hpp"
#include "countforge/oracles.hpp"
#include "countforge/permred.hpp"
#include "countforge/pipelines.hpp"
#include "countforge/reduce_oracle.hpp"
#include "countforge/satchain.hpp"
#include "countforge/textio.hpp"
#include "verify_internal.hpp"

namespace countforge::verify::detail {
namespace {

using oracles::ZVariant;
using namespace textio;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

WeightMap random_weights(Rng& rng, const Multigraph& g) {
  WeightMap w;
  for (std::size_t e = 0; e < g.edge_count(); ++e) w.push_back(rng.rational(4, 3));
  return w;
}

Rational probability(Rng& rng) {
  const std::int64_t den = rng.uniform(2, 9);
  Rational p(static_cast<long>(rng.uniform(1, den - 1)), static_cast<long>(den));
  p.canonicalize();
  return p;
}

std::string graph_text(const Multigraph& g) { return serialize(g); }

// Every multigraph on three vertices with at most three edges, as a
// multiset of the six vertex pairs (loops included).
std::vector<Multigraph> small_graph_corpus() {
  const std::vector<Edge> pairs = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}};
  std::vector<Multigraph> out;
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    std::vector<Edge> edges;
    for (auto i : chosen) edges.push_back(pairs[i]);
    out.emplace_back(3, edges);
    if (chosen.size() == 3) return;
    for (std::size_t i = from; i < pairs.size(); ++i) {
      chosen.push_back(i);
      self(self, i);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// n <= 3 variables, m <= 2 clauses on three distinct variables, clauses as
// a multiset of the eight sign patterns over (x1, x2, x3).
std::vector<Cnf> small_sat_corpus() {
  std::vector<Cnf> out;
  for (int n = 0; n <= 3; ++n) out.push_back(Cnf{n, {}});
  auto clause = [](int mask) {
    Clause c;
    for (int v = 1; v <= 3; ++v) c.push_back((mask >> (v - 1)) & 1 ? -v : v);
    return c;
  };
  for (int a = 0; a < 8; ++a) out.push_back(Cnf{3, {clause(a)}});
  for (int a = 0; a < 8; ++a)
    for (int b = a; b < 8; ++b) out.push_back(Cnf{3, {clause(a), clause(b)}});
  return out;
}

// Single clauses of width 1..3 over at most two variables (repeats allowed),
// the zero-clause formulas, and one clause on three distinct variables in
// every sign pattern.
std::vector<Cnf> perm_corpus() {
  std::vector<Cnf> out;
  for (int n = 0; n <= 3; ++n) out.push_back(Cnf{n, {}});
  for (int n = 1; n <= 2; ++n) {
    std::vector<Literal> lits;
    for (int v = 1; v <= n; ++v) {
      lits.push_back(v);
      lits.push_back(-v);
    }
    for (std::size_t width = 1; width <= 3; ++width) {
      std::vector<std::size_t> idx(width, 0);
      while (true) {
        Clause c;
        for (auto i : idx) c.push_back(lits[i]);
        out.push_back(Cnf{n, {c}});
        std::size_t k = 0;
        while (k < width && ++idx[k] == lits.size()) idx[k++] = 0;
        if (k == width) break;
      }
    }
  }
  for (const auto& f : small_sat_corpus())
    if (f.clauses.size() == 1) out.push_back(f);
  return out;
}

Rational unbalanced_expectation(const Cnf& f) {
  const Cnf padded = permred::pad_to_width3(f);
  Rational total = 0;
  for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << f.num_vars); ++sigma) {
    long falses = 0;
    long trues = 0;
    bool sat = true;
    for (const auto& c : padded.clauses) {
      bool any = false;
      for (Literal l : c) {
        const bool value = ((sigma >> (std::abs(l) - 1)) & 1) != 0;
        const bool lit_true = l > 0 ? value : !value;
        any = any || lit_true;
        (lit_true ? trues : falses) += 1;
      }
      sat = sat && any;
    }
    if (sat) total += pow(Rational(-1), falses) * pow(Rational(2), trues);
  }
  return total;
}

// ---------------------------------------------------------------- exactmath

void suite_exactmath(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(200); ++t) {
    ctx.guard("exactmath trial " + std::to_string(t), [&] {
      const std::size_t deg = pick(ctx.rng, 0, 8);
      std::vector<Rational> coeffs;
      for (std::size_t i = 0; i <= deg; ++i) coeffs.push_back(ctx.rng.rational(9, 5));
      const Poly p(coeffs);
      std::vector<InterpolationPoint> points;
      std::set<std::string> seen;
      while (points.size() <= deg) {
        const Rational x = ctx.rng.rational(20, 7);
        if (seen.insert(to_string(x)).second) points.emplace_back(x, p(x));
      }
      ctx.expect_eq(p, lagrange_interpolate(points), "interpolation recovers " + to_string(p));
      const Rational a = ctx.rng.rational(5, 3);
      const Rational x = ctx.rng.rational(5, 3);
      ctx.expect_eq(p(x + a), shift_substitute(p, a)(x), "shift_substitute at " + to_string(x));
      const unsigned count = static_cast<unsigned>(pick(ctx.rng, 0, 5));
      Rational product = 1;
      for (unsigned i = 0; i < count; ++i) product *= a - i;
      ctx.expect_eq(product, falling_factorial(a, count), "falling factorial of " + to_string(a));
    });
  }
  ctx.expect_throw<DuplicateNode>("duplicate interpolation node", [] {
    const std::vector<InterpolationPoint> pts = {{1, 2}, {1, 3}};
    (void)lagrange_interpolate(pts);
  });
  ctx.expect_throw<InvalidArgument>("malformed rational", [] { (void)parse_rational("1/0"); });
}

// --------------------------------------------------------------- structures

void suite_structures(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(100); ++t) {
    const std::size_t n = pick(ctx.rng, 1, ctx.max_n(8));
    const Multigraph g = random_graph(ctx.rng, n, pick(ctx.rng, 0, ctx.max_m(12)), true, true);
    const std::string name = graph_text(g);
    ctx.guard("structures on " + name, [&] {
      const Multigraph copy = g;
      const std::size_t m = g.edge_count();
      const std::size_t k_all = component_count(g);
      ctx.expect_eq(n, component_count(g, EdgeSet{}), "k(empty) = n for " + name);
      for (int s = 0; s < 5; ++s) {
        EdgeSet subset;
        for (EdgeId e = 0; e < m; ++e)
          if (ctx.rng.coin()) subset.push_back(e);
        const std::size_t k = component_count(g, subset);
        ctx.check(k_all <= k && k <= k_all + (m - subset.size()), "k(E) <= k(A) <= k(E) + |E \\ A| on " + name,
                  "bounds", std::to_string(k));
      }
      if (m == 0) return;
      const EdgeId e = pick(ctx.rng, 0, m - 1);
      const SurgeryResult removed = edge_surgery(g, e, SurgeryKind::remove);
      ctx.expect_eq(m - 1, removed.graph.edge_count(), "deletion drops one edge");
      ctx.expect_eq(component_count(removed.graph) > k_all, is_bridge(g, e), "bridge test of edge " + std::to_string(e));
      const SurgeryResult contracted = edge_surgery(g, e, SurgeryKind::contract);
      const std::size_t expect_n = g.edge(e).is_loop() ? n : n - 1;
      ctx.expect_eq(expect_n, contracted.graph.vertex_count(), "contraction vertex count");
      ctx.expect_eq(k_all, component_count(contracted.graph), "contraction keeps components");
      ctx.check(copy == g, "surgery leaves input unchanged", name, graph_text(g));
    });
  }
}

// ------------------------------------------------------------------ oracles

void suite_permanent_agreement(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(200); ++t) {
    const std::size_t n = pick(ctx.rng, 1, ctx.max_n(7));
    RationalMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = Rational(static_cast<long>(ctx.rng.uniform(-1, 1)));
    const std::string name = serialize(a);
    ctx.guard("permanent of " + name, [&] {
      const Rational naive = oracles::permanent(a, oracles::PermanentMethod::naive);
      ctx.expect_eq(naive, oracles::permanent(a, oracles::PermanentMethod::ryser), "ryser on " + name);
      ctx.expect_eq(naive, oracles::permanent(a, oracles::PermanentMethod::cycle_cover), "cycle cover on " + name);
      Digraph d(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (a(r, c) != 0) d.add_arc(r, c, a(r, c));
      ctx.expect_eq(naive, oracles::permanent(d, oracles::PermanentMethod::cycle_cover), "digraph form of " + name);
    });
  }
}

void suite_z_proxy(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(100); ++t) {
    const Multigraph g = random_graph(ctx.rng, pick(ctx.rng, 1, ctx.max_n(6)), pick(ctx.rng, 0, ctx.max_m(10)), true, true);
    const Rational q = ctx.rng.nonzero_rational(4, 3);
    const WeightMap w = random_weights(ctx.rng, g);
    ctx.guard("Z = q^k Z0 on " + graph_text(g), [&] {
      const Rational z = oracles::z_subset_sum(g, q, w, ZVariant::z);
      const Rational z0 = oracles::z_subset_sum(g, q, w, ZVariant::z0);
      ctx.expect_eq(z, pow(q, static_cast<long>(component_count(g))) * z0, "Z = q^k(E) Z0 at q=" + to_string(q));
    });
  }
}

void suite_tutte_conversion(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(100); ++t) {
    const Multigraph g = random_graph(ctx.rng, pick(ctx.rng, 1, ctx.max_n(6)), pick(ctx.rng, 0, ctx.max_m(10)), true, true);
    Rational x = ctx.rng.rational(4, 3);
    Rational y = ctx.rng.rational(4, 3);
    if (x == 1) x = 2;
    if (y == 1) y = -1;
    ctx.guard("Tutte conversion on " + graph_text(g), [&] {
      ctx.expect_eq(oracles::tutte_subset_sum(g, x, y), oracles::convert_z_tutte(g, x, y),
                    "T(G;" + to_string(x) + "," + to_string(y) + ")");
    });
  }
}

void suite_delcon(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(100); ++t) {
    const Multigraph g = random_graph(ctx.rng, pick(ctx.rng, 1, ctx.max_n(6)), pick(ctx.rng, 0, ctx.max_m(10)), true, true);
    const Rational q = ctx.rng.rational(3, 2);
    const WeightMap w = random_weights(ctx.rng, g);
    ctx.guard("deletion-contraction on " + graph_text(g), [&] {
      for (ZVariant variant : {ZVariant::z, ZVariant::z0}) {
        ctx.expect_eq(oracles::z_subset_sum(g, q, w, variant), oracles::z_delcon(g, q, w, variant),
                      std::string(variant == ZVariant::z ? "Z" : "Z0") + " at q=" + to_string(q));
      }
    });
  }
}

void suite_reliability_bridge(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(50); ++t) {
    const std::size_t n = pick(ctx.rng, 1, ctx.max_n(6));
    const Multigraph g = random_connected_simple_graph(ctx.rng, n, pick(ctx.rng, n - 1, ctx.max_m(9)));
    const Rational p = probability(ctx.rng);
    ctx.guard("reliability of " + graph_text(g), [&] {
      const Rational brute = oracles::reliability_bruteforce(g, p);
      const Rational via_z =
          pow(p, static_cast<long>(g.edge_count())) * oracles::z_subset_sum(g, 0, (1 - p) / p, ZVariant::z0);
      ctx.expect_eq(brute, via_z, "R = p^m Z0(G;0,(1-p)/p) at p=" + to_string(p));
      ctx.expect_eq(brute, pipelines::reliability_from_tutte(g, p), "R through T(G;1,1/p)");
    });
  }
}

void suite_chromatic_tutte(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(50); ++t) {
    const Multigraph g = random_graph(ctx.rng, pick(ctx.rng, 1, ctx.max_n(6)), pick(ctx.rng, 0, ctx.max_m(8)),
                                      ctx.rng.uniform(0, 4) == 0, true);
    ctx.guard("chromatic polynomial of " + graph_text(g), [&] {
      const Poly chi = oracles::chromatic_polynomial(g);
      for (unsigned c = 0; c <= 4; ++c) {
        const Rational count(oracles::count_colourings(g, c));
        ctx.expect_eq(count, oracles::chromatic_from_tutte(g, c), "chi from T at " + std::to_string(c));
        ctx.expect_eq(count, chi(c), "chi polynomial at " + std::to_string(c));
      }
    });
  }
}

void suite_ising_cuts(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(100); ++t) {
    const Multigraph g = random_graph(ctx.rng, pick(ctx.rng, 1, ctx.max_n(6)), pick(ctx.rng, 0, ctx.max_m(9)), true, true);
    ctx.guard("cut expansion of " + graph_text(g), [&] {
      const std::size_t m = g.edge_count();
      const auto dist = oracles::cut_size_distribution(g);
      Poly expansion;
      for (std::size_t c = 0; c <= m; ++c) {
        Poly term = Poly::constant(Rational(dist[c]));
        for (std::size_t i = 0; i < m - c; ++i) term *= Poly({1, 1});
        expansion += term;
      }
      ctx.expect_eq(expansion, oracles::z_subset_sum_poly(g, 2, {}, ZVariant::z), "Z(G;2,w) as a polynomial");
    });
  }
}

// ------------------------------------------------------------------ permred

void suite_perm_endtoend(Context& ctx) {
  std::vector<Cnf> corpus = perm_corpus();
  for (std::size_t t = 0; t < ctx.trials(20); ++t) {
    Clause c;
    for (int i = 0; i < 3; ++i) {
      const int v = static_cast<int>(ctx.rng.uniform(1, 3));
      c.push_back(ctx.rng.coin() ? v : -v);
    }
    corpus.push_back(Cnf{3, {c}});
  }
  for (const auto& f : corpus) {
    const std::string name = serialize(f);
    ctx.guard("permanent reduction of " + name, [&] {
      const Integer sat = oracles::count_sat(f);
      const Cnf balanced = permred::balance_literals(f);
      ctx.expect_eq(sat, oracles::count_sat(balanced), "balancing keeps #SAT of " + name);
      const permred::PermInstance inst = permred::sat_to_perm_pm1(balanced);
      const Rational per = oracles::permanent(inst.digraph, oracles::PermanentMethod::cycle_cover);
      ctx.expect_eq(pow(Rational(-2), static_cast<long>(inst.occurrence_count)) * Rational(sat), per,
                    "per = (-2)^i #SAT for " + name);
      const permred::PermInstance raw = permred::sat_to_perm_pm1(f);
      ctx.expect_eq(unbalanced_expectation(f), oracles::permanent(raw.digraph, oracles::PermanentMethod::cycle_cover),
                    "unbalanced signed sum for " + name);
      const std::size_t size = static_cast<std::size_t>(balanced.num_vars) + balanced.clauses.size();
      ctx.check(inst.digraph.arc_count() <= 44 * size, "arc count linear for " + name, "<= " + std::to_string(44 * size),
                std::to_string(inst.digraph.arc_count()));
    });
  }
}

void suite_perm_gadgets(Context& ctx) {
  ctx.guard("gadget tables", [&] {
    const auto eq = permred::equality_gadget_table();
    ctx.expect_eq(Rational(2), eq[0], "equality gadget, no path");
    ctx.expect_eq(Rational(0), eq[1], "equality gadget, selector only");
    ctx.expect_eq(Rational(0), eq[2], "equality gadget, clause only");
    ctx.expect_eq(Rational(-1), eq[3], "equality gadget, both paths");
    const auto clause = permred::clause_gadget_table();
    ctx.expect_eq(Rational(0), clause[7], "clause gadget blocks all three outer arcs");
    for (std::size_t mask = 0; mask < 7; ++mask) {
      ctx.check(clause[mask] != 0 && clause[mask] == clause[0], "clause gadget mask " + std::to_string(mask),
                to_string(clause[0]), to_string(clause[mask]));
    }
  });
}

void suite_perm_interpolation(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(50); ++t) {
    const std::size_t n = pick(ctx.rng, 1, ctx.max_n(6));
    permred::PermInstance inst;
    inst.digraph = Digraph(n);
    for (std::size_t i = 0, arcs = pick(ctx.rng, n, 3 * n); i < arcs; ++i) {
      const auto u = pick(ctx.rng, 0, n - 1);
      const auto v = pick(ctx.rng, 0, n - 1);
      if (u == v && ctx.rng.coin()) inst.neg_loop_arcs.push_back(inst.digraph.add_arc(u, v, -1));
      else inst.digraph.add_arc(u, v, 1);
    }
    const std::string name = serialize(inst.digraph);
    ctx.guard("interpolated permanent of " + name, [&] {
      std::size_t calls = 0;
      const Rational value = permred::perm_value_by_interpolation(inst, [&](const Digraph& d) {
        ++calls;
        for (const auto& arc : d.arcs())
          if (arc.weight < 0) throw InvalidArgument("oracle saw a negative weight");
        return oracles::permanent(d, oracles::PermanentMethod::naive);
      });
      ctx.expect_eq(oracles::permanent(inst.digraph, oracles::PermanentMethod::naive), value, "value at -1 for " + name);
      ctx.expect_eq(inst.neg_loop_arcs.size() + 1, calls, "oracle calls for " + name);
    });
  }
  for (std::size_t t = 0; t < ctx.trials(30); ++t) {
    const std::size_t n = pick(ctx.rng, 1, ctx.max_n(4));
    Digraph d(n);
    for (std::size_t i = 0, arcs = pick(ctx.rng, n, 2 * n + 1); i < arcs; ++i)
      d.add_arc(pick(ctx.rng, 0, n - 1), pick(ctx.rng, 0, n - 1), Rational(static_cast<long>(ctx.rng.uniform(0, 5))));
    const std::string name = serialize(d);
    ctx.guard("0/1 expansion of " + name, [&] {
      const Digraph expanded = permred::expand_weights_to_01(d);
      bool zero_one = true;
      for (const auto& arc : expanded.arcs()) zero_one = zero_one && arc.weight == 1;
      ctx.check(zero_one, "expanded arcs carry weight 1 for " + name, "true", "false");
      ctx.expect_eq(oracles::permanent(d, oracles::PermanentMethod::naive),
                    oracles::permanent(expanded, oracles::PermanentMethod::cycle_cover), "0/1 expansion of " + name);
    });
  }
  for (const auto& f : perm_corpus()) {
    if (f.num_vars > 2) continue;
    const std::string name = serialize(f);
    const Integer sat = oracles::count_sat(f);
    if (sat <= 1) {
      ctx.guard("mod 3 decision of " + name, [&] {
        const auto answer = permred::unique_sat_mod3(f);
        ctx.expect_eq(std::string(sat == 1 ? "sat" : "unsat"),
                      std::string(answer == permred::SatAnswer::sat ? "sat" : "unsat"), "mod 3 decision of " + name);
      });
    } else if (sat % 3 == 2) {
      ctx.expect_throw<PromiseViolation>("mod 3 residue 2 for " + name, [&] { (void)permred::unique_sat_mod3(f); });
    }
  }
}

// ------------------------------------------------------------------ isetred

void suite_indset_parity(Context& ctx) {
  for (const auto& f : small_sat_corpus()) {
    const std::string name = serialize(f);
    ctx.guard("parity reduction of " + name, [&] {
      const isetred::IndsetInstance inst = isetred::sat_to_indset_graph(f);
      const std::size_t n = inst.n_src;
      const std::size_t m = inst.m_src;
      ctx.expect_eq(3 * n + 8 * m, inst.graph.vertex_count(), "vertex count for " + name);
      ctx.expect_eq(3 * n + 49 * m, inst.graph.edge_count(), "edge count for " + name);
      const Integer sat = oracles::count_sat(f);
      const Integer is = oracles::count_independent_sets(inst.graph);
      ctx.expect_eq(Integer(sat % 2), Integer(is % 2), "parity for " + name);

      // Good sets: one literal per variable, one assignment vertex per clause.
      std::vector<std::vector<bool>> adj(inst.graph.vertex_count(), std::vector<bool>(inst.graph.vertex_count()));
      for (const auto& e : inst.graph.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
      Integer good = 0;
      for (std::uint64_t lits = 0; lits < (std::uint64_t{1} << (2 * n)); ++lits) {
        if (static_cast<std::size_t>(std::popcount(lits)) != n) continue;
        std::vector<VertexId> base;
        for (std::size_t b = 0; b < 2 * n; ++b)
          if ((lits >> b) & 1) base.push_back(3 * (b / 2) + (b % 2));
        std::size_t combos = 1;
        for (std::size_t j = 0; j < m; ++j) combos *= 7;
        for (std::size_t combo = 0; combo < combos; ++combo) {
          std::vector<VertexId> set = base;
          for (std::size_t j = 0, rest = combo; j < m; ++j, rest /= 7) set.push_back(3 * n + 8 * j + rest % 7);
          bool independent = true;
          for (std::size_t a = 0; a < set.size() && independent; ++a)
            for (std::size_t b = a + 1; b < set.size() && independent; ++b) independent = !adj[set[a]][set[b]];
          if (independent) ++good;
        }
      }
      ctx.expect_eq(sat, good, "good sets biject with models of " + name);
    });
  }
  for (std::size_t t = 0; t < ctx.trials(50); ++t) {
    const std::size_t n = pick(ctx.rng, 1, ctx.max_n(10));
    const Multigraph g = random_graph(ctx.rng, n, pick(ctx.rng, 0, ctx.max_m(15)), false, false);
    ctx.guard("2-SAT encoding of " + graph_text(g), [&] {
      ctx.expect_eq(oracles::count_independent_sets(g), oracles::count_sat(isetred::indset_to_2sat(g)),
                    "#IS = #2SAT for " + graph_text(g));
    });
  }
}

// ------------------------------------------------------------------ inflate

void suite_thickening_identity(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(100); ++t) {
    const Multigraph g = random_graph(ctx.rng, pick(ctx.rng, 1, ctx.max_n(5)), pick(ctx.rng, 0, ctx.max_m(4)), true, true);
    const std::size_t k = pick(ctx.rng, 1, 4);
    const Rational q = ctx.rng.rational(3, 2);
    const Rational w = ctx.rng.rational(3, 2);
    ctx.guard("thickening of " + graph_text(g), [&] {
      const Rational shifted = pow(1 + w, static_cast<long>(k)) - 1;
      ctx.expect_eq(oracles::z_subset_sum(g, q, shifted, ZVariant::z),
                    oracles::z_subset_sum(inflate::thicken(g, k), q, w, ZVariant::z),
                    "Z(G_" + std::to_string(k) + ") at q=" + to_string(q) + " w=" + to_string(w));
    });
  }
}

void suite_stretch_identity(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(100); ++t) {
    const Multigraph g = random_graph(ctx.rng, pick(ctx.rng, 1, ctx.max_n(5)), pick(ctx.rng, 0, ctx.max_m(4)), true, true);
    const std::size_t k = pick(ctx.rng, 1, 3);
    const Rational w = ctx.rng.nonzero_rational(3, 2);
    ctx.guard("stretch of " + graph_text(g), [&] {
      const Rational factor = Rational(static_cast<long>(k)) * pow(w, static_cast<long>(k) - 1);
      ctx.expect_eq(pow(factor, static_cast<long>(g.edge_count())) *
                        oracles::z_subset_sum(g, 0, w / static_cast<long>(k), ZVariant::z0),
                    oracles::z_subset_sum(inflate::stretch(g, k), 0, w, ZVariant::z0),
                    std::to_string(k) + "-stretch at w=" + to_string(w));
    });
  }
  // Replacing one edge by a path or bundle of weighted edges.
  for (std::size_t t = 0; t < ctx.trials(100); ++t) {
    const Multigraph g = random_graph(ctx.rng, pick(ctx.rng, 2, ctx.max_n(5)), pick(ctx.rng, 1, ctx.max_m(4)), true, true);
    if (g.edge_count() == 0) continue;
    const auto kind = ctx.rng.coin() ? inflate::Composition::path : inflate::Composition::bundle;
    const std::size_t len = pick(ctx.rng, 1, 3);
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < len; ++i) weights.push_back(ctx.rng.nonzero_rational(3, 2));
    const Rational q = ctx.rng.coin() ? Rational(0) : ctx.rng.rational(3, 2);
    WeightMap base = random_weights(ctx.rng, g);
    ctx.guard("series/parallel shift on " + graph_text(g), [&] {
      inflate::ShiftResult shift;
      try {
        shift = inflate::series_parallel_shift(kind, weights, q);
      } catch (const DegenerateShift&) {
        return;
      }
      Multigraph h(g.vertex_count());
      WeightMap hw;
      for (EdgeId e = 1; e < g.edge_count(); ++e) {
        h.add_edge(g.edge(e).u, g.edge(e).v);
        hw.push_back(base[e]);
      }
      const Edge first = g.edge(0);
      if (kind == inflate::Composition::bundle) {
        for (const auto& wi : weights) {
          h.add_edge(first.u, first.v);
          hw.push_back(wi);
        }
      } else {
        VertexId prev = first.u;
        for (std::size_t i = 0; i < len; ++i) {
          const VertexId next = i + 1 == len ? first.v : h.add_vertex();
          h.add_edge(prev, next);
          hw.push_back(weights[i]);
          prev = next;
        }
      }
      base[0] = shift.shifted_weight;
      ctx.expect_eq(shift.per_edge_factor * oracles::z_subset_sum(g, q, base, ZVariant::z0),
                    oracles::z_subset_sum(h, q, hw, ZVariant::z0),
                    std::string(kind == inflate::Composition::path ? "path" : "bundle") + " at q=" + to_string(q));
    });
  }
}

void suite_theta_identity(Context& ctx) {
  const std::vector<inflate::ThetaSpec> specs = {{1}, {2}, {3}, {4}, {5}, {1, 2}, {1, 3}, {1, 4}, {2, 3}};
  for (std::size_t t = 0; t < ctx.trials(100); ++t) {
    const Multigraph g = random_graph(ctx.rng, pick(ctx.rng, 1, ctx.max_n(4)), pick(ctx.rng, 0, ctx.max_m(3)), true, true);
    const auto& spec = specs[pick(ctx.rng, 0, specs.size() - 1)];
    Rational q = ctx.rng.nonzero_rational(3, 2);
    Rational w = ctx.rng.nonzero_rational(3, 2);
    ctx.guard("theta shift on " + graph_text(g), [&] {
      inflate::ShiftResult shift;
      try {
        shift = inflate::theta_shift(q, w, spec);
      } catch (const DegenerateShift&) {
        return;
      }
      for (ZVariant variant : {ZVariant::z, ZVariant::z0}) {
        ctx.expect_eq(pow(shift.per_edge_factor, static_cast<long>(g.edge_count())) *
                          oracles::z_subset_sum(g, q, shift.shifted_weight, variant),
                      oracles::z_subset_sum(inflate::inflate(g, inflate::theta_graph(spec)), q, w, variant),
                      "theta shift at q=" + to_string(q) + " w=" + to_string(w));
      }
    });
  }
}

std::vector<inflate::WumpSpec> small_wump_specs(std::size_t max_edges) {
  std::vector<inflate::WumpSpec> out;
  inflate::WumpSpec cur;
  auto rec = [&](auto&& self, std::size_t used) -> void {
    if (!cur.empty()) out.push_back(cur);
    const std::size_t i = cur.size() + 1;
    for (std::size_t s = 1; used + i * s <= max_edges; ++s) {
      cur.push_back(s);
      self(self, used + i * s);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

void suite_wump_identity(Context& ctx) {
  const auto specs = small_wump_specs(8);
  for (std::size_t t = 0; t < ctx.trials(100); ++t) {
    const auto& spec = specs[pick(ctx.rng, 0, specs.size() - 1)];
    const std::size_t edges = inflate::wump_graph(spec).graph.edge_count();
    const std::size_t max_m = std::max<std::size_t>(1, 16 / edges);
    const Multigraph g = random_graph(ctx.rng, pick(ctx.rng, 1, ctx.max_n(4)), pick(ctx.rng, 0, ctx.max_m(max_m)), true, true);
    const Rational w = ctx.rng.nonzero_rational(3, 2);
    ctx.guard("wump shift on " + graph_text(g), [&] {
      inflate::ShiftResult shift;
      try {
        shift = inflate::wump_shift(w, spec);
      } catch (const DegenerateShift&) {
        return;
      }
      ctx.expect_eq(pow(shift.per_edge_factor, static_cast<long>(g.edge_count())) *
                        oracles::z_subset_sum(g, 0, shift.shifted_weight, ZVariant::z0),
                    oracles::z_subset_sum(inflate::inflate(g, inflate::wump_graph(spec)), 0, w, ZVariant::z0),
                    "wump shift at w=" + to_string(w));
    });
  }
}

void suite_whitney_twist(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(30); ++t) {
    const Multigraph g = random_graph(ctx.rng, pick(ctx.rng, 1, ctx.max_n(4)), pick(ctx.rng, 0, ctx.max_m(3)), true, true);
    TwoTerminalGraph h{random_connected_simple_graph(ctx.rng, pick(ctx.rng, 2, 4), pick(ctx.rng, 1, 5)), 0, 1};
    const Rational q = ctx.rng.rational(3, 2);
    const Rational w = ctx.rng.rational(3, 2);
    ctx.guard("twisted inflation of " + graph_text(g), [&] {
      ctx.expect_eq(oracles::z_subset_sum(inflate::inflate(g, h), q, w, ZVariant::z),
                    oracles::z_subset_sum(inflate::inflate_reversed(g, h), q, w, ZVariant::z),
                    "inflation is orientation-free at q=" + to_string(q));
    });
  }
}

std::size_t bit_length(std::size_t m) { return static_cast<std::size_t>(std::bit_width(m)); }

// Pinned growth constants: sum of a theta set <= 64 bitlen(m)^3, wump edge
// count <= 1024 bitlen(m)^2.
constexpr std::size_t kThetaSumConstant = 64;
constexpr std::size_t kWumpEdgeConstant = 1024;

const std::vector<std::pair<Rational, Rational>>& theta_grid() {
  static const std::vector<std::pair<Rational, Rational>> grid = {
      {2, 1}, {3, 1}, {Rational(1, 2), 1}, {-1, 2}, {3, -1}, {Rational(-1, 2), 3}};
  return grid;
}

void suite_generator_distinctness(Context& ctx) {
  const std::size_t max_m = ctx.max_m(50);
  for (const auto& [q, w] : theta_grid()) {
    for (std::size_t m = 1; m <= max_m; ++m) {
      ctx.guard("theta sets at q=" + to_string(q) + " w=" + to_string(w) + " m=" + std::to_string(m), [&] {
        const auto sets = inflate::generate_theta_sets(q, w, m);
        ctx.expect_eq(m + 1, sets.size(), "theta set count");
        std::set<std::string> shifts;
        std::size_t worst = 0;
        bool shape = true;
        for (const auto& s : sets) {
          shifts.insert(to_string(inflate::theta_shift(q, w, s).shifted_weight));
          std::size_t sum = 0;
          for (auto x : s) {
            sum += x;
            shape = shape && x % 2 == 0;
          }
          shape = shape && s.size() == bit_length(m);
          worst = std::max(worst, sum);
        }
        ctx.expect_eq(m + 1, shifts.size(), "distinct theta shifts at m=" + std::to_string(m));
        ctx.check(shape, "theta sets have floor(log m)+1 even elements", "true", "false");
        const std::size_t bound = kThetaSumConstant * bit_length(m) * bit_length(m) * bit_length(m);
        ctx.check(worst <= bound, "theta set sum bound at m=" + std::to_string(m), "<= " + std::to_string(bound),
                  std::to_string(worst));
      });
    }
  }
  for (const Rational& w : {Rational(-1, 2), Rational(-1, 4), Rational(10), Rational(12)}) {
    for (std::size_t m = 1; m <= max_m; ++m) {
      ctx.guard("wump sequences at w=" + to_string(w) + " m=" + std::to_string(m), [&] {
        const auto seqs = inflate::generate_wump_sequences(w, m);
        ctx.expect_eq(m + 1, seqs.size(), "wump sequence count");
        std::set<std::string> shifts;
        std::size_t worst = 0;
        for (const auto& s : seqs) {
          shifts.insert(to_string(inflate::wump_shift(w, s).shifted_weight));
          std::size_t edges = 0;
          for (std::size_t i = 0; i < s.size(); ++i) edges += (i + 1) * s[i];
          worst = std::max(worst, edges);
        }
        ctx.expect_eq(m + 1, shifts.size(), "distinct wump shifts at m=" + std::to_string(m));
        const std::size_t bound = kWumpEdgeConstant * bit_length(m) * bit_length(m);
        ctx.check(worst <= bound, "wump edge bound at m=" + std::to_string(m), "<= " + std::to_string(bound),
                  std::to_string(worst));
      });
    }
  }
}

// ---------------------------------------------------------------- pipelines

void suite_thickening_pipeline(Context& ctx) {
  for (const auto& g : small_graph_corpus()) {
    Rational q = ctx.rng.rational(3, 2);
    Rational w = ctx.rng.nonzero_rational(3, 2);
    if (q == 1) q = 2;
    if (w == -1 || w == -2) w = 1;
    ctx.guard("thickening pipeline on " + graph_text(g), [&] {
      const Poly got = pipelines::coeffs_by_thickening(
          g, q, w, [&](const Multigraph& h) { return oracles::z_subset_sum(h, q, w, ZVariant::z); });
      ctx.expect_eq(oracles::z_subset_sum_poly(g, q, {}, ZVariant::z), got, "coefficients at q=" + to_string(q));
    });
  }
}

std::vector<std::pair<Rational, Rational>> theta_pipeline_points() {
  return {{2, 1},  {3, 1},  {Rational(1, 2), 1}, {-1, 2}, {3, -1}, {Rational(-1, 2), 3},
          {3, -3}, {-2, 1}, {3, Rational(-3, 2)}};
}

void suite_theta_pipeline(Context& ctx) {
  const auto points = theta_pipeline_points();
  for (std::size_t t = 0; t < ctx.trials(30); ++t) {
    const Multigraph g = random_graph(ctx.rng, pick(ctx.rng, 1, ctx.max_n(6)), pick(ctx.rng, 1, ctx.max_m(8)), true, true);
    const auto& [q, w] = points[t % points.size()];
    ctx.guard("theta pipeline on " + graph_text(g), [&] {
      const Poly got = pipelines::coeffs_by_theta(
          g, q, w, [&](const Multigraph& h) { return reduce::z_reduced(h, q, w, ZVariant::z); });
      ctx.expect_eq(oracles::z_subset_sum_poly(g, q, {}, ZVariant::z), got,
                    "coefficients at q=" + to_string(q) + " w=" + to_string(w));
    });
  }
  const Multigraph k2(2, {{0, 1}});
  const Multigraph loop(1, {{0, 0}});
  for (const auto& g : {k2, loop}) {
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& [q, w] = points[i];
      ctx.guard("genuine theta pipeline on " + graph_text(g), [&] {
        const Poly got = pipelines::coeffs_by_theta(
            g, q, w, [&](const Multigraph& h) { return oracles::z_subset_sum(h, q, w, ZVariant::z); });
        ctx.expect_eq(oracles::z_subset_sum_poly(g, q, {}, ZVariant::z), got,
                      "genuine coefficients at q=" + to_string(q) + " w=" + to_string(w));
      });
    }
  }
}

void suite_wump_pipeline(Context& ctx) {
  const std::vector<Rational> points = {12, 1, Rational(-1, 2), -3, 9, Rational(-1, 4), 10, Rational(5, 2)};
  for (std::size_t t = 0; t < ctx.trials(24); ++t) {
    const Multigraph g = random_graph(ctx.rng, pick(ctx.rng, 1, ctx.max_n(6)), pick(ctx.rng, 1, ctx.max_m(8)), true, true);
    const Rational& w = points[t % points.size()];
    ctx.guard("wump pipeline on " + graph_text(g), [&] {
      const Poly got = pipelines::coeffs_by_wump(
          g, w, [&](const Multigraph& h) { return reduce::z_reduced(h, 0, w, ZVariant::z0); });
      ctx.expect_eq(oracles::z_subset_sum_poly(g, 0, {}, ZVariant::z0), got, "coefficients at w=" + to_string(w));
    });
  }
  const Multigraph k2(2, {{0, 1}});
  for (const Rational& w : {Rational(12), Rational(10)}) {
    ctx.guard("genuine wump pipeline at w=" + to_string(w), [&] {
      const Poly got = pipelines::coeffs_by_wump(
          k2, w, [&](const Multigraph& h) { return oracles::z_subset_sum(h, 0, w, ZVariant::z0); });
      ctx.expect_eq(oracles::z_subset_sum_poly(k2, 0, {}, ZVariant::z0), got, "genuine coefficients on K2");
    });
  }
}

TerminalTriple random_triple(Rng& rng, std::size_t max_n, std::size_t max_m) {
  const std::size_t n = pick(rng, 3, std::max<std::size_t>(3, max_n));
  TerminalTriple t{random_connected_simple_graph(rng, n, pick(rng, n - 1, std::max(n - 1, max_m))), 0, 1, 2};
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  for (std::size_t i = 0; i < 3; ++i) std::swap(order[i], order[pick(rng, i, n - 1)]);
  t.t1 = order[0];
  t.t2 = order[1];
  t.t3 = order[2];
  return t;
}

void suite_tmc3_pipeline(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(30); ++t) {
    const TerminalTriple triple = random_triple(ctx.rng, ctx.max_n(6), ctx.max_m(8));
    const std::string name = graph_text(triple.graph);
    ctx.guard("3-terminal cuts of " + name, [&] {
      const Integer expected = oracles::count_3tmc(triple).count;
      for (const Rational& q : {Rational(3), Rational(-1), Rational(1, 2)}) {
        ctx.expect_eq(expected, pipelines::tmc3_from_z0(triple, q), "tmc3 at q=" + to_string(q) + " on " + name);
      }
    });
  }
}

// With the weight -1 terminal triangle T, every B whose edges join two
// terminals contributes nothing once summed over C subset of T.
void suite_terminal_split(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(30); ++t) {
    const TerminalTriple triple = random_triple(ctx.rng, ctx.max_n(6), ctx.max_m(8));
    const Rational q = ctx.rng.nonzero_rational(3, 2);
    const std::string name = graph_text(triple.graph);
    ctx.guard("split of " + name, [&] {
      Multigraph g = triple.graph;
      const std::size_t m = g.edge_count();
      const EdgeSet tri = {g.add_edge(triple.t1, triple.t2), g.add_edge(triple.t2, triple.t3),
                           g.add_edge(triple.t1, triple.t3)};
      std::size_t checked = 0;
      bool all_zero = true;
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
        EdgeSet subset;
        for (EdgeId e = 0; e < m; ++e)
          if ((b >> e) & 1) subset.push_back(e);
        RollbackDisjointSets dsu(g.vertex_count());
        for (auto e : subset) dsu.unite(g.edge(e).u, g.edge(e).v);
        const bool joins = dsu.find(triple.t1) == dsu.find(triple.t2) || dsu.find(triple.t2) == dsu.find(triple.t3) ||
                           dsu.find(triple.t1) == dsu.find(triple.t3);
        if (!joins) continue;
        Rational inner = 0;
        for (int c = 0; c < 8; ++c) {
          EdgeSet with = subset;
          for (int i = 0; i < 3; ++i)
            if ((c >> i) & 1) with.push_back(tri[i]);
          const Rational term = pow(q, static_cast<long>(component_count(g, with)));
          if (std::popcount(static_cast<unsigned>(c)) % 2) inner -= term;
          else inner += term;
        }
        ++checked;
        all_zero = all_zero && inner == 0;
      }
      ctx.check(all_zero, "terminal-joining B vanish on " + name, "0", "nonzero");
      (void)checked;
    });
  }
}

void suite_maxcut_ising(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(50); ++t) {
    const Multigraph g = random_graph(ctx.rng, pick(ctx.rng, 1, ctx.max_n(8)), pick(ctx.rng, 0, ctx.max_m(12)), true, true);
    ctx.guard("max cut from Ising on " + graph_text(g), [&] {
      const auto got = pipelines::maxcut_from_ising(g);
      ctx.expect_eq(oracles::count_maxcut(g), got.maxcut, "max cut of " + graph_text(g));
      const auto dist = oracles::cut_size_distribution(g);
      ctx.check(dist == got.distribution, "cut distribution of " + graph_text(g), "match", "mismatch");
    });
  }
}

void suite_t_elimination(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(20); ++t) {
    const std::size_t n = pick(ctx.rng, 3, ctx.max_n(5));
    const Multigraph g = random_connected_simple_graph(ctx.rng, n, pick(ctx.rng, std::max<std::size_t>(n, 4), ctx.max_m(7)));
    if (g.edge_count() < 3) continue;
    EdgeSet tee(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) tee[e] = e;
    for (std::size_t i = 0; i < 3; ++i) std::swap(tee[i], tee[pick(ctx.rng, i, tee.size() - 1)]);
    tee.resize(3);
    const Rational q = t % 4 == 0 ? Rational(0) : ctx.rng.rational(3, 2);
    const std::string name = graph_text(g);
    // Each T edge must keep its endpoints joined in E \ T.
    bool bridge = false;
    {
      RollbackDisjointSets dsu(g.vertex_count());
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (std::find(tee.begin(), tee.end(), e) == tee.end()) dsu.unite(g.edge(e).u, g.edge(e).v);
      for (auto e : tee) bridge = bridge || dsu.find(g.edge(e).u) != dsu.find(g.edge(e).v);
    }
    auto oracle = [&](const Multigraph& h, const Rational& w) {
      if (!h.is_simple()) throw InvalidArgument("oracle called on a non-simple graph");
      return oracles::z_subset_sum(h, q, w, ZVariant::z0);
    };
    if (bridge) {
      ctx.expect_throw<InvalidArgument>("bridge T edge rejected on " + name,
                                        [&] { (void)pipelines::eliminate_T_edges(g, tee, q, oracle); });
      continue;
    }
    ctx.guard("T elimination on " + name, [&] {
      ctx.expect_eq(oracles::z_subset_sum_poly(g, q, tee, ZVariant::z0), pipelines::eliminate_T_edges(g, tee, q, oracle),
                    "Z0 coefficients at q=" + to_string(q) + " on " + name);
    });
  }
}

void suite_linial(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(20); ++t) {
    const std::size_t n = pick(ctx.rng, 1, ctx.max_n(5));
    const Multigraph g = random_graph(ctx.rng, n, pick(ctx.rng, 0, ctx.max_m(7)), false, false);
    const std::string name = graph_text(g);
    ctx.guard("Linial identity on " + name, [&] {
      const Poly chi = oracles::chromatic_polynomial(g);
      for (std::size_t i = 0; i <= 3; ++i) {
        const Multigraph joined = pipelines::join_clique(g, i);
        for (unsigned r = 0; r <= 6; ++r) {
          const Rational rr(static_cast<long>(r));
          ctx.expect_eq(falling_factorial(rr, static_cast<unsigned>(i)) * chi(rr - static_cast<long>(i)),
                        Rational(oracles::count_colourings(joined, r)),
                        "chi(G+K_" + std::to_string(i) + "; " + std::to_string(r) + ")");
        }
      }
      const Rational expected(oracles::count_colourings(g, 3));
      for (const Rational& q : {Rational(3), Rational(4), Rational(7, 2), Rational(-1)}) {
        pipelines::ChromaticOracle oracle;
        if (is_integer(q) && q > 0) {
          oracle = [q](const Multigraph& h) { return Rational(oracles::count_colourings(h, static_cast<unsigned>(q.get_num().get_ui()))); };
        } else {
          oracle = [q](const Multigraph& h) { return oracles::chromatic_polynomial(h)(q); };
        }
        ctx.expect_eq(expected, pipelines::chromatic3_via_linial(g, q, oracle), "chi(G;3) via q=" + to_string(q));
      }
    });
  }
}

void suite_reliability(Context& ctx) {
  const Multigraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  ctx.guard("C5 reliability", [&] {
    ctx.expect_eq(Rational(112, 243), oracles::reliability_bruteforce(c5, Rational(1, 3)), "R(C5; 1/3) brute force");
    ctx.expect_eq(Rational(112, 243), pipelines::reliability_from_tutte(c5, Rational(1, 3)), "R(C5; 1/3) via Tutte");
  });
  for (std::size_t t = 0; t < ctx.trials(30); ++t) {
    const std::size_t n = pick(ctx.rng, 1, ctx.max_n(6));
    Multigraph g = random_connected_simple_graph(ctx.rng, n, pick(ctx.rng, n - 1, ctx.max_m(9)));
    if (ctx.rng.coin() && g.edge_count() > 0) g.add_edge(g.edge(0).u, g.edge(0).v);
    const Rational p = probability(ctx.rng);
    ctx.guard("reliability of " + graph_text(g), [&] {
      ctx.expect_eq(oracles::reliability_bruteforce(g, p), pipelines::reliability_from_tutte(g, p),
                    "R at p=" + to_string(p));
    });
  }
}

// ----------------------------------------------------------------- satchain

void suite_nae_chain(Context& ctx) {
  for (const auto& f : small_sat_corpus()) {
    const std::string name = serialize(f);
    ctx.guard("NAE chain on " + name, [&] {
      const Integer sat = oracles::count_sat(f);
      ctx.expect_eq(Integer(sat + 1), oracles::count_sat(satchain::plant_assignment(f)), "planting adds one model");
      const satchain::NaeInstance nae = satchain::sat_to_nae(f);
      const Integer nae_count = oracles::count_nae(nae.formula);
      ctx.expect_eq(Integer(nae.relation_constant * (sat + 1)), nae_count, "#NAE = 2(#SAT+1) for " + name);
      // The max-cut stage is the slow one; run it on a fixed subset.
      if (f.clauses.size() > 1 && f.clauses[0] != f.clauses[1]) return;
      const satchain::MaxcutInstance mc = satchain::nae_to_maxcut(nae.formula);
      const std::size_t m = mc.graph.edge_count();
      ctx.expect_eq(oracles::CutCount{mc.target, nae_count}, oracles::count_maxcut(mc.graph, 40), "max cut of " + name);
      const Multigraph simple = satchain::maxcut_to_simple(mc.graph);
      ctx.check(simple.is_simple(), "3-stretch is simple", "true", "false");
      ctx.expect_eq(oracles::CutCount{2 * m + mc.target, Integer(nae_count * pow(Integer(3), m - mc.target))},
                    oracles::count_maxcut(simple, 40), "stretched max cut of " + name);
    });
  }
  for (std::size_t t = 0; t < ctx.trials(30); ++t) {
    const Multigraph g = random_graph(ctx.rng, pick(ctx.rng, 1, ctx.max_n(5)), pick(ctx.rng, 0, ctx.max_m(6)), true, true);
    ctx.guard("3-stretch of " + graph_text(g), [&] {
      const auto base = oracles::count_maxcut(g);
      const std::size_t m = g.edge_count();
      ctx.expect_eq(oracles::CutCount{2 * m + base.size, Integer(base.count * pow(Integer(3), m - base.size))},
                    oracles::count_maxcut(satchain::maxcut_to_simple(g)), "3-stretch of " + graph_text(g));
    });
  }
}

// ------------------------------------------------------------------- textio

void suite_textio(Context& ctx) {
  for (std::size_t t = 0; t < ctx.trials(50); ++t) {
    Cnf f{static_cast<int>(ctx.rng.uniform(1, 5)), {}};
    for (std::size_t j = 0, clauses = pick(ctx.rng, 0, 5); j < clauses; ++j) {
      Clause c;
      for (std::size_t i = 0, width = pick(ctx.rng, 1, 4); i < width; ++i) {
        const int v = static_cast<int>(ctx.rng.uniform(1, f.num_vars));
        c.push_back(ctx.rng.coin() ? v : -v);
      }
      f.clauses.push_back(c);
    }
    ctx.guard("cnf round trip", [&] { ctx.check(parse_dimacs(serialize(f)) == f, "cnf round trip", serialize(f), ""); });

    const Multigraph g = random_graph(ctx.rng, pick(ctx.rng, 1, 6), pick(ctx.rng, 0, 8), true, true);
    WeightedGraph wg{g, ctx.rng.coin() ? uniform_weights(g, 1) : random_weights(ctx.rng, g)};
    ctx.guard("graph round trip", [&] {
      ctx.check(parse_graph(serialize(wg)) == wg, "graph round trip", serialize(wg), serialize(parse_graph(serialize(wg))));
    });

    const std::size_t n = pick(ctx.rng, 1, 5);
    Digraph d(n);
    for (std::size_t i = 0, arcs = pick(ctx.rng, 0, 8); i < arcs; ++i)
      d.add_arc(pick(ctx.rng, 0, n - 1), pick(ctx.rng, 0, n - 1), ctx.rng.rational(4, 3));
    ctx.guard("digraph round trip", [&] { ctx.check(parse_digraph(serialize(d)) == d, "digraph round trip", serialize(d), ""); });

    RationalMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = ctx.rng.rational(9, 4);
    ctx.guard("matrix round trip", [&] { ctx.check(parse_matrix(serialize(a)) == a, "matrix round trip", serialize(a), ""); });
  }
  ctx.check(parse_dimacs("p cnf 3 1\n1 2 3 0\n") == Cnf{3, {{1, 2, 3}}}, "dimacs example", "(x1 x2 x3)", "");
  ctx.check(parse_graph("graph 2 1\n0 1\n").graph == Multigraph(2, {{0, 1}}), "graph example", "K2", "");
  for (const char* bad : {"graph 2 1\n0 5\n", "graph 2 2\n0 1\n", "p cnf 2 1\n1 3 0\n", "matrix 2\n1 2\n3 x\n",
                          "digraph 2 1\n0 1 1/0\n", "grph 2 1\n0 1\n"}) {
    ctx.expect_throw<ParseError>(std::string("rejects ") + bad, [&] {
      const std::string text = bad;
      if (text.rfind("p cnf", 0) == 0) (void)parse_dimacs(text);
      else if (text.rfind("matrix", 0) == 0) (void)parse_matrix(text);
      else if (text.rfind("digraph", 0) == 0) (void)parse_digraph(text);
      else (void)parse_graph(text);
    });
  }
  try {
    (void)parse_graph("graph 2 1\n0 5\n");
  } catch (const ParseError& e) {
    ctx.expect_eq(std::size_t{2}, e.line(), "parse error line number");
  }
}

}  // namespace

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> suites = {
      {"exactmath", suite_exactmath},
      {"structures", suite_structures},
      {"permanent-agreement", suite_permanent_agreement},
      {"z-proxy", suite_z_proxy},
      {"tutte-conversion", suite_tutte_conversion},
      {"delcon", suite_delcon},
      {"reliability-bridge", suite_reliability_bridge},
      {"chromatic-tutte", suite_chromatic_tutte},
      {"ising-cuts", suite_ising_cuts},
      {"perm-endtoend", suite_perm_endtoend},
      {"perm-gadgets", suite_perm_gadgets},
      {"perm-interpolation", suite_perm_interpolation},
      {"indset-parity", suite_indset_parity},
      {"thickening-identity", suite_thickening_identity},
      {"stretch-identity", suite_stretch_identity},
      {"theta-identity", suite_theta_identity},
      {"wump-identity", suite_wump_identity},
      {"whitney-twist", suite_whitney_twist},
      {"generator-distinctness", suite_generator_distinctness},
      {"thickening-pipeline", suite_thickening_pipeline},
      {"theta-pipeline", suite_theta_pipeline},
      {"wump-pipeline", suite_wump_pipeline},
      {"tmc3-pipeline", suite_tmc3_pipeline},
      {"terminal-split", suite_terminal_split},
      {"maxcut-ising", suite_maxcut_ising},
      {"t-elimination", suite_t_elimination},
      {"linial", suite_linial},
      {"reliability", suite_reliability},
      {"nae-chain", suite_nae_chain},
      {"textio", suite_textio},
  };
  return suites;
}

}  // namespace countforge::verify::detail
