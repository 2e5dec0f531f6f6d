#include "countforge/permred.hpp"

#include <cstdlib>
#include <map>

#include "countforge/error.hpp"
#include "countforge/oracles.hpp"

namespace countforge::permred {

namespace {

// a and a_prime each get a unit loop; the apex carries the -1 loop. Returns
// the arc index of that loop.
std::size_t add_equality_gadget(Digraph& d, VertexId a, VertexId a_prime) {
  const VertexId t = d.add_vertex();
  d.add_arc(a, a, 1);
  d.add_arc(a_prime, a_prime, 1);
  const std::size_t loop = d.add_arc(t, t, -1);
  d.add_arc(a, a_prime);
  d.add_arc(a_prime, a);
  d.add_arc(a, t);
  d.add_arc(t, a);
  d.add_arc(a_prime, t);
  d.add_arc(t, a_prime);
  return loop;
}

struct ClauseVertices {
  VertexId b, left, right, middle;
};

ClauseVertices add_clause_core(Digraph& d) {
  ClauseVertices c{d.add_vertex(), d.add_vertex(), d.add_vertex(), d.add_vertex()};
  d.add_arc(c.middle, c.left);
  d.add_arc(c.left, c.middle);
  d.add_arc(c.middle, c.right);
  d.add_arc(c.right, c.middle);
  d.add_arc(c.middle, c.b);
  d.add_arc(c.b, c.middle);
  d.add_arc(c.left, c.right);
  d.add_arc(c.right, c.left);
  return c;
}

// Outer arc endpoints for literal position 0, 1, 2.
std::pair<VertexId, VertexId> outer_arc(const ClauseVertices& c, int position) {
  switch (position) {
    case 0: return {c.b, c.left};
    case 1: return {c.left, c.right};
    default: return {c.right, c.b};
  }
}

// Induced sub-digraph on the vertices not flagged in `covered`.
Digraph induced(const Digraph& d, const std::vector<char>& covered) {
  std::vector<VertexId> index(d.vertex_count(), 0);
  Digraph out;
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (!covered[v]) index[v] = out.add_vertex();
  }
  for (const auto& a : d.arcs()) {
    if (!covered[a.from] && !covered[a.to]) out.add_arc(index[a.from], index[a.to], a.weight);
  }
  return out;
}

}  // namespace

Cnf pad_to_width3(const Cnf& f) {
  f.validate();
  Cnf out{f.num_vars, {}};
  out.clauses.reserve(f.clauses.size());
  for (const auto& c : f.clauses) {
    if (c.empty()) throw InvalidArgument("empty clause has no gadget");
    if (c.size() > 3) throw InvalidArgument("clause wider than three literals");
    Clause padded = c;
    while (padded.size() < 3) padded.push_back(padded.back());
    out.clauses.push_back(std::move(padded));
  }
  return out;
}

Cnf balance_literals(const Cnf& f) {
  Cnf out = pad_to_width3(f);
  std::vector<long> surplus(static_cast<std::size_t>(f.num_vars) + 1, 0);
  for (const auto& c : out.clauses) {
    for (Literal l : c) surplus[static_cast<std::size_t>(std::abs(l))] += l > 0 ? 1 : -1;
  }
  for (int v = 1; v <= f.num_vars; ++v) {
    // Each padding clause moves the surplus one step towards zero.
    for (long s = surplus[static_cast<std::size_t>(v)]; s != 0; s += s > 0 ? -1 : 1) {
      if (s > 0) {
        out.clauses.push_back({-v, -v, v});
      } else {
        out.clauses.push_back({v, v, -v});
      }
    }
  }
  return out;
}

PermInstance sat_to_perm_pm1(const Cnf& f) {
  const Cnf g = pad_to_width3(f);
  PermInstance inst;
  Digraph& d = inst.digraph;
  const std::size_t n = static_cast<std::size_t>(g.num_vars);
  std::vector<std::pair<VertexId, VertexId>> selector(n);
  for (auto& s : selector) s = {d.add_vertex(), d.add_vertex()};

  // occurrences[literal] = clause-side subdivision vertices, in clause order.
  std::map<Literal, std::vector<VertexId>> occurrences;
  for (const auto& clause : g.clauses) {
    const ClauseVertices c = add_clause_core(d);
    for (int k = 0; k < 3; ++k) {
      const auto [from, to] = outer_arc(c, k);
      const VertexId mid = d.add_vertex();
      d.add_arc(from, mid);
      d.add_arc(mid, to);
      occurrences[clause[static_cast<std::size_t>(k)]].push_back(mid);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto [top, bottom] = selector[v];
    for (Literal lit : {static_cast<Literal>(v + 1), -static_cast<Literal>(v + 1)}) {
      VertexId prev = top;
      for (VertexId clause_side : occurrences[lit]) {
        const VertexId a = d.add_vertex();
        d.add_arc(prev, a);
        inst.neg_loop_arcs.push_back(add_equality_gadget(d, a, clause_side));
        prev = a;
      }
      d.add_arc(prev, bottom);
    }
    d.add_arc(bottom, top);
  }
  inst.occurrence_count = 3 * g.clauses.size() / 2;
  return inst;
}

Rational perm_value_by_interpolation(const PermInstance& inst, const PermOracle& oracle) {
  for (std::size_t idx : inst.neg_loop_arcs) {
    const Arc& a = inst.digraph.arc(idx);
    if (a.from != a.to) throw InvalidArgument("substituted arcs must be self-loops");
  }
  const std::size_t d = inst.neg_loop_arcs.size();
  if (d == 0) return oracle(inst.digraph);
  std::vector<InterpolationPoint> points;
  points.reserve(d + 1);
  for (std::size_t a = 0; a <= d; ++a) {
    Digraph g = inst.digraph;
    const Rational weight(static_cast<long>(a));
    for (std::size_t idx : inst.neg_loop_arcs) g.arc(idx).weight = weight;
    points.emplace_back(weight, oracle(g));
  }
  return lagrange_interpolate(points)(Rational(-1));
}

Digraph expand_weights_to_01(const Digraph& d) {
  Digraph out(d.vertex_count());
  auto add_weight_two = [&out](VertexId x, VertexId y) {
    out.add_arc(x, y);
    const VertexId h = out.add_vertex();
    out.add_arc(h, h);
    out.add_arc(x, h);
    out.add_arc(h, y);
  };
  for (const auto& arc : d.arcs()) {
    if (!is_integer(arc.weight) || arc.weight < 0) {
      throw InvalidArgument("weight expansion needs non-negative integer weights, got " + to_string(arc.weight));
    }
    const Integer a = arc.weight.get_num();
    if (a == 0) continue;
    if (a == 1) {
      out.add_arc(arc.from, arc.to);
      continue;
    }
    const std::size_t top = mpz_sizeinbase(a.get_mpz_t(), 2) - 1;
    if (mpz_tstbit(a.get_mpz_t(), 0)) out.add_arc(arc.from, arc.to);
    VertexId prev = arc.from;
    for (std::size_t i = 1; i <= top; ++i) {
      const VertexId c = out.add_vertex();
      out.add_arc(c, c);
      add_weight_two(prev, c);
      if (mpz_tstbit(a.get_mpz_t(), i)) out.add_arc(c, arc.to);
      prev = c;
    }
  }
  return out;
}

SatAnswer unique_sat_mod3(const Cnf& f) {
  PermInstance inst = sat_to_perm_pm1(balance_literals(f));
  Digraph& d = inst.digraph;
  // A loop of weight 2 is congruent to -1 mod 3.
  for (std::size_t idx : inst.neg_loop_arcs) {
    const VertexId t = d.arc(idx).from;
    d.arc(idx).weight = 1;
    const VertexId h = d.add_vertex();
    d.add_arc(h, h);
    d.add_arc(t, h);
    d.add_arc(h, t);
  }
  const Rational per = oracles::permanent(d, oracles::PermanentMethod::cycle_cover);
  Integer residue = per.get_num() % 3;
  if (residue < 0) residue += 3;
  if (residue == 0) return SatAnswer::unsat;
  if (residue == 1) return SatAnswer::sat;
  throw PromiseViolation("permanent is 2 mod 3, so the formula has more than one model");
}

std::array<Rational, 4> equality_gadget_table() {
  Digraph d(2);
  add_equality_gadget(d, 0, 1);
  std::array<Rational, 4> out;
  for (int mask = 0; mask < 4; ++mask) {
    std::vector<char> covered(d.vertex_count(), 0);
    covered[0] = mask & 1;
    covered[1] = (mask >> 1) & 1;
    out[static_cast<std::size_t>(mask)] = oracles::permanent(induced(d, covered), oracles::PermanentMethod::naive);
  }
  return out;
}

std::array<Rational, 8> clause_gadget_table() {
  Digraph d;
  const ClauseVertices c = add_clause_core(d);
  const std::size_t inner = d.arc_count();
  for (int k = 0; k < 3; ++k) {
    const auto [from, to] = outer_arc(c, k);
    d.add_arc(from, to);
  }
  // Every vertex picks one outgoing arc; the picks must form a permutation.
  std::array<Rational, 8> out{};
  const std::size_t n = d.vertex_count();
  std::vector<std::vector<std::size_t>> choices(n);
  for (std::size_t i = 0; i < d.arc_count(); ++i) choices[d.arc(i).from].push_back(i);
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<char> hit(n, 0);
    bool ok = true;
    int mask = 0;
    Rational weight = 1;
    for (std::size_t v = 0; v < n && ok; ++v) {
      const std::size_t arc = choices[v][pick[v]];
      const VertexId to = d.arc(arc).to;
      ok = !hit[to];
      hit[to] = 1;
      weight *= d.arc(arc).weight;
      if (arc >= inner) mask |= 1 << (arc - inner);
    }
    if (ok) out[static_cast<std::size_t>(mask)] += weight;
    std::size_t v = 0;
    while (v < n && ++pick[v] == choices[v].size()) pick[v++] = 0;
    if (v == n) break;
  }
  return out;
}

}  // namespace countforge::permred
