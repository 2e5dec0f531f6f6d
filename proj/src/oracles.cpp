#include "countforge/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>

#include "countforge/error.hpp"
#include "subset_table.hpp"

namespace countforge {

namespace detail {

SubsetTable subset_table(const Multigraph& g, const std::vector<char>& minus) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  SubsetTable table(n + 1, std::vector<std::int64_t>(m + 1, 0));
  RollbackDisjointSets dsu(n);
  const auto edges = g.edges();
  std::size_t plain = 0;
  std::int64_t sign = 1;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == m) {
      table[dsu.components()][plain] += sign;
      return;
    }
    walk(i + 1);
    const bool merged = dsu.unite(edges[i].u, edges[i].v);
    if (minus[i]) {
      sign = -sign;
    } else {
      ++plain;
    }
    walk(i + 1);
    if (minus[i]) {
      sign = -sign;
    } else {
      --plain;
    }
    if (merged) dsu.rollback();
  };
  walk(0);
  return table;
}

}  // namespace detail

namespace oracles {

namespace {

void require_edges(const Multigraph& g, std::size_t limit) {
  if (g.edge_count() > limit) {
    throw CapacityError("edge subset enumeration over " + std::to_string(g.edge_count()) +
                        " edges exceeds the guard of " + std::to_string(limit));
  }
}

struct ClauseMask {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

std::vector<ClauseMask> clause_masks(const Cnf& f, std::size_t max_vars) {
  f.validate();
  const std::size_t limit = resolve_guard(max_vars, kDefaultSatVars);
  if (static_cast<std::size_t>(f.num_vars) > std::min<std::size_t>(limit, 62)) {
    throw CapacityError("assignment enumeration over " + std::to_string(f.num_vars) + " variables exceeds the guard");
  }
  std::vector<ClauseMask> masks;
  masks.reserve(f.clauses.size());
  for (const auto& c : f.clauses) {
    ClauseMask cm;
    for (Literal l : c) {
      const std::uint64_t bit = std::uint64_t{1} << (std::abs(l) - 1);
      (l > 0 ? cm.pos : cm.neg) |= bit;
    }
    masks.push_back(cm);
  }
  return masks;
}

template <class Pred>
Integer count_assignments(const Cnf& f, std::size_t max_vars, Pred ok) {
  const auto masks = clause_masks(f, max_vars);
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < total; ++x) {
    bool good = true;
    for (const auto& cm : masks) {
      if (!ok(x, cm)) {
        good = false;
        break;
      }
    }
    count += good;
  }
  Integer result;
  mpz_import(result.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
  return result;
}

Integer from_u64(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

std::vector<Rational> powers(const Rational& base, std::size_t count) {
  std::vector<Rational> out(count + 1);
  out[0] = 1;
  for (std::size_t i = 1; i <= count; ++i) out[i] = out[i - 1] * base;
  return out;
}

}  // namespace

std::size_t resolve_guard(std::size_t requested, std::size_t builtin) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("COUNTFORGE_MAX_SUBSET_BITS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return builtin;
}

Integer count_sat(const Cnf& f, std::size_t max_vars) {
  return count_assignments(f, max_vars, [](std::uint64_t x, const ClauseMask& c) {
    return ((x & c.pos) | (~x & c.neg)) != 0;
  });
}

Integer count_nae(const Cnf& f, std::size_t max_vars) {
  return count_assignments(f, max_vars, [](std::uint64_t x, const ClauseMask& c) {
    return ((x & c.pos) | (~x & c.neg)) != 0 && ((~x & c.pos) | (x & c.neg)) != 0;
  });
}

Integer count_independent_sets(const Multigraph& g) {
  using Mask = unsigned __int128;
  const std::size_t n = g.vertex_count();
  if (g.has_loops()) throw InvalidArgument("independent sets are defined for loopless graphs");
  if (n > 128) throw CapacityError("independent set counting supports at most 128 vertices");
  const Mask one = 1;
  std::vector<Mask> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= one << e.v;
    adj[e.v] |= one << e.u;
  }
  auto lowest = [](Mask m) {
    const auto lo = static_cast<std::uint64_t>(m);
    return lo ? std::countr_zero(lo) : 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
  };
  auto popcount = [](Mask m) {
    return std::popcount(static_cast<std::uint64_t>(m)) + std::popcount(static_cast<std::uint64_t>(m >> 64));
  };
  struct MaskHash {
    std::size_t operator()(Mask m) const {
      return std::hash<std::uint64_t>()(static_cast<std::uint64_t>(m) ^ (static_cast<std::uint64_t>(m >> 64) * 0x9E3779B97F4A7C15ULL));
    }
  };
  std::unordered_map<Mask, Integer, MaskHash> memo;
  // Branches on a highest-degree vertex, one connected component at a time.
  std::function<Integer(Mask)> count = [&](Mask mask) -> Integer {
    if (mask == 0) return 1;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Mask comp = one << lowest(mask);
    for (Mask frontier = comp; frontier;) {
      Mask next = 0;
      for (Mask rest = frontier; rest; rest &= rest - 1) next |= adj[lowest(rest)];
      frontier = next & mask & ~comp;
      comp |= frontier;
    }
    Integer result;
    if (comp != mask) {
      result = count(comp) * count(mask & ~comp);
    } else {
      int best = -1;
      int best_deg = 0;
      for (Mask rest = mask; rest; rest &= rest - 1) {
        const int v = lowest(rest);
        const int deg = popcount(adj[v] & mask);
        if (deg > best_deg) {
          best_deg = deg;
          best = v;
        }
      }
      if (best < 0) {
        result = pow(Integer(2), static_cast<unsigned long>(popcount(mask)));
      } else {
        const Mask bit = one << best;
        result = count(mask & ~bit) + count(mask & ~bit & ~adj[best]);
      }
    }
    memo.emplace(mask, result);
    return result;
  };
  const Mask all = n == 128 ? ~Mask{0} : (one << n) - 1;
  return count(all);
}

namespace {

// Best value and number of optimal interior assignments of a path whose end
// vertices sit on the same side (index 0) or on different sides (index 1).
struct ChainProfile {
  std::size_t best[2] = {0, 0};
  Integer ways[2] = {0, 0};
};

ChainProfile profile_chain(std::size_t length) {
  // state: side of the current vertex relative to the start vertex.
  std::size_t best[2] = {0, 0};
  Integer ways[2] = {1, 0};
  bool reachable[2] = {true, false};
  for (std::size_t step = 0; step < length; ++step) {
    std::size_t nb[2] = {0, 0};
    Integer nw[2] = {0, 0};
    bool nr[2] = {false, false};
    for (int to = 0; to < 2; ++to) {
      for (int from = 0; from < 2; ++from) {
        if (!reachable[from]) continue;
        const std::size_t v = best[from] + (from != to ? 1 : 0);
        if (!nr[to] || v > nb[to]) {
          nb[to] = v;
          nw[to] = ways[from];
          nr[to] = true;
        } else if (v == nb[to]) {
          nw[to] += ways[from];
        }
      }
    }
    for (int s = 0; s < 2; ++s) {
      best[s] = nb[s];
      ways[s] = nw[s];
      reachable[s] = nr[s];
    }
  }
  ChainProfile p;
  for (int s = 0; s < 2; ++s) {
    p.best[s] = reachable[s] ? best[s] : 0;
    p.ways[s] = reachable[s] ? ways[s] : Integer(0);
  }
  return p;
}

}  // namespace

CutCount count_maxcut(const Multigraph& g, std::size_t max_core_vertices) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return {0, 1};
  const auto deg = g.degrees();
  std::vector<char> has_loop(n, 0);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) has_loop[e.u] = 1;
  }
  std::vector<char> core(n, 0);
  for (std::size_t v = 0; v < n; ++v) core[v] = deg[v] != 2 || has_loop[v];
  // Components that are plain cycles have no core vertex yet.
  {
    RollbackDisjointSets dsu(n);
    for (const auto& e : g.edges()) dsu.unite(e.u, e.v);
    std::vector<char> has_core(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (core[v]) has_core[dsu.find(v)] = 1;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (!has_core[dsu.find(v)]) {
        core[v] = 1;
        has_core[dsu.find(v)] = 1;
      }
    }
  }
  std::vector<std::vector<std::pair<EdgeId, VertexId>>> incident(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (ed.is_loop()) continue;
    incident[ed.u].push_back({e, ed.v});
    incident[ed.v].push_back({e, ed.u});
  }

  // The Gray code flips index 1 most often, so the busiest vertex is pinned
  // at index 0 and the rest follow in increasing degree.
  std::vector<VertexId> core_order;
  for (std::size_t v = 0; v < n; ++v) {
    if (core[v]) core_order.push_back(v);
  }
  std::stable_sort(core_order.begin(), core_order.end(), [&](VertexId a, VertexId b) { return deg[a] < deg[b]; });
  if (!core_order.empty()) std::rotate(core_order.rbegin(), core_order.rbegin() + 1, core_order.rend());
  std::vector<std::size_t> core_index(n, SIZE_MAX);
  const std::size_t k = core_order.size();
  for (std::size_t i = 0; i < k; ++i) core_index[core_order[i]] = i;
  const std::size_t limit = resolve_guard(max_core_vertices, kDefaultCutVertices);
  if (k > std::min<std::size_t>(limit, 62)) {
    throw CapacityError("maximum cut enumeration over " + std::to_string(k) + " core vertices exceeds the guard");
  }

  struct Chain {
    std::size_t a, b;
    long delta;
    std::size_t type;  // SIZE_MAX when both states have the same number of ways
  };
  std::vector<Chain> chains;
  std::size_t base_value = 0;
  Integer base_ways = 1;
  std::map<std::pair<Integer, Integer>, std::size_t> type_ids;
  std::vector<std::pair<Integer, Integer>> type_ways;
  std::vector<char> used(g.edge_count(), 0);
  for (std::size_t c = 0; c < n; ++c) {
    if (!core[c]) continue;
    for (auto [e0, next] : incident[c]) {
      if (used[e0]) continue;
      used[e0] = 1;
      std::size_t length = 1;
      VertexId prev = c;
      VertexId cur = next;
      while (!core[cur]) {
        EdgeId step = SIZE_MAX;
        VertexId to = 0;
        for (auto [e, w] : incident[cur]) {
          if (!used[e]) {
            step = e;
            to = w;
            break;
          }
        }
        used[step] = 1;
        prev = cur;
        cur = to;
        ++length;
      }
      (void)prev;
      const ChainProfile p = profile_chain(length);
      if (cur == c) {
        base_value += p.best[0];
        base_ways *= p.ways[0];
        continue;
      }
      Chain ch{core_index[c], core_index[cur], static_cast<long>(p.best[1]) - static_cast<long>(p.best[0]), SIZE_MAX};
      base_value += p.best[0];
      if (p.ways[0] == p.ways[1]) {
        base_ways *= p.ways[0];
      } else {
        auto key = std::make_pair(p.ways[0], p.ways[1]);
        auto [it, inserted] = type_ids.emplace(key, type_ids.size());
        if (inserted) type_ways.push_back(key);
        ch.type = it->second;
      }
      chains.push_back(ch);
    }
  }

  // Mixed-radix key: number of chains of each tracked type in the "different
  // sides" state.
  const std::size_t types = type_ways.size();
  std::vector<std::size_t> type_total(types, 0);
  for (const auto& ch : chains) {
    if (ch.type != SIZE_MAX) ++type_total[ch.type];
  }
  std::vector<std::uint64_t> radix(types, 1);
  {
    unsigned __int128 r = 1;
    for (std::size_t t = 0; t < types; ++t) {
      radix[t] = static_cast<std::uint64_t>(r);
      r *= type_total[t] + 1;
      if (r > (static_cast<unsigned __int128>(1) << 62)) throw CapacityError("too many distinct chain profiles");
    }
  }
  std::vector<std::vector<std::size_t>> touching(k);
  for (std::size_t i = 0; i < chains.size(); ++i) {
    touching[chains[i].a].push_back(i);
    touching[chains[i].b].push_back(i);
  }
  std::vector<char> state(chains.size(), 0);
  std::uint64_t key = 0;
  long value = 0;
  long best = -1;
  std::unordered_map<std::uint64_t, std::uint64_t> tally;
  auto record = [&] {
    if (value > best) {
      best = value;
      tally.clear();
    }
    if (value == best) ++tally[key];
  };
  record();
  const std::uint64_t steps = k == 0 ? 1 : std::uint64_t{1} << (k - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    const std::size_t v = 1 + static_cast<std::size_t>(std::countr_zero(i));
    for (std::size_t ci : touching[v]) {
      Chain& ch = chains[ci];
      state[ci] ^= 1;
      if (state[ci]) {
        value += ch.delta;
        if (ch.type != SIZE_MAX) key += radix[ch.type];
      } else {
        value -= ch.delta;
        if (ch.type != SIZE_MAX) key -= radix[ch.type];
      }
    }
    record();
  }
  Integer total = 0;
  for (const auto& [kk, cnt] : tally) {
    Integer ways = from_u64(cnt);
    std::uint64_t rest = kk;
    for (std::size_t t = 0; t < types; ++t) {
      const std::size_t diff = static_cast<std::size_t>(rest % (type_total[t] + 1));
      rest /= type_total[t] + 1;
      ways *= pow(type_ways[t].first, type_total[t] - diff) * pow(type_ways[t].second, diff);
    }
    total += ways;
  }
  total *= base_ways * (k == 0 ? 1 : 2);
  return {base_value + static_cast<std::size_t>(best), total};
}

std::vector<Integer> cut_size_distribution(const Multigraph& g, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  const std::size_t limit = resolve_guard(max_vertices, kDefaultSubsetBits);
  if (n > std::min<std::size_t>(limit, 62)) throw CapacityError("cut distribution enumeration exceeds the guard");
  std::vector<std::uint64_t> counts(g.edge_count() + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::size_t cut = 0;
    for (const auto& e : g.edges()) cut += ((s >> e.u) ^ (s >> e.v)) & 1;
    ++counts[cut];
  }
  std::vector<Integer> out;
  for (auto c : counts) out.push_back(from_u64(c));
  return out;
}

CutCount count_3tmc(const TerminalTriple& t, std::size_t max_edges) {
  t.validate();
  const Multigraph& g = t.graph;
  require_edges(g, resolve_guard(max_edges, kDefaultSubsetBits));
  const std::size_t m = g.edge_count();
  RollbackDisjointSets dsu(g.vertex_count());
  std::size_t best = SIZE_MAX;
  std::uint64_t count = 0;
  std::size_t removed = 0;
  const auto edges = g.edges();
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    const std::size_t a = dsu.find(t.t1), b = dsu.find(t.t2), c = dsu.find(t.t3);
    if (a == b || b == c || a == c) return;
    if (removed > best) return;
    if (i == m) {
      if (removed < best) {
        best = removed;
        count = 0;
      }
      ++count;
      return;
    }
    const bool merged = dsu.unite(edges[i].u, edges[i].v);
    walk(i + 1);
    if (merged) dsu.rollback();
    ++removed;
    walk(i + 1);
    --removed;
  };
  walk(0);
  // Removing every edge always separates distinct terminals.
  return {best, from_u64(count)};
}

Integer count_colourings(const Multigraph& g, unsigned colours, std::size_t max_bits) {
  const std::size_t n = g.vertex_count();
  if (g.has_loops()) return 0;
  if (colours == 0) return n == 0 ? 1 : 0;
  const std::size_t limit = resolve_guard(max_bits, kDefaultColouringBits);
  if (static_cast<double>(n) * std::log2(static_cast<double>(colours)) > static_cast<double>(limit)) {
    throw CapacityError("colouring enumeration exceeds the guard");
  }
  std::vector<std::vector<VertexId>> earlier(n);
  for (const auto& e : g.edges()) earlier[std::max(e.u, e.v)].push_back(std::min(e.u, e.v));
  std::vector<unsigned> colour(n, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == n) {
      ++count;
      return;
    }
    for (unsigned c = 0; c < colours; ++c) {
      bool ok = true;
      for (VertexId u : earlier[v]) {
        if (colour[u] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      colour[v] = c;
      walk(v + 1);
    }
  };
  walk(0);
  return from_u64(count);
}

Poly chromatic_polynomial(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (g.has_loops()) return Poly();
  if (n > 16) throw CapacityError("chromatic polynomial by partitions supports at most 16 vertices");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }
  std::vector<char> independent(std::size_t{1} << n, 0);
  for (std::uint32_t s = 0; s <= full; ++s) {
    bool ok = true;
    for (std::uint32_t r = s; r && ok; r &= r - 1) ok = (adj[std::countr_zero(r)] & s) == 0;
    independent[s] = ok;
  }
  // parts[k][S]: partitions of S into k independent blocks.
  std::vector<std::vector<std::uint64_t>> parts(n + 1, std::vector<std::uint64_t>(std::size_t{1} << n, 0));
  parts[0][0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::uint32_t s = 1; s <= full; ++s) {
      const std::uint32_t low = s & (~s + 1);
      const std::uint32_t rest = s & ~low;
      std::uint64_t total = 0;
      // blocks containing the lowest vertex of s
      for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
        const std::uint32_t block = sub | low;
        if (independent[block]) total += parts[k - 1][s & ~block];
        if (sub == 0) break;
      }
      parts[k][s] = total;
    }
  }
  Poly result;
  Poly falling = Poly::constant(1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) falling *= Poly::linear_factor(Rational(static_cast<long>(k - 1)));
    const std::uint64_t a = parts[k][full];
    if (a) result += falling * Rational(from_u64(a));
  }
  return result;
}

namespace {

using Mask = unsigned __int128;

struct MaskHash {
  std::size_t operator()(Mask m) const noexcept {
    const auto lo = static_cast<std::uint64_t>(m);
    const auto hi = static_cast<std::uint64_t>(m >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9E3779B97F4A7C15ULL));
  }
};

constexpr std::size_t kMaxCycleCoverStates = 4'000'000;

Rational cycle_cover_dp(std::size_t n, const std::vector<std::vector<std::pair<std::size_t, Rational>>>& out) {
  if (n == 0) return 1;
  std::vector<std::size_t> in_count(n, 0);
  for (const auto& row : out) {
    if (row.empty()) return 0;
    for (const auto& [c, w] : row) ++in_count[c];
  }
  for (auto c : in_count) {
    if (c == 0) return 0;
  }
  // Greedy row order keeping few columns half-decided.
  std::vector<std::size_t> remaining = in_count;
  std::vector<char> touched(n, 0), done(n, 0);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = SIZE_MAX;
    long pick_delta = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r]) continue;
      long delta = 0;
      for (const auto& [c, w] : out[r]) {
        const bool before = touched[c] && remaining[c] > 0;
        const bool after = remaining[c] > 1;
        delta += static_cast<long>(after) - static_cast<long>(before);
      }
      if (pick == SIZE_MAX || delta < pick_delta) {
        pick = r;
        pick_delta = delta;
      }
    }
    done[pick] = 1;
    order.push_back(pick);
    for (const auto& [c, w] : out[pick]) {
      touched[c] = 1;
      --remaining[c];
    }
  }

  // Only columns with both processed and unprocessed in-rows live in the key;
  // each occupies a slot from the moment it is first hit until it closes.
  remaining = in_count;
  std::vector<int> slot(n, -1);
  std::vector<int> free_slots;
  for (int i = static_cast<int>(kMaxCycleCoverFrontier) - 1; i >= 0; --i) free_slots.push_back(i);
  std::unordered_map<Mask, Rational, MaskHash> states{{0, Rational(1)}};
  for (std::size_t r : order) {
    std::vector<std::pair<Mask, const Rational*>> moves;
    for (const auto& [c, w] : out[r]) {
      if (slot[c] < 0) {
        if (free_slots.empty()) throw CapacityError("cycle-cover frontier exceeds 128 columns");
        slot[c] = free_slots.back();
        free_slots.pop_back();
      }
      moves.push_back({static_cast<Mask>(1) << slot[c], &w});
    }
    std::unordered_map<Mask, Rational, MaskHash> next;
    next.reserve(states.size() * 2);
    for (const auto& [mask, val] : states) {
      for (const auto& [bit, w] : moves) {
        if (mask & bit) continue;
        next[mask | bit] += val * *w;
      }
    }
    Mask closed = 0;
    for (const auto& [c, w] : out[r]) {
      if (--remaining[c] == 0) {
        closed |= static_cast<Mask>(1) << slot[c];
        free_slots.push_back(slot[c]);
      }
    }
    states.clear();
    for (auto& [mask, val] : next) {
      if ((mask & closed) == closed && val != 0) states[mask & ~closed] += val;
    }
    if (states.size() > kMaxCycleCoverStates) throw CapacityError("cycle-cover state space exceeds the guard");
    if (states.empty()) return 0;
  }
  const auto it = states.find(0);
  return it == states.end() ? Rational(0) : it->second;
}

Rational permanent_naive(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Rational total = 0;
  do {
    Rational prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= a(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Rational permanent_ryser(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  std::vector<Rational> row_sum(n, Rational(0));
  Rational total = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t i = 1; i < count; ++i) {
    const int j = std::countr_zero(i);
    gray ^= std::uint64_t{1} << j;
    const bool added = (gray >> j) & 1;
    for (std::size_t r = 0; r < n; ++r) {
      if (added) {
        row_sum[r] += a(r, j);
      } else {
        row_sum[r] -= a(r, j);
      }
    }
    Rational prod = 1;
    for (std::size_t r = 0; r < n && prod != 0; ++r) prod *= row_sum[r];
    if ((std::popcount(gray) & 1) == (n & 1)) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return total;
}

}  // namespace

Rational permanent(const RationalMatrix& a, PermanentMethod method, std::size_t guard) {
  if (a.rows() != a.cols()) throw InvalidArgument("permanent of a non-square matrix");
  const std::size_t n = a.rows();
  switch (method) {
    case PermanentMethod::naive:
      if (n > (guard ? guard : kDefaultNaivePermanent)) throw CapacityError("naive permanent size exceeds the guard");
      return permanent_naive(a);
    case PermanentMethod::ryser:
      if (n > std::min<std::size_t>(guard ? guard : kDefaultRyserPermanent, 62)) {
        throw CapacityError("Ryser permanent size exceeds the guard");
      }
      return permanent_ryser(a);
    case PermanentMethod::cycle_cover: {
      std::vector<std::vector<std::pair<std::size_t, Rational>>> out(n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          if (a(r, c) != 0) out[r].push_back({c, a(r, c)});
        }
      }
      return cycle_cover_dp(n, out);
    }
  }
  throw InvalidArgument("unknown permanent method");
}

Rational permanent(const Digraph& d, PermanentMethod method, std::size_t guard) {
  if (method != PermanentMethod::cycle_cover) return permanent(to_matrix(d), method, guard);
  const std::size_t n = d.vertex_count();
  std::vector<std::map<std::size_t, Rational>> merged(n);
  for (const auto& a : d.arcs()) merged[a.from][a.to] += a.weight;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& [c, w] : merged[r]) {
      if (w != 0) out[r].push_back({c, w});
    }
  }
  return cycle_cover_dp(n, out);
}

Rational z_subset_sum(const Multigraph& g, const Rational& q, const WeightMap& w, ZVariant variant,
                      std::size_t max_edges) {
  if (w.size() != g.edge_count()) throw InvalidArgument("weight map size does not match the edge count");
  if (std::all_of(w.begin(), w.end(), [&](const Rational& x) { return x == w.front(); })) {
    return z_subset_sum(g, q, w.empty() ? Rational(0) : w.front(), variant, max_edges);
  }
  require_edges(g, resolve_guard(max_edges, kDefaultSubsetBits));
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<Rational> by_components(n + 1, Rational(0));
  RollbackDisjointSets dsu(n);
  const auto edges = g.edges();
  std::vector<Rational> prod(m + 1);
  prod[0] = 1;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == m) {
      by_components[dsu.components()] += prod[i];
      return;
    }
    prod[i + 1] = prod[i];
    walk(i + 1);
    if (w[i] == 0) return;
    const bool merged = dsu.unite(edges[i].u, edges[i].v);
    prod[i + 1] = prod[i] * w[i];
    walk(i + 1);
    if (merged) dsu.rollback();
  };
  walk(0);
  const std::size_t base = variant == ZVariant::z0 ? component_count(g) : 0;
  const auto qp = powers(q, n);
  Rational total = 0;
  for (std::size_t k = base; k <= n; ++k) total += qp[k - base] * by_components[k];
  return total;
}

Rational z_subset_sum(const Multigraph& g, const Rational& q, const Rational& w, ZVariant variant,
                      std::size_t max_edges) {
  require_edges(g, resolve_guard(max_edges, kDefaultSubsetBits));
  const auto table = detail::subset_table(g);
  const std::size_t n = g.vertex_count();
  const std::size_t base = variant == ZVariant::z0 ? component_count(g) : 0;
  const auto qp = powers(q, n);
  const auto wp = powers(w, g.edge_count());
  Rational total = 0;
  for (std::size_t k = base; k <= n; ++k) {
    for (std::size_t a = 0; a <= g.edge_count(); ++a) {
      if (table[k][a] != 0) total += qp[k - base] * wp[a] * Rational(static_cast<long>(table[k][a]));
    }
  }
  return total;
}

Poly z_subset_sum_poly(const Multigraph& g, const Rational& q, const EdgeSet& minus_one, ZVariant variant,
                       std::size_t max_edges) {
  require_edges(g, resolve_guard(max_edges, kDefaultSubsetBits));
  std::vector<char> minus(g.edge_count(), 0);
  for (EdgeId e : minus_one) {
    if (e >= g.edge_count()) throw InvalidArgument("edge id out of range");
    minus.at(e) = 1;
  }
  const auto table = detail::subset_table(g, minus);
  const std::size_t n = g.vertex_count();
  const std::size_t base = variant == ZVariant::z0 ? component_count(g) : 0;
  const auto qp = powers(q, n);
  std::vector<Rational> coeffs(g.edge_count() + 1, Rational(0));
  for (std::size_t k = base; k <= n; ++k) {
    for (std::size_t a = 0; a <= g.edge_count(); ++a) {
      if (table[k][a] != 0) coeffs[a] += qp[k - base] * Rational(static_cast<long>(table[k][a]));
    }
  }
  return Poly(std::move(coeffs));
}

namespace {

Rational delcon(const Multigraph& g, const Rational& q, const WeightMap& w, ZVariant variant) {
  if (g.edge_count() == 0) {
    return variant == ZVariant::z ? pow(q, static_cast<long>(g.vertex_count())) : Rational(1);
  }
  const EdgeId e = g.edge_count() - 1;
  const Rational& we = w[e];
  auto carried = [&](const SurgeryResult& r) {
    WeightMap out(r.graph.edge_count());
    for (EdgeId old = 0; old < r.edge_map.size(); ++old) {
      if (r.edge_map[old]) out[*r.edge_map[old]] = w[old];
    }
    return out;
  };
  const SurgeryResult removed = edge_surgery(g, e, SurgeryKind::remove);
  const Rational without = delcon(removed.graph, q, carried(removed), variant);
  if (g.edge(e).is_loop()) return (1 + we) * without;
  const SurgeryResult contracted = edge_surgery(g, e, SurgeryKind::contract);
  const Rational with = delcon(contracted.graph, q, carried(contracted), variant);
  if (variant == ZVariant::z0 && is_bridge(g, e)) return q * without + we * with;
  return without + we * with;
}

}  // namespace

Rational z_delcon(const Multigraph& g, const Rational& q, const WeightMap& w, ZVariant variant) {
  if (w.size() != g.edge_count()) throw InvalidArgument("weight map size does not match the edge count");
  return delcon(g, q, w, variant);
}

Rational tutte_subset_sum(const Multigraph& g, const Rational& x, const Rational& y, std::size_t max_edges) {
  require_edges(g, resolve_guard(max_edges, kDefaultSubsetBits));
  const auto table = detail::subset_table(g);
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const std::size_t base = component_count(g);
  const auto xp = powers(x - 1, n);
  const auto yp = powers(y - 1, m + n);
  Rational total = 0;
  for (std::size_t k = base; k <= n; ++k) {
    for (std::size_t a = 0; a <= m; ++a) {
      if (table[k][a] != 0) total += xp[k - base] * yp[a + k - n] * Rational(static_cast<long>(table[k][a]));
    }
  }
  return total;
}

Rational convert_z_tutte(const Multigraph& g, const Rational& x, const Rational& y) {
  if (x == 1 || y == 1) throw UnsupportedPoint("the Z form of the Tutte polynomial needs x != 1 and y != 1");
  const Rational q = (x - 1) * (y - 1);
  const Rational z = z_subset_sum(g, q, y - 1, ZVariant::z);
  return z * pow(x - 1, -static_cast<long>(component_count(g))) * pow(y - 1, -static_cast<long>(g.vertex_count()));
}

Rational chromatic_from_tutte(const Multigraph& g, const Rational& q) {
  const long n = static_cast<long>(g.vertex_count());
  const long k = static_cast<long>(component_count(g));
  const Rational sign = (n - k) % 2 == 0 ? 1 : -1;
  return sign * pow(q, k) * tutte_subset_sum(g, 1 - q, 0);
}

Rational reliability_bruteforce(const Multigraph& g, const Rational& p) {
  if (p < 0 || p > 1) throw InvalidArgument("failure probability must lie in [0, 1]");
  const std::size_t k = component_count(g);
  if (k > 1) return 0;
  require_edges(g, resolve_guard(0, kDefaultSubsetBits));
  const auto table = detail::subset_table(g);
  const std::size_t m = g.edge_count();
  const auto up = powers(1 - p, m);
  const auto down = powers(p, m);
  Rational total = 0;
  for (std::size_t a = 0; a <= m; ++a) {
    if (table[k][a] != 0) total += up[a] * down[m - a] * Rational(static_cast<long>(table[k][a]));
  }
  return total;
}

}  // namespace oracles
}  // namespace countforge
