#include "countforge/inflate.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "countforge/error.hpp"

namespace countforge::inflate {

namespace {

Multigraph inflate_oriented(const Multigraph& g, const TwoTerminalGraph& h, bool reversed) {
  h.validate();
  const std::size_t inner = h.graph.vertex_count() - 2;
  Multigraph out(g.vertex_count());
  std::vector<VertexId> map(h.graph.vertex_count());
  for (const auto& e : g.edges()) {
    const VertexId base = out.vertex_count();
    for (std::size_t i = 0; i < inner; ++i) out.add_vertex();
    std::size_t next = base;
    for (VertexId x = 0; x < h.graph.vertex_count(); ++x) {
      if (x == h.terminal_left) {
        map[x] = reversed ? e.v : e.u;
      } else if (x == h.terminal_right) {
        map[x] = reversed ? e.u : e.v;
      } else {
        map[x] = next++;
      }
    }
    for (const auto& he : h.graph.edges()) out.add_edge(map[he.u], map[he.v]);
  }
  return out;
}

void validate_theta(const ThetaSpec& spec) {
  if (spec.empty()) throw InvalidArgument("theta spec must be nonempty");
  for (auto s : spec) {
    if (s == 0) throw InvalidArgument("theta path lengths must be positive");
  }
}

void validate_wump(const WumpSpec& spec) {
  if (spec.empty()) throw InvalidArgument("wump spec must be nonempty");
  for (auto s : spec) {
    if (s == 0) throw InvalidArgument("wump hump widths must be positive");
  }
}

Rational magnitude(const Rational& x) { return x < 0 ? Rational(-x) : x; }

std::size_t floor_log2(std::size_t m) {
  std::size_t r = 0;
  while ((m >> (r + 1)) != 0) ++r;
  return r;
}

std::size_t ceil_log2(std::size_t m) {
  std::size_t r = 0;
  while ((std::size_t{1} << r) < m) ++r;
  return r;
}

void require_distinct(const std::vector<Rational>& shifts, const char* what) {
  std::set<Rational> seen(shifts.begin(), shifts.end());
  if (seen.size() != shifts.size()) throw ConstructionError(std::string(what) + " shifts are not pairwise distinct");
}

}  // namespace

Multigraph inflate(const Multigraph& g, const TwoTerminalGraph& h) { return inflate_oriented(g, h, false); }

Multigraph inflate_reversed(const Multigraph& g, const TwoTerminalGraph& h) { return inflate_oriented(g, h, true); }

TwoTerminalGraph path_graph(std::size_t length) {
  if (length == 0) throw InvalidArgument("path length must be positive");
  TwoTerminalGraph t{Multigraph(length + 1), 0, length};
  for (VertexId i = 0; i < length; ++i) t.graph.add_edge(i, i + 1);
  return t;
}

TwoTerminalGraph bundle_graph(std::size_t width) {
  if (width == 0) throw InvalidArgument("bundle width must be positive");
  TwoTerminalGraph t{Multigraph(2), 0, 1};
  for (std::size_t i = 0; i < width; ++i) t.graph.add_edge(0, 1);
  return t;
}

Multigraph stretch(const Multigraph& g, std::size_t k) { return inflate(g, path_graph(k)); }

Multigraph thicken(const Multigraph& g, std::size_t k) { return inflate(g, bundle_graph(k)); }

TwoTerminalGraph theta_graph(const ThetaSpec& spec) {
  validate_theta(spec);
  TwoTerminalGraph t{Multigraph(2), 0, 1};
  for (auto s : spec) {
    VertexId prev = 0;
    for (std::size_t i = 1; i < s; ++i) {
      const VertexId v = t.graph.add_vertex();
      t.graph.add_edge(prev, v);
      prev = v;
    }
    t.graph.add_edge(prev, 1);
  }
  return t;
}

ShiftResult theta_shift(const Rational& q, const Rational& w, const ThetaSpec& spec) {
  validate_theta(spec);
  if (w == 0 || q == 0 || q == -2 * w) {
    throw DegenerateShift("theta shift needs w != 0 and q not in {0, -2w}");
  }
  const Rational base = 1 + q / w;
  Rational product = 1;
  Rational factor = 1;
  for (auto s : spec) {
    const long e = static_cast<long>(s);
    const Rational denom = pow(base, e) - 1;
    if (denom == 0) throw DegenerateShift("(1 + q/w)^s = 1 for s = " + std::to_string(s));
    product *= 1 + q / denom;
    factor *= (pow(q + w, e) - pow(w, e)) / q;
  }
  return {product - 1, factor};
}

ShiftResult series_parallel_shift(Composition kind, const std::vector<Rational>& weights, const Rational& q) {
  if (weights.empty()) throw InvalidArgument("series/parallel composition needs at least one edge");
  if (kind == Composition::bundle) {
    Rational product = 1;
    for (const auto& w : weights) product *= 1 + w;
    return {product - 1, 1};
  }
  if (q == 0) {
    Rational inverse = 0;
    Rational product = 1;
    for (const auto& w : weights) {
      if (w == 0) throw DegenerateShift("zero weight on a path at q = 0");
      inverse += 1 / w;
      product *= w;
    }
    if (inverse == 0) throw DegenerateShift("path weights have vanishing reciprocal sum");
    return {1 / inverse, inverse * product};
  }
  if (std::all_of(weights.begin(), weights.end(), [&](const Rational& w) { return w == weights.front(); })) {
    return theta_shift(q, weights.front(), {weights.size()});
  }
  Rational current = weights.front();
  Rational factor = 1;
  for (std::size_t i = 1; i < weights.size(); ++i) {
    const Rational denom = q + current + weights[i];
    if (denom == 0) throw DegenerateShift("series rule denominator q + w1 + w2 vanishes");
    factor *= denom;
    current = current * weights[i] / denom;
  }
  return {current, factor};
}

std::vector<ThetaSpec> generate_theta_sets(const Rational& q, const Rational& w, std::size_t m) {
  if (w == 0 || q == 0 || q == 1 || q == -w || q == -2 * w) {
    throw InvalidArgument("theta sets need w != 0 and q not in {0, 1, -w, -2w}");
  }
  const Rational b = magnitude(1 + q / w);
  const bool grows = b > 1;
  const Rational limit = grows ? Rational(1) : Rational(1 - q);
  auto f = [&](std::size_t s) -> Rational { return 1 + q / (pow(b, static_cast<long>(s)) - 1); };
  std::size_t s0 = 2;
  while (true) {
    const Rational v = f(s0);
    if (v != 0 && (v > 0) == (limit > 0)) break;
    s0 += 2;
  }
  const std::size_t L = std::max<std::size_t>(1, ceil_log2(m));
  const std::size_t ell = m == 0 ? 0 : floor_log2(m);
  const Rational A = std::max(Rational(1), magnitude(q - 1));
  const Rational B = std::min(Rational(1), magnitude(1 - q));
  const Rational lhs = 8 * Rational(static_cast<long>(m * m)) * pow(A, static_cast<long>(1 + L));
  std::size_t delta = 8;
  while (true) {
    const long e = static_cast<long>(delta * L);
    const Rational rhs = grows ? Rational(magnitude(q) * pow(b, e))
                                : Rational(magnitude(q) * pow(B, static_cast<long>(ell)) * pow(b, -e));
    if (lhs < rhs) break;
    delta += 2;
  }
  std::vector<ThetaSpec> sets;
  std::vector<Rational> shifts;
  for (std::size_t i = 0; i <= m; ++i) {
    ThetaSpec s;
    for (std::size_t j = 0; j <= ell; ++j) s.push_back(s0 + delta * L * (2 * j + ((i >> j) & 1)));
    shifts.push_back(theta_shift(q, w, s).shifted_weight);
    sets.push_back(std::move(s));
  }
  require_distinct(shifts, "theta");
  return sets;
}

TwoTerminalGraph wump_graph(const WumpSpec& spec) {
  validate_wump(spec);
  const std::size_t l = spec.size();
  TwoTerminalGraph t{Multigraph(l + 1), 0, 1};
  // Junction i: 0 for i = 0, 1 for i = l, i + 1 otherwise.
  auto junction = [l](std::size_t i) -> VertexId { return i == 0 ? 0 : i == l ? 1 : i + 1; };
  for (std::size_t i = 1; i <= l; ++i) {
    const std::size_t s = spec[i - 1];
    for (std::size_t path = 0; path < i; ++path) {
      VertexId prev = junction(i - 1);
      for (std::size_t k = 1; k < s; ++k) {
        const VertexId v = t.graph.add_vertex();
        t.graph.add_edge(prev, v);
        prev = v;
      }
      t.graph.add_edge(prev, junction(i));
    }
  }
  return t;
}

ShiftResult wump_shift(const Rational& w, const WumpSpec& spec) {
  validate_wump(spec);
  if (w == 0) throw DegenerateShift("wump shift needs w != 0");
  Rational inverse = 0;
  Rational product = 1;
  for (std::size_t i = 1; i <= spec.size(); ++i) {
    const long s = static_cast<long>(spec[i - 1]);
    const long il = static_cast<long>(i);
    const Rational hump = pow(1 + w / s, il) - 1;
    if (hump == 0) throw DegenerateShift("(1 + w/s_i)^i = 1 at hump " + std::to_string(i));
    inverse += 1 / hump;
    product *= pow(w, (s - 1) * il) * (pow(w + s, il) - pow(Rational(s), il));
  }
  if (inverse == 0) throw DegenerateShift("hump weights have vanishing reciprocal sum");
  return {1 / inverse, inverse * product};
}

std::size_t wump_period(const Rational& w) {
  if (w > 9) return 1;
  if (!(w > -1 && w < 0)) throw RangeError("wump sequences need w in (-1, 0) or w > 9, got " + to_string(w));
  const Rational base = 1 + w / 3;
  const Rational quarter(1, 4);
  std::size_t r = 1;
  Rational power = base;
  while (!(power < quarter)) {
    power *= base;
    ++r;
  }
  return r;
}

std::vector<WumpSpec> generate_wump_sequences(const Rational& w, std::size_t m) {
  const std::size_t r = wump_period(w);
  const std::size_t L = std::max<std::size_t>(1, ceil_log2(m + 1));
  std::vector<WumpSpec> out;
  std::vector<Rational> shifts;
  for (std::size_t i = 0; i <= m; ++i) {
    WumpSpec s(r * L, 2);
    for (std::size_t t = 1; t <= L; ++t) {
      if ((i >> (L - t)) & 1) s[t * r - 1] = 3;
    }
    shifts.push_back(wump_shift(w, s).shifted_weight);
    out.push_back(std::move(s));
  }
  require_distinct(shifts, "wump");
  return out;
}

}  // namespace countforge::inflate
