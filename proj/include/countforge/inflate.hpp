#ifndef COUNTFORGE_INFLATE_HPP
#define COUNTFORGE_INFLATE_HPP

#include <cstddef>
#include <vector>

#include "countforge/exactmath.hpp"
#include "countforge/structures.hpp"

namespace countforge::inflate {

struct ShiftResult {
  Rational shifted_weight;
  Rational per_edge_factor;
  friend bool operator==(const ShiftResult&, const ShiftResult&) = default;
};

// Path lengths of a Theta graph. The generator only emits distinct
// lengths; repeats are accepted and give parallel paths.
using ThetaSpec = std::vector<std::size_t>;
// Hump widths s_1..s_l of a Wump graph.
using WumpSpec = std::vector<std::size_t>;

// Replaces every edge uv (u <= v) by a fresh copy of h with the left
// terminal on u and the right terminal on v.
Multigraph inflate(const Multigraph& g, const TwoTerminalGraph& h);
// Same, with the terminals swapped.
Multigraph inflate_reversed(const Multigraph& g, const TwoTerminalGraph& h);

TwoTerminalGraph path_graph(std::size_t length);
TwoTerminalGraph bundle_graph(std::size_t width);
Multigraph stretch(const Multigraph& g, std::size_t k);
Multigraph thicken(const Multigraph& g, std::size_t k);

TwoTerminalGraph theta_graph(const ThetaSpec& spec);

// Z(G (x) Theta_S; q, w) = factor^{m(G)} Z(G; q, w_S).
ShiftResult theta_shift(const Rational& q, const Rational& w, const ThetaSpec& spec);

enum class Composition { path, bundle };

// Path at q = 0: 1/w' = sum 1/w_i and factor (1/w') prod w_i. Path at q != 0
// folds the two-edge series rule w1 w2 / (q + w1 + w2), routed through
// theta_shift when the weights are uniform. Bundle: w' = prod (1 + w_i) - 1,
// factor 1. The identity holds for Z and for Z0.
ShiftResult series_parallel_shift(Composition kind, const std::vector<Rational>& weights, const Rational& q);

// S_0..S_m with pairwise distinct theta shifts at (q, w).
std::vector<ThetaSpec> generate_theta_sets(const Rational& q, const Rational& w, std::size_t m);

// The i-th hump joins junctions i-1 and i by i parallel paths of s_i edges.
TwoTerminalGraph wump_graph(const WumpSpec& spec);

// Z0(G (x) W_S; 0, w) = factor^{m(G)} Z0(G; 0, w_S).
ShiftResult wump_shift(const Rational& w, const WumpSpec& spec);

// The multiplier r used by generate_wump_sequences: 1 for w > 9, otherwise
// the least r with (1 + w/3)^r < 1/4. RangeError outside (-1,0) and (9,inf).
std::size_t wump_period(const Rational& w);

// m+1 sequences with pairwise distinct wump shifts at w.
std::vector<WumpSpec> generate_wump_sequences(const Rational& w, std::size_t m);

}  // namespace countforge::inflate

#endif  // COUNTFORGE_INFLATE_HPP
