#ifndef COUNTFORGE_PIPELINES_HPP
#define COUNTFORGE_PIPELINES_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "countforge/exactmath.hpp"
#include "countforge/oracles.hpp"
#include "countforge/structures.hpp"

namespace countforge::pipelines {

// G' -> Z(G'; q, w) or Z0(G'; q, w) at a point fixed by the caller.
using EvalOracle = std::function<Rational(const Multigraph&)>;
// (G', w) -> Z0(G'; q, w) for a q fixed by the caller; only ever called on
// simple graphs.
using WeightedOracle = std::function<Rational(const Multigraph&, const Rational&)>;
// G' -> chi(G'; q) for a q fixed by the caller.
using ChromaticOracle = std::function<Rational(const Multigraph&)>;

// Coefficients of v -> Z(G; q, v) from the thickenings G_1..G_{m+1}.
Poly coeffs_by_thickening(const Multigraph& g, const Rational& q, const Rational& w, const EvalOracle& oracle);

// Coefficients of v -> Z(G; q, v) from Theta inflations. For q in {-w, -2w}
// every edge first becomes a 2-path of k-bundles.
Poly coeffs_by_theta(const Multigraph& g, const Rational& q, const Rational& w, const EvalOracle& oracle);

// Coefficients of v -> Z0(G; 0, v) from Wump inflations; the oracle answers
// Z0 at q = 0.
Poly coeffs_by_wump(const Multigraph& g, const Rational& w, const EvalOracle& oracle);

struct MaxcutFromIsing {
  // distribution[c] = number of vertex subsets cutting c edges.
  std::vector<Integer> distribution;
  oracles::CutCount maxcut;
};

MaxcutFromIsing maxcut_from_ising(const Multigraph& g);

// Number of minimum 3-terminal cuts, read off the leading coefficient of
// Z0 after adding a weight -1 triangle on the terminals.
Integer tmc3_from_z0(const TerminalTriple& t, const Rational& q);

// Coefficients of w -> Z0(G; q, w) where the three edges of `minus_one`
// carry weight -1, using only single-weight oracle calls on simple graphs.
Poly eliminate_T_edges(const Multigraph& g, const EdgeSet& minus_one, const Rational& q, const WeightedOracle& oracle);

// G + K_i: i new vertices adjacent to each other and to every vertex of G.
Multigraph join_clique(const Multigraph& g, std::size_t i);

// chi(G; 3) from an oracle for chi(.; q).
Rational chromatic3_via_linial(const Multigraph& g, const Rational& q, const ChromaticOracle& oracle);

// R(G;p) = p^{m-n+1} (1-p)^{n-1} T(G; 1, 1/p).
Rational reliability_from_tutte(const Multigraph& g, const Rational& p);

}  // namespace countforge::pipelines

#endif  // COUNTFORGE_PIPELINES_HPP
