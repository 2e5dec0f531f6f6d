#ifndef COUNTFORGE_ORACLES_HPP
#define COUNTFORGE_ORACLES_HPP

#include <cstddef>
#include <vector>

#include "countforge/exactmath.hpp"
#include "countforge/structures.hpp"

// Brute-force and classical evaluators. Everything the reductions relate is
// computed here independently; the property suites compare against these.
namespace countforge::oracles {

// Guards: 0 selects the default, which COUNTFORGE_MAX_SUBSET_BITS overrides
// for the 2^k enumerations.
inline constexpr std::size_t kDefaultSatVars = 30;
inline constexpr std::size_t kDefaultSubsetBits = 22;
inline constexpr std::size_t kDefaultCutVertices = 24;
inline constexpr std::size_t kDefaultColouringBits = 32;
inline constexpr std::size_t kDefaultNaivePermanent = 9;
inline constexpr std::size_t kDefaultRyserPermanent = 26;
// Columns simultaneously half-decided by the cycle-cover dynamic program.
inline constexpr std::size_t kMaxCycleCoverFrontier = 128;

// Resolves a guard argument: explicit values win, then the environment
// override, then `builtin`.
std::size_t resolve_guard(std::size_t requested, std::size_t builtin);

struct CutCount {
  std::size_t size = 0;
  Integer count = 0;
  friend bool operator==(const CutCount&, const CutCount&) = default;
};

Integer count_sat(const Cnf& f, std::size_t max_vars = 0);
// Assignments giving every clause both a true and a false literal.
Integer count_nae(const Cnf& f, std::size_t max_vars = 0);

// All independent vertex sets, the empty set included. Parallel edges are
// harmless; loops are rejected.
Integer count_independent_sets(const Multigraph& g);

// Maximum cut over vertex subsets C (C and its complement both counted).
// Parallel edges count with multiplicity. Vertices of degree two are summed
// out along their chains, so the guard bounds the remaining vertices.
CutCount count_maxcut(const Multigraph& g, std::size_t max_core_vertices = 0);
// Number of vertex subsets cutting exactly c edges, for c = 0..m.
std::vector<Integer> cut_size_distribution(const Multigraph& g, std::size_t max_vertices = 0);

// Minimum number of edges whose removal pairwise separates the terminals,
// and how many such edge sets exist.
CutCount count_3tmc(const TerminalTriple& t, std::size_t max_edges = 0);

// Proper colourings with `colours` colours; a loop forces zero.
Integer count_colourings(const Multigraph& g, unsigned colours, std::size_t max_bits = 0);
// chi(G; r) as a polynomial, summed over partitions into independent sets.
Poly chromatic_polynomial(const Multigraph& g);

enum class PermanentMethod { naive, ryser, cycle_cover };

Rational permanent(const RationalMatrix& a, PermanentMethod method, std::size_t guard = 0);
Rational permanent(const Digraph& d, PermanentMethod method, std::size_t guard = 0);

enum class ZVariant { z, z0 };

// sum_A q^{k(A)} prod_{e in A} w(e); the z0 variant uses k(A) - k(E).
Rational z_subset_sum(const Multigraph& g, const Rational& q, const WeightMap& w, ZVariant variant,
                      std::size_t max_edges = 0);
Rational z_subset_sum(const Multigraph& g, const Rational& q, const Rational& w, ZVariant variant,
                      std::size_t max_edges = 0);

// Polynomial in w where edges of `minus_one` carry the fixed weight -1 and
// all other edges carry w.
Poly z_subset_sum_poly(const Multigraph& g, const Rational& q, const EdgeSet& minus_one,
                       ZVariant variant = ZVariant::z0, std::size_t max_edges = 0);

// Deletion-contraction evaluation of the same quantity as z_subset_sum.
Rational z_delcon(const Multigraph& g, const Rational& q, const WeightMap& w, ZVariant variant);

Rational tutte_subset_sum(const Multigraph& g, const Rational& x, const Rational& y, std::size_t max_edges = 0);

// T(G;x,y) through Z(G;q,w) with q=(x-1)(y-1), w=y-1. Needs x != 1, y != 1.
Rational convert_z_tutte(const Multigraph& g, const Rational& x, const Rational& y);

// chi(G;q) = (-1)^{n-k(E)} q^{k(E)} T(G;1-q,0).
Rational chromatic_from_tutte(const Multigraph& g, const Rational& q);

// Probability that G stays connected when each edge fails independently
// with probability p. Disconnected graphs give 0.
Rational reliability_bruteforce(const Multigraph& g, const Rational& p);

}  // namespace countforge::oracles

#endif  // COUNTFORGE_ORACLES_HPP
