#ifndef COUNTFORGE_PERMRED_HPP
#define COUNTFORGE_PERMRED_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "countforge/exactmath.hpp"
#include "countforge/structures.hpp"

// #3-SAT -> permanent of a {-1,0,1} digraph -> {0..n} weights -> {0,1}.
namespace countforge::permred {

struct PermInstance {
  Digraph digraph;
  // Indices into digraph.arcs() of the weight -1 self-loops.
  std::vector<std::size_t> neg_loop_arcs;
  // Half the literal occurrences. For a balanced formula every assignment
  // sets exactly this many occurrences false.
  std::size_t occurrence_count = 0;
};

// Clauses narrower than three literals repeat their last literal. Throws
// InvalidArgument on an empty clause or a clause wider than three.
Cnf pad_to_width3(const Cnf& f);

// Pads to width three, then appends (-x -x x) or (x x -x) until every
// variable occurs equally often in both polarities.
Cnf balance_literals(const Cnf& f);

// Selector, clause and equality gadgets. A selector arc labelled l and the
// clause arc of an occurrence of l are traversed exactly when l is false.
// Each assignment sigma contributes (-1)^{i(sigma)} 2^{j(sigma)}, with i and
// j the occurrences it sets false and true; balanced input gives
// per = (-2)^i #SAT.
PermInstance sat_to_perm_pm1(const Cnf& f);

using PermOracle = std::function<Rational(const Digraph&)>;

// Replaces the -1 loops by a = 0..d, one oracle call each, and evaluates the
// interpolant at -1.
Rational perm_value_by_interpolation(const PermInstance& inst, const PermOracle& oracle);

// Arcs of weight a >= 2 become a doubling chain with taps on the binary
// digits of a; weight 0 arcs are dropped.
Digraph expand_weights_to_01(const Digraph& d);

enum class SatAnswer { sat, unsat };

// Decides satisfiability of a formula with at most one model from the
// permanent residue mod 3. Residue 2 raises PromiseViolation.
SatAnswer unique_sat_mod3(const Cnf& f);

// Completion weight of one equality gadget, indexed by how many of its two
// through-paths are taken: [none, selector only, clause only, both].
std::array<Rational, 4> equality_gadget_table();

// Completion weight of one clause gadget indexed by the mask of outer arcs
// traversed (bit k: arc of literal k+1).
std::array<Rational, 8> clause_gadget_table();

}  // namespace countforge::permred

#endif  // COUNTFORGE_PERMRED_HPP
