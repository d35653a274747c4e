#pragma once

// Independent brute-force oracles used by the unit and acceptance tests.
//
// Each oracle re-derives a library result from first principles — the
// closure of a rewrite relation, or direct truth-table evaluation — without
// calling the library code under test, so agreement is meaningful.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hb/fol.hpp"

namespace hb::oracle {

// Truth-table tautology check written independently of the propositional
// module: its own atom collection (recursive, map-based) and its own
// recursive evaluator. Throws Error("not-quantifier-free") on quantifiers.
bool taut(const FormulaPtr& f);

// All quantifier prefixes reachable from ⋁s by exhaustively applying the
// outward quantifier-pulling rewrites Q x.A ∨ B → Q x.(A ∨ B) (and the
// three symmetric/conjunctive variants, each guarded by the usual freshness
// side condition) until the formula is prenex. Each prefix is rendered as
// "Q x; Q y; ...". The closure is a breadth-first fixpoint — rewriting
// never changes the formula's size, so it terminates.
std::set<std::string> prenex_prefixes(const Sequent& s);

// Renders a prefix in the same "Q x; ..." form for comparison.
std::string render_prefix(const std::vector<PrefixEntry>& prefix);

// All formulas reachable from `base` by at most `max_steps` replacements of
// an existentially rooted subformula occurrence G by G ∨ G, deduplicated up
// to renaming of bound variables.
std::vector<FormulaPtr> expansion_closure(const FormulaPtr& base, int max_steps);

// Exact membership in the unbounded duplication closure, decided from the
// candidate side: the last duplication always leaves a disjunction with two
// alpha-equal existentially rooted children, so undoing such disjunctions
// one at a time reaches the base iff the candidate is in the closure. Each
// undo strictly shrinks the formula, so the search terminates quickly even
// for large candidates.
bool in_expansion_closure(const FormulaPtr& base, const FormulaPtr& candidate);

// Every negation-normal formula with at most `max_size` nodes over the
// fixed vocabulary {P(x), ~P(x)} with binders "forall x" / "exists x" and
// the two binary connectives. Sizes count one node per literal, connective
// and quantifier.
std::vector<FormulaPtr> enumerate_formulas(std::size_t max_size);

// Deterministic random formula supply for the property tests.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::size_t below(std::size_t n);  // uniform in [0, n)
  bool coin();

  // Random quantifier-free formula over 0-ary atoms a0..a{atoms-1},
  // `size` connectives deep at most.
  FormulaPtr matrix(std::size_t atoms, std::size_t size);

private:
  std::mt19937_64 gen_;
};

}  // namespace hb::oracle
