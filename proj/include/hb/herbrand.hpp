#pragma once

// Certificates of first-order validity: an expansion of the goal sequent, a
// prenex form of the expansion, and witness terms for its existential
// variables whose substitution instance of the matrix is a propositional
// tautology. The checker validates the three parts independently.

#include <set>
#include <string>
#include <vector>

#include "hb/fol.hpp"
#include "hb/verdict.hpp"

namespace hb {

struct HerbrandProof {
  Sequent expansion;               // member-wise expansion of the goal sequent
  PrenexFormula prenex;            // prenex form of the expansion disjunction
  std::vector<TermPtr> witnesses;  // one term per existential prefix entry, in prefix order
};

// True iff `candidate` can be produced from `original` (up to renaming of
// bound variables) by repeatedly replacing existential subformulas E with
// E \/ E. The empty replacement sequence is allowed, so every formula is an
// expansion of itself.
bool is_strong_expansion(const FormulaPtr& original, const FormulaPtr& candidate);

// Validates the witness terms against a prenex formula:
//   (1) each witness may use only `ambient` variables and universal prefix
//       variables bound before its own existential position
//       (code "variable-condition-violated", detail index = 1-based position
//       of the offending existential entry);
//   (2) substituting the witnesses into the matrix yields a propositional
//       tautology (code "matrix-not-tautology", detail assignment = first
//       falsifying assignment).
// A witness count differing from the number of existential entries is
// rejected with code "witness-count-mismatch".
Verdict check_witnessing(const PrenexFormula& p, const std::vector<TermPtr>& witnesses,
                         const std::set<std::string>& ambient);

// Substitutes the i-th witness for the i-th existential prefix variable in
// the matrix. Precondition: witness count matches and no witness mentions an
// existential prefix variable.
FormulaPtr substitute_witnesses(const PrenexFormula& p, const std::vector<TermPtr>& witnesses);

// Per-stage switches; disabling a stage skips it (used to demonstrate that
// every stage rejects something).
struct HerbrandCheckOptions {
  bool check_expansion = true;
  bool check_prenexification = true;
  bool check_variable_condition = true;
  bool check_tautology = true;
};

// Full certificate check for `goal`:
//   (a) expansion is member-wise a strong expansion of goal
//       (code "not-an-expansion", detail member = 0-based index),
//   (b) prenex is a prenexification of the expansion
//       (code "not-a-prenexification"),
//   (c) witnesses satisfy check_witnessing with the goal's free variables as
//       ambient variables.
// All formulas and terms must be well-formed over sig; violations throw Error
// "ill-formed-input".
Verdict check_herbrand(const Signature& sig, const Sequent& goal, const HerbrandProof& hp,
                       const HerbrandCheckOptions& opt = {});

}  // namespace hb
