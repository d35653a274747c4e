#pragma once

// One-sided sequent calculus with explicit structural rules. Rules that build
// a connective act on the rightmost member(s); quantifier rules target an
// explicit member index; exchange carries an explicit permutation. Proof
// trees store the full conclusion at every node, so each rule application is
// checkable locally.

#include <optional>
#include <string>
#include <vector>

#include "hb/fol.hpp"
#include "hb/verdict.hpp"

namespace hb {

enum class Rule {
  Ax,         // |- L, ~L for dual literals
  OrR,        // ... A, B        =>  ... A \/ B
  AndR,       // G,A and G',B    =>  G, G', A /\ B
  ContractR,  // ... A, A        =>  ... A
  WeakenR,    // ...             =>  ..., A
  ExistsR,    // member i: B[x := t]  =>  exists x. B
  ForallR,    // member i: B[x := z]  =>  forall x. B   (eigenvariable z)
  ExchangeR,  // conclusion[i] = premise[perm[i]]
};

const char* rule_name(Rule r);

struct GSProof {
  Rule rule = Rule::Ax;
  Sequent conclusion;
  TermPtr witness;                // ExistsR only
  std::string eigen;              // ForallR only
  std::size_t member = 0;         // ExistsR / ForallR target member
  std::vector<std::size_t> perm;  // ExchangeR only
  std::vector<GSProof> premises;
};

std::size_t proof_size(const GSProof& p);   // number of rule applications
std::size_t proof_depth(const GSProof& p);  // longest root-to-leaf node count

// Independent checks that can be switched off one at a time (used to
// demonstrate that each rejects some invalid proof on its own).
struct GsCheckOptions {
  bool check_eigen_context = true;  // eigenvariable not free in its conclusion
  bool check_eigen_reuse = true;    // eigenvariables pairwise distinct
  bool check_eigen_escape = true;   // eigenvariable confined to its subproof
  bool check_barendregt = true;     // no variable both free and bound in the tree
};

// Validates every rule application and the variable discipline:
//   - "rule-mismatch" (detail node = dot-joined premise path, root is ""):
//     a node's premises do not match its rule's schema;
//   - "eigenvariable-free-in-context": the eigenvariable occurs free in the
//     introducing node's own conclusion;
//   - "eigenvariable-reused": two quantifier introductions share an
//     eigenvariable;
//   - "eigenvariable-escapes-subproof": an eigenvariable occurs free in a
//     node outside the introducing node's subtree;
//   - "barendregt-violation": some variable occurs both free and bound among
//     the tree's sequents (the lexicographically least offender is reported).
// Ill-formed formulas over sig throw Error "ill-formed-input".
Verdict check_gs(const Signature& sig, const GSProof& proof,
                 const GsCheckOptions& opt = {});

// ---------- Proof search ----------

// Full: contraction applies to any rightmost member. Restricted: contraction
// applies only when the rightmost member is quantifier-free or starts with an
// existential quantifier.
enum class SearchPolicy { Full, Restricted };

struct SearchLimits {
  std::size_t max_depth = 8;       // bound on root-to-leaf rule applications
  std::size_t max_term_depth = 1;  // bound on ground witness term depth
  std::size_t max_nodes = 20'000'000;  // overall expansion budget
};

enum class SearchStatus { Proved, Exhausted, NodeLimit };

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<GSProof> proof;  // present iff status == Proved
  std::size_t nodes_expanded = 0;
  std::size_t depth_reached = 0;  // deepest iteration completed or proved at
};

// Iterative-deepening backward search over proof-tree depth. Deterministic:
// rules are tried in a fixed order and witness candidates (free variables of
// the goal plus ground terms up to the term-depth bound) are ordered by size
// then lexicographically. Goals in which some variable occurs both free and
// bound are immediately Exhausted, since no proof of them can satisfy
// check_gs. Exhausted means the whole space up to the limits was searched.
SearchResult search_gs(const Signature& sig, const Sequent& goal, SearchPolicy policy,
                       const SearchLimits& limits = {});

}  // namespace hb
