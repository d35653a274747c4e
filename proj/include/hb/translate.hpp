#pragma once

// Constructive translation from sequent-calculus proofs to Herbrand-style
// certificates. Each proof rule has an admissibility step on certificates;
// contraction is handled by a structural transformation (deep_contract) that
// merges a duplicated subformula while keeping the certificate valid.

#include <set>

#include "hb/gs.hpp"
#include "hb/herbrand.hpp"

namespace hb {

// Certificate under construction: an expansion of a base sequent, the prefix
// listing its binders in a nesting-respecting order, and the witness terms
// for the existential prefix entries. The matrix is always derived from the
// expansion, so it is not stored.
struct WorkingCert {
  Sequent expansion;
  std::vector<PrefixEntry> prefix;
  std::vector<TermPtr> sigma;
};

// Derives the full certificate: matrix = quantifier erasure of the
// expansion's disjunction.
HerbrandProof to_herbrand_proof(const WorkingCert& c);

// The positions in `expansion` that realize position p of `base`, where
// expansion is member-wise an expansion of base. There are several when an
// existential ancestor of p was duplicated; the result is in left-to-right
// order and the returned subtrees are pairwise disjoint.
std::vector<PositionPath> hole_images(const Sequent& base, const Sequent& expansion,
                                      const PositionPath& p);

// Precondition: cert is a valid certificate for `base` and base has A \/ A
// (two structurally equal copies) at position p. Contracts the duplicate:
// afterwards base has A at p and cert is a valid certificate for the new
// base. Recurses on the shape of A; existential A needs no change because a
// disjunction of two expansions of an existential formula is already an
// expansion of it.
void deep_contract(WorkingCert& cert, Sequent& base, const PositionPath& p);

// Precondition: cert is a valid certificate for `base`. Replaces the
// subformula A at position p of base by A \/ A and, at every image of p,
// duplicates the expansion subtree with freshly renamed binders, inserting
// each copied binder immediately after its original in the prefix and giving
// copied existential entries the correspondingly renamed witness terms.
// Inverse direction of deep_contract; useful for generating contraction
// inputs.
void duplicate_at(WorkingCert& cert, Sequent& base, const PositionPath& p);

// Translates a valid proof into a certificate for its root conclusion. The
// proof is re-checked first; an invalid proof throws Error "invalid-proof".
// Throws Error "no-distinguished-constant" if a weakened-in or vacated
// existential position needs a ground filler term but the signature has no
// zero-ary function.
HerbrandProof translate(const Signature& sig, const GSProof& proof);

}  // namespace hb
