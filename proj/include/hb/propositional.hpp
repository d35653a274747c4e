#pragma once

// Propositional reasoning over quantifier-free formulas: atoms are keyed by
// their printed form, assignments are explicit maps, and tautology checking
// enumerates assignments in a deterministic order so the first falsifying
// assignment is reproducible.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hb/fol.hpp"

namespace hb {

// Truth assignment for ground-level atoms, keyed by printed atom.
using Assignment = std::map<std::string, bool>;

// The distinct atoms of a quantifier-free formula in first-occurrence
// (leftmost, depth-first) order. Throws Error "not-quantifier-free" on
// quantifiers.
std::vector<std::string> atom_keys(const FormulaPtr& f);

// Evaluates a quantifier-free formula under a total assignment of its atoms.
// Throws Error "not-quantifier-free" on quantifiers and Error
// "unassigned-atom" when an atom is missing from the assignment.
bool eval_prop(const FormulaPtr& f, const Assignment& a);

// First falsifying assignment of f, if any. Assignments are enumerated over
// the atoms of f in first-occurrence order, as ascending bitmasks with bit i
// giving the value of atom i (mask 0 first: all atoms false).
std::optional<Assignment> find_falsifying(const FormulaPtr& f);

bool is_tautology(const FormulaPtr& f);

// Renders an assignment as "atom=true, atom=false, ..." in map order.
std::string to_string(const Assignment& a);

}  // namespace hb
