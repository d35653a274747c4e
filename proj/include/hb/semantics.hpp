#pragma once

// Finite-universe semantics: evaluation of sentences in explicit first-order
// structures and exhaustive validity checking over all structures up to a
// bounded universe size. Used as an independent ground-truth check on the
// other components, so it is deliberately brute-force.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hb/fol.hpp"

namespace hb {

// A finite structure: universe {0, ..., universe-1}, a truth table per
// relation symbol and a value table per function symbol. Tables are flattened
// in row-major order: the entry for arguments (e1, ..., ea) over universe n
// sits at index e1*n^(a-1) + ... + ea.
struct Interpretation {
  std::size_t universe = 1;
  std::map<std::string, std::vector<bool>> relations;
  std::map<std::string, std::vector<std::size_t>> functions;
};

std::string to_string(const Interpretation& m);

// Variable environment: free variables to universe elements.
using VarEnv = std::map<std::string, std::size_t>;

// Evaluates a term / formula in m under env. Throws Error
// "unbound-free-variable" for variables missing from env and Error
// "no-interpretation" for symbols missing from m's tables.
std::size_t evaluate(const TermPtr& t, const Interpretation& m, const VarEnv& env);
bool evaluate(const FormulaPtr& f, const Interpretation& m, const VarEnv& env = {});

// Universal closure: binds the free variables of f (in sorted order,
// outermost first) with fresh binder names where needed.
FormulaPtr close_universally(const FormulaPtr& f);

// First structure of universe size <= max_size (sizes ascending, tables
// enumerated as ascending odometers) in which the sentence f is false.
// Only symbols occurring in f are given tables. Throws Error
// "not-a-sentence" if f has free variables.
std::optional<Interpretation> find_countermodel(const FormulaPtr& f, std::size_t max_size);

// True iff f holds in every structure with universe size <= max_size.
bool valid_up_to(const FormulaPtr& f, std::size_t max_size);

}  // namespace hb
