#pragma once

// Shared shorthand for the test suites: a default signature and terse
// parse-based constructors for terms, formulas and sequents.

#include <string>

#include "hb/fol.hpp"
#include "hb/parse.hpp"

namespace hb::testing {

// P/1, Q/1, R/2, and 0-ary p, q, r; constants c, d; unary function f.
inline Signature default_sig() {
  Signature sig;
  sig.add_relation("P", 1);
  sig.add_relation("Q", 1);
  sig.add_relation("R", 2);
  sig.add_relation("p", 0);
  sig.add_relation("q", 0);
  sig.add_relation("r", 0);
  sig.add_function("c", 0);
  sig.add_function("d", 0);
  sig.add_function("f", 1);
  return sig;
}

inline FormulaPtr F(const Signature& sig, const std::string& text) {
  return parse_formula(text, sig);
}
inline FormulaPtr F(const std::string& text) { return F(default_sig(), text); }

inline TermPtr T(const Signature& sig, const std::string& text) {
  return parse_term(text, sig);
}
inline TermPtr T(const std::string& text) { return T(default_sig(), text); }

inline Sequent S(const Signature& sig, const std::string& text) {
  return parse_sequent(text, sig);
}
inline Sequent S(const std::string& text) { return S(default_sig(), text); }

}  // namespace hb::testing
