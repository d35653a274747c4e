#pragma once

// Text front end: a small lexer and recursive-descent parser for terms,
// formulas in negation normal form, sequents, and the line-oriented
// sequent-file format with signature declarations.
//
// Grammar (ASCII):
//   formula  :=  quant | or-chain
//   quant    :=  ("forall" | "exists") IDENT "." formula
//   or-chain :=  and-chain ( "\/" and-chain )*          left-associative
//   and-chain:=  unary ( "/\" unary )*                  left-associative
//   unary    :=  "~" atom | "(" formula ")" | atom
//   atom     :=  IDENT [ "(" term ("," term)* ")" ]
//   term     :=  IDENT [ "(" term ("," term)* ")" ]
//
// A bare identifier in term position denotes the declared zero-ary function
// of that name if one exists, and a variable otherwise. Relation and
// function symbols must be declared; quantified variables must not collide
// with declared symbols. Negation applies to atoms only, and `->` is
// rejected outright: input is already in negation normal form.
//
// Sequent files are line oriented:
//   # comment
//   rel P/2
//   fun c/0
//   seq P(c, c), exists x. ~P(x, x)
//
// Errors are reported as Error with codes "syntax-error",
// "undeclared-symbol", "arity-mismatch" or "negation-not-atomic"; messages
// include one-based line and column positions.

#include <string>

#include "hb/fol.hpp"

namespace hb {

TermPtr parse_term(const std::string& text, const Signature& sig);
FormulaPtr parse_formula(const std::string& text, const Signature& sig);

// Comma-separated members with an optional leading "|-"; empty input (or a
// bare "|-") is the empty sequent.
Sequent parse_sequent(const std::string& text, const Signature& sig);

struct SequentFile {
  Signature signature;
  Sequent sequent;
};

// Parses the line-oriented sequent-file format described above.
SequentFile parse_sequent_document(const std::string& text);

// Reads `path` and parses its contents; throws Error("io-error") when the
// file cannot be read.
SequentFile load_sequent_file(const std::string& path);

// Reads a whole file into a string; throws Error("io-error") on failure.
std::string read_text_file(const std::string& path);

}  // namespace hb
