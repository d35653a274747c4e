#pragma once

// First-order terms, formulas in negation normal form, signatures,
// sequents, prenex forms and the core syntactic operations on them.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hb {

// ---------- Errors ----------

// Thrown on precondition violations and malformed input. `code` is a stable
// kebab-case identifier; `what()` carries a human-readable message.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(msg), code(std::move(c)) {}
};

// ---------- Terms ----------

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
  enum class Kind { Var, App };

  static TermPtr var(std::string name);
  static TermPtr app(std::string fn, std::vector<TermPtr> args);

  Kind kind() const { return kind_; }
  bool is_var() const { return kind_ == Kind::Var; }
  // Variable name, or function symbol for applications.
  const std::string& sym() const { return sym_; }
  const std::vector<TermPtr>& args() const { return args_; }
  std::size_t hash() const { return hash_; }

private:
  Term(Kind k, std::string s, std::vector<TermPtr> a, std::size_t h)
      : kind_(k), sym_(std::move(s)), args_(std::move(a)), hash_(h) {}
  Kind kind_;
  std::string sym_;
  std::vector<TermPtr> args_;
  std::size_t hash_;
};

bool term_equal(const TermPtr& a, const TermPtr& b);
std::string to_string(const TermPtr& t);
std::size_t term_size(const TermPtr& t);   // node count
std::size_t term_depth(const TermPtr& t);  // leaves have depth 0
void term_vars(const TermPtr& t, std::set<std::string>& out);
std::set<std::string> term_vars(const TermPtr& t);

// Replaces every occurrence of variable x by r.
TermPtr substitute_term(const TermPtr& t, const std::string& x, const TermPtr& r);

// ---------- Formulas ----------

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Negation normal form: negation appears only on atoms.
class Formula {
public:
  enum class Kind { Atom, NegAtom, And, Or, Forall, Exists };

  static FormulaPtr atom(std::string rel, std::vector<TermPtr> args = {});
  static FormulaPtr natom(std::string rel, std::vector<TermPtr> args = {});
  static FormulaPtr conj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr disj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr forall(std::string v, FormulaPtr body);
  static FormulaPtr exists(std::string v, FormulaPtr body);

  Kind kind() const { return kind_; }
  bool is_literal() const { return kind_ == Kind::Atom || kind_ == Kind::NegAtom; }
  bool is_binary() const { return kind_ == Kind::And || kind_ == Kind::Or; }
  bool is_quant() const { return kind_ == Kind::Forall || kind_ == Kind::Exists; }

  // Relation symbol (literals) or bound variable (quantifiers).
  const std::string& sym() const { return sym_; }
  const std::vector<TermPtr>& args() const { return args_; }
  const FormulaPtr& left() const { return lhs_; }
  const FormulaPtr& right() const { return rhs_; }
  const FormulaPtr& body() const { return lhs_; }
  std::size_t hash() const { return hash_; }

private:
  Formula(Kind k, std::string s, std::vector<TermPtr> a, FormulaPtr l,
          FormulaPtr r, std::size_t h)
      : kind_(k), sym_(std::move(s)), args_(std::move(a)), lhs_(std::move(l)),
        rhs_(std::move(r)), hash_(h) {}
  Kind kind_;
  std::string sym_;
  std::vector<TermPtr> args_;
  FormulaPtr lhs_, rhs_;  // And/Or children; quantifier body in lhs_
  std::size_t hash_;
};

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);
std::string to_string(const FormulaPtr& f);
std::size_t formula_size(const FormulaPtr& f);  // formula nodes; literals count 1

// De Morgan dual; an involution on NNF formulas.
FormulaPtr negate(const FormulaPtr& f);

// Literals have rank 0; each connective or quantifier adds 1 over the max of
// its children.
std::size_t rank(const FormulaPtr& f);

void free_vars(const FormulaPtr& f, std::set<std::string>& out);
std::set<std::string> free_vars(const FormulaPtr& f);
void bound_vars(const FormulaPtr& f, std::set<std::string>& out);
std::set<std::string> bound_vars(const FormulaPtr& f);

// All identifiers that could clash with a variable name: free and bound
// variables plus every relation and function symbol occurring in f.
void all_names(const FormulaPtr& f, std::set<std::string>& out);

bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b);

// Capture-avoiding substitution of r for free occurrences of x. Binders are
// renamed (base, base1, base2, ...) only when capture would occur.
FormulaPtr substitute(const FormulaPtr& f, const std::string& x, const TermPtr& r);

// Smallest name of the form base, base1, base2, ... not in used; the chosen
// name is added to used.
std::string fresh_name(const std::string& base, std::set<std::string>& used);

// Renames binders so that they are pairwise distinct and disjoint from both
// the free variables of f and `reserved`. First come, first served: a binder
// keeps its name unless it clashes. Result is alpha-equivalent to f.
FormulaPtr alpha_normalize(const FormulaPtr& f, const std::set<std::string>& reserved = {});

// ---------- Signatures ----------

class Signature {
public:
  // Declares a symbol; duplicate names (in either table) are rejected.
  void add_relation(const std::string& name, std::size_t arity);
  void add_function(const std::string& name, std::size_t arity);

  std::optional<std::size_t> relation_arity(const std::string& name) const;
  std::optional<std::size_t> function_arity(const std::string& name) const;
  const std::map<std::string, std::size_t>& relations() const { return relations_; }
  const std::map<std::string, std::size_t>& functions() const { return functions_; }

  // Lexicographically smallest zero-ary function symbol. Every signature used
  // by the checkers must have one.
  std::optional<std::string> distinguished_constant() const;

  // Arity-checks every symbol occurrence; unknown symbols fail.
  bool well_formed(const TermPtr& t, std::string* why = nullptr) const;
  bool well_formed(const FormulaPtr& f, std::string* why = nullptr) const;

private:
  std::map<std::string, std::size_t> relations_;
  std::map<std::string, std::size_t> functions_;
};

// ---------- Sequents ----------

// A sequent is an ordered sequence of formulas (all on the right).
using Sequent = std::vector<FormulaPtr>;

bool sequent_equal(const Sequent& a, const Sequent& b);
std::string to_string(const Sequent& s);
std::size_t sequent_hash(const Sequent& s);
std::set<std::string> free_vars(const Sequent& s);
std::set<std::string> bound_vars(const Sequent& s);

// Right-nested disjunction of the members; rejects empty sequents.
FormulaPtr big_or(const Sequent& s);

// Binders pairwise distinct and no variable both bound and free.
bool is_alpha_normal(const FormulaPtr& f);
bool is_alpha_normal(const Sequent& s);

// Renames binders across all members so the sequent disjunction is
// alpha-normal, additionally avoiding `reserved`.
Sequent alpha_normalize(const Sequent& s, const std::set<std::string>& reserved = {});

// ---------- Prenex forms ----------

enum class Quant { Forall, Exists };

struct PrefixEntry {
  Quant q;
  std::string var;
  bool operator==(const PrefixEntry& o) const { return q == o.q && var == o.var; }
};

// Quantifier prefix over a quantifier-free matrix. Prefix variables are
// pairwise distinct.
struct PrenexFormula {
  std::vector<PrefixEntry> prefix;
  FormulaPtr matrix;
};

bool is_quantifier_free(const FormulaPtr& f);
std::string to_string(const PrenexFormula& p);

// Deletes quantifiers, keeping the propositional skeleton.
FormulaPtr erase_quantifiers(const FormulaPtr& f);

// Structural equality modulo reassociation of disjunction spines (at every
// depth); conjunction shape is compared exactly.
bool assoc_eq(const FormulaPtr& a, const FormulaPtr& b);

// One quantifier occurrence of a formula, with the binders it sits under.
struct QuantOccurrence {
  Quant q;
  std::string var;
  std::vector<std::string> ancestors;  // enclosing binder variables, outermost first
};

// Quantifier occurrences of f in leftmost-outermost traversal order.
std::vector<QuantOccurrence> quant_occurrences(const FormulaPtr& f);

// Builds the prenexification of s whose prefix lists the binders of the
// alpha-normal disjunction of s in `order`. Throws Error
// "sequent-not-alpha-normal" or "order-not-a-valid-linearization".
PrenexFormula prenexify(const Sequent& s, const std::vector<std::string>& order);

// True iff p's prefix is a nesting-respecting linearization of the quantifier
// occurrences of the (alpha-normal) disjunction of s and p's matrix equals its
// quantifier erasure up to disjunction reassociation.
bool is_prenexification_of(const Sequent& s, const PrenexFormula& p);

// ---------- Positions ----------

struct PathStep {
  enum class Kind { Member, Left, Right, Body };
  Kind kind;
  std::size_t index = 0;  // Member only

  static PathStep member(std::size_t i) { return {Kind::Member, i}; }
  static PathStep left() { return {Kind::Left, 0}; }
  static PathStep right() { return {Kind::Right, 0}; }
  static PathStep body() { return {Kind::Body, 0}; }
  bool operator==(const PathStep& o) const { return kind == o.kind && index == o.index; }
};

// A position in a sequent: a Member step followed by formula steps.
using PositionPath = std::vector<PathStep>;

std::string to_string(const PositionPath& p);

// Subformula at p; throws Error "path-mismatch" if p does not resolve.
FormulaPtr at_path(const Sequent& s, const PositionPath& p);
FormulaPtr at_path(const FormulaPtr& f, const PositionPath& p, std::size_t from = 0);

// Replaces the subformula at p.
Sequent replace_at(const Sequent& s, const PositionPath& p, const FormulaPtr& g);
FormulaPtr replace_at(const FormulaPtr& f, const PositionPath& p, const FormulaPtr& g,
                      std::size_t from = 0);

}  // namespace hb
