#include "hb/fol.hpp"

#include <algorithm>
#include <sstream>

namespace hb {

// ---------- Hashing ----------

static std::size_t hash_combine(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

static std::size_t hash_string(const std::string& s) {
  return std::hash<std::string>{}(s);
}

// ---------- Terms ----------

TermPtr Term::var(std::string name) {
  std::size_t h = hash_combine(1, hash_string(name));
  return TermPtr(new Term(Kind::Var, std::move(name), {}, h));
}

TermPtr Term::app(std::string fn, std::vector<TermPtr> args) {
  std::size_t h = hash_combine(2, hash_string(fn));
  for (const auto& a : args) h = hash_combine(h, a->hash());
  return TermPtr(new Term(Kind::App, std::move(fn), std::move(args), h));
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash() != b->hash() || a->kind() != b->kind() || a->sym() != b->sym() ||
      a->args().size() != b->args().size())
    return false;
  for (std::size_t i = 0; i < a->args().size(); ++i)
    if (!term_equal(a->args()[i], b->args()[i])) return false;
  return true;
}

std::string to_string(const TermPtr& t) {
  if (t->is_var() || t->args().empty()) return t->sym();
  std::ostringstream out;
  out << t->sym() << '(';
  for (std::size_t i = 0; i < t->args().size(); ++i) {
    if (i) out << ", ";
    out << to_string(t->args()[i]);
  }
  out << ')';
  return out.str();
}

std::size_t term_size(const TermPtr& t) {
  std::size_t n = 1;
  for (const auto& a : t->args()) n += term_size(a);
  return n;
}

std::size_t term_depth(const TermPtr& t) {
  std::size_t d = 0;
  for (const auto& a : t->args()) d = std::max(d, 1 + term_depth(a));
  return d;
}

void term_vars(const TermPtr& t, std::set<std::string>& out) {
  if (t->is_var()) {
    out.insert(t->sym());
    return;
  }
  for (const auto& a : t->args()) term_vars(a, out);
}

std::set<std::string> term_vars(const TermPtr& t) {
  std::set<std::string> out;
  term_vars(t, out);
  return out;
}

TermPtr substitute_term(const TermPtr& t, const std::string& x, const TermPtr& r) {
  if (t->is_var()) return t->sym() == x ? r : t;
  bool changed = false;
  std::vector<TermPtr> args;
  args.reserve(t->args().size());
  for (const auto& a : t->args()) {
    args.push_back(substitute_term(a, x, r));
    changed = changed || args.back().get() != a.get();
  }
  return changed ? Term::app(t->sym(), std::move(args)) : t;
}

// ---------- Formula construction ----------

FormulaPtr Formula::atom(std::string rel, std::vector<TermPtr> args) {
  std::size_t h = hash_combine(11, hash_string(rel));
  for (const auto& a : args) h = hash_combine(h, a->hash());
  return FormulaPtr(new Formula(Kind::Atom, std::move(rel), std::move(args), nullptr, nullptr, h));
}

FormulaPtr Formula::natom(std::string rel, std::vector<TermPtr> args) {
  std::size_t h = hash_combine(12, hash_string(rel));
  for (const auto& a : args) h = hash_combine(h, a->hash());
  return FormulaPtr(new Formula(Kind::NegAtom, std::move(rel), std::move(args), nullptr, nullptr, h));
}

FormulaPtr Formula::conj(FormulaPtr l, FormulaPtr r) {
  std::size_t h = hash_combine(hash_combine(13, l->hash()), r->hash());
  return FormulaPtr(new Formula(Kind::And, "", {}, std::move(l), std::move(r), h));
}

FormulaPtr Formula::disj(FormulaPtr l, FormulaPtr r) {
  std::size_t h = hash_combine(hash_combine(14, l->hash()), r->hash());
  return FormulaPtr(new Formula(Kind::Or, "", {}, std::move(l), std::move(r), h));
}

FormulaPtr Formula::forall(std::string v, FormulaPtr body) {
  std::size_t h = hash_combine(hash_combine(15, hash_string(v)), body->hash());
  return FormulaPtr(new Formula(Kind::Forall, std::move(v), {}, std::move(body), nullptr, h));
}

FormulaPtr Formula::exists(std::string v, FormulaPtr body) {
  std::size_t h = hash_combine(hash_combine(16, hash_string(v)), body->hash());
  return FormulaPtr(new Formula(Kind::Exists, std::move(v), {}, std::move(body), nullptr, h));
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash() != b->hash() || a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: {
      if (a->sym() != b->sym() || a->args().size() != b->args().size()) return false;
      for (std::size_t i = 0; i < a->args().size(); ++i)
        if (!term_equal(a->args()[i], b->args()[i])) return false;
      return true;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return formula_equal(a->left(), b->left()) && formula_equal(a->right(), b->right());
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return a->sym() == b->sym() && formula_equal(a->body(), b->body());
  }
  return false;
}

// ---------- Printing ----------

// Precedence: quantifiers 0 (scope extends right), \/ 1, /\ 2, literals 3.
// A subexpression is parenthesized when its precedence is below the context.
static void print_formula(std::ostringstream& out, const FormulaPtr& f, int ctx) {
  auto atom_body = [&](const FormulaPtr& g) {
    out << g->sym();
    if (!g->args().empty()) {
      out << '(';
      for (std::size_t i = 0; i < g->args().size(); ++i) {
        if (i) out << ", ";
        out << to_string(g->args()[i]);
      }
      out << ')';
    }
  };
  switch (f->kind()) {
    case Formula::Kind::Atom:
      atom_body(f);
      return;
    case Formula::Kind::NegAtom:
      out << '~';
      atom_body(f);
      return;
    case Formula::Kind::Or: {
      bool paren = ctx > 1;
      if (paren) out << '(';
      print_formula(out, f->left(), 1);
      out << " \\/ ";
      print_formula(out, f->right(), 2);
      if (paren) out << ')';
      return;
    }
    case Formula::Kind::And: {
      bool paren = ctx > 2;
      if (paren) out << '(';
      print_formula(out, f->left(), 2);
      out << " /\\ ";
      print_formula(out, f->right(), 3);
      if (paren) out << ')';
      return;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool paren = ctx > 0;
      if (paren) out << '(';
      out << (f->kind() == Formula::Kind::Forall ? "forall " : "exists ");
      out << f->sym() << ". ";
      print_formula(out, f->body(), 0);
      if (paren) out << ')';
      return;
    }
  }
}

std::string to_string(const FormulaPtr& f) {
  std::ostringstream out;
  print_formula(out, f, 0);
  return out.str();
}

std::size_t formula_size(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom:
      return 1;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return 1 + formula_size(f->left()) + formula_size(f->right());
    default:
      return 1 + formula_size(f->body());
  }
}

// ---------- Basic operations ----------

FormulaPtr negate(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
      return Formula::natom(f->sym(), f->args());
    case Formula::Kind::NegAtom:
      return Formula::atom(f->sym(), f->args());
    case Formula::Kind::And:
      return Formula::disj(negate(f->left()), negate(f->right()));
    case Formula::Kind::Or:
      return Formula::conj(negate(f->left()), negate(f->right()));
    case Formula::Kind::Forall:
      return Formula::exists(f->sym(), negate(f->body()));
    case Formula::Kind::Exists:
      return Formula::forall(f->sym(), negate(f->body()));
  }
  throw Error("internal", "unreachable formula kind");
}

std::size_t rank(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom:
      return 0;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return 1 + std::max(rank(f->left()), rank(f->right()));
    default:
      return 1 + rank(f->body());
  }
}

static void free_vars_walk(const FormulaPtr& f, std::set<std::string>& bound,
                           std::set<std::string>& out) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: {
      std::set<std::string> vs;
      for (const auto& a : f->args()) term_vars(a, vs);
      for (const auto& v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
      free_vars_walk(f->left(), bound, out);
      free_vars_walk(f->right(), bound, out);
      return;
    default: {
      bool added = bound.insert(f->sym()).second;
      free_vars_walk(f->body(), bound, out);
      if (added) bound.erase(f->sym());
      return;
    }
  }
}

void free_vars(const FormulaPtr& f, std::set<std::string>& out) {
  std::set<std::string> bound;
  free_vars_walk(f, bound, out);
}

std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> out;
  free_vars(f, out);
  return out;
}

void bound_vars(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom:
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      bound_vars(f->left(), out);
      bound_vars(f->right(), out);
      return;
    default:
      out.insert(f->sym());
      bound_vars(f->body(), out);
      return;
  }
}

std::set<std::string> bound_vars(const FormulaPtr& f) {
  std::set<std::string> out;
  bound_vars(f, out);
  return out;
}

static void term_names(const TermPtr& t, std::set<std::string>& out) {
  out.insert(t->sym());
  for (const auto& a : t->args()) term_names(a, out);
}

void all_names(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom:
      out.insert(f->sym());
      for (const auto& a : f->args()) term_names(a, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      all_names(f->left(), out);
      all_names(f->right(), out);
      return;
    default:
      out.insert(f->sym());
      all_names(f->body(), out);
      return;
  }
}

// ---------- Alpha equivalence ----------

static std::optional<std::size_t> env_index(const std::vector<std::string>& env,
                                            const std::string& name) {
  for (std::size_t i = env.size(); i-- > 0;)
    if (env[i] == name) return i;
  return std::nullopt;
}

static bool term_alpha_eq(const TermPtr& a, const TermPtr& b,
                          const std::vector<std::string>& ea,
                          const std::vector<std::string>& eb) {
  if (a->kind() != b->kind()) return false;
  if (a->is_var()) {
    auto ia = env_index(ea, a->sym());
    auto ib = env_index(eb, b->sym());
    if (ia.has_value() != ib.has_value()) return false;
    return ia.has_value() ? *ia == *ib : a->sym() == b->sym();
  }
  if (a->sym() != b->sym() || a->args().size() != b->args().size()) return false;
  for (std::size_t i = 0; i < a->args().size(); ++i)
    if (!term_alpha_eq(a->args()[i], b->args()[i], ea, eb)) return false;
  return true;
}

static bool alpha_eq_walk(const FormulaPtr& a, const FormulaPtr& b,
                          std::vector<std::string>& ea, std::vector<std::string>& eb) {
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: {
      if (a->sym() != b->sym() || a->args().size() != b->args().size()) return false;
      for (std::size_t i = 0; i < a->args().size(); ++i)
        if (!term_alpha_eq(a->args()[i], b->args()[i], ea, eb)) return false;
      return true;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return alpha_eq_walk(a->left(), b->left(), ea, eb) &&
             alpha_eq_walk(a->right(), b->right(), ea, eb);
    default: {
      ea.push_back(a->sym());
      eb.push_back(b->sym());
      bool r = alpha_eq_walk(a->body(), b->body(), ea, eb);
      ea.pop_back();
      eb.pop_back();
      return r;
    }
  }
}

bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b) {
  std::vector<std::string> ea, eb;
  return alpha_eq_walk(a, b, ea, eb);
}

// ---------- Substitution ----------

std::string fresh_name(const std::string& base, std::set<std::string>& used) {
  if (!used.count(base)) {
    used.insert(base);
    return base;
  }
  for (std::size_t k = 1;; ++k) {
    std::string cand = base + std::to_string(k);
    if (!used.count(cand)) {
      used.insert(cand);
      return cand;
    }
  }
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& x, const TermPtr& r) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: {
      bool changed = false;
      std::vector<TermPtr> args;
      args.reserve(f->args().size());
      for (const auto& a : f->args()) {
        args.push_back(substitute_term(a, x, r));
        changed = changed || args.back().get() != a.get();
      }
      if (!changed) return f;
      return f->kind() == Formula::Kind::Atom ? Formula::atom(f->sym(), std::move(args))
                                              : Formula::natom(f->sym(), std::move(args));
    }
    case Formula::Kind::And:
      return Formula::conj(substitute(f->left(), x, r), substitute(f->right(), x, r));
    case Formula::Kind::Or:
      return Formula::disj(substitute(f->left(), x, r), substitute(f->right(), x, r));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (f->sym() == x) return f;
      std::set<std::string> rv = term_vars(r);
      FormulaPtr body = f->body();
      std::string v = f->sym();
      if (rv.count(v) && free_vars(body).count(x)) {
        // The binder would capture a variable of r; rename it first.
        std::set<std::string> used = rv;
        free_vars(body, used);
        bound_vars(body, used);
        used.insert(x);
        std::string v2 = fresh_name(v, used);
        body = substitute(body, v, Term::var(v2));
        v = v2;
      }
      FormulaPtr nb = substitute(body, x, r);
      return f->kind() == Formula::Kind::Forall ? Formula::forall(v, std::move(nb))
                                                : Formula::exists(v, std::move(nb));
    }
  }
  throw Error("internal", "unreachable formula kind");
}

// ---------- Alpha normalization ----------

static TermPtr rename_term(const TermPtr& t, const std::map<std::string, std::string>& env) {
  if (t->is_var()) {
    auto it = env.find(t->sym());
    return it == env.end() || it->second == t->sym() ? t : Term::var(it->second);
  }
  bool changed = false;
  std::vector<TermPtr> args;
  args.reserve(t->args().size());
  for (const auto& a : t->args()) {
    args.push_back(rename_term(a, env));
    changed = changed || args.back().get() != a.get();
  }
  return changed ? Term::app(t->sym(), std::move(args)) : t;
}

static FormulaPtr rename_walk(const FormulaPtr& f,
                              std::map<std::string, std::string>& env,
                              std::set<std::string>& used) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: {
      // Simultaneous renaming: the images of one binder must not be re-renamed
      // by a later entry that happens to use the same name.
      bool changed = false;
      std::vector<TermPtr> args;
      args.reserve(f->args().size());
      for (const auto& a : f->args()) {
        args.push_back(rename_term(a, env));
        changed = changed || args.back().get() != a.get();
      }
      if (!changed) return f;
      return f->kind() == Formula::Kind::Atom ? Formula::atom(f->sym(), std::move(args))
                                              : Formula::natom(f->sym(), std::move(args));
    }
    case Formula::Kind::And:
      return Formula::conj(rename_walk(f->left(), env, used),
                           rename_walk(f->right(), env, used));
    case Formula::Kind::Or:
      return Formula::disj(rename_walk(f->left(), env, used),
                           rename_walk(f->right(), env, used));
    default: {
      std::string fresh = fresh_name(f->sym(), used);
      auto it = env.find(f->sym());
      std::optional<std::string> saved;
      if (it != env.end()) saved = it->second;
      env[f->sym()] = fresh;
      FormulaPtr body = rename_walk(f->body(), env, used);
      if (saved)
        env[f->sym()] = *saved;
      else
        env.erase(f->sym());
      return f->kind() == Formula::Kind::Forall ? Formula::forall(fresh, std::move(body))
                                                : Formula::exists(fresh, std::move(body));
    }
  }
}

FormulaPtr alpha_normalize(const FormulaPtr& f, const std::set<std::string>& reserved) {
  std::set<std::string> used = reserved;
  free_vars(f, used);
  std::map<std::string, std::string> env;
  return rename_walk(f, env, used);
}

Sequent alpha_normalize(const Sequent& s, const std::set<std::string>& reserved) {
  std::set<std::string> used = reserved;
  for (const auto& m : s) free_vars(m, used);
  Sequent out;
  out.reserve(s.size());
  for (const auto& m : s) {
    std::map<std::string, std::string> env;
    out.push_back(rename_walk(m, env, used));
  }
  return out;
}

// ---------- Signatures ----------

void Signature::add_relation(const std::string& name, std::size_t arity) {
  if (relations_.count(name) || functions_.count(name))
    throw Error("duplicate-symbol", "symbol declared twice: " + name);
  relations_[name] = arity;
}

void Signature::add_function(const std::string& name, std::size_t arity) {
  if (relations_.count(name) || functions_.count(name))
    throw Error("duplicate-symbol", "symbol declared twice: " + name);
  functions_[name] = arity;
}

std::optional<std::size_t> Signature::relation_arity(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Signature::function_arity(const std::string& name) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Signature::distinguished_constant() const {
  for (const auto& [name, arity] : functions_)
    if (arity == 0) return name;
  return std::nullopt;
}

bool Signature::well_formed(const TermPtr& t, std::string* why) const {
  if (t->is_var()) return true;
  auto ar = function_arity(t->sym());
  if (!ar) {
    if (why) *why = "undeclared function symbol: " + t->sym();
    return false;
  }
  if (*ar != t->args().size()) {
    if (why) *why = "arity mismatch for " + t->sym();
    return false;
  }
  for (const auto& a : t->args())
    if (!well_formed(a, why)) return false;
  return true;
}

bool Signature::well_formed(const FormulaPtr& f, std::string* why) const {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: {
      auto ar = relation_arity(f->sym());
      if (!ar) {
        if (why) *why = "undeclared relation symbol: " + f->sym();
        return false;
      }
      if (*ar != f->args().size()) {
        if (why) *why = "arity mismatch for " + f->sym();
        return false;
      }
      for (const auto& a : f->args())
        if (!well_formed(a, why)) return false;
      return true;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return well_formed(f->left(), why) && well_formed(f->right(), why);
    default:
      return well_formed(f->body(), why);
  }
}

// ---------- Sequents ----------

bool sequent_equal(const Sequent& a, const Sequent& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!formula_equal(a[i], b[i])) return false;
  return true;
}

std::string to_string(const Sequent& s) {
  std::ostringstream out;
  out << "|- ";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ", ";
    out << to_string(s[i]);
  }
  return out.str();
}

std::size_t sequent_hash(const Sequent& s) {
  std::size_t h = 99;
  for (const auto& m : s) h = hash_combine(h, m->hash());
  return h;
}

std::set<std::string> free_vars(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& m : s) free_vars(m, out);
  return out;
}

std::set<std::string> bound_vars(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& m : s) bound_vars(m, out);
  return out;
}

FormulaPtr big_or(const Sequent& s) {
  if (s.empty()) throw Error("empty-sequent", "disjunction of an empty sequent");
  FormulaPtr f = s.back();
  for (std::size_t i = s.size() - 1; i-- > 0;) f = Formula::disj(s[i], f);
  return f;
}

static bool binders_distinct(const FormulaPtr& f, std::set<std::string>& seen) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom:
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return binders_distinct(f->left(), seen) && binders_distinct(f->right(), seen);
    default:
      if (!seen.insert(f->sym()).second) return false;
      return binders_distinct(f->body(), seen);
  }
}

bool is_alpha_normal(const FormulaPtr& f) {
  std::set<std::string> seen;
  if (!binders_distinct(f, seen)) return false;
  for (const auto& v : free_vars(f))
    if (seen.count(v)) return false;
  return true;
}

bool is_alpha_normal(const Sequent& s) {
  std::set<std::string> seen;
  for (const auto& m : s)
    if (!binders_distinct(m, seen)) return false;
  for (const auto& v : free_vars(s))
    if (seen.count(v)) return false;
  return true;
}

// ---------- Prenex forms ----------

bool is_quantifier_free(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom:
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return is_quantifier_free(f->left()) && is_quantifier_free(f->right());
    default:
      return false;
  }
}

std::string to_string(const PrenexFormula& p) {
  std::ostringstream out;
  for (const auto& e : p.prefix)
    out << (e.q == Quant::Forall ? "forall " : "exists ") << e.var << ". ";
  out << to_string(p.matrix);
  return out.str();
}

FormulaPtr erase_quantifiers(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom:
      return f;
    case Formula::Kind::And:
      return Formula::conj(erase_quantifiers(f->left()), erase_quantifiers(f->right()));
    case Formula::Kind::Or:
      return Formula::disj(erase_quantifiers(f->left()), erase_quantifiers(f->right()));
    default:
      return erase_quantifiers(f->body());
  }
}

static void flatten_or(const FormulaPtr& f, std::vector<FormulaPtr>& out);

static FormulaPtr assoc_normal(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom:
      return f;
    case Formula::Kind::And:
      return Formula::conj(assoc_normal(f->left()), assoc_normal(f->right()));
    case Formula::Kind::Or: {
      std::vector<FormulaPtr> parts;
      flatten_or(f, parts);
      FormulaPtr g = parts.back();
      for (std::size_t i = parts.size() - 1; i-- > 0;) g = Formula::disj(parts[i], g);
      return g;
    }
    case Formula::Kind::Forall:
      return Formula::forall(f->sym(), assoc_normal(f->body()));
    case Formula::Kind::Exists:
      return Formula::exists(f->sym(), assoc_normal(f->body()));
  }
  throw Error("internal", "unreachable formula kind");
}

static void flatten_or(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (f->kind() == Formula::Kind::Or) {
    flatten_or(f->left(), out);
    flatten_or(f->right(), out);
  } else {
    out.push_back(assoc_normal(f));
  }
}

bool assoc_eq(const FormulaPtr& a, const FormulaPtr& b) {
  return formula_equal(assoc_normal(a), assoc_normal(b));
}

static void quant_occurrences_walk(const FormulaPtr& f, std::vector<std::string>& stack,
                                   std::vector<QuantOccurrence>& out) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom:
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      quant_occurrences_walk(f->left(), stack, out);
      quant_occurrences_walk(f->right(), stack, out);
      return;
    default: {
      QuantOccurrence occ;
      occ.q = f->kind() == Formula::Kind::Forall ? Quant::Forall : Quant::Exists;
      occ.var = f->sym();
      occ.ancestors = stack;
      out.push_back(std::move(occ));
      stack.push_back(f->sym());
      quant_occurrences_walk(f->body(), stack, out);
      stack.pop_back();
      return;
    }
  }
}

std::vector<QuantOccurrence> quant_occurrences(const FormulaPtr& f) {
  std::vector<QuantOccurrence> out;
  std::vector<std::string> stack;
  quant_occurrences_walk(f, stack, out);
  return out;
}

// Checks that `order` lists each occurrence's variable exactly once and never
// puts a binder before one of its enclosing binders.
static bool valid_linearization(const std::vector<QuantOccurrence>& occs,
                                const std::vector<std::string>& order) {
  if (order.size() != occs.size()) return false;
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!pos.emplace(order[i], i).second) return false;
  for (const auto& occ : occs) {
    auto it = pos.find(occ.var);
    if (it == pos.end()) return false;
    for (const auto& anc : occ.ancestors) {
      auto jt = pos.find(anc);
      if (jt == pos.end() || jt->second >= it->second) return false;
    }
  }
  return true;
}

PrenexFormula prenexify(const Sequent& s, const std::vector<std::string>& order) {
  if (s.empty()) throw Error("empty-sequent", "cannot prenexify an empty sequent");
  if (!is_alpha_normal(s))
    throw Error("sequent-not-alpha-normal",
                "sequent disjunction is not alpha-normal: " + to_string(s));
  FormulaPtr whole = big_or(s);
  auto occs = quant_occurrences(whole);
  if (!valid_linearization(occs, order))
    throw Error("order-not-a-valid-linearization",
                "order is not a nesting-respecting linearization");
  std::map<std::string, Quant> kind;
  for (const auto& occ : occs) kind[occ.var] = occ.q;
  PrenexFormula p;
  for (const auto& v : order) p.prefix.push_back({kind[v], v});
  p.matrix = erase_quantifiers(whole);
  return p;
}

bool is_prenexification_of(const Sequent& s, const PrenexFormula& p) {
  if (s.empty() || !is_alpha_normal(s)) return false;
  FormulaPtr whole = big_or(s);
  auto occs = quant_occurrences(whole);
  std::vector<std::string> order;
  order.reserve(p.prefix.size());
  for (const auto& e : p.prefix) order.push_back(e.var);
  if (!valid_linearization(occs, order)) return false;
  std::map<std::string, Quant> kind;
  for (const auto& occ : occs) kind[occ.var] = occ.q;
  for (const auto& e : p.prefix)
    if (kind.at(e.var) != e.q) return false;
  if (!is_quantifier_free(p.matrix)) return false;
  return assoc_eq(p.matrix, erase_quantifiers(whole));
}

// ---------- Positions ----------

std::string to_string(const PositionPath& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out << '.';
    switch (p[i].kind) {
      case PathStep::Kind::Member: out << p[i].index; break;
      case PathStep::Kind::Left: out << 'L'; break;
      case PathStep::Kind::Right: out << 'R'; break;
      case PathStep::Kind::Body: out << 'B'; break;
    }
  }
  return out.str();
}

FormulaPtr at_path(const FormulaPtr& f, const PositionPath& p, std::size_t from) {
  FormulaPtr cur = f;
  for (std::size_t i = from; i < p.size(); ++i) {
    switch (p[i].kind) {
      case PathStep::Kind::Left:
        if (!cur->is_binary()) throw Error("path-mismatch", "no left child at " + to_string(p));
        cur = cur->left();
        break;
      case PathStep::Kind::Right:
        if (!cur->is_binary()) throw Error("path-mismatch", "no right child at " + to_string(p));
        cur = cur->right();
        break;
      case PathStep::Kind::Body:
        if (!cur->is_quant()) throw Error("path-mismatch", "no quantifier body at " + to_string(p));
        cur = cur->body();
        break;
      case PathStep::Kind::Member:
        throw Error("path-mismatch", "member step inside a formula at " + to_string(p));
    }
  }
  return cur;
}

FormulaPtr at_path(const Sequent& s, const PositionPath& p) {
  if (p.empty() || p[0].kind != PathStep::Kind::Member || p[0].index >= s.size())
    throw Error("path-mismatch", "path must start with a valid member step");
  return at_path(s[p[0].index], p, 1);
}

FormulaPtr replace_at(const FormulaPtr& f, const PositionPath& p, const FormulaPtr& g,
                      std::size_t from) {
  if (from == p.size()) return g;
  switch (p[from].kind) {
    case PathStep::Kind::Left:
      if (!f->is_binary()) throw Error("path-mismatch", "no left child at " + to_string(p));
      return f->kind() == Formula::Kind::And
                 ? Formula::conj(replace_at(f->left(), p, g, from + 1), f->right())
                 : Formula::disj(replace_at(f->left(), p, g, from + 1), f->right());
    case PathStep::Kind::Right:
      if (!f->is_binary()) throw Error("path-mismatch", "no right child at " + to_string(p));
      return f->kind() == Formula::Kind::And
                 ? Formula::conj(f->left(), replace_at(f->right(), p, g, from + 1))
                 : Formula::disj(f->left(), replace_at(f->right(), p, g, from + 1));
    case PathStep::Kind::Body:
      if (!f->is_quant()) throw Error("path-mismatch", "no quantifier body at " + to_string(p));
      return f->kind() == Formula::Kind::Forall
                 ? Formula::forall(f->sym(), replace_at(f->body(), p, g, from + 1))
                 : Formula::exists(f->sym(), replace_at(f->body(), p, g, from + 1));
    case PathStep::Kind::Member:
      throw Error("path-mismatch", "member step inside a formula at " + to_string(p));
  }
  throw Error("internal", "unreachable path step");
}

Sequent replace_at(const Sequent& s, const PositionPath& p, const FormulaPtr& g) {
  if (p.empty() || p[0].kind != PathStep::Kind::Member || p[0].index >= s.size())
    throw Error("path-mismatch", "path must start with a valid member step");
  Sequent out = s;
  out[p[0].index] = replace_at(s[p[0].index], p, g, 1);
  return out;
}

}  // namespace hb
