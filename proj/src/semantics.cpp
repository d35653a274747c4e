#include "hb/semantics.hpp"

#include <cmath>
#include <sstream>

namespace hb {

std::string to_string(const Interpretation& m) {
  std::ostringstream out;
  out << "universe size " << m.universe;
  for (const auto& [name, table] : m.relations) {
    out << "; " << name << ":";
    for (bool b : table) out << (b ? '1' : '0');
  }
  for (const auto& [name, table] : m.functions) {
    out << "; " << name << ":";
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (i) out << ',';
      out << table[i];
    }
  }
  return out.str();
}

std::size_t evaluate(const TermPtr& t, const Interpretation& m, const VarEnv& env) {
  if (t->is_var()) {
    auto it = env.find(t->sym());
    if (it == env.end())
      throw Error("unbound-free-variable", "no value for variable " + t->sym());
    return it->second;
  }
  auto ft = m.functions.find(t->sym());
  if (ft == m.functions.end())
    throw Error("no-interpretation", "no table for function " + t->sym());
  std::size_t idx = 0;
  for (const auto& a : t->args()) idx = idx * m.universe + evaluate(a, m, env);
  return ft->second.at(idx);
}

bool evaluate(const FormulaPtr& f, const Interpretation& m, const VarEnv& env) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: {
      auto rt = m.relations.find(f->sym());
      if (rt == m.relations.end())
        throw Error("no-interpretation", "no table for relation " + f->sym());
      std::size_t idx = 0;
      for (const auto& a : f->args()) idx = idx * m.universe + evaluate(a, m, env);
      bool v = rt->second.at(idx);
      return f->kind() == Formula::Kind::Atom ? v : !v;
    }
    case Formula::Kind::And:
      return evaluate(f->left(), m, env) && evaluate(f->right(), m, env);
    case Formula::Kind::Or:
      return evaluate(f->left(), m, env) || evaluate(f->right(), m, env);
    case Formula::Kind::Forall: {
      for (std::size_t e = 0; e < m.universe; ++e) {
        VarEnv inner = env;
        inner[f->sym()] = e;
        if (!evaluate(f->body(), m, inner)) return false;
      }
      return true;
    }
    case Formula::Kind::Exists: {
      for (std::size_t e = 0; e < m.universe; ++e) {
        VarEnv inner = env;
        inner[f->sym()] = e;
        if (evaluate(f->body(), m, inner)) return true;
      }
      return false;
    }
  }
  throw Error("internal", "unreachable formula kind");
}

FormulaPtr close_universally(const FormulaPtr& f) {
  std::set<std::string> fv = free_vars(f);
  std::set<std::string> used;
  all_names(f, used);
  FormulaPtr g = f;
  // Bind in reverse sorted order so the sorted-first variable is outermost.
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) {
    std::string binder = *it;
    if (bound_vars(g).count(binder)) {
      binder = fresh_name(binder, used);
      g = substitute(g, *it, Term::var(binder));
    }
    g = Formula::forall(binder, g);
  }
  return g;
}

namespace {

// Symbols occurring in a formula, with arities taken from use sites.
struct UsedSymbols {
  std::map<std::string, std::size_t> relations;
  std::map<std::string, std::size_t> functions;
};

void scan_term(const TermPtr& t, UsedSymbols& out) {
  if (!t->is_var()) {
    out.functions[t->sym()] = t->args().size();
    for (const auto& a : t->args()) scan_term(a, out);
  }
}

void scan_formula(const FormulaPtr& f, UsedSymbols& out) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom:
      out.relations[f->sym()] = f->args().size();
      for (const auto& a : f->args()) scan_term(a, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      scan_formula(f->left(), out);
      scan_formula(f->right(), out);
      return;
    default:
      scan_formula(f->body(), out);
      return;
  }
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::optional<Interpretation> find_countermodel(const FormulaPtr& f, std::size_t max_size) {
  if (!free_vars(f).empty())
    throw Error("not-a-sentence", "formula has free variables: " + to_string(f));
  UsedSymbols used;
  scan_formula(f, used);
  for (std::size_t n = 1; n <= max_size; ++n) {
    Interpretation m;
    m.universe = n;
    for (const auto& [name, arity] : used.relations)
      m.relations[name] = std::vector<bool>(ipow(n, arity), false);
    for (const auto& [name, arity] : used.functions)
      m.functions[name] = std::vector<std::size_t>(ipow(n, arity), 0);
    // Odometer over all tables: relations run over booleans, functions over
    // universe elements.
    for (;;) {
      if (!evaluate(f, m, {})) return m;
      // Advance to the next combination of tables.
      bool carried = true;
      for (auto& [name, table] : m.relations) {
        if (!carried) break;
        for (std::size_t i = 0; carried && i < table.size(); ++i) {
          if (!table[i]) {
            table[i] = true;
            carried = false;
          } else {
            table[i] = false;
          }
        }
      }
      for (auto& [name, table] : m.functions) {
        if (!carried) break;
        for (std::size_t i = 0; carried && i < table.size(); ++i) {
          if (table[i] + 1 < n) {
            ++table[i];
            carried = false;
          } else {
            table[i] = 0;
          }
        }
      }
      if (carried) break;  // all combinations for this size exhausted
    }
  }
  return std::nullopt;
}

bool valid_up_to(const FormulaPtr& f, std::size_t max_size) {
  return !find_countermodel(f, max_size).has_value();
}

}  // namespace hb
