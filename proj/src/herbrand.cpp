#include "hb/herbrand.hpp"

#include "hb/propositional.hpp"

namespace hb {

static bool expansion_walk(const FormulaPtr& a, const FormulaPtr& c,
                           std::vector<std::string>& ea, std::vector<std::string>& ec);

static std::optional<std::size_t> env_index(const std::vector<std::string>& env,
                                            const std::string& name) {
  for (std::size_t i = env.size(); i-- > 0;)
    if (env[i] == name) return i;
  return std::nullopt;
}

static bool term_env_eq(const TermPtr& a, const TermPtr& c,
                        const std::vector<std::string>& ea,
                        const std::vector<std::string>& ec) {
  if (a->kind() != c->kind()) return false;
  if (a->is_var()) {
    auto ia = env_index(ea, a->sym());
    auto ic = env_index(ec, c->sym());
    if (ia.has_value() != ic.has_value()) return false;
    return ia.has_value() ? *ia == *ic : a->sym() == c->sym();
  }
  if (a->sym() != c->sym() || a->args().size() != c->args().size()) return false;
  for (std::size_t i = 0; i < a->args().size(); ++i)
    if (!term_env_eq(a->args()[i], c->args()[i], ea, ec)) return false;
  return true;
}

static bool expansion_walk(const FormulaPtr& a, const FormulaPtr& c,
                           std::vector<std::string>& ea, std::vector<std::string>& ec) {
  // An existential formula may be answered by a disjunction of two further
  // expansions of it; this is the only place the shapes may diverge.
  if (a->kind() == Formula::Kind::Exists && c->kind() == Formula::Kind::Or)
    return expansion_walk(a, c->left(), ea, ec) && expansion_walk(a, c->right(), ea, ec);
  if (a->kind() != c->kind()) return false;
  switch (a->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: {
      if (a->sym() != c->sym() || a->args().size() != c->args().size()) return false;
      for (std::size_t i = 0; i < a->args().size(); ++i)
        if (!term_env_eq(a->args()[i], c->args()[i], ea, ec)) return false;
      return true;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return expansion_walk(a->left(), c->left(), ea, ec) &&
             expansion_walk(a->right(), c->right(), ea, ec);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      ea.push_back(a->sym());
      ec.push_back(c->sym());
      bool r = expansion_walk(a->body(), c->body(), ea, ec);
      ea.pop_back();
      ec.pop_back();
      return r;
    }
  }
  return false;
}

bool is_strong_expansion(const FormulaPtr& original, const FormulaPtr& candidate) {
  std::vector<std::string> ea, ec;
  return expansion_walk(original, candidate, ea, ec);
}

FormulaPtr substitute_witnesses(const PrenexFormula& p, const std::vector<TermPtr>& witnesses) {
  FormulaPtr m = p.matrix;
  std::size_t wi = 0;
  for (const auto& e : p.prefix)
    if (e.q == Quant::Exists) {
      if (wi >= witnesses.size())
        throw Error("witness-count-mismatch", "fewer witnesses than existential variables");
      m = substitute(m, e.var, witnesses[wi]);
      ++wi;
    }
  if (wi != witnesses.size())
    throw Error("witness-count-mismatch", "more witnesses than existential variables");
  return m;
}

Verdict check_witnessing(const PrenexFormula& p, const std::vector<TermPtr>& witnesses,
                         const std::set<std::string>& ambient) {
  std::size_t n_exists = 0;
  for (const auto& e : p.prefix)
    if (e.q == Quant::Exists) ++n_exists;
  if (witnesses.size() != n_exists)
    return Verdict::reject("witness-count-mismatch",
                           "certificate has " + std::to_string(witnesses.size()) +
                               " witnesses for " + std::to_string(n_exists) +
                               " existential variables");

  std::set<std::string> allowed = ambient;
  std::size_t wi = 0;
  for (const auto& e : p.prefix) {
    if (e.q == Quant::Forall) {
      allowed.insert(e.var);
      continue;
    }
    for (const auto& v : term_vars(witnesses[wi])) {
      if (!allowed.count(v))
        return Verdict::reject(
            "variable-condition-violated",
            "witness " + std::to_string(wi + 1) + " (" + to_string(witnesses[wi]) +
                ") uses variable " + v + " not available at its position",
            {{"index", std::to_string(wi + 1)}, {"variable", v}});
    }
    ++wi;
  }

  FormulaPtr inst = substitute_witnesses(p, witnesses);
  if (auto falsifier = find_falsifying(inst))
    return Verdict::reject("matrix-not-tautology",
                           "substituted matrix " + to_string(inst) +
                               " is falsified by " + to_string(*falsifier),
                           {{"assignment", to_string(*falsifier)},
                            {"substituted-matrix", to_string(inst)}});
  return Verdict::accept();
}

Verdict check_herbrand(const Signature& sig, const Sequent& goal, const HerbrandProof& hp,
                       const HerbrandCheckOptions& opt) {
  std::string why;
  for (const auto& m : goal)
    if (!sig.well_formed(m, &why)) throw Error("ill-formed-input", why);
  for (const auto& m : hp.expansion)
    if (!sig.well_formed(m, &why)) throw Error("ill-formed-input", why);
  if (hp.prenex.matrix && !sig.well_formed(hp.prenex.matrix, &why))
    throw Error("ill-formed-input", why);
  for (const auto& t : hp.witnesses)
    if (!sig.well_formed(t, &why)) throw Error("ill-formed-input", why);

  if (opt.check_expansion) {
    if (hp.expansion.size() != goal.size())
      return Verdict::reject("not-an-expansion",
                             "expansion has " + std::to_string(hp.expansion.size()) +
                                 " members for a goal with " + std::to_string(goal.size()),
                             {{"member", "0"}});
    for (std::size_t i = 0; i < goal.size(); ++i)
      if (!is_strong_expansion(goal[i], hp.expansion[i]))
        return Verdict::reject("not-an-expansion",
                               "member " + std::to_string(i) + " (" +
                                   to_string(hp.expansion[i]) +
                                   ") is not an expansion of " + to_string(goal[i]),
                               {{"member", std::to_string(i)}});
  }

  if (opt.check_prenexification) {
    if (!is_prenexification_of(hp.expansion, hp.prenex))
      return Verdict::reject("not-a-prenexification",
                             "prefix/matrix " + to_string(hp.prenex) +
                                 " is not a prenexification of the expansion " +
                                 to_string(hp.expansion));
  }

  HerbrandCheckOptions wopt = opt;
  std::set<std::string> ambient = free_vars(goal);
  if (opt.check_variable_condition || opt.check_tautology) {
    Verdict w = [&]() {
      if (!wopt.check_variable_condition) {
        // Run only the tautology half.
        std::size_t n_exists = 0;
        for (const auto& e : hp.prenex.prefix)
          if (e.q == Quant::Exists) ++n_exists;
        if (hp.witnesses.size() != n_exists)
          return Verdict::reject("witness-count-mismatch",
                                 "witness count does not match existential variables");
        FormulaPtr inst = substitute_witnesses(hp.prenex, hp.witnesses);
        if (auto falsifier = find_falsifying(inst))
          return Verdict::reject("matrix-not-tautology",
                                 "substituted matrix is falsified",
                                 {{"assignment", to_string(*falsifier)},
                                  {"substituted-matrix", to_string(inst)}});
        return Verdict::accept();
      }
      Verdict full = check_witnessing(hp.prenex, hp.witnesses, ambient);
      if (!full && full.code == "matrix-not-tautology" && !wopt.check_tautology)
        return Verdict::accept();
      return full;
    }();
    if (!w) return w;
  }
  return Verdict::accept();
}

}  // namespace hb
