#include "hb/translate.hpp"

#include <algorithm>
#include <map>

namespace hb {

namespace {

void term_all_names(const TermPtr& t, std::set<std::string>& out) {
  out.insert(t->sym());
  for (const auto& a : t->args()) term_all_names(a, out);
}

TermPtr rename_term_map(const TermPtr& t, const std::map<std::string, std::string>& env) {
  if (t->is_var()) {
    auto it = env.find(t->sym());
    return it == env.end() ? t : Term::var(it->second);
  }
  std::vector<TermPtr> args;
  args.reserve(t->args().size());
  for (const auto& a : t->args()) args.push_back(rename_term_map(a, env));
  return Term::app(t->sym(), std::move(args));
}

// Renames every binder of f to a fresh name from `used`, applying the
// renaming to bound occurrences; records binder old -> new in `renamed`.
FormulaPtr freshen_walk(const FormulaPtr& f, std::map<std::string, std::string> env,
                        std::set<std::string>& used,
                        std::map<std::string, std::string>& renamed) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: {
      std::vector<TermPtr> args;
      args.reserve(f->args().size());
      for (const auto& a : f->args()) args.push_back(rename_term_map(a, env));
      return f->kind() == Formula::Kind::Atom ? Formula::atom(f->sym(), std::move(args))
                                              : Formula::natom(f->sym(), std::move(args));
    }
    case Formula::Kind::And:
      return Formula::conj(freshen_walk(f->left(), env, used, renamed),
                           freshen_walk(f->right(), env, used, renamed));
    case Formula::Kind::Or:
      return Formula::disj(freshen_walk(f->left(), env, used, renamed),
                           freshen_walk(f->right(), env, used, renamed));
    default: {
      std::string nw = fresh_name(f->sym(), used);
      renamed[f->sym()] = nw;
      env[f->sym()] = nw;
      FormulaPtr body = freshen_walk(f->body(), env, used, renamed);
      return f->kind() == Formula::Kind::Forall ? Formula::forall(nw, std::move(body))
                                                : Formula::exists(nw, std::move(body));
    }
  }
  throw Error("internal", "unreachable formula kind");
}

// Renames the unique binder named `old` (and its bound occurrences) to `nw`.
FormulaPtr rename_binder(const FormulaPtr& f, const std::string& old, const std::string& nw) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom:
      return f;
    case Formula::Kind::And:
      return Formula::conj(rename_binder(f->left(), old, nw),
                           rename_binder(f->right(), old, nw));
    case Formula::Kind::Or:
      return Formula::disj(rename_binder(f->left(), old, nw),
                           rename_binder(f->right(), old, nw));
    default: {
      if (f->sym() == old) {
        FormulaPtr body = substitute(f->body(), old, Term::var(nw));
        return f->kind() == Formula::Kind::Forall ? Formula::forall(nw, std::move(body))
                                                  : Formula::exists(nw, std::move(body));
      }
      FormulaPtr body = rename_binder(f->body(), old, nw);
      return f->kind() == Formula::Kind::Forall ? Formula::forall(f->sym(), std::move(body))
                                                : Formula::exists(f->sym(), std::move(body));
    }
  }
  throw Error("internal", "unreachable formula kind");
}

}  // namespace

HerbrandProof to_herbrand_proof(const WorkingCert& c) {
  HerbrandProof hp;
  hp.expansion = c.expansion;
  hp.prenex.prefix = c.prefix;
  hp.prenex.matrix = erase_quantifiers(big_or(c.expansion));
  hp.witnesses = c.sigma;
  return hp;
}

namespace {

void hole_images_walk(const FormulaPtr& b, const FormulaPtr& e, const PositionPath& p,
                      std::size_t i, PositionPath cur, std::vector<PositionPath>& out) {
  if (i == p.size()) {
    out.push_back(std::move(cur));
    return;
  }
  if (b->kind() == Formula::Kind::Exists && e->kind() == Formula::Kind::Or) {
    PositionPath l = cur;
    l.push_back(PathStep::left());
    hole_images_walk(b, e->left(), p, i, std::move(l), out);
    cur.push_back(PathStep::right());
    hole_images_walk(b, e->right(), p, i, std::move(cur), out);
    return;
  }
  if (b->kind() != e->kind())
    throw Error("internal", "expansion does not match its base at " + to_string(cur));
  switch (p[i].kind) {
    case PathStep::Kind::Left:
      cur.push_back(PathStep::left());
      hole_images_walk(b->left(), e->left(), p, i + 1, std::move(cur), out);
      return;
    case PathStep::Kind::Right:
      cur.push_back(PathStep::right());
      hole_images_walk(b->right(), e->right(), p, i + 1, std::move(cur), out);
      return;
    case PathStep::Kind::Body:
      cur.push_back(PathStep::body());
      hole_images_walk(b->body(), e->body(), p, i + 1, std::move(cur), out);
      return;
    case PathStep::Kind::Member:
      throw Error("path-mismatch", "member step inside a formula at " + to_string(p));
  }
}

}  // namespace

std::vector<PositionPath> hole_images(const Sequent& base, const Sequent& expansion,
                                      const PositionPath& p) {
  if (p.empty() || p[0].kind != PathStep::Kind::Member || p[0].index >= base.size() ||
      expansion.size() != base.size())
    throw Error("path-mismatch", "path must start with a valid member step");
  std::vector<PositionPath> out;
  hole_images_walk(base[p[0].index], expansion[p[0].index], p, 1,
                   {PathStep::member(p[0].index)}, out);
  return out;
}

void deep_contract(WorkingCert& cert, Sequent& base, const PositionPath& p) {
  FormulaPtr hole = at_path(base, p);
  if (hole->kind() != Formula::Kind::Or || !formula_equal(hole->left(), hole->right()))
    throw Error("not-a-duplicate",
                "position does not hold two equal copies: " + to_string(hole));
  FormulaPtr A = hole->left();
  std::vector<PositionPath> images = hole_images(base, cert.expansion, p);

  switch (A->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: {
      for (const auto& img : images) {
        FormulaPtr e = at_path(cert.expansion, img);
        if (e->kind() != Formula::Kind::Or || !formula_equal(e->left(), e->right()))
          throw Error("internal", "image of a duplicated literal is not two equal literals");
        cert.expansion = replace_at(cert.expansion, img, e->left());
      }
      base = replace_at(base, p, A);
      return;
    }

    case Formula::Kind::Or: {
      for (const auto& img : images) {
        FormulaPtr e = at_path(cert.expansion, img);
        const FormulaPtr& l = e->left();
        const FormulaPtr& r = e->right();
        if (e->kind() != Formula::Kind::Or || l->kind() != Formula::Kind::Or ||
            r->kind() != Formula::Kind::Or)
          throw Error("internal", "image of a duplicated disjunction has the wrong shape");
        FormulaPtr ne = Formula::disj(Formula::disj(l->left(), r->left()),
                                      Formula::disj(l->right(), r->right()));
        cert.expansion = replace_at(cert.expansion, img, ne);
      }
      base = replace_at(
          base, p,
          Formula::disj(Formula::disj(A->left(), A->left()),
                        Formula::disj(A->right(), A->right())));
      PositionPath pl = p;
      pl.push_back(PathStep::left());
      deep_contract(cert, base, pl);
      PositionPath pr = p;
      pr.push_back(PathStep::right());
      deep_contract(cert, base, pr);
      return;
    }

    case Formula::Kind::Exists:
      // A disjunction of two expansions of an existential formula is itself
      // an expansion of it: nothing to transform.
      base = replace_at(base, p, A);
      return;

    case Formula::Kind::And: {
      for (const auto& img : images) {
        FormulaPtr e = at_path(cert.expansion, img);
        const FormulaPtr& l = e->left();
        const FormulaPtr& r = e->right();
        if (e->kind() != Formula::Kind::Or || l->kind() != Formula::Kind::And ||
            r->kind() != Formula::Kind::And)
          throw Error("internal", "image of a duplicated conjunction has the wrong shape");
        FormulaPtr ne = Formula::conj(Formula::disj(l->left(), r->left()),
                                      Formula::disj(l->right(), r->right()));
        cert.expansion = replace_at(cert.expansion, img, ne);
      }
      base = replace_at(
          base, p,
          Formula::conj(Formula::disj(A->left(), A->left()),
                        Formula::disj(A->right(), A->right())));
      PositionPath pl = p;
      pl.push_back(PathStep::left());
      deep_contract(cert, base, pl);
      PositionPath pr = p;
      pr.push_back(PathStep::right());
      deep_contract(cert, base, pr);
      return;
    }

    case Formula::Kind::Forall: {
      for (const auto& img : images) {
        FormulaPtr e = at_path(cert.expansion, img);
        const FormulaPtr& l = e->left();
        const FormulaPtr& r = e->right();
        if (e->kind() != Formula::Kind::Or || l->kind() != Formula::Kind::Forall ||
            r->kind() != Formula::Kind::Forall)
          throw Error("internal", "image of a duplicated universal has the wrong shape");
        auto position_of = [&](const std::string& v) {
          for (std::size_t k = 0; k < cert.prefix.size(); ++k)
            if (cert.prefix[k].var == v) {
              if (cert.prefix[k].q != Quant::Forall)
                throw Error("internal", "universal binder listed as existential");
              return k;
            }
          throw Error("internal", "binder missing from the prefix: " + v);
        };
        std::size_t pu = position_of(l->sym());
        std::size_t pv = position_of(r->sym());
        // Keep whichever binder the prefix lists first: every witness that
        // was allowed to use the removed binder may then use the kept one.
        std::string z, w;
        FormulaPtr merged_body;
        if (pu < pv) {
          z = l->sym();
          w = r->sym();
          merged_body = Formula::disj(l->body(), substitute(r->body(), w, Term::var(z)));
        } else {
          z = r->sym();
          w = l->sym();
          merged_body = Formula::disj(substitute(l->body(), w, Term::var(z)), r->body());
        }
        cert.expansion = replace_at(cert.expansion, img, Formula::forall(z, merged_body));
        cert.prefix.erase(cert.prefix.begin() +
                          static_cast<std::ptrdiff_t>(pu < pv ? pv : pu));
        for (auto& t : cert.sigma) t = substitute_term(t, w, Term::var(z));
      }
      base = replace_at(base, p,
                        Formula::forall(A->sym(), Formula::disj(A->body(), A->body())));
      PositionPath pb = p;
      pb.push_back(PathStep::body());
      deep_contract(cert, base, pb);
      return;
    }
  }
  throw Error("internal", "unreachable formula kind");
}

void duplicate_at(WorkingCert& cert, Sequent& base, const PositionPath& p) {
  FormulaPtr A = at_path(base, p);
  std::vector<PositionPath> images = hole_images(base, cert.expansion, p);

  std::set<std::string> used;
  for (const auto& m : cert.expansion) all_names(m, used);
  for (const auto& m : base) all_names(m, used);
  for (const auto& t : cert.sigma) term_all_names(t, used);
  for (const auto& e : cert.prefix) used.insert(e.var);

  for (const auto& img : images) {
    FormulaPtr f = at_path(cert.expansion, img);
    std::map<std::string, std::string> renamed;
    FormulaPtr copy = freshen_walk(f, {}, used, renamed);
    cert.expansion = replace_at(cert.expansion, img, Formula::disj(f, copy));

    std::vector<PrefixEntry> new_prefix;
    std::vector<TermPtr> new_sigma;
    std::size_t wi = 0;
    for (const auto& e : cert.prefix) {
      new_prefix.push_back(e);
      TermPtr witness;
      if (e.q == Quant::Exists) witness = cert.sigma.at(wi++);
      if (witness) new_sigma.push_back(witness);
      auto it = renamed.find(e.var);
      if (it != renamed.end()) {
        new_prefix.push_back({e.q, it->second});
        if (witness) new_sigma.push_back(rename_term_map(witness, renamed));
      }
    }
    cert.prefix = std::move(new_prefix);
    cert.sigma = std::move(new_sigma);
  }
  base = replace_at(base, p, Formula::disj(A, A));
}

// ---------- Proof translation ----------

namespace {

struct Translator {
  const Signature& sig;
  std::set<std::string> used;  // every identifier of the proof and signature

  Translator(const Signature& s, const GSProof& root) : sig(s) {
    collect(root);
    for (const auto& [n, a] : sig.relations()) used.insert(n);
    for (const auto& [n, a] : sig.functions()) used.insert(n);
  }

  void collect(const GSProof& n) {
    for (const auto& m : n.conclusion) all_names(m, used);
    if (n.witness) term_all_names(n.witness, used);
    if (!n.eigen.empty()) used.insert(n.eigen);
    for (const auto& c : n.premises) collect(c);
  }

  TermPtr filler() {
    auto c = sig.distinguished_constant();
    if (!c)
      throw Error("no-distinguished-constant",
                  "the signature declares no zero-ary function to fill a vacated "
                  "existential position");
    return Term::app(*c, {});
  }

  // Renames a binder of `c` consistently across expansion, prefix and
  // witnesses.
  static void rename_cert_binder(WorkingCert& c, const std::string& old,
                                 const std::string& nw) {
    for (auto& m : c.expansion) m = rename_binder(m, old, nw);
    for (auto& e : c.prefix)
      if (e.var == old) e.var = nw;
    for (auto& t : c.sigma) t = substitute_term(t, old, Term::var(nw));
  }

  WorkingCert visit(const GSProof& n) {
    switch (n.rule) {
      case Rule::Ax:
        return {n.conclusion, {}, {}};
      case Rule::OrR: {
        WorkingCert c = visit(n.premises[0]);
        FormulaPtr b = c.expansion.back();
        c.expansion.pop_back();
        FormulaPtr a = c.expansion.back();
        c.expansion.back() = Formula::disj(std::move(a), std::move(b));
        return c;
      }
      case Rule::ExchangeR: {
        WorkingCert c = visit(n.premises[0]);
        Sequent ne(c.expansion.size());
        for (std::size_t i = 0; i < ne.size(); ++i) ne[i] = c.expansion[n.perm[i]];
        c.expansion = std::move(ne);
        return c;
      }
      case Rule::WeakenR:
        return admit_weaken(visit(n.premises[0]), n.conclusion.back());
      case Rule::AndR:
        return admit_and(visit(n.premises[0]), visit(n.premises[1]));
      case Rule::ExistsR:
        return admit_exists(visit(n.premises[0]), n);
      case Rule::ForallR:
        return admit_forall(visit(n.premises[0]), n);
      case Rule::ContractR:
        return admit_contract(visit(n.premises[0]), n);
    }
    throw Error("internal", "unreachable rule");
  }

  WorkingCert admit_weaken(WorkingCert c, const FormulaPtr& added) {
    std::map<std::string, std::string> renamed;
    FormulaPtr fresh = freshen_walk(added, {}, used, renamed);
    c.expansion.push_back(fresh);
    std::vector<PrefixEntry> pre;
    std::vector<TermPtr> fills;
    for (const auto& occ : quant_occurrences(fresh)) {
      pre.push_back({occ.q, occ.var});
      if (occ.q == Quant::Exists) fills.push_back(filler());
    }
    c.prefix.insert(c.prefix.begin(), pre.begin(), pre.end());
    c.sigma.insert(c.sigma.begin(), fills.begin(), fills.end());
    return c;
  }

  WorkingCert admit_and(WorkingCert c1, WorkingCert c2) {
    // The translation draws binders from a shared pool, so the certificates
    // are already named apart; rename defensively if they are not.
    std::set<std::string> left_names;
    for (const auto& m : c1.expansion) all_names(m, left_names);
    for (const auto& t : c1.sigma) term_all_names(t, left_names);
    for (const auto& e : c1.prefix) left_names.insert(e.var);
    for (const auto& e : std::vector<PrefixEntry>(c2.prefix))
      if (left_names.count(e.var))
        rename_cert_binder(c2, e.var, fresh_name(e.var, used));

    WorkingCert out;
    out.expansion.assign(c1.expansion.begin(), c1.expansion.end() - 1);
    out.expansion.insert(out.expansion.end(), c2.expansion.begin(),
                         c2.expansion.end() - 1);
    out.expansion.push_back(Formula::conj(c1.expansion.back(), c2.expansion.back()));
    out.prefix = std::move(c1.prefix);
    out.prefix.insert(out.prefix.end(), c2.prefix.begin(), c2.prefix.end());
    out.sigma = std::move(c1.sigma);
    out.sigma.insert(out.sigma.end(), c2.sigma.begin(), c2.sigma.end());
    return out;
  }

  // Rebuilds the expansion of B[x := t] into an expansion of B with y at the
  // positions that x occupied; everything else keeps the expansion's form.
  FormulaPtr reabstract(const FormulaPtr& pat, const FormulaPtr& e, const std::string& x,
                        const std::string& y, bool active) {
    if (!active) return e;
    if (pat->kind() == Formula::Kind::Exists && e->kind() == Formula::Kind::Or)
      return Formula::disj(reabstract(pat, e->left(), x, y, active),
                           reabstract(pat, e->right(), x, y, active));
    if (pat->kind() != e->kind())
      throw Error("internal", "expansion shape does not follow the instantiated member");
    switch (pat->kind()) {
      case Formula::Kind::Atom:
      case Formula::Kind::NegAtom: {
        if (pat->args().size() != e->args().size())
          throw Error("internal", "literal arity mismatch during re-abstraction");
        std::vector<TermPtr> args;
        args.reserve(e->args().size());
        for (std::size_t i = 0; i < e->args().size(); ++i)
          args.push_back(reabstract_term(pat->args()[i], e->args()[i], x, y));
        return e->kind() == Formula::Kind::Atom ? Formula::atom(e->sym(), std::move(args))
                                                : Formula::natom(e->sym(), std::move(args));
      }
      case Formula::Kind::And:
        return Formula::conj(reabstract(pat->left(), e->left(), x, y, active),
                             reabstract(pat->right(), e->right(), x, y, active));
      case Formula::Kind::Or:
        return Formula::disj(reabstract(pat->left(), e->left(), x, y, active),
                             reabstract(pat->right(), e->right(), x, y, active));
      default: {
        bool below = active && pat->sym() != x;  // an inner binder x shadows the hole
        FormulaPtr body = reabstract(pat->body(), e->body(), x, y, below);
        return e->kind() == Formula::Kind::Forall
                   ? Formula::forall(e->sym(), std::move(body))
                   : Formula::exists(e->sym(), std::move(body));
      }
    }
    throw Error("internal", "unreachable formula kind");
  }

  TermPtr reabstract_term(const TermPtr& pt, const TermPtr& et, const std::string& x,
                          const std::string& y) {
    if (pt->is_var()) return pt->sym() == x ? Term::var(y) : et;
    if (et->is_var() || pt->sym() != et->sym() || pt->args().size() != et->args().size())
      throw Error("internal", "witness image mismatch during re-abstraction");
    std::vector<TermPtr> args;
    args.reserve(et->args().size());
    for (std::size_t i = 0; i < et->args().size(); ++i)
      args.push_back(reabstract_term(pt->args()[i], et->args()[i], x, y));
    return Term::app(et->sym(), std::move(args));
  }

  WorkingCert admit_exists(WorkingCert c, const GSProof& n) {
    const FormulaPtr& target = n.conclusion[n.member];  // exists x. B
    std::string y = fresh_name(target->sym(), used);
    FormulaPtr rebuilt =
        reabstract(target->body(), c.expansion[n.member], target->sym(), y, true);
    c.expansion[n.member] = Formula::exists(y, std::move(rebuilt));
    c.prefix.insert(c.prefix.begin(), {Quant::Exists, y});
    c.sigma.insert(c.sigma.begin(), n.witness);

    // A witness variable may no longer occur in the conclusion; replace such
    // dangling variables by a ground filler everywhere in the witnesses.
    std::set<std::string> visible = free_vars(n.conclusion);
    for (const auto& e : c.prefix) visible.insert(e.var);
    std::set<std::string> dangling;
    for (const auto& t : c.sigma)
      for (const auto& v : term_vars(t))
        if (!visible.count(v)) dangling.insert(v);
    if (!dangling.empty()) {
      TermPtr ground = filler();
      for (auto& t : c.sigma)
        for (const auto& v : dangling) t = substitute_term(t, v, ground);
    }
    return c;
  }

  WorkingCert admit_forall(WorkingCert c, const GSProof& n) {
    c.expansion[n.member] = Formula::forall(n.eigen, c.expansion[n.member]);
    c.prefix.insert(c.prefix.begin(), {Quant::Forall, n.eigen});
    return c;
  }

  WorkingCert admit_contract(WorkingCert c, const GSProof& n) {
    std::size_t last = n.conclusion.size() - 1;
    FormulaPtr e2 = c.expansion.back();
    c.expansion.pop_back();
    c.expansion[last] = Formula::disj(c.expansion[last], std::move(e2));
    Sequent base = n.conclusion;
    base[last] = Formula::disj(n.conclusion[last], n.conclusion[last]);
    deep_contract(c, base, {PathStep::member(last)});
    if (!sequent_equal(base, n.conclusion))
      throw Error("internal", "contraction did not restore the conclusion");
    return c;
  }
};

}  // namespace

HerbrandProof translate(const Signature& sig, const GSProof& proof) {
  Verdict v = check_gs(sig, proof);
  if (!v) throw Error("invalid-proof", v.message);
  Translator tr(sig, proof);
  WorkingCert c = tr.visit(proof);
  return to_herbrand_proof(c);
}

}  // namespace hb
