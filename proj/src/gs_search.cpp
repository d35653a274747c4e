#include <algorithm>
#include <map>

#include "hb/gs.hpp"

namespace hb {

namespace {

bool dual_literals(const FormulaPtr& a, const FormulaPtr& b) {
  return a->is_literal() && b->is_literal() && formula_equal(negate(a), b);
}

bool term_size_lex_less(const TermPtr& a, const TermPtr& b) {
  std::size_t sa = term_size(a), sb = term_size(b);
  if (sa != sb) return sa < sb;
  return to_string(a) < to_string(b);
}

struct Searcher {
  const Signature& sig;
  SearchPolicy policy;
  SearchLimits limits;

  std::set<std::string> avoid;        // goal and signature names; never eigenvariables
  std::vector<TermPtr> ground_terms;  // size-then-lex ordered, term depth bounded
  std::vector<std::string> eigen_pool;
  std::size_t pool_skipped = 0;
  std::size_t nodes = 0;
  bool node_limit_hit = false;
  std::map<std::string, std::size_t> failed;  // sequent text -> highest failed budget

  Searcher(const Signature& s, SearchPolicy p, const SearchLimits& l)
      : sig(s), policy(p), limits(l) {}

  // j-th canonical eigenvariable: z1, z2, ... skipping goal and signature
  // names. Indexing by the number of quantifier introductions on the current
  // path keeps memoized sequents comparable across branches; colliding
  // introductions in sibling branches are renamed apart afterwards.
  const std::string& eigen_at(std::size_t j) {
    while (eigen_pool.size() <= j) {
      std::string cand = "z" + std::to_string(eigen_pool.size() + pool_skipped + 1);
      if (avoid.count(cand))
        ++pool_skipped;
      else
        eigen_pool.push_back(std::move(cand));
    }
    return eigen_pool[j];
  }

  void build_ground_terms() {
    std::map<std::string, TermPtr> pool;  // printed form -> term, deduplicated
    for (const auto& [name, arity] : sig.functions())
      if (arity == 0) pool.emplace(name, Term::app(name, {}));
    for (std::size_t d = 1; d <= limits.max_term_depth; ++d) {
      std::map<std::string, TermPtr> next = pool;
      std::vector<TermPtr> elems;
      for (const auto& [k, t] : pool) elems.push_back(t);
      if (elems.empty()) break;
      for (const auto& [name, arity] : sig.functions()) {
        if (arity == 0) continue;
        std::vector<std::size_t> idx(arity, 0);
        for (;;) {
          std::vector<TermPtr> args;
          args.reserve(arity);
          for (std::size_t i : idx) args.push_back(elems[i]);
          TermPtr t = Term::app(name, std::move(args));
          if (term_depth(t) <= limits.max_term_depth) next.emplace(to_string(t), t);
          std::size_t i = 0;
          while (i < arity && ++idx[i] == elems.size()) idx[i++] = 0;
          if (i == arity) break;
        }
      }
      pool = std::move(next);
    }
    ground_terms.clear();
    for (const auto& [k, t] : pool) ground_terms.push_back(t);
    std::stable_sort(ground_terms.begin(), ground_terms.end(), term_size_lex_less);
  }

  std::vector<TermPtr> witness_candidates(const Sequent& s) {
    std::vector<TermPtr> out;
    for (const auto& v : free_vars(s)) out.push_back(Term::var(v));
    out.insert(out.end(), ground_terms.begin(), ground_terms.end());
    std::stable_sort(out.begin(), out.end(), term_size_lex_less);
    return out;
  }

  std::optional<GSProof> prove(const Sequent& s, std::size_t budget, std::size_t foralls) {
    if (node_limit_hit || budget == 0) return std::nullopt;
    if (++nodes > limits.max_nodes) {
      node_limit_hit = true;
      return std::nullopt;
    }
    std::string key = to_string(s);
    if (auto it = failed.find(key); it != failed.end() && it->second >= budget)
      return std::nullopt;

    if (s.size() == 2 && dual_literals(s[0], s[1]))
      return GSProof{Rule::Ax, s, nullptr, "", 0, {}, {}};

    if (budget >= 2 && !s.empty()) {
      if (auto r = try_rules(s, budget, foralls)) return r;
    }

    if (!node_limit_hit) {
      auto [it, inserted] = failed.emplace(std::move(key), budget);
      if (!inserted && it->second < budget) it->second = budget;
    }
    return std::nullopt;
  }

  std::optional<GSProof> try_rules(const Sequent& s, std::size_t budget,
                                   std::size_t foralls) {
    std::size_t n = s.size();

    if (s.back()->kind() == Formula::Kind::Or) {
      Sequent p(s.begin(), s.end() - 1);
      p.push_back(s.back()->left());
      p.push_back(s.back()->right());
      if (auto sub = prove(p, budget - 1, foralls))
        return GSProof{Rule::OrR, s, nullptr, "", 0, {}, {std::move(*sub)}};
    }

    if (s.back()->kind() == Formula::Kind::And) {
      for (std::size_t k = 0; k < n; ++k) {  // size of the left context
        if (node_limit_hit) break;
        Sequent p1(s.begin(), s.begin() + k);
        p1.push_back(s.back()->left());
        Sequent p2(s.begin() + k, s.end() - 1);
        p2.push_back(s.back()->right());
        auto sub1 = prove(p1, budget - 1, foralls);
        if (!sub1) continue;
        auto sub2 = prove(p2, budget - 1, foralls);
        if (!sub2) continue;
        return GSProof{Rule::AndR, s, nullptr, "", 0, {},
                       {std::move(*sub1), std::move(*sub2)}};
      }
    }

    for (std::size_t i = 0; i < n; ++i) {
      if (s[i]->kind() != Formula::Kind::Exists) continue;
      for (const auto& t : witness_candidates(s)) {
        if (node_limit_hit) break;
        Sequent p = s;
        p[i] = substitute(s[i]->body(), s[i]->sym(), t);
        if (auto sub = prove(p, budget - 1, foralls))
          return GSProof{Rule::ExistsR, s, t, "", i, {}, {std::move(*sub)}};
      }
    }

    for (std::size_t i = 0; i < n; ++i) {
      if (s[i]->kind() != Formula::Kind::Forall) continue;
      std::string z = eigen_at(foralls);
      Sequent p = s;
      p[i] = substitute(s[i]->body(), s[i]->sym(), Term::var(z));
      if (auto sub = prove(p, budget - 1, foralls + 1))
        return GSProof{Rule::ForallR, s, nullptr, std::move(z), i, {}, {std::move(*sub)}};
    }

    {
      const FormulaPtr& a = s.back();
      bool allowed = policy == SearchPolicy::Full || is_quantifier_free(a) ||
                     a->kind() == Formula::Kind::Exists;
      if (allowed) {
        Sequent p = s;
        p.push_back(a);
        if (auto sub = prove(p, budget - 1, foralls))
          return GSProof{Rule::ContractR, s, nullptr, "", 0, {}, {std::move(*sub)}};
      }
    }

    if (n >= 2) {
      Sequent p(s.begin(), s.end() - 1);
      if (auto sub = prove(p, budget - 1, foralls))
        return GSProof{Rule::WeakenR, s, nullptr, "", 0, {}, {std::move(*sub)}};
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (node_limit_hit) break;
      Sequent p;
      p.reserve(n);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) p.push_back(s[j]);
      p.push_back(s[i]);
      if (sequent_equal(p, s)) continue;  // rotation is a no-op
      std::vector<std::size_t> perm(n);
      for (std::size_t j = 0; j < i; ++j) perm[j] = j;
      perm[i] = n - 1;
      for (std::size_t j = i + 1; j < n; ++j) perm[j] = j - 1;
      if (auto sub = prove(p, budget - 1, foralls))
        return GSProof{Rule::ExchangeR, s, nullptr, "", 0, std::move(perm),
                       {std::move(*sub)}};
    }

    return std::nullopt;
  }
};

void collect_tree_names(const GSProof& n, std::set<std::string>& out) {
  for (const auto& m : n.conclusion) all_names(m, out);
  if (n.witness) {
    out.insert(n.witness->sym());
    term_vars(n.witness, out);
  }
  if (!n.eigen.empty()) out.insert(n.eigen);
  for (const auto& c : n.premises) collect_tree_names(c, out);
}

// Renames quantifier-introduction eigenvariables so they are pairwise
// distinct across the assembled tree. Along any root-to-leaf path they are
// distinct by construction, so only sibling branches can collide, and the
// subtree above a colliding introduction never reintroduces the same name;
// renaming it as a free variable throughout that subtree is therefore safe.
struct Relabeler {
  std::set<std::string> used;       // eigenvariables committed so far
  std::set<std::string> forbidden;  // every name in the tree, goal and signature
  std::size_t counter = 0;

  std::string fresh() {
    for (;;) {
      std::string cand = "z" + std::to_string(++counter);
      if (!used.count(cand) && !forbidden.count(cand)) {
        forbidden.insert(cand);
        return cand;
      }
    }
  }

  void walk(GSProof& n, std::map<std::string, std::string> env) {
    for (auto& m : n.conclusion)
      for (const auto& [from, to] : env) m = substitute(m, from, Term::var(to));
    if (n.witness)
      for (const auto& [from, to] : env)
        n.witness = substitute_term(n.witness, from, Term::var(to));
    if (n.rule == Rule::ForallR) {
      if (used.count(n.eigen)) {
        std::string nz = fresh();
        env[n.eigen] = nz;
        n.eigen = nz;
      }
      used.insert(n.eigen);
    }
    for (auto& c : n.premises) walk(c, env);
  }
};

}  // namespace

SearchResult search_gs(const Signature& sig, const Sequent& goal, SearchPolicy policy,
                       const SearchLimits& limits) {
  std::string why;
  for (const auto& m : goal)
    if (!sig.well_formed(m, &why)) throw Error("ill-formed-input", why);

  SearchResult result;
  if (goal.empty()) return result;
  {
    std::set<std::string> fv = free_vars(goal);
    for (const auto& b : bound_vars(goal))
      if (fv.count(b)) return result;  // no proof can satisfy the variable discipline
  }

  Searcher st(sig, policy, limits);
  for (const auto& m : goal) all_names(m, st.avoid);
  for (const auto& [name, a] : sig.relations()) st.avoid.insert(name);
  for (const auto& [name, a] : sig.functions()) st.avoid.insert(name);
  st.build_ground_terms();

  for (std::size_t d = 1; d <= limits.max_depth; ++d) {
    auto proof = st.prove(goal, d, 0);
    result.nodes_expanded = st.nodes;
    if (proof) {
      Relabeler rl;
      rl.forbidden = st.avoid;
      collect_tree_names(*proof, rl.forbidden);
      rl.walk(*proof, {});
      result.status = SearchStatus::Proved;
      result.proof = std::move(*proof);
      result.depth_reached = d;
      return result;
    }
    if (st.node_limit_hit) {
      result.status = SearchStatus::NodeLimit;
      result.depth_reached = d - 1;
      return result;
    }
    result.depth_reached = d;
  }
  result.status = SearchStatus::Exhausted;
  return result;
}

}  // namespace hb
