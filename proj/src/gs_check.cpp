#include "hb/gs.hpp"

#include <algorithm>
#include <sstream>

namespace hb {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Ax: return "ax";
    case Rule::OrR: return "or-r";
    case Rule::AndR: return "and-r";
    case Rule::ContractR: return "contract-r";
    case Rule::WeakenR: return "weaken-r";
    case Rule::ExistsR: return "exists-r";
    case Rule::ForallR: return "forall-r";
    case Rule::ExchangeR: return "exchange-r";
  }
  return "?";
}

std::size_t proof_size(const GSProof& p) {
  std::size_t n = 1;
  for (const auto& c : p.premises) n += proof_size(c);
  return n;
}

std::size_t proof_depth(const GSProof& p) {
  std::size_t d = 0;
  for (const auto& c : p.premises) d = std::max(d, proof_depth(c));
  return d + 1;
}

namespace {

std::string path_str(const std::vector<std::size_t>& path) {
  std::ostringstream out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out << '.';
    out << path[i];
  }
  return out.str();
}

Verdict mismatch(const GSProof& node, const std::vector<std::size_t>& path,
                 const std::string& what) {
  std::string p = path_str(path);
  return Verdict::reject("rule-mismatch",
                         std::string(rule_name(node.rule)) + " at node " +
                             (p.empty() ? "root" : p) + ": " + what,
                         {{"node", p}, {"rule", rule_name(node.rule)}});
}

bool dual_literals(const FormulaPtr& a, const FormulaPtr& b) {
  return a->is_literal() && b->is_literal() && formula_equal(negate(a), b);
}

// Premise sequent must equal the expected one, comparing the instantiated
// member up to renaming of bound variables and everything else structurally.
bool matches_except(const Sequent& actual, const Sequent& expected, std::size_t loose) {
  if (actual.size() != expected.size()) return false;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if (i == loose) {
      if (!alpha_eq(actual[i], expected[i])) return false;
    } else if (!formula_equal(actual[i], expected[i])) {
      return false;
    }
  }
  return true;
}

Verdict check_schema(const GSProof& n, const std::vector<std::size_t>& path) {
  const Sequent& c = n.conclusion;
  auto need_premises = [&](std::size_t k) -> std::optional<Verdict> {
    if (n.premises.size() != k)
      return mismatch(n, path,
                      "expected " + std::to_string(k) + " premises, found " +
                          std::to_string(n.premises.size()));
    return std::nullopt;
  };
  switch (n.rule) {
    case Rule::Ax: {
      if (auto v = need_premises(0)) return *v;
      if (c.size() != 2) return mismatch(n, path, "conclusion must have exactly two members");
      if (!dual_literals(c[0], c[1]))
        return mismatch(n, path, "members are not dual literals: " + to_string(c));
      return Verdict::accept();
    }
    case Rule::OrR: {
      if (auto v = need_premises(1)) return *v;
      if (c.empty() || c.back()->kind() != Formula::Kind::Or)
        return mismatch(n, path, "rightmost member is not a disjunction");
      Sequent expected(c.begin(), c.end() - 1);
      expected.push_back(c.back()->left());
      expected.push_back(c.back()->right());
      if (!sequent_equal(n.premises[0].conclusion, expected))
        return mismatch(n, path, "premise is not " + to_string(expected));
      return Verdict::accept();
    }
    case Rule::AndR: {
      if (auto v = need_premises(2)) return *v;
      if (c.empty() || c.back()->kind() != Formula::Kind::And)
        return mismatch(n, path, "rightmost member is not a conjunction");
      const Sequent& p1 = n.premises[0].conclusion;
      const Sequent& p2 = n.premises[1].conclusion;
      if (p1.empty() || p2.empty())
        return mismatch(n, path, "premises may not be empty");
      if (p1.size() - 1 + p2.size() - 1 != c.size() - 1)
        return mismatch(n, path, "premise contexts do not add up to the conclusion context");
      if (!formula_equal(p1.back(), c.back()->left()))
        return mismatch(n, path, "left premise does not end in the left conjunct");
      if (!formula_equal(p2.back(), c.back()->right()))
        return mismatch(n, path, "right premise does not end in the right conjunct");
      for (std::size_t i = 0; i + 1 < p1.size(); ++i)
        if (!formula_equal(p1[i], c[i]))
          return mismatch(n, path, "left premise context does not match the conclusion");
      for (std::size_t i = 0; i + 1 < p2.size(); ++i)
        if (!formula_equal(p2[i], c[p1.size() - 1 + i]))
          return mismatch(n, path, "right premise context does not match the conclusion");
      return Verdict::accept();
    }
    case Rule::ContractR: {
      if (auto v = need_premises(1)) return *v;
      if (c.empty()) return mismatch(n, path, "conclusion may not be empty");
      Sequent expected = c;
      expected.push_back(c.back());
      if (!sequent_equal(n.premises[0].conclusion, expected))
        return mismatch(n, path, "premise is not " + to_string(expected));
      return Verdict::accept();
    }
    case Rule::WeakenR: {
      if (auto v = need_premises(1)) return *v;
      if (c.empty()) return mismatch(n, path, "conclusion may not be empty");
      Sequent expected(c.begin(), c.end() - 1);
      if (!sequent_equal(n.premises[0].conclusion, expected))
        return mismatch(n, path, "premise is not " + to_string(expected));
      return Verdict::accept();
    }
    case Rule::ExistsR: {
      if (auto v = need_premises(1)) return *v;
      if (n.member >= c.size()) return mismatch(n, path, "member index out of range");
      if (!n.witness) return mismatch(n, path, "missing witness term");
      const FormulaPtr& target = c[n.member];
      if (target->kind() != Formula::Kind::Exists)
        return mismatch(n, path, "target member is not existential");
      Sequent expected = c;
      expected[n.member] = substitute(target->body(), target->sym(), n.witness);
      if (!matches_except(n.premises[0].conclusion, expected, n.member))
        return mismatch(n, path, "premise is not " + to_string(expected));
      return Verdict::accept();
    }
    case Rule::ForallR: {
      if (auto v = need_premises(1)) return *v;
      if (n.member >= c.size()) return mismatch(n, path, "member index out of range");
      if (n.eigen.empty()) return mismatch(n, path, "missing eigenvariable");
      const FormulaPtr& target = c[n.member];
      if (target->kind() != Formula::Kind::Forall)
        return mismatch(n, path, "target member is not universal");
      Sequent expected = c;
      expected[n.member] = substitute(target->body(), target->sym(), Term::var(n.eigen));
      if (!matches_except(n.premises[0].conclusion, expected, n.member))
        return mismatch(n, path, "premise is not " + to_string(expected));
      return Verdict::accept();
    }
    case Rule::ExchangeR: {
      if (auto v = need_premises(1)) return *v;
      const Sequent& p = n.premises[0].conclusion;
      if (n.perm.size() != c.size() || p.size() != c.size())
        return mismatch(n, path, "permutation length does not match the sequent");
      std::vector<bool> seen(c.size(), false);
      for (std::size_t i : n.perm) {
        if (i >= c.size() || seen[i])
          return mismatch(n, path, "not a permutation");
        seen[i] = true;
      }
      for (std::size_t i = 0; i < c.size(); ++i)
        if (!formula_equal(c[i], p[n.perm[i]]))
          return mismatch(n, path, "conclusion member " + std::to_string(i) +
                                       " differs from premise member " +
                                       std::to_string(n.perm[i]));
      return Verdict::accept();
    }
  }
  return mismatch(n, path, "unknown rule");
}

struct NodeInfo {
  const GSProof* node;
  std::vector<std::size_t> path;
  std::set<std::string> free;
};

void collect(const GSProof& n, std::vector<std::size_t>& path, std::vector<NodeInfo>& out) {
  out.push_back({&n, path, free_vars(n.conclusion)});
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    path.push_back(i);
    collect(n.premises[i], path, out);
    path.pop_back();
  }
}

bool is_prefix(const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
  if (p.size() > q.size()) return false;
  return std::equal(p.begin(), p.end(), q.begin());
}

Verdict walk_schemas(const Signature& sig, const GSProof& n, std::vector<std::size_t>& path) {
  std::string why;
  for (const auto& m : n.conclusion)
    if (!sig.well_formed(m, &why)) throw Error("ill-formed-input", why);
  if (n.witness && !sig.well_formed(n.witness, &why))
    throw Error("ill-formed-input", why);
  if (Verdict v = check_schema(n, path); !v) return v;
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    path.push_back(i);
    Verdict v = walk_schemas(sig, n.premises[i], path);
    path.pop_back();
    if (!v) return v;
  }
  return Verdict::accept();
}

}  // namespace

Verdict check_gs(const Signature& sig, const GSProof& proof, const GsCheckOptions& opt) {
  {
    std::vector<std::size_t> path;
    if (Verdict v = walk_schemas(sig, proof, path); !v) return v;
  }

  std::vector<NodeInfo> nodes;
  {
    std::vector<std::size_t> path;
    collect(proof, path, nodes);
  }

  if (opt.check_eigen_context) {
    for (const auto& info : nodes) {
      if (info.node->rule != Rule::ForallR) continue;
      if (info.free.count(info.node->eigen)) {
        std::string p = path_str(info.path);
        return Verdict::reject("eigenvariable-free-in-context",
                               "eigenvariable " + info.node->eigen +
                                   " occurs free in the conclusion at node " +
                                   (p.empty() ? "root" : p),
                               {{"node", p}, {"eigenvariable", info.node->eigen}});
      }
    }
  }

  if (opt.check_eigen_reuse) {
    std::set<std::string> used;
    for (const auto& info : nodes) {
      if (info.node->rule != Rule::ForallR) continue;
      if (!used.insert(info.node->eigen).second) {
        std::string p = path_str(info.path);
        return Verdict::reject("eigenvariable-reused",
                               "eigenvariable " + info.node->eigen +
                                   " is introduced more than once (again at node " +
                                   (p.empty() ? "root" : p) + ")",
                               {{"node", p}, {"eigenvariable", info.node->eigen}});
      }
    }
  }

  if (opt.check_eigen_escape) {
    for (const auto& binder : nodes) {
      if (binder.node->rule != Rule::ForallR) continue;
      for (const auto& other : nodes) {
        if (is_prefix(binder.path, other.path)) continue;  // inside the subproof
        if (other.free.count(binder.node->eigen)) {
          std::string bp = path_str(binder.path);
          std::string op = path_str(other.path);
          return Verdict::reject(
              "eigenvariable-escapes-subproof",
              "eigenvariable " + binder.node->eigen + " of node " +
                  (bp.empty() ? "root" : bp) + " occurs free at node " +
                  (op.empty() ? "root" : op),
              {{"node", bp}, {"escapes-to", op}, {"eigenvariable", binder.node->eigen}});
        }
      }
    }
  }

  if (opt.check_barendregt) {
    std::set<std::string> all_free, all_bound;
    for (const auto& info : nodes) {
      all_free.insert(info.free.begin(), info.free.end());
      for (const auto& m : info.node->conclusion) bound_vars(m, all_bound);
    }
    for (const auto& v : all_free) {  // sets iterate in sorted order
      if (all_bound.count(v))
        return Verdict::reject("barendregt-violation",
                               "variable " + v +
                                   " occurs both free and bound in the proof tree",
                               {{"variable", v}});
    }
  }

  return Verdict::accept();
}

}  // namespace hb
