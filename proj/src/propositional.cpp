#include "hb/propositional.hpp"

#include <sstream>

namespace hb {

static void collect_atoms(const FormulaPtr& f, std::vector<std::string>& order,
                          std::map<std::string, bool>& seen) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: {
      std::string key = to_string(f->kind() == Formula::Kind::Atom ? f : negate(f));
      if (seen.emplace(key, true).second) order.push_back(key);
      return;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_atoms(f->left(), order, seen);
      collect_atoms(f->right(), order, seen);
      return;
    default:
      throw Error("not-quantifier-free",
                  "propositional operation on a quantified formula: " + to_string(f));
  }
}

std::vector<std::string> atom_keys(const FormulaPtr& f) {
  std::vector<std::string> order;
  std::map<std::string, bool> seen;
  collect_atoms(f, order, seen);
  return order;
}

bool eval_prop(const FormulaPtr& f, const Assignment& a) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: {
      std::string key = to_string(f->kind() == Formula::Kind::Atom ? f : negate(f));
      auto it = a.find(key);
      if (it == a.end()) throw Error("unassigned-atom", "no value for atom " + key);
      return f->kind() == Formula::Kind::Atom ? it->second : !it->second;
    }
    case Formula::Kind::And:
      return eval_prop(f->left(), a) && eval_prop(f->right(), a);
    case Formula::Kind::Or:
      return eval_prop(f->left(), a) || eval_prop(f->right(), a);
    default:
      throw Error("not-quantifier-free",
                  "propositional operation on a quantified formula: " + to_string(f));
  }
}

std::optional<Assignment> find_falsifying(const FormulaPtr& f) {
  std::vector<std::string> atoms = atom_keys(f);
  if (atoms.size() >= 8 * sizeof(unsigned long long))
    throw Error("too-many-atoms", "cannot enumerate assignments over " +
                                      std::to_string(atoms.size()) + " atoms");
  unsigned long long count = 1ULL << atoms.size();
  for (unsigned long long mask = 0; mask < count; ++mask) {
    Assignment a;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      a[atoms[i]] = (mask >> i) & 1ULL;
    if (!eval_prop(f, a)) return a;
  }
  return std::nullopt;
}

bool is_tautology(const FormulaPtr& f) { return !find_falsifying(f).has_value(); }

std::string to_string(const Assignment& a) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, val] : a) {
    if (!first) out << ", ";
    first = false;
    out << key << '=' << (val ? "true" : "false");
  }
  return out.str();
}

}  // namespace hb
