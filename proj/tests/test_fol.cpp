#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "hb/fol.hpp"
#include "oracles.hpp"

using namespace hb;
using hb::testing::F;
using hb::testing::S;
using hb::testing::T;

TEST_CASE("negation is the De Morgan dual") {
  CHECK(formula_equal(negate(F("P(c)")), F("~P(c)")));
  CHECK(formula_equal(negate(F("forall x. P(x)")), F("exists x. ~P(x)")));
  CHECK(formula_equal(negate(F("p /\\ q")), F("~p \\/ ~q")));
}

TEST_CASE("negation is an involution") {
  FormulaPtr g = F("exists x. P(x) /\\ Q(x)");
  CHECK(formula_equal(negate(negate(g)), g));
  for (const auto& f : oracle::enumerate_formulas(5))
    CHECK(formula_equal(negate(negate(f)), f));
}

TEST_CASE("rank counts connectives and quantifiers above literals") {
  CHECK(rank(F("P(c)")) == 0);
  CHECK(rank(F("P(c) \\/ Q(c)")) == 1);
  CHECK(rank(F("forall x. P(x) \\/ Q(x)")) == 2);
  CHECK(rank(F("~p")) == 0);
}

TEST_CASE("free and bound variable computation") {
  Signature sig = hb::testing::default_sig();
  FormulaPtr f = parse_formula("forall x. R(x, y)", sig);
  CHECK(free_vars(f) == std::set<std::string>{"y"});
  CHECK(bound_vars(f) == std::set<std::string>{"x"});

  CHECK(free_vars(F("P(c)")).empty());
  CHECK(bound_vars(F("P(c)")).empty());

  // The same name free in one place and bound in another.
  FormulaPtr g = F("(exists x. P(x)) \\/ Q(x)");
  CHECK(free_vars(g) == std::set<std::string>{"x"});
  CHECK(bound_vars(g) == std::set<std::string>{"x"});
}

TEST_CASE("alpha normalization separates binders from each other and from frees") {
  FormulaPtr dup = F("(forall x. P(x)) \\/ (forall x. Q(x))");
  FormulaPtr n1 = alpha_normalize(dup);
  CHECK(is_alpha_normal(n1));
  CHECK(alpha_eq(dup, n1));
  CHECK(to_string(n1) == "(forall x1. P(x1)) \\/ (forall x. Q(x))");

  FormulaPtr already = F("forall x. P(x)");
  CHECK(formula_equal(alpha_normalize(already), already));

  FormulaPtr clash = F("(exists x. P(x)) \\/ Q(x)");
  FormulaPtr n2 = alpha_normalize(clash);
  CHECK(is_alpha_normal(n2));
  CHECK(alpha_eq(clash, n2));
  CHECK(free_vars(n2) == std::set<std::string>{"x"});
  CHECK(to_string(n2) == "(exists x1. P(x1)) \\/ Q(x)");

  // The reserved set is avoided as well.
  FormulaPtr n3 = alpha_normalize(already, {"x"});
  CHECK(alpha_eq(n3, already));
  CHECK(bound_vars(n3).count("x") == 0);
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_eq(F("forall x. P(x)"), F("forall y. P(y)")));
  CHECK_FALSE(alpha_eq(F("forall x. P(x)"), F("forall x. Q(x)")));
  CHECK(alpha_eq(F("exists x. forall y. R(x, y)"), F("exists y. forall x. R(y, x)")));
  CHECK_FALSE(alpha_eq(F("exists x. forall y. R(x, y)"), F("exists x. forall y. R(y, x)")));
}

TEST_CASE("substitution replaces free occurrences only, avoiding capture") {
  CHECK(formula_equal(substitute(F("P(x) \\/ Q(y)"), "x", T("c")), F("P(c) \\/ Q(y)")));
  CHECK(formula_equal(substitute(F("forall x. P(x)"), "x", T("c")), F("forall x. P(x)")));

  // Capture avoidance: the binder y must move out of the way of f(y).
  FormulaPtr g = substitute(F("forall y. R(x, y)"), "x", T("f(y)"));
  CHECK(alpha_eq(g, F("forall z. R(f(y), z)")));
  CHECK(g->sym() != "y");
  CHECK(free_vars(g) == std::set<std::string>{"y"});
}

TEST_CASE("substitution changes free variables only as expected") {
  oracle::Rng rng(11);
  std::vector<FormulaPtr> pool = oracle::enumerate_formulas(5);
  for (std::size_t i = 0; i < pool.size(); i += 7) {
    const FormulaPtr& f = pool[i];
    FormulaPtr g = substitute(f, "x", T("f(y)"));
    std::set<std::string> expect = free_vars(f);
    if (expect.erase("x")) expect.insert("y");
    CHECK(free_vars(g) == expect);
  }
}

TEST_CASE("fresh names extend the base with the smallest unused suffix") {
  std::set<std::string> used{"x", "x1"};
  CHECK(fresh_name("x", used) == "x2");
  CHECK(used.count("x2") == 1);
  CHECK(fresh_name("y", used) == "y");
}

TEST_CASE("prenexify builds the requested prefix") {
  Sequent s = S("forall x. P(x), exists y. Q(y)");
  PrenexFormula p = prenexify(s, {"x", "y"});
  REQUIRE(p.prefix.size() == 2);
  CHECK(p.prefix[0] == PrefixEntry{Quant::Forall, "x"});
  CHECK(p.prefix[1] == PrefixEntry{Quant::Exists, "y"});
  CHECK(formula_equal(p.matrix, F("P(x) \\/ Q(y)")));

  PrenexFormula q = prenexify(S("P(c)"), {});
  CHECK(q.prefix.empty());
  CHECK(formula_equal(q.matrix, F("P(c)")));

  try {
    prenexify(S("exists x. forall y. R(x, y)"), {"y", "x"});
  } catch (const Error& e) {
    CHECK(e.code == "order-not-a-valid-linearization");
  }

  try {
    prenexify(S("(forall x. P(x)) \\/ P(x)"), {"x"});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == "sequent-not-alpha-normal");
  }
}

TEST_CASE("is_prenexification_of accepts exactly the nesting-respecting orders") {
  Sequent s = S("forall x. P(x), exists y. Q(y)");
  FormulaPtr m = F("P(x) \\/ Q(y)");
  CHECK(is_prenexification_of(
      s, {{{Quant::Forall, "x"}, {Quant::Exists, "y"}}, m}));
  // The two binders do not nest, so either order works.
  CHECK(is_prenexification_of(
      s, {{{Quant::Exists, "y"}, {Quant::Forall, "x"}}, m}));

  Sequent nested = S("exists x. forall y. R(x, y)");
  FormulaPtr rm = F("R(x, y)");
  CHECK(is_prenexification_of(
      nested, {{{Quant::Exists, "x"}, {Quant::Forall, "y"}}, rm}));
  CHECK_FALSE(is_prenexification_of(
      nested, {{{Quant::Forall, "y"}, {Quant::Exists, "x"}}, rm}));

  // Wrong matrix and wrong variable multiset are both rejected.
  CHECK_FALSE(is_prenexification_of(
      s, {{{Quant::Forall, "x"}, {Quant::Exists, "y"}}, F("Q(y) \\/ P(x)")}));
  CHECK_FALSE(is_prenexification_of(s, {{{Quant::Forall, "x"}}, m}));
}

TEST_CASE("matrix comparison is modulo disjunction reassociation only") {
  CHECK(assoc_eq(F("p \\/ (q \\/ r)"), F("(p \\/ q) \\/ r")));
  CHECK_FALSE(assoc_eq(F("p \\/ q"), F("q \\/ p")));
  CHECK_FALSE(assoc_eq(F("p /\\ (q /\\ r)"), F("(p /\\ q) /\\ r")));
  CHECK(assoc_eq(F("(p /\\ q) \\/ r \\/ p"), F("(p /\\ q) \\/ (r \\/ p)")));

  Sequent s = S("forall x. P(x), exists y. Q(y)");
  CHECK(is_prenexification_of(
      s, {{{Quant::Forall, "x"}, {Quant::Exists, "y"}}, F("P(x) \\/ Q(y)")}));
}

static std::vector<std::vector<std::string>> all_orders(const Sequent& s) {
  std::vector<QuantOccurrence> occ = quant_occurrences(big_or(s));
  std::vector<std::string> vars;
  for (const auto& o : occ) vars.push_back(o.var);
  std::sort(vars.begin(), vars.end());
  std::vector<std::vector<std::string>> out;
  do {
    out.push_back(vars);
  } while (std::next_permutation(vars.begin(), vars.end()));
  return out;
}

TEST_CASE("prenexify round-trips through is_prenexification_of") {
  for (const char* txt :
       {"forall x. P(x), exists y. Q(y)", "exists x. forall y. R(x, y)",
        "exists x. ~P(x) \\/ (forall y. P(y))",
        "forall x. exists y. R(x, y), exists u. Q(u)"}) {
    Sequent s = S(txt);
    int valid = 0;
    for (const auto& order : all_orders(s)) {
      try {
        PrenexFormula p = prenexify(s, order);
        CHECK(is_prenexification_of(s, p));
        ++valid;
      } catch (const Error& e) {
        CHECK(e.code == "order-not-a-valid-linearization");
      }
    }
    CHECK(valid > 0);
  }
}

TEST_CASE("prenex prefixes match the exhaustive rewrite closure") {
  // Sequents with up to four quantifier occurrences, including nested,
  // incomparable and mixed binder structure.
  for (const char* txt :
       {"P(c)", "forall x. P(x)", "forall x. P(x), exists y. Q(y)",
        "exists x. forall y. R(x, y)",
        "exists x. ~P(x) \\/ (forall y. P(y))",
        "exists x. ~P(x) \\/ (forall y. P(y)), exists z. Q(z)",
        "forall x. exists y. R(x, y), forall u. Q(u)",
        "forall x. (P(x) /\\ (exists y. R(x, y)))",
        "exists x. forall y. R(x, y), exists u. forall v. R(u, v)",
        "p, (exists x. P(x)) \\/ (exists y. Q(y)), q"}) {
    Sequent s = S(txt);
    std::set<std::string> reached = oracle::prenex_prefixes(s);

    // Checker-side set: every permutation of the quantifier occurrences that
    // is_prenexification_of accepts over the erased matrix.
    std::set<std::string> accepted;
    std::vector<QuantOccurrence> occ = quant_occurrences(big_or(s));
    FormulaPtr matrix = erase_quantifiers(big_or(s));
    std::vector<std::size_t> idx(occ.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end());
    do {
      std::vector<PrefixEntry> prefix;
      for (std::size_t i : idx) prefix.push_back({occ[i].q, occ[i].var});
      if (is_prenexification_of(s, {prefix, matrix}))
        accepted.insert(oracle::render_prefix(prefix));
    } while (std::next_permutation(idx.begin(), idx.end()));

    CHECK(reached == accepted);
    CHECK(!reached.empty());
  }
}

TEST_CASE("quantifier erasure and quantifier-freeness") {
  CHECK(is_quantifier_free(F("p \\/ q /\\ ~r")));
  CHECK_FALSE(is_quantifier_free(F("p \\/ (forall x. P(x))")));
  CHECK(formula_equal(erase_quantifiers(F("exists x. ~P(x) \\/ (forall y. P(y))")),
                      F("~P(x) \\/ P(y)")));
}

TEST_CASE("sequent disjunction is right-nested and rejects the empty sequent") {
  Sequent s = S("p, q, r");
  CHECK(formula_equal(big_or(s), F("p \\/ (q \\/ r)")));
  CHECK(formula_equal(big_or(S("p")), F("p")));
  try {
    big_or({});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == "empty-sequent");
  }
}

TEST_CASE("positions resolve and replace subformulas") {
  Sequent s = S("p, q \\/ (forall x. P(x))");
  PositionPath p{PathStep::member(1), PathStep::right(), PathStep::body()};
  CHECK(formula_equal(at_path(s, p), F("P(x)")));

  Sequent r = replace_at(s, p, F("Q(x)"));
  CHECK(sequent_equal(r, S("p, q \\/ (forall x. Q(x))")));
  CHECK(sequent_equal(replace_at(s, p, at_path(s, p)), s));

  try {
    at_path(s, {PathStep::member(0), PathStep::left()});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == "path-mismatch");
  }
  CHECK_THROWS_AS(at_path(s, {PathStep::member(5)}), Error);
}

TEST_CASE("signature bookkeeping and the distinguished constant") {
  Signature sig;
  sig.add_relation("P", 1);
  sig.add_function("g", 2);
  CHECK_FALSE(sig.distinguished_constant().has_value());
  sig.add_function("e", 0);
  sig.add_function("b", 0);
  // Lexicographically smallest zero-ary function.
  CHECK(sig.distinguished_constant() == std::string("b"));
  CHECK_THROWS_AS(sig.add_relation("P", 2), Error);
  CHECK_THROWS_AS(sig.add_function("g", 2), Error);

  std::string why;
  CHECK(sig.well_formed(Term::app("g", {Term::var("x"), Term::app("b", {})}), &why));
  CHECK_FALSE(sig.well_formed(Term::app("g", {Term::var("x")}), &why));
  CHECK_FALSE(sig.well_formed(Formula::atom("Z"), &why));
}
