// Acceptance gate: end-to-end checks over the whole pipeline (search,
// checking, translation, contraction, and the independent test oracles).
// Each criterion prints exactly one PASS/FAIL line; the exit status is 0
// iff every criterion passes.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hb/fol.hpp"
#include "hb/gs.hpp"
#include "hb/herbrand.hpp"
#include "hb/json_io.hpp"
#include "hb/parse.hpp"
#include "hb/propositional.hpp"
#include "hb/semantics.hpp"
#include "hb/translate.hpp"
#include "oracles.hpp"

using namespace hb;

namespace {

// ---------- shared infrastructure ----------

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// Every certificate the proper checker accepts during the run feeds the
// soundness cross-check: its goal's universal closure must hold in every
// interpretation with at most two elements.
struct SoundnessLog {
  std::size_t acceptances = 0;
  std::map<std::string, FormulaPtr> closures;  // keyed by rendering

  void record(const Sequent& goal) {
    ++acceptances;
    FormulaPtr closed = close_universally(big_or(goal));
    closures.emplace(to_string(closed), closed);
  }
};

SoundnessLog g_sound;

// A corpus case: a self-contained sequent document provable by the full
// search policy within uniform bounds.
struct CorpusCase {
  const char* name;
  const char* document;
};

const std::vector<CorpusCase>& corpus() {
  static const std::vector<CorpusCase> cases = {
      {"drinker",
       "rel P/1\nfun c/0\nseq exists x. ~P(x) \\/ (forall y. P(y))\n"},
      {"conj-of-universals",
       "rel A/1\nrel B/1\n"
       "seq (forall x. A(x)) /\\ (forall x. B(x)), "
       "((exists x. ~A(x)) \\/ (exists x. ~B(x))) /\\ "
       "((exists x. ~A(x)) \\/ (exists x. ~B(x)))\n"},
      {"successor-chain",
       "rel P/1\nfun c/0\nfun f/1\nseq exists x. ~P(x) \\/ P(f(x))\n"},
      {"prenex-drinker",
       "rel P/1\nfun c/0\nseq exists y. forall x. P(x) \\/ ~P(y)\n"},
      {"forall-exists", "rel P/1\nseq forall x. exists y. ~P(x) \\/ P(y)\n"},
      {"forall-forall", "rel R/2\nseq forall x. forall y. R(x, y) \\/ ~R(x, y)\n"},
      {"quantifier-swap",
       "rel R/2\nseq forall x. exists y. R(x, y), exists u. forall v. ~R(u, v)\n"},
      {"exists-pair",
       "rel R/2\nfun c/0\n"
       "seq exists x. forall y. R(x, y), exists u. exists v. ~R(u, v)\n"},
      {"witness-pair", "rel Q/1\nseq exists y. Q(y), forall x. ~Q(x)\n"},
      {"conj-split",
       "rel P/1\nrel Q/1\nfun c/0\n"
       "seq exists x. P(x) /\\ Q(x), exists y. ~P(y), exists z. ~Q(z)\n"},
      {"excluded-middle", "rel p/0\nseq p \\/ ~p\n"},
      {"pointwise-excluded-middle", "rel P/1\nseq forall x. P(x) \\/ ~P(x)\n"},
      {"ground-excluded-middle", "rel P/1\nfun c/0\nseq P(c) \\/ ~P(c)\n"},
      {"disj-or-neither", "rel p/0\nrel q/0\nseq (p \\/ q) \\/ (~p /\\ ~q)\n"},
      {"triple-nesting",
       "rel p/0\nrel q/0\nrel r/0\n"
       "seq ((p /\\ q) /\\ r) \\/ ((~p \\/ ~q) \\/ ~r)\n"},
      {"conj-or-refutation",
       "rel p/0\nrel q/0\nseq (p /\\ q) \\/ (~p \\/ ~q)\n"},
      {"three-members", "rel p/0\nrel q/0\nseq p, ~p /\\ ~q, q\n"},
      {"weaken-existential",
       "rel P/1\nrel Q/1\nfun c/0\nseq ~P(c), P(c), exists x. Q(x)\n"},
      {"weaken-universal", "rel p/0\nrel P/1\nseq ~p, p, forall x. P(x)\n"},
      {"weaken-double-existential",
       "rel P/1\nrel R/2\nfun c/0\n"
       "seq ~P(c) \\/ P(c), exists x. exists y. R(x, y)\n"},
      {"weaken-mixed-block",
       "rel p/0\nrel R/2\nfun c/0\nseq ~p, p, forall x. exists y. R(x, y)\n"},
      {"double-existential",
       "rel R/2\nfun c/0\nseq exists x. exists y. R(x, y) \\/ ~R(x, y)\n"},
      {"ground-witness", "rel P/1\nfun c/0\nseq exists x. P(x) \\/ ~P(c)\n"},
      {"chain-under-conjunction",
       "rel P/1\nrel q/0\nfun c/0\nfun f/1\n"
       "seq exists x. (~P(x) \\/ P(f(x))) /\\ (q \\/ ~q)\n"},
  };
  return cases;
}

// Results of the end-to-end corpus run, reused by later criteria.
struct ProvedCase {
  std::string name;
  Signature sig;
  Sequent goal;
  HerbrandProof cert;
};

std::vector<ProvedCase> g_proved;

// ---------- position utilities (duplication targets) ----------

void collect_positions_rec(const FormulaPtr& f, PositionPath& cur,
                           std::vector<PositionPath>& out) {
  out.push_back(cur);
  if (f->is_binary()) {
    cur.push_back(PathStep::left());
    collect_positions_rec(f->left(), cur, out);
    cur.back() = PathStep::right();
    collect_positions_rec(f->right(), cur, out);
    cur.pop_back();
  } else if (f->is_quant()) {
    cur.push_back(PathStep::body());
    collect_positions_rec(f->body(), cur, out);
    cur.pop_back();
  }
}

std::vector<PositionPath> collect_positions(const Sequent& s) {
  std::vector<PositionPath> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    PositionPath cur{PathStep::member(i)};
    collect_positions_rec(s[i], cur, out);
  }
  return out;
}

// The five structural cases the contraction transformation distinguishes.
enum class Shape { Literal, Or, And, Forall, Exists };

Shape shape_of(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Or: return Shape::Or;
    case Formula::Kind::And: return Shape::And;
    case Formula::Kind::Forall: return Shape::Forall;
    case Formula::Kind::Exists: return Shape::Exists;
    default: return Shape::Literal;
  }
}

// ---------- criteria ----------

// 1: the two contraction policies are genuinely different: the restricted
// one exhausts its whole search space on a sequent the full one proves, and
// the found proof survives checking and translation.
std::string criterion_1() {
  auto start = std::chrono::steady_clock::now();
  SequentFile file = load_sequent_file(std::string(TEST_FIXTURE_DIR) + "/buss.seq");
  SearchLimits limits;
  limits.max_depth = 12;
  limits.max_term_depth = 1;

  SearchResult restricted =
      search_gs(file.signature, file.sequent, SearchPolicy::Restricted, limits);
  if (restricted.status != SearchStatus::Exhausted)
    return "restricted policy did not exhaust its search space";

  SearchResult full = search_gs(file.signature, file.sequent, SearchPolicy::Full, limits);
  if (full.status != SearchStatus::Proved) return "full policy found no proof";
  if (!check_gs(file.signature, *full.proof)) return "found proof fails checking";

  HerbrandProof hp = translate(file.signature, *full.proof);
  Verdict v = check_herbrand(file.signature, file.sequent, hp);
  if (!v.ok) return "translated certificate rejected: " + v.code;
  g_sound.record(file.sequent);

  double elapsed = seconds_since(start);
  if (elapsed >= 10.0) return "took " + fmt_seconds(elapsed) + " (limit 10s)";
  std::ostringstream os;
  os << "restricted exhausts (" << restricted.nodes_expanded
     << " nodes) where full proves (" << full.nodes_expanded << " nodes, depth "
     << proof_depth(*full.proof)
     << "); proof and translated certificate both check; " << fmt_seconds(elapsed);
  return "OK " + os.str();
}

// 2: every corpus sequent goes search -> translate -> certificate accepted.
std::string criterion_2() {
  double slowest = 0.0;
  for (const CorpusCase& c : corpus()) {
    auto start = std::chrono::steady_clock::now();
    SequentFile file = parse_sequent_document(c.document);
    SearchLimits limits;
    limits.max_depth = 12;
    limits.max_term_depth = 2;
    SearchResult res = search_gs(file.signature, file.sequent, SearchPolicy::Full, limits);
    if (res.status != SearchStatus::Proved)
      return std::string(c.name) + ": search failed";
    if (!check_gs(file.signature, *res.proof))
      return std::string(c.name) + ": found proof fails checking";
    HerbrandProof hp = translate(file.signature, *res.proof);
    Verdict v = check_herbrand(file.signature, file.sequent, hp);
    if (!v.ok) return std::string(c.name) + ": certificate rejected: " + v.code;
    g_sound.record(file.sequent);
    g_proved.push_back({c.name, file.signature, file.sequent, std::move(hp)});
    double elapsed = seconds_since(start);
    slowest = std::max(slowest, elapsed);
    if (elapsed >= 30.0)
      return std::string(c.name) + " took " + fmt_seconds(elapsed) + " (limit 30s)";
  }
  std::ostringstream os;
  os << corpus().size() << "/" << corpus().size()
     << " corpus sequents prove, translate and check; slowest case "
     << fmt_seconds(slowest);
  return "OK " + os.str();
}

// 3: every accepted certificate's goal is actually valid in all small
// interpretations (soundness cross-check via finite models).
std::string criterion_3() {
  std::size_t violations = 0;
  for (const auto& [key, closed] : g_sound.closures)
    if (!valid_up_to(closed, 2)) ++violations;
  if (violations != 0) {
    std::ostringstream os;
    os << violations << " accepted goals fail in an interpretation of size <= 2";
    return os.str();
  }
  std::ostringstream os;
  os << g_sound.acceptances << " certificate acceptances over "
     << g_sound.closures.size()
     << " distinct closed goals, all valid in every interpretation of size <= 2";
  return "OK " + os.str();
}

// 4: duplicating any subformula of an accepted certificate's goal yields an
// accepted certificate, and contracting the duplicate yields an accepted
// certificate for the original goal — across 200 randomized positions
// covering all five structural cases.
std::string criterion_4() {
  auto start = std::chrono::steady_clock::now();
  struct Target {
    std::size_t case_idx;
    PositionPath path;
    Shape shape;
  };
  std::vector<Target> targets;
  for (std::size_t i = 0; i < g_proved.size(); ++i)
    for (PositionPath& p : collect_positions(g_proved[i].goal))
      targets.push_back({i, p, shape_of(at_path(g_proved[i].goal, p))});
  if (targets.empty()) return "no duplication targets (corpus run failed?)";

  // First pick one target of each shape so all five cases are exercised,
  // then fill up with random picks.
  std::vector<std::size_t> picks;
  for (Shape s : {Shape::Literal, Shape::Or, Shape::And, Shape::Forall, Shape::Exists}) {
    for (std::size_t i = 0; i < targets.size(); ++i)
      if (targets[i].shape == s) {
        picks.push_back(i);
        break;
      }
  }
  if (picks.size() != 5) return "corpus lacks one of the five subformula shapes";
  oracle::Rng rng(424242);
  while (picks.size() < 200) picks.push_back(rng.below(targets.size()));

  std::map<Shape, std::size_t> by_shape;
  for (std::size_t pick : picks) {
    const Target& t = targets[pick];
    const ProvedCase& pc = g_proved[t.case_idx];
    WorkingCert wc{pc.cert.expansion, pc.cert.prenex.prefix, pc.cert.witnesses};
    Sequent base = pc.goal;

    duplicate_at(wc, base, t.path);
    Verdict dup = check_herbrand(pc.sig, base, to_herbrand_proof(wc));
    if (!dup.ok)
      return pc.name + " at " + to_string(t.path) +
             ": duplicated certificate rejected: " + dup.code;
    g_sound.record(base);

    deep_contract(wc, base, t.path);
    if (!sequent_equal(base, pc.goal))
      return pc.name + " at " + to_string(t.path) +
             ": contraction did not restore the goal";
    Verdict con = check_herbrand(pc.sig, base, to_herbrand_proof(wc));
    if (!con.ok)
      return pc.name + " at " + to_string(t.path) +
             ": contracted certificate rejected: " + con.code;
    g_sound.record(base);
    ++by_shape[t.shape];
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 60.0) return "took " + fmt_seconds(elapsed) + " (limit 60s)";
  std::ostringstream os;
  os << picks.size() << "/" << picks.size()
     << " duplicate-then-contract round trips accepted (literal "
     << by_shape[Shape::Literal] << ", or " << by_shape[Shape::Or] << ", and "
     << by_shape[Shape::And] << ", forall " << by_shape[Shape::Forall] << ", exists "
     << by_shape[Shape::Exists] << "); " << fmt_seconds(elapsed);
  return "OK " + os.str();
}

// 5: regrouping a disjunction of two conjunctions into a conjunction of two
// disjunctions preserves tautology, over random matrices.
std::string criterion_5() {
  oracle::Rng rng(5555);
  std::size_t premise_held = 0;
  for (int trial = 0; trial < 500; ++trial) {
    FormulaPtr a = rng.matrix(6, 1 + rng.below(3));
    FormulaPtr b = rng.matrix(6, 1 + rng.below(3));
    FormulaPtr c = rng.matrix(6, 1 + rng.below(3));
    FormulaPtr d = rng.matrix(6, 1 + rng.below(3));
    // Half the trials get a context that makes the premise a tautology by
    // construction, so the implication is exercised and not vacuous.
    FormulaPtr g = (trial % 2 == 0)
                       ? negate(Formula::disj(Formula::conj(a, b), Formula::conj(c, d)))
                       : rng.matrix(6, 1 + rng.below(5));
    FormulaPtr premise =
        Formula::disj(Formula::disj(g, Formula::conj(a, b)), Formula::conj(c, d));
    FormulaPtr conclusion = Formula::disj(
        g, Formula::conj(Formula::disj(a, c), Formula::disj(b, d)));
    if (!is_tautology(premise)) continue;
    ++premise_held;
    if (!is_tautology(conclusion)) {
      return "regrouping broke tautology at trial " + std::to_string(trial) + ": " +
             to_string(premise);
    }
  }
  if (premise_held == 0) return "no trial produced a tautological premise";
  std::ostringstream os;
  os << "500 random matrices, " << premise_held
     << " tautological premises, regrouped form tautological in all of them";
  return "OK " + os.str();
}

// 6: the tautology checker agrees with the independent truth-table oracle on
// stored fixtures and 1000 random matrices.
std::string criterion_6() {
  std::vector<FormulaPtr> fixtures;
  Signature sig;
  sig.add_relation("p", 0);
  sig.add_relation("q", 0);
  sig.add_relation("r", 0);
  for (const char* txt : {
           "p \\/ ~p",
           "p",
           "~p",
           "p \\/ q",
           "(p \\/ q) \\/ (~p /\\ ~q)",
           "(p /\\ q) \\/ (~p \\/ ~q)",
           "(p /\\ q) \\/ (~p /\\ ~q)",
           "((p /\\ q) /\\ r) \\/ ((~p \\/ ~q) \\/ ~r)",
           "(~p \\/ ~q) \\/ ((p \\/ p) /\\ (q \\/ q))",
           "(p \\/ (q /\\ r)) \\/ ((~p /\\ ~q) \\/ (~p /\\ ~r))",
           "p /\\ ~p",
           "(p \\/ ~q) /\\ (q \\/ ~p)",
       })
    fixtures.push_back(parse_formula(txt, sig));
  // The corpus certificates' substituted matrices double as fixtures.
  for (const ProvedCase& pc : g_proved)
    fixtures.push_back(substitute_witnesses(pc.cert.prenex, pc.cert.witnesses));

  for (const FormulaPtr& f : fixtures)
    if (is_tautology(f) != oracle::taut(f))
      return "fixture disagreement on " + to_string(f);

  oracle::Rng rng(6666);
  for (int trial = 0; trial < 1000; ++trial) {
    FormulaPtr f = rng.matrix(4, 1 + rng.below(7));
    if (is_tautology(f) != oracle::taut(f))
      return "random disagreement on " + to_string(f);
  }
  std::ostringstream os;
  os << "checker matches truth-table oracle on " << fixtures.size()
     << " fixtures and 1000 random matrices";
  return "OK " + os.str();
}

// 7: the recursive expansion check agrees exactly with the exhaustive
// closure of the duplication step on all small formulas.
std::string criterion_7() {
  auto start = std::chrono::steady_clock::now();
  std::vector<FormulaPtr> bases = oracle::enumerate_formulas(6);
  std::size_t positives = 0, negatives = 0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const FormulaPtr& base = bases[i];
    // Positive side: every member of the bounded closure must be accepted.
    std::vector<FormulaPtr> members = oracle::expansion_closure(base, 3);
    for (const FormulaPtr& m : members) {
      if (!is_strong_expansion(base, m))
        return "rejected a closure member: base " + to_string(base) +
               ", candidate " + to_string(m);
      ++positives;
    }
    // Negative side: candidates drawn from a different base's closure,
    // decided exactly by the membership oracle (which works backwards from
    // the candidate, undoing duplications).
    std::vector<FormulaPtr> cands =
        oracle::expansion_closure(bases[(i + 1) % bases.size()], 3);
    cands.push_back(bases[(i + 7) % bases.size()]);
    for (const FormulaPtr& c : cands) {
      bool expected = oracle::in_expansion_closure(base, c);
      if (is_strong_expansion(base, c) != expected)
        return "disagreement: base " + to_string(base) + ", candidate " +
               to_string(c) + ", oracle says " + (expected ? "yes" : "no");
      if (!expected) ++negatives;
    }
  }
  std::ostringstream os;
  os << bases.size() << " bases, " << positives << " closure members accepted, "
     << negatives << " non-members rejected, zero disagreements; "
     << fmt_seconds(seconds_since(start));
  return "OK " + os.str();
}

// 8: each independent check rejects some fixture that every other check
// accepts, so none of them is redundant.
std::string criterion_8() {
  std::size_t shown = 0;

  // --- certificate checks, exercised on variants of one scenario ---
  Signature sig;
  sig.add_relation("P", 1);
  sig.add_function("c", 0);
  auto f = [&](const char* t) { return parse_formula(t, sig); };

  Sequent drinker_goal{f("exists x. ~P(x) \\/ (forall y. P(y))")};
  Sequent drinker_expansion{
      f("(exists x1. ~P(x1) \\/ (forall y1. P(y1))) \\/ "
        "(exists x2. ~P(x2) \\/ (forall y2. P(y2)))")};
  FormulaPtr drinker_matrix = erase_quantifiers(big_or(drinker_expansion));
  TermPtr c = parse_term("c", sig);
  auto var = [](const char* v) { return Term::var(v); };

  auto expect = [&](const char* what, const Sequent& goal, const HerbrandProof& hp,
                    const char* code, HerbrandCheckOptions off) -> std::string {
    Verdict strict = check_herbrand(sig, goal, hp);
    if (strict.ok)
      return std::string(what) + ": strict checker accepted an invalid certificate";
    if (strict.code != code)
      return std::string(what) + ": expected rejection " + code + ", got " +
             strict.code;
    Verdict mutated = check_herbrand(sig, goal, hp, off);
    if (!mutated.ok)
      return std::string(what) +
             ": still rejected with the check disabled (not load-bearing): " +
             mutated.code;
    ++shown;
    return "";
  };

  // Expansion check: a disjunction introduced on a non-existential formula.
  {
    Sequent goal{f("~P(c)")};
    HerbrandProof hp{Sequent{f("~P(c) \\/ P(c)")},
                     PrenexFormula{{}, f("~P(c) \\/ P(c)")},
                     {}};
    HerbrandCheckOptions off;
    off.check_expansion = false;
    std::string err = expect("expansion", goal, hp, "not-an-expansion", off);
    if (!err.empty()) return err;
  }
  // Prenexification check: a prefix that hoists an inner universal above the
  // existential it lives under.
  {
    HerbrandProof hp{drinker_expansion,
                     PrenexFormula{{{Quant::Forall, "y1"},
                                    {Quant::Exists, "x1"},
                                    {Quant::Exists, "x2"},
                                    {Quant::Forall, "y2"}},
                                   drinker_matrix},
                     {var("y1"), var("y1")}};
    HerbrandCheckOptions off;
    off.check_prenexification = false;
    std::string err =
        expect("prenexification", drinker_goal, hp, "not-a-prenexification", off);
    if (!err.empty()) return err;
  }
  // Variable condition: a witness using a universal bound after it.
  {
    HerbrandProof hp{drinker_expansion,
                     PrenexFormula{{{Quant::Exists, "x1"},
                                    {Quant::Forall, "y1"},
                                    {Quant::Exists, "x2"},
                                    {Quant::Forall, "y2"}},
                                   drinker_matrix},
                     {var("y2"), c}};
    HerbrandCheckOptions off;
    off.check_variable_condition = false;
    std::string err = expect("variable-condition", drinker_goal, hp,
                             "variable-condition-violated", off);
    if (!err.empty()) return err;
  }
  // Tautology check: well-shaped witnesses whose substituted matrix is
  // falsifiable.
  {
    HerbrandProof hp{drinker_expansion,
                     PrenexFormula{{{Quant::Exists, "x1"},
                                    {Quant::Forall, "y1"},
                                    {Quant::Exists, "x2"},
                                    {Quant::Forall, "y2"}},
                                   drinker_matrix},
                     {c, c}};
    HerbrandCheckOptions off;
    off.check_tautology = false;
    std::string err =
        expect("tautology", drinker_goal, hp, "matrix-not-tautology", off);
    if (!err.empty()) return err;
  }

  // --- proof checks ---
  Signature psig;
  psig.add_relation("P", 1);
  psig.add_relation("Q", 1);
  auto pf = [&](const char* t) { return parse_formula(t, psig); };

  auto expect_proof = [&](const char* what, const GSProof& proof, const char* code,
                          GsCheckOptions off) -> std::string {
    Verdict strict = check_gs(psig, proof);
    if (strict.ok) return std::string(what) + ": strict checker accepted an invalid proof";
    if (strict.code != code)
      return std::string(what) + ": expected rejection " + code + ", got " +
             strict.code;
    Verdict mutated = check_gs(psig, proof, off);
    if (!mutated.ok)
      return std::string(what) +
             ": still rejected with the check disabled (not load-bearing): " +
             mutated.code;
    ++shown;
    return "";
  };

  // Eigenvariable condition: the introduced variable is free in the
  // conclusion's context.
  {
    GSProof ax;
    ax.rule = Rule::Ax;
    ax.conclusion = {pf("~P(z)"), pf("P(z)")};
    GSProof root;
    root.rule = Rule::ForallR;
    root.conclusion = {pf("~P(z)"), pf("forall x. P(x)")};
    root.eigen = "z";
    root.member = 1;
    root.premises = {ax};
    GsCheckOptions off;
    off.check_eigen_context = false;
    std::string err =
        expect_proof("eigenvariable", root, "eigenvariable-free-in-context", off);
    if (!err.empty()) return err;
  }
  // Bound/free separation: a variable occurring both free and bound in the
  // proof's sequents.
  {
    GSProof ax;
    ax.rule = Rule::Ax;
    ax.conclusion = {pf("P(x)"), pf("~P(x)")};
    GSProof root;
    root.rule = Rule::WeakenR;
    root.conclusion = {pf("P(x)"), pf("~P(x)"), pf("exists x. Q(x)")};
    root.premises = {ax};
    GsCheckOptions off;
    off.check_barendregt = false;
    std::string err =
        expect_proof("bound-free-separation", root, "barendregt-violation", off);
    if (!err.empty()) return err;
  }

  std::ostringstream os;
  os << "all " << shown
     << " independent checks are load-bearing (each rejects a fixture that is "
        "accepted once that check alone is disabled)";
  return "OK " + os.str();
}

}  // namespace

int main() {
  std::array<std::string, 9> lines;
  auto run = [&](int n, std::string (*fn)()) {
    std::string r;
    try {
      r = fn();
    } catch (const Error& e) {
      r = std::string("unexpected error ") + e.code + ": " + e.what();
    } catch (const std::exception& e) {
      r = std::string("unexpected exception: ") + e.what();
    }
    bool ok = r.rfind("OK ", 0) == 0;
    lines[n] = (ok ? "PASS criterion-" : "FAIL criterion-") + std::to_string(n) +
               ": " + (ok ? r.substr(3) : r);
    return ok;
  };

  bool all = true;
  all &= run(1, criterion_1);
  all &= run(2, criterion_2);
  all &= run(4, criterion_4);  // before 3: its acceptances feed the cross-check
  all &= run(3, criterion_3);
  all &= run(5, criterion_5);
  all &= run(6, criterion_6);
  all &= run(7, criterion_7);
  all &= run(8, criterion_8);

  for (int n = 1; n <= 8; ++n) std::puts(lines[n].c_str());
  std::puts(all ? "acceptance: all criteria passed"
                : "acceptance: at least one criterion FAILED");
  return all ? 0 : 1;
}
