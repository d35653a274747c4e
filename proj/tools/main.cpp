// Command-line front end: proof checking, proof search, translation to
// Herbrand certificates, certificate checking, and two built-in demos.
//
// Exit codes: 0 = accepted / proved / ok; 1 = rejected / exhausted, with a
// structured reason on standard output; 2 = input or usage error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hb/fol.hpp"
#include "hb/gs.hpp"
#include "hb/herbrand.hpp"
#include "hb/json_io.hpp"
#include "hb/parse.hpp"
#include "hb/translate.hpp"
#include "hb/verdict.hpp"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

int report_check(const hb::Verdict& v, bool as_json) {
  if (as_json) {
    Json j;
    j["result"] = v.ok ? "accepted" : "rejected";
    if (!v.ok) {
      j["reason"] = v.code;
      j["message"] = v.message;
      j["detail"] = v.detail;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "RESULT: " << (v.ok ? "accepted" : "rejected") << "\n";
    if (!v.ok) {
      std::cout << "REASON: " << v.code << "\n";
      if (!v.message.empty()) std::cout << "MESSAGE: " << v.message << "\n";
      for (const auto& [k, val] : v.detail) std::cout << "DETAIL." << k << ": " << val << "\n";
    }
  }
  return v.ok ? 0 : 1;
}

std::string prefix_to_string(const std::vector<hb::PrefixEntry>& prefix) {
  std::string out;
  for (const auto& e : prefix) {
    if (!out.empty()) out += ", ";
    out += (e.q == hb::Quant::Forall ? "forall " : "exists ") + e.var;
  }
  return out;
}

std::string witnesses_to_string(const std::vector<hb::TermPtr>& ws) {
  std::string out;
  for (const auto& t : ws) {
    if (!out.empty()) out += ", ";
    out += hb::to_string(t);
  }
  return out;
}

hb::Signature merge_signatures(const hb::Signature& a, const hb::Signature& b) {
  hb::Signature out = a;
  for (const auto& [name, arity] : b.relations()) {
    if (auto have = out.relation_arity(name)) {
      if (*have != arity)
        throw hb::Error("signature-mismatch",
                        "relation '" + name + "' is declared with arity " +
                            std::to_string(*have) + " and " + std::to_string(arity));
    } else if (out.function_arity(name)) {
      throw hb::Error("signature-mismatch",
                      "'" + name + "' is declared both as relation and function");
    } else {
      out.add_relation(name, arity);
    }
  }
  for (const auto& [name, arity] : b.functions()) {
    if (auto have = out.function_arity(name)) {
      if (*have != arity)
        throw hb::Error("signature-mismatch",
                        "function '" + name + "' is declared with arity " +
                            std::to_string(*have) + " and " + std::to_string(arity));
    } else if (out.relation_arity(name)) {
      throw hb::Error("signature-mismatch",
                      "'" + name + "' is declared both as relation and function");
    } else {
      out.add_function(name, arity);
    }
  }
  return out;
}

int run_check_gs(const std::string& path, bool as_json) {
  hb::GSProofFile f = hb::load_gs_proof_file(path);
  return report_check(hb::check_gs(f.signature, f.proof), as_json);
}

int run_search(const std::string& path, std::size_t depth, std::size_t terms,
               std::uint64_t nodes, const std::string& policy, const std::string& out_path,
               bool as_json) {
  hb::SequentFile f = hb::load_sequent_file(path);
  hb::SearchLimits lim;
  lim.max_depth = depth;
  lim.max_term_depth = terms;
  lim.max_nodes = nodes;
  hb::SearchPolicy pol =
      policy == "restricted" ? hb::SearchPolicy::Restricted : hb::SearchPolicy::Full;
  hb::SearchResult res = hb::search_gs(f.signature, f.sequent, pol, lim);

  std::string result = res.status == hb::SearchStatus::Proved      ? "proved"
                       : res.status == hb::SearchStatus::Exhausted ? "exhausted"
                                                                   : "node-limit";
  Json j;
  j["result"] = result;
  j["nodes"] = res.nodes_expanded;
  j["depth"] = res.depth_reached;
  if (res.status != hb::SearchStatus::Proved) {
    if (as_json) {
      j["reason"] = result;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "RESULT: " << result << "\n";
      std::cout << "REASON: " << result << "\n";
      std::cout << "NODES: " << res.nodes_expanded << "\n";
      std::cout << "DEPTH: " << res.depth_reached << "\n";
    }
    return 1;
  }

  hb::Verdict check = hb::check_gs(f.signature, *res.proof);
  if (!check.ok)
    throw hb::Error("internal", "search produced a proof its own checker rejects: " +
                                    check.message);
  if (!out_path.empty()) {
    hb::write_text_file(out_path, hb::to_json(f.signature, *res.proof));
    j["output"] = out_path;
  }
  if (as_json) {
    j["check"] = "accepted";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "RESULT: proved\n";
    std::cout << "NODES: " << res.nodes_expanded << "\n";
    std::cout << "DEPTH: " << res.depth_reached << "\n";
    std::cout << "CHECK: accepted\n";
    if (!out_path.empty()) std::cout << "OUTPUT: " << out_path << "\n";
  }
  return 0;
}

int run_translate(const std::string& in_path, const std::string& out_path, bool as_json) {
  hb::GSProofFile f = hb::load_gs_proof_file(in_path);
  hb::HerbrandProof cert;
  try {
    cert = hb::translate(f.signature, f.proof);
  } catch (const hb::Error& e) {
    if (e.code != "invalid-proof") throw;
    if (as_json) {
      Json j;
      j["result"] = "rejected";
      j["reason"] = e.code;
      j["message"] = e.what();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "RESULT: rejected\nREASON: " << e.code << "\nMESSAGE: " << e.what()
                << "\n";
    }
    return 1;
  }
  hb::Verdict check = hb::check_herbrand(f.signature, f.proof.conclusion, cert);
  if (!check.ok)
    throw hb::Error("internal", "translation produced a certificate its own checker "
                                "rejects: " +
                                    check.message);
  hb::write_text_file(out_path, hb::to_json(f.signature, cert));
  if (as_json) {
    Json j;
    j["result"] = "translated";
    j["self_check"] = "accepted";
    j["prefix"] = prefix_to_string(cert.prenex.prefix);
    j["witnesses"] = witnesses_to_string(cert.witnesses);
    j["matrix"] = hb::to_string(cert.prenex.matrix);
    j["output"] = out_path;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "RESULT: translated\n";
    std::cout << "SELF-CHECK: accepted\n";
    std::cout << "PREFIX: " << prefix_to_string(cert.prenex.prefix) << "\n";
    std::cout << "WITNESSES: " << witnesses_to_string(cert.witnesses) << "\n";
    std::cout << "MATRIX: " << hb::to_string(cert.prenex.matrix) << "\n";
    std::cout << "OUTPUT: " << out_path << "\n";
  }
  return 0;
}

int run_check_herbrand(const std::string& seq_path, const std::string& cert_path,
                       bool as_json) {
  hb::SequentFile sf = hb::load_sequent_file(seq_path);
  hb::CertificateFile cf = hb::load_certificate_file(cert_path);
  hb::Signature sig = merge_signatures(sf.signature, cf.signature);
  return report_check(hb::check_herbrand(sig, sf.sequent, cf.certificate), as_json);
}

// ---------- demos ----------

struct DemoInput {
  hb::Signature sig;
  hb::Sequent goal;
};

DemoInput demo_drinker_input() {
  DemoInput d;
  d.sig.add_relation("P", 1);
  d.sig.add_function("c", 0);
  d.goal = hb::parse_sequent("exists x. ~P(x) \\/ (forall y. P(y))", d.sig);
  return d;
}

DemoInput demo_buss_input() {
  DemoInput d;
  d.sig.add_relation("A", 1);
  d.sig.add_relation("B", 1);
  d.goal = hb::parse_sequent(
      "(forall x. A(x)) /\\ (forall x. B(x)), "
      "((exists x. ~A(x)) \\/ (exists x. ~B(x))) /\\ "
      "((exists x. ~A(x)) \\/ (exists x. ~B(x)))",
      d.sig);
  return d;
}

// Runs search -> check -> translate -> check on `d`; when `show_restricted`
// is set, first demonstrates that the restricted policy exhausts.
int run_demo(const DemoInput& d, bool show_restricted) {
  std::cout << "SEQUENT: " << hb::to_string(d.goal) << "\n";
  hb::SearchLimits lim;
  lim.max_depth = 12;
  lim.max_term_depth = 1;

  if (show_restricted) {
    hb::SearchResult r = hb::search_gs(d.sig, d.goal, hb::SearchPolicy::Restricted, lim);
    if (r.status != hb::SearchStatus::Exhausted) {
      std::cout << "RESTRICTED: "
                << (r.status == hb::SearchStatus::Proved ? "proved" : "node-limit")
                << "\nDEMO: failed (restricted search was expected to exhaust)\n";
      return 1;
    }
    std::cout << "RESTRICTED: exhausted (nodes " << r.nodes_expanded << ", depth "
              << r.depth_reached << ")\n";
  }

  hb::SearchResult r = hb::search_gs(d.sig, d.goal, hb::SearchPolicy::Full, lim);
  if (r.status != hb::SearchStatus::Proved) {
    std::cout << "FULL: " << (r.status == hb::SearchStatus::Exhausted ? "exhausted" : "node-limit")
              << "\nDEMO: failed (full search was expected to find a proof)\n";
    return 1;
  }
  std::cout << "FULL: proved (nodes " << r.nodes_expanded << ", depth " << r.depth_reached
            << ")\n";

  hb::Verdict pv = hb::check_gs(d.sig, *r.proof);
  if (!pv.ok) {
    std::cout << "PROOF-CHECK: rejected (" << pv.code << ": " << pv.message << ")\n"
              << "DEMO: failed\n";
    return 1;
  }
  std::cout << "PROOF-CHECK: accepted\n";

  hb::HerbrandProof cert = hb::translate(d.sig, *r.proof);
  std::cout << "EXPANSION: " << hb::to_string(cert.expansion) << "\n";
  std::cout << "PREFIX: " << prefix_to_string(cert.prenex.prefix) << "\n";
  std::cout << "MATRIX: " << hb::to_string(cert.prenex.matrix) << "\n";
  std::cout << "WITNESSES: " << witnesses_to_string(cert.witnesses) << "\n";

  hb::Verdict cv = hb::check_herbrand(d.sig, d.goal, cert);
  if (!cv.ok) {
    std::cout << "CERT-CHECK: rejected (" << cv.code << ": " << cv.message << ")\n"
              << "DEMO: failed\n";
    return 1;
  }
  std::cout << "CERT-CHECK: accepted\n";
  std::cout << "DEMO: ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Herbrand certificate checker and sequent-proof translator"};
  app.require_subcommand(1);
  int rc = 0;

  std::string checkgs_file;
  bool checkgs_json = false;
  CLI::App* sc_checkgs = app.add_subcommand("check-gs", "Check a sequent-calculus proof");
  sc_checkgs->add_option("file", checkgs_file, "proof file (JSON)")->required();
  sc_checkgs->add_flag("--json", checkgs_json, "machine-readable output");
  sc_checkgs->callback([&] { rc = run_check_gs(checkgs_file, checkgs_json); });

  std::string search_file, search_policy = "full", search_out;
  std::size_t search_depth = 8, search_terms = 1;
  std::uint64_t search_nodes = 20'000'000;
  bool search_json = false;
  CLI::App* sc_search = app.add_subcommand("search", "Search for a proof of a sequent");
  sc_search->add_option("file", search_file, "sequent file")->required();
  sc_search->add_option("--depth", search_depth, "maximum proof depth");
  sc_search->add_option("--terms", search_terms, "maximum witness term depth");
  sc_search->add_option("--nodes", search_nodes, "node expansion budget");
  sc_search->add_option("--policy", search_policy, "contraction policy")
      ->check(CLI::IsMember({"full", "restricted"}));
  sc_search->add_option("-o,--output", search_out, "write the found proof here");
  sc_search->add_flag("--json", search_json, "machine-readable output");
  sc_search->callback([&] {
    rc = run_search(search_file, search_depth, search_terms, search_nodes, search_policy,
                    search_out, search_json);
  });

  std::string tr_in, tr_out;
  bool tr_json = false;
  CLI::App* sc_translate =
      app.add_subcommand("translate", "Translate a proof into a Herbrand certificate");
  sc_translate->add_option("file", tr_in, "proof file (JSON)")->required();
  sc_translate->add_option("-o,--output", tr_out, "certificate output file")->required();
  sc_translate->add_flag("--json", tr_json, "machine-readable output");
  sc_translate->callback([&] { rc = run_translate(tr_in, tr_out, tr_json); });

  std::string ch_seq, ch_cert;
  bool ch_json = false;
  CLI::App* sc_check_h =
      app.add_subcommand("check-herbrand", "Check a Herbrand certificate against a sequent");
  sc_check_h->add_option("sequent", ch_seq, "sequent file")->required();
  sc_check_h->add_option("certificate", ch_cert, "certificate file (JSON)")->required();
  sc_check_h->add_flag("--json", ch_json, "machine-readable output");
  sc_check_h->callback([&] { rc = run_check_herbrand(ch_seq, ch_cert, ch_json); });

  std::string demo_which;
  CLI::App* sc_demo = app.add_subcommand("demo", "Run a built-in end-to-end example");
  sc_demo->add_option("which", demo_which, "'buss' or 'drinker'")
      ->required()
      ->check(CLI::IsMember({"buss", "drinker"}));
  sc_demo->callback([&] {
    rc = demo_which == "buss" ? run_demo(demo_buss_input(), true)
                              : run_demo(demo_drinker_input(), false);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const hb::Error& e) {
    std::cout << "ERROR: " << e.code << "\n";
    std::cout << "MESSAGE: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
