#include "hb/json_io.hpp"

#include <fstream>

#include "hb/parse.hpp"
#include "json.hpp"

namespace hb {

namespace {

using Json = nlohmann::ordered_json;

Json signature_to_json(const Signature& sig) {
  Json rels = Json::array();
  for (const auto& [name, arity] : sig.relations())
    rels.push_back({{"name", name}, {"arity", arity}});
  Json funs = Json::array();
  for (const auto& [name, arity] : sig.functions())
    funs.push_back({{"name", name}, {"arity", arity}});
  return {{"relations", std::move(rels)}, {"functions", std::move(funs)}};
}

Json sequent_to_json(const Sequent& s) {
  Json out = Json::array();
  for (const auto& f : s) out.push_back(to_string(f));
  return out;
}

Json node_to_json(const GSProof& n) {
  Json out;
  out["rule"] = rule_name(n.rule);
  out["conclusion"] = sequent_to_json(n.conclusion);
  if (n.rule == Rule::ExistsR) {
    out["witness"] = to_string(n.witness);
    out["member"] = n.member;
  }
  if (n.rule == Rule::ForallR) {
    out["eigenvariable"] = n.eigen;
    out["member"] = n.member;
  }
  if (n.rule == Rule::ExchangeR) out["permutation"] = n.perm;
  Json premises = Json::array();
  for (const auto& p : n.premises) premises.push_back(node_to_json(p));
  out["premises"] = std::move(premises);
  return out;
}

[[noreturn]] void bad(const std::string& msg) { throw Error("json-error", msg); }

Json parse_document(const std::string& text, const std::string& expected_kind) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    bad(e.what());
  }
  if (!doc.is_object()) bad("the document must be a JSON object");
  if (!doc.contains("format_version") || !doc["format_version"].is_number_integer() ||
      doc["format_version"].get<int>() != 1)
    bad("unsupported or missing format_version (expected 1)");
  if (!doc.contains("kind") || !doc["kind"].is_string() ||
      doc["kind"].get<std::string>() != expected_kind)
    bad("expected a document of kind '" + expected_kind + "'");
  return doc;
}

Signature signature_from_json(const Json& doc) {
  if (!doc.contains("signature") || !doc["signature"].is_object())
    bad("missing 'signature' object");
  const Json& sj = doc["signature"];
  Signature sig;
  for (const char* table : {"relations", "functions"}) {
    if (!sj.contains(table) || !sj[table].is_array())
      bad(std::string("signature needs a '") + table + "' array");
    for (const Json& entry : sj[table]) {
      if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string() ||
          !entry.contains("arity") || !entry["arity"].is_number_unsigned())
        bad(std::string("each of '") + table + "' needs a name and a non-negative arity");
      std::string name = entry["name"].get<std::string>();
      std::size_t arity = entry["arity"].get<std::size_t>();
      if (std::string(table) == "relations")
        sig.add_relation(name, arity);
      else
        sig.add_function(name, arity);
    }
  }
  return sig;
}

std::string get_string(const Json& j, const char* field, const std::string& where) {
  if (!j.contains(field) || !j[field].is_string())
    bad(where + " needs a string '" + field + "'");
  return j[field].get<std::string>();
}

Sequent sequent_from_json(const Json& j, const char* field, const Signature& sig,
                          const std::string& where) {
  if (!j.contains(field) || !j[field].is_array())
    bad(where + " needs an array '" + field + "'");
  Sequent s;
  for (const Json& f : j[field]) {
    if (!f.is_string()) bad(where + ": '" + field + "' must contain formula strings");
    s.push_back(parse_formula(f.get<std::string>(), sig));
  }
  return s;
}

GSProof node_from_json(const Json& j, const Signature& sig) {
  if (!j.is_object()) bad("each proof node must be an object");
  std::string rule = get_string(j, "rule", "a proof node");
  GSProof n;
  if (rule == "ax")
    n.rule = Rule::Ax;
  else if (rule == "or-r")
    n.rule = Rule::OrR;
  else if (rule == "and-r")
    n.rule = Rule::AndR;
  else if (rule == "contract-r")
    n.rule = Rule::ContractR;
  else if (rule == "weaken-r")
    n.rule = Rule::WeakenR;
  else if (rule == "exists-r")
    n.rule = Rule::ExistsR;
  else if (rule == "forall-r")
    n.rule = Rule::ForallR;
  else if (rule == "exchange-r")
    n.rule = Rule::ExchangeR;
  else
    bad("unknown rule '" + rule + "'");
  n.conclusion = sequent_from_json(j, "conclusion", sig, "a proof node");
  if (n.rule == Rule::ExistsR) {
    n.witness = parse_term(get_string(j, "witness", "an exists-r node"), sig);
    if (!j.contains("member") || !j["member"].is_number_unsigned())
      bad("an exists-r node needs a non-negative 'member' index");
    n.member = j["member"].get<std::size_t>();
  }
  if (n.rule == Rule::ForallR) {
    n.eigen = get_string(j, "eigenvariable", "a forall-r node");
    if (!j.contains("member") || !j["member"].is_number_unsigned())
      bad("a forall-r node needs a non-negative 'member' index");
    n.member = j["member"].get<std::size_t>();
  }
  if (n.rule == Rule::ExchangeR) {
    if (!j.contains("permutation") || !j["permutation"].is_array())
      bad("an exchange-r node needs a 'permutation' array");
    for (const Json& e : j["permutation"]) {
      if (!e.is_number_unsigned()) bad("permutation entries must be non-negative integers");
      n.perm.push_back(e.get<std::size_t>());
    }
  }
  if (!j.contains("premises") || !j["premises"].is_array())
    bad("a proof node needs a 'premises' array");
  for (const Json& p : j["premises"]) n.premises.push_back(node_from_json(p, sig));
  return n;
}

}  // namespace

std::string to_json(const Signature& sig, const GSProof& proof) {
  Json doc;
  doc["format_version"] = 1;
  doc["kind"] = "gs-proof";
  doc["signature"] = signature_to_json(sig);
  doc["proof"] = node_to_json(proof);
  return doc.dump(2) + "\n";
}

std::string to_json(const Signature& sig, const HerbrandProof& cert) {
  Json doc;
  doc["format_version"] = 1;
  doc["kind"] = "herbrand-certificate";
  doc["signature"] = signature_to_json(sig);
  doc["expansion"] = sequent_to_json(cert.expansion);
  Json prefix = Json::array();
  for (const auto& e : cert.prenex.prefix)
    prefix.push_back(
        {{"q", e.q == Quant::Forall ? "forall" : "exists"}, {"var", e.var}});
  doc["prefix"] = std::move(prefix);
  doc["matrix"] = to_string(cert.prenex.matrix);
  Json witnesses = Json::array();
  for (const auto& t : cert.witnesses) witnesses.push_back(to_string(t));
  doc["witnesses"] = std::move(witnesses);
  return doc.dump(2) + "\n";
}

GSProofFile gs_proof_from_json(const std::string& text) {
  Json doc = parse_document(text, "gs-proof");
  GSProofFile out;
  out.signature = signature_from_json(doc);
  if (!doc.contains("proof")) bad("missing 'proof' object");
  out.proof = node_from_json(doc["proof"], out.signature);
  return out;
}

CertificateFile certificate_from_json(const std::string& text) {
  Json doc = parse_document(text, "herbrand-certificate");
  CertificateFile out;
  out.signature = signature_from_json(doc);
  out.certificate.expansion =
      sequent_from_json(doc, "expansion", out.signature, "a certificate");
  if (!doc.contains("prefix") || !doc["prefix"].is_array())
    bad("a certificate needs a 'prefix' array");
  for (const Json& e : doc["prefix"]) {
    if (!e.is_object()) bad("prefix entries must be objects");
    std::string q = get_string(e, "q", "a prefix entry");
    std::string var = get_string(e, "var", "a prefix entry");
    if (q != "forall" && q != "exists")
      bad("prefix entry 'q' must be \"forall\" or \"exists\"");
    out.certificate.prenex.prefix.push_back(
        {q == "forall" ? Quant::Forall : Quant::Exists, var});
  }
  out.certificate.prenex.matrix =
      parse_formula(get_string(doc, "matrix", "a certificate"), out.signature);
  if (!doc.contains("witnesses") || !doc["witnesses"].is_array())
    bad("a certificate needs a 'witnesses' array");
  for (const Json& t : doc["witnesses"]) {
    if (!t.is_string()) bad("'witnesses' must contain term strings");
    out.certificate.witnesses.push_back(parse_term(t.get<std::string>(), out.signature));
  }
  return out;
}

GSProofFile load_gs_proof_file(const std::string& path) {
  return gs_proof_from_json(read_text_file(path));
}

CertificateFile load_certificate_file(const std::string& path) {
  return certificate_from_json(read_text_file(path));
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("io-error", "cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("io-error", "failed while writing '" + path + "'");
}

}  // namespace hb
