#pragma once

// JSON file formats for sequent-calculus proofs and Herbrand certificates.
//
// Both documents carry `format_version` (currently 1) and a `kind` tag
// ("gs-proof" or "herbrand-certificate") plus the signature their formulas
// are read against. Formulas and terms are stored as strings in the textual
// grammar; proof nodes store their rule tag, rule parameters and premises;
// certificates store the expansion sequent, the quantifier prefix as an
// array of {q, var} objects, the matrix, and the witness terms in the order
// of the existential prefix entries.
//
// Structural problems (bad JSON, missing fields, unknown tags) raise
// Error("json-error"); formula and term strings are parsed with the regular
// parser, whose errors propagate unchanged.

#include <string>

#include "hb/fol.hpp"
#include "hb/gs.hpp"
#include "hb/herbrand.hpp"

namespace hb {

struct GSProofFile {
  Signature signature;
  GSProof proof;
};

struct CertificateFile {
  Signature signature;
  HerbrandProof certificate;
};

std::string to_json(const Signature& sig, const GSProof& proof);
std::string to_json(const Signature& sig, const HerbrandProof& cert);

GSProofFile gs_proof_from_json(const std::string& text);
CertificateFile certificate_from_json(const std::string& text);

GSProofFile load_gs_proof_file(const std::string& path);
CertificateFile load_certificate_file(const std::string& path);

// Writes `content` to `path`; throws Error("io-error") on failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hb
