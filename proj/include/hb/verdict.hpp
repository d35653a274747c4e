#pragma once

// Checker result type: either acceptance, or a stable error code with
// key/value details locating the problem.

#include <map>
#include <string>

namespace hb {

struct Verdict {
  bool ok = false;
  std::string code;                          // empty iff ok
  std::string message;                       // human-readable explanation
  std::map<std::string, std::string> detail; // e.g. path, member index, assignment

  static Verdict accept() { return {true, "", "", {}}; }
  static Verdict reject(std::string code, std::string message,
                        std::map<std::string, std::string> detail = {}) {
    Verdict v;
    v.ok = false;
    v.code = std::move(code);
    v.message = std::move(message);
    v.detail = std::move(detail);
    return v;
  }
  explicit operator bool() const { return ok; }
};

}  // namespace hb
