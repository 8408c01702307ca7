#ifndef SPEXLAB_REPORT_HPP
#define SPEXLAB_REPORT_HPP

#include <gmpxx.h>

#include <string>

#include "json.hpp"

namespace spexlab {

enum class Outcome { pass, fail, budget };

std::string to_string(Outcome o);  // "PASS", "FAIL", "BUDGET"
Outcome outcome_from_string(const std::string& s);

/// CLI exit status: 0 PASS, 1 FAIL, 3 BUDGET.
int exit_code(Outcome o);

/// JSON schema:
///   { "claim_id": string, "parameters": object,
///     "outcome": "PASS" | "FAIL" | "BUDGET", "evidence": object,
///     "notes": string }
/// Arbitrary-precision integers appear as decimal strings, graphs as
/// graph6 strings.
struct VerificationReport {
  std::string claim_id;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  Outcome outcome = Outcome::pass;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
  std::string notes;

  nlohmann::ordered_json to_json() const;
  static VerificationReport from_json(const nlohmann::ordered_json& j);
  std::string dump(int indent = 2) const { return to_json().dump(indent); }

  void add_note(const std::string& line);
};

inline std::string big(const mpz_class& x) { return x.get_str(); }
inline std::string big(const mpq_class& x) { return x.get_str(); }

}  // namespace spexlab

#endif  // SPEXLAB_REPORT_HPP
