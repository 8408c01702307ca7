#include "spexlab/report.hpp"

#include <stdexcept>

namespace spexlab {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "PASS";
    case Outcome::fail:
      return "FAIL";
    case Outcome::budget:
      return "BUDGET";
  }
  return "?";
}

Outcome outcome_from_string(const std::string& s) {
  if (s == "PASS") return Outcome::pass;
  if (s == "FAIL") return Outcome::fail;
  if (s == "BUDGET") return Outcome::budget;
  throw std::invalid_argument("unknown outcome '" + s + "'");
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return 0;
    case Outcome::fail:
      return 1;
    case Outcome::budget:
      return 3;
  }
  return 1;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["claim_id"] = claim_id;
  j["parameters"] = parameters;
  j["outcome"] = to_string(outcome);
  j["evidence"] = evidence;
  j["notes"] = notes;
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  r.claim_id = j.at("claim_id").get<std::string>();
  r.parameters = j.at("parameters");
  r.outcome = outcome_from_string(j.at("outcome").get<std::string>());
  r.evidence = j.at("evidence");
  r.notes = j.value("notes", "");
  return r;
}

void VerificationReport::add_note(const std::string& line) {
  if (!notes.empty()) notes += "\n";
  notes += line;
}

}  // namespace spexlab
