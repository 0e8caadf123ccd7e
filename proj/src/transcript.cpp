#include "k3v/transcript.hpp"

#include <algorithm>

namespace k3v {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Axiom: return "axiom";
  }
  return "?";
}

bool ProofTranscript::pass() const { return !failed_step().has_value(); }

std::optional<std::string> ProofTranscript::failed_step() const {
  for (const auto& s : steps)
    if (s.verdict == Verdict::Fail) return s.id;
  return std::nullopt;
}

std::vector<std::string> ProofTranscript::axiom_ids() const {
  std::vector<std::string> ids;
  for (const auto& s : steps)
    if (s.verdict == Verdict::Axiom) ids.push_back(s.ref);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

nlohmann::ordered_json ProofTranscript::to_json() const {
  nlohmann::ordered_json doc;
  doc["case"] = case_tag;
  doc["characteristic"] = characteristic;
  doc["steps"] = nlohmann::ordered_json::array();
  for (const auto& s : steps) {
    nlohmann::ordered_json j;
    j["id"] = s.id;
    j["desc"] = s.desc;
    j["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : s.inputs) j["inputs"][k] = v;
    j["computed"] = s.computed;
    j["expected"] = s.expected;
    j["verdict"] = to_string(s.verdict);
    j["ref"] = s.ref;
    doc["steps"].push_back(std::move(j));
  }
  doc["verdict"] = pass() ? "pass" : "fail";
  return doc;
}

std::string ProofTranscript::dump() const { return to_json().dump(2) + "\n"; }

}  // namespace k3v
