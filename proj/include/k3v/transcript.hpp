#pragma once

// Proof transcripts: an ordered list of steps, each either a computed check
// or a cited axiom, serialised to JSON with a fixed key order:
//
//   {"case", "characteristic",
//    "steps": [{"id", "desc", "inputs", "computed", "expected", "verdict", "ref"}],
//    "verdict"}
//
// Every value is a string.

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace k3v {

enum class Verdict { Pass, Fail, Axiom };

std::string to_string(Verdict v);

struct ProofStep {
  std::string id;
  std::string desc;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string computed;
  std::string expected;
  Verdict verdict = Verdict::Pass;
  std::string ref;
};

struct ProofTranscript {
  std::string case_tag;
  std::string characteristic;
  std::vector<ProofStep> steps;

  bool pass() const;
  /// Id of the first failing step.
  std::optional<std::string> failed_step() const;
  std::vector<std::string> axiom_ids() const;

  nlohmann::ordered_json to_json() const;
  /// Pretty-printed JSON with a trailing newline.
  std::string dump() const;
};

}  // namespace k3v
