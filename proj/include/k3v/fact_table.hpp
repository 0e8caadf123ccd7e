#pragma once

// Geometric facts the engine assumes rather than computes. Each axiom has a
// hypothesis, the conclusions the engine may branch on, and a citation.

#include <string>
#include <vector>

namespace k3v {

struct Axiom {
  std::string id;
  std::string hypothesis;
  std::vector<std::string> conclusions;
  std::string citation;
};

class FactTable {
 public:
  static const FactTable& standard();

  const std::vector<Axiom>& axioms() const { return axioms_; }
  /// Throws std::out_of_range for an unknown id.
  const Axiom& get(const std::string& id) const;

  /// Axiom ids each case is allowed to use, sorted.
  static std::vector<std::string> declared_for(const std::string& case_tag);

 private:
  std::vector<Axiom> axioms_;
};

}  // namespace k3v
