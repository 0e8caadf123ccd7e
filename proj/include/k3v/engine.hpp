#pragma once

// The three case analyses for order-66 automorphisms (tame characteristic,
// complex, characteristic 11) as proof transcripts, and the
// supersingularity report.

#include "k3v/fixture.hpp"
#include "k3v/pointcount.hpp"
#include "k3v/transcript.hpp"

#include <optional>
#include <string>

namespace k3v {

/// Negative controls. Each one breaks a single input of a run.
enum class Perturbation {
  None,
  BCoefficient,         // doubles the leading nonzero coefficient of B
  ProfileMultiplicity,  // target profile [1.2, z66:20] becomes [1, -1, z66:20]
  OmegaConstant,        // 2-form multiplier exponent 5 becomes 7
};

std::optional<Perturbation> parse_perturbation(const std::string& name);
std::string to_string(Perturbation p);

/// Step id at which a perturbed run of `case_tag` ("tame", "complex",
/// "wild-11") stops.
std::string predicted_failure(const std::string& case_tag, Perturbation p);

struct EngineOptions {
  Perturbation perturbation = Perturbation::None;
  /// Replaces the built-in model; its characteristic must match the run.
  std::optional<Fixture> model;
};

/// Characteristic 0 or a prime p >= 5 other than 11. Throws
/// std::invalid_argument otherwise (11 belongs to run_wild_case).
ProofTranscript run_tame_case(long characteristic, const EngineOptions& options = {});
ProofTranscript run_wild_case(const EngineOptions& options = {});
ProofTranscript run_complex_case(const EngineOptions& options = {});

struct SupersingularityReport {
  long p = 0;
  long m = 0;
  SupersingularTest test;
  // Only for p = 11: counts of Y66.
  std::optional<PointCountRecord> over_p;
  std::optional<PointCountRecord> over_p2;
  long prediction = 0;  // 1 + 22 p^2 + p^4

  nlohmann::ordered_json to_json(bool verbose) const;
  std::string to_text() const;
};

/// m = 66 for p not dividing 66; m = 12 for p = 11, with point counts.
SupersingularityReport supersingularity_report(long p);

}  // namespace k3v
