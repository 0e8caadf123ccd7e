#pragma once

// Brute-force point counts of Weierstrass models y^2 + x^3 + A x + B = 0
// over F_p and F_{p^2}, and the Delsarte supersingularity congruence.

#include "k3v/elliptic.hpp"
#include "k3v/finite_field.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3v {

class ReducibleFibreError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct FibreCount {
  std::string base_point;  // "inf" or a field element
  long count = 0;
  KodairaType type;
};

struct PointCountRecord {
  long q = 0;
  long total = 0;
  std::vector<FibreCount> fibres;  // P^1(F_q): the q affine points, then inf
};

/// q must be p or p^2 for the model's characteristic p >= 5. Throws
/// ReducibleFibreError when some fibre is not of type I0, I1 or II and
/// propagates NonMinimalError.
PointCountRecord count_points(const WeierstrassModel& w, long q);

struct HasseCheck {
  long smooth_fibres = 0;
  long cusp_fibres = 0;
  bool pass = true;
  std::string first_failure;
};

/// Hasse bound a^2 <= 4q for smooth fibres; type II fibres have q + 1 points.
HasseCheck hasse_check(const PointCountRecord& r);

struct ExtensionCheckRow {
  std::string base_point;
  long a_p = 0;
  long a_p2 = 0;
  bool pass = false;
};

struct ExtensionCheck {
  std::vector<ExtensionCheckRow> rows;  // one per smooth fibre over P^1(F_p)
  bool pass() const;
};

/// a_{p^2} = a_p^2 - 2p for every smooth fibre over an F_p-point.
ExtensionCheck extension_check(const PointCountRecord& over_p, const PointCountRecord& over_p2);

struct SupersingularTest {
  bool supersingular = false;
  std::optional<long> nu;  // smallest nu with p^nu = -1 (mod m)
  long order = 0;          // multiplicative order of p mod m
};

/// Throws std::invalid_argument when p is not prime or p divides m.
SupersingularTest supersingular_congruence_test(long p, long m);

}  // namespace k3v
