#pragma once

// Eigenvalue profiles of an automorphism on second cohomology.
//
// A profile is stored orbit-wise: primitive order d -> number r of complete
// Galois orbits of primitive d-th roots. Integrality of the characteristic
// polynomial makes every eigenvalue multiset of this shape, so a profile
// cannot describe a non-Galois-closed list.

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace k3v {

inline constexpr int kK3SecondBetti = 22;

class EigenProfile {
 public:
  EigenProfile() = default;
  /// entries: order d -> orbit multiplicity. Zero multiplicities are
  /// dropped. Throws std::invalid_argument unless sum phi(d) r_d == dim.
  explicit EigenProfile(std::map<long, int> entries, int dim = kK3SecondBetti);

  static EigenProfile identity(int dim = kK3SecondBetti);

  const std::map<long, int>& entries() const { return entries_; }
  int dimension() const { return dim_; }
  /// Orbit multiplicity of primitive order d (0 when absent).
  int multiplicity(long d) const;

  /// Sorted (d, r) pairs, the key used for canonical ordering.
  std::vector<std::pair<long, int>> key() const;

  bool operator==(const EigenProfile& o) const = default;
  bool operator<(const EigenProfile& o) const { return key() < o.key(); }

  /// Canonical print form, e.g. "[1.2, z66:20]" or "[1, -1, z33:20]".
  std::string to_string() const;
  /// Accepts the canonical form and the bracket notation with repeated
  /// items, e.g. "[1, z66:20, 1]", "[1, -1.20, 1]", "[1, (z6:2).10, 1]".
  static EigenProfile parse(const std::string& text, int dim = kK3SecondBetti);

 private:
  std::map<long, int> entries_;
  int dim_ = kK3SecondBetti;
};

EigenProfile power_profile(const EigenProfile& p, long k);

/// Sum of the eigenvalues.
long trace(const EigenProfile& p);

/// Alternating trace on all of H^*: 1 + trace on H^2 + 1.
long lefschetz_number(const EigenProfile& p);

/// Multiplicity of the eigenvalue 1.
int invariant_dimension(const EigenProfile& p);

/// Order of the operator: lcm of the primitive orders present.
long profile_order(const EigenProfile& p);

namespace constraint {
struct RequiresEigenvalueOne {};
struct ContainsFullOrbit {
  long order;
};
struct ExactProfileOrder {
  long order;
};
struct PrescribedPowerProfile {
  long exponent;
  EigenProfile profile;
};
}  // namespace constraint

using ProfileConstraint =
    std::variant<constraint::RequiresEigenvalueOne, constraint::ContainsFullOrbit,
                 constraint::ExactProfileOrder, constraint::PrescribedPowerProfile>;

bool satisfies(const EigenProfile& p, const ProfileConstraint& c);
std::string describe(const ProfileConstraint& c);

/// Every profile of the given dimension satisfying all constraints, in
/// canonical order. Orders are drawn from the divisors of the (single)
/// ExactProfileOrder constraint, which is required.
std::vector<EigenProfile> enumerate_profiles(int dim,
                                             const std::vector<ProfileConstraint>& constraints);

}  // namespace k3v
