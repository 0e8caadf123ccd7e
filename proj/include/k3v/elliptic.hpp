#pragma once

// Weierstrass models  y^2 + x^3 + A(t0,t1) x + B(t0,t1) = 0  with A, B binary
// forms of degree 8 and 12 over Q or F_p (p >= 5): discriminant, places of
// bad reduction as Galois packets, Kodaira types, orbits of an automorphism
// of the base, and equivariance of diagonal actions.

#include "k3v/cyclotomic.hpp"
#include "k3v/polynomial.hpp"

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3v {

/// Order of vanishing of a binary form at a place; infinite for the zero form.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// A Galois orbit of points of P^1: an irreducible binary form over the
/// coefficient field (t0 for the point at infinity).
struct PlacePacket {
  BinaryForm factor;
  int residue_degree = 1;
  int multiplicity = 1;

  bool at_infinity() const;
  /// Monic affine polynomial in t (finite places only).
  FieldPoly affine() const;
  /// "t = inf", "t", "t - 1", "t^10 + ... + 1".
  std::string label() const;
};

/// Irreducible factors of a nonzero binary form with multiplicities; finite
/// places in canonical order, then infinity. Throws for the zero form.
std::vector<PlacePacket> factor_places(const BinaryForm& f);

/// Order of vanishing of f along the packet.
int valuation(const BinaryForm& f, const PlacePacket& place);

class KodairaType {
 public:
  enum class Kind { I, II, III, IV, IStar, IVStar, IIIStar, IIStar };

  KodairaType() = default;
  KodairaType(Kind kind, int n = 0) : kind_(kind), n_(n) {}

  Kind kind() const { return kind_; }
  /// Subscript of I_n and I*_n.
  int index() const { return n_; }
  bool is_smooth() const { return kind_ == Kind::I && n_ == 0; }
  /// Types whose Weierstrass fibre is an irreducible curve.
  bool is_irreducible() const;
  int euler_number() const;
  std::string name() const;

  bool operator==(const KodairaType&) const = default;

 private:
  Kind kind_ = Kind::I;
  int n_ = 0;
};

class NonMinimalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Tate's table in residue characteristic 0 or >= 5. Throws NonMinimalError
/// when v(A) >= 4 and v(B) >= 6.
KodairaType kodaira_from_valuations(int v_a, int v_b, int v_delta);

class WeierstrassModel {
 public:
  /// a has degree 8, b degree 12, same field of characteristic 0 or p >= 5,
  /// and -4a^3 - 27b^2 is not identically zero.
  WeierstrassModel(BinaryForm a, BinaryForm b);

  unsigned long characteristic() const { return a_.characteristic(); }
  const BinaryForm& a() const { return a_; }
  const BinaryForm& b() const { return b_; }

  /// Reduction of a characteristic-0 model with p-integral coefficients.
  WeierstrassModel reduce(unsigned long p) const;

  std::string to_string() const;
  bool operator==(const WeierstrassModel&) const = default;

 private:
  BinaryForm a_;
  BinaryForm b_;
};

/// -4 A^3 - 27 B^2, a form of degree 24.
BinaryForm discriminant(const WeierstrassModel& w);
BinaryForm discriminant(const BinaryForm& a, const BinaryForm& b);

/// Kodaira type of the fibres over the packet.
KodairaType kodaira_type(const WeierstrassModel& w, const PlacePacket& place);

struct LedgerEntry {
  PlacePacket place;
  int v_a = 0;
  int v_b = 0;
  int v_delta = 0;
  KodairaType type;
};

struct EulerLedger {
  std::vector<LedgerEntry> entries;
  /// Sum over packets of residue degree times fibre Euler number.
  long total = 0;

  bool is_k3() const { return total == 24; }
  /// Number of geometric singular fibres of a given type.
  long geometric_count(const KodairaType& type) const;
  long geometric_singular_fibres() const;
};

EulerLedger euler_ledger(const WeierstrassModel& w);

/// An automorphism of the base P^1: t -> zeta t, or t -> t + 1 in
/// characteristic p (an automorphism of order p).
class BaseAction {
 public:
  enum class Kind { Scaling, Translation };

  static BaseAction scaling(const RootOfUnity& factor);
  static BaseAction translation(unsigned long characteristic);
  static BaseAction identity() { return scaling(RootOfUnity::one()); }

  Kind kind() const { return kind_; }
  long order() const;
  const RootOfUnity& factor() const { return factor_; }
  unsigned long characteristic() const { return characteristic_; }
  /// Number of fixed points on P^1 of a nontrivial action.
  int fixed_point_count() const { return kind_ == Kind::Scaling ? 2 : 1; }
  bool is_identity() const { return kind_ == Kind::Scaling && order() == 1; }
  std::string to_string() const;

 private:
  Kind kind_ = Kind::Scaling;
  RootOfUnity factor_;
  unsigned long characteristic_ = 0;
};

class InconsistentActionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FixedBasePoint {
  std::string label;                 // "t = 0" or "t = inf"
  std::optional<PlacePacket> place;  // set when the point is one of the places
};

/// Orbits of geometric points lying over a group of packets: `count` orbits
/// of length `length` each.
struct OrbitGroup {
  std::vector<PlacePacket> packets;
  long count = 0;
  long length = 0;
};

struct BaseOrbitDecomposition {
  std::vector<FixedBasePoint> fixed_points;
  std::vector<OrbitGroup> orbits;

  long orbit_count() const;
  /// Geometric points of the place set covered by fixed points and orbits.
  long geometric_points() const;
};

/// Throws InconsistentActionError when the action does not preserve the set
/// of places.
BaseOrbitDecomposition base_orbits(const BaseAction& action,
                                   const std::vector<PlacePacket>& places);

struct ForceAZeroVerdict {
  bool forced = false;
  bool by_count = false;  // more cusps than zeros A can have
  bool by_orbit = false;  // A cannot vanish on a full non-fixed orbit
  std::string reason;
};

/// A fibre of type II needs v(A) >= 1; decides whether `cusp_places`
/// cuspidal fibres force a degree-`degree_a` invariant form A to vanish.
ForceAZeroVerdict force_a_zero(int degree_a, int cusp_places, const BaseAction& action);

class NonEquivariantError : public std::runtime_error {
 public:
  NonEquivariantError(const std::string& what, std::string monomial)
      : std::runtime_error(what), monomial_(std::move(monomial)) {}
  const std::string& monomial() const { return monomial_; }

 private:
  std::string monomial_;
};

/// x -> x_weight x, y -> y_weight y together with a base action. Returns the
/// multiplier of the 2-form dx ^ dt / y, or throws NonEquivariantError
/// naming the first monomial whose weight disagrees.
RootOfUnity verify_equivariance(const WeierstrassModel& w, const RootOfUnity& x_weight,
                                const RootOfUnity& y_weight, const BaseAction& action);

/// Largest order of the group of automorphisms of an elliptic curve fixing
/// its origin, hence a bound for any single such automorphism: 6 in
/// characteristic 0 and p >= 5, 12 for p = 3, 24 for p = 2.
int ec_automorphism_bound(unsigned long characteristic);

}  // namespace k3v
