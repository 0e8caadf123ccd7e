#pragma once

// Fixed loci of automorphisms: isolated points plus smooth curves.
//
// On a K3 surface adjunction gives C^2 = 2g - 2 for a smooth curve of genus
// g, so self-intersection is derived from the genus and never stored.

#include "k3v/bigint.hpp"
#include "k3v/eigenprofile.hpp"

#include <array>
#include <string>
#include <vector>

namespace k3v {

struct CurveComponent {
  long genus = 0;

  long euler() const { return 2 - 2 * genus; }
  long self_intersection() const { return 2 * genus - 2; }
};

struct FixedLocus {
  long isolated_points = 0;
  std::vector<CurveComponent> curves;

  std::string to_string() const;
};

long euler_characteristic(const FixedLocus& locus);

struct LefschetzVerdict {
  bool pass = false;
  long locus_euler = 0;
  long lefschetz = 0;
};

/// Compares e(locus) with 2 + Tr(g* | H^2). Only meaningful for tame g.
LefschetzVerdict check_lefschetz_consistency(const FixedLocus& locus, const EigenProfile& p);

struct HodgeIndexBound {
  std::vector<long> feasible;  // ascending, downward closed
  std::vector<long> equality;  // feasible k with equality in the bound
};

/// Curves C_{k+offset} (genus k + offset, k >= 0) meeting `fixed` in at most
/// `max_intersection` points: the k with C^2 * fixed^2 <= max_intersection^2.
/// Throws std::invalid_argument unless both curves have positive square.
HodgeIndexBound hodge_index_genus_bound(const CurveComponent& fixed, long max_intersection,
                                        long genus_offset = 4);

bool is_perfect_square(const BigInt& n);
bool is_rational_square(const Rational& q);

/// Largest fixed-point count of an automorphism of prime order n on a curve
/// of genus g allowed by tame Riemann-Hurwitz, over all quotient genera.
long rh_max_fixed_points(long n, long genus);

/// Quotient genus from Riemann-Hurwitz for prime order n with r fixed
/// points, or -1 when no integral genus fits.
long rh_quotient_genus(long n, long genus, long fixed_points);

/// A permutation of {0, ..., size-1}.
class FiniteAction {
 public:
  explicit FiniteAction(std::vector<int> image);

  std::size_t size() const { return image_.size(); }
  long order() const;
  FiniteAction power(long k) const;
  /// Sorted fixed points.
  std::vector<int> fixed_points() const;
  const std::vector<int>& image() const { return image_; }

 private:
  std::vector<int> image_;
};

/// The three fixed-set identities for sigma and exponents a, b:
///   Fix(s) in Fix(s^a); Fix(s^a) and Fix(s^b) meet in Fix(s^gcd(a,b));
///   Fix(s) == Fix(s^a) when gcd(a, ord s) == 1 (vacuously true otherwise).
std::array<bool, 3> fix_identities(const FiniteAction& sigma, long a, long b);

}  // namespace k3v
