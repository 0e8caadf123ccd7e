#include "k3v/fixedlocus.hpp"

#include "k3v/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3v {

std::string FixedLocus::to_string() const {
  std::string out;
  for (const auto& c : curves) {
    if (!out.empty()) out += " + ";
    out += "C" + std::to_string(c.genus);
  }
  if (isolated_points > 0 || out.empty()) {
    if (!out.empty()) out += " + ";
    out += std::to_string(isolated_points) + " pt";
  }
  return out;
}

long euler_characteristic(const FixedLocus& locus) {
  long e = locus.isolated_points;
  for (const auto& c : locus.curves) e += c.euler();
  return e;
}

LefschetzVerdict check_lefschetz_consistency(const FixedLocus& locus, const EigenProfile& p) {
  LefschetzVerdict v;
  v.locus_euler = euler_characteristic(locus);
  v.lefschetz = lefschetz_number(p);
  v.pass = v.locus_euler == v.lefschetz;
  return v;
}

HodgeIndexBound hodge_index_genus_bound(const CurveComponent& fixed, long max_intersection,
                                        long genus_offset) {
  if (fixed.self_intersection() <= 0)
    throw std::invalid_argument("hodge_index_genus_bound: fixed curve must have positive square");
  if (2 * genus_offset - 2 <= 0)
    throw std::invalid_argument("hodge_index_genus_bound: parametrised curves must have positive square");
  HodgeIndexBound out;
  const BigInt ceiling = BigInt(max_intersection) * max_intersection;
  for (long k = 0;; ++k) {
    const BigInt lhs = BigInt(CurveComponent{k + genus_offset}.self_intersection()) *
                       fixed.self_intersection();
    if (lhs > ceiling) break;
    out.feasible.push_back(k);
    if (lhs == ceiling) out.equality.push_back(k);
  }
  return out;
}

bool is_perfect_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

bool is_rational_square(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return is_perfect_square(c.get_num()) && is_perfect_square(c.get_den());
}

long rh_max_fixed_points(long n, long genus) {
  if (n < 2) throw std::invalid_argument("rh_max_fixed_points: order must be >= 2");
  if (!is_prime(n)) throw std::invalid_argument("rh_max_fixed_points: order must be prime");
  if (genus < 0) throw std::invalid_argument("rh_max_fixed_points: genus must be >= 0");
  long best = 0;
  // 2g - 2 = n (2g' - 2) + r (n - 1)
  for (long q = 0;; ++q) {
    const long numerator = 2 * genus - 2 - n * (2 * q - 2);
    if (numerator < 0) break;
    if (numerator % (n - 1) == 0) best = std::max(best, numerator / (n - 1));
  }
  return best;
}

long rh_quotient_genus(long n, long genus, long fixed_points) {
  const long numerator = 2 * genus - 2 - fixed_points * (n - 1);
  if (numerator % n != 0) return -1;
  const long twice = numerator / n + 2;
  if (twice < 0 || twice % 2 != 0) return -1;
  return twice / 2;
}

// ---------------------------------------------------------- FiniteAction

FiniteAction::FiniteAction(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[v])
      throw std::invalid_argument("FiniteAction: not a permutation");
    seen[v] = true;
  }
}

long FiniteAction::order() const {
  long l = 1;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (std::size_t j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      ++len;
    }
    l = lcm(l, len);
  }
  return l;
}

FiniteAction FiniteAction::power(long k) const {
  if (k < 0) throw std::invalid_argument("FiniteAction::power: exponent must be >= 0");
  const long steps = k % order();
  std::vector<int> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    int j = static_cast<int>(i);
    for (long s = 0; s < steps; ++s) j = image_[j];
    out[i] = j;
  }
  return FiniteAction(std::move(out));
}

std::vector<int> FiniteAction::fixed_points() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] == static_cast<int>(i)) out.push_back(static_cast<int>(i));
  return out;
}

std::array<bool, 3> fix_identities(const FiniteAction& sigma, long a, long b) {
  const auto fix = sigma.fixed_points();
  const auto fix_a = sigma.power(a).fixed_points();
  const auto fix_b = sigma.power(b).fixed_points();
  const auto fix_d = sigma.power(gcd(a, b)).fixed_points();

  const bool contained = std::includes(fix_a.begin(), fix_a.end(), fix.begin(), fix.end());
  std::vector<int> meet;
  std::set_intersection(fix_a.begin(), fix_a.end(), fix_b.begin(), fix_b.end(),
                        std::back_inserter(meet));
  const bool intersection = meet == fix_d;
  const bool coprime = gcd(a, sigma.order()) != 1 || fix == fix_a;
  return {contained, intersection, coprime};
}

}  // namespace k3v
