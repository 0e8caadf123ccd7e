#include <doctest.h>

#include "k3v/fixedlocus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace k3v;

namespace {

long rh_oracle(long n, long g) {
  long best = 0;  // no admissible quotient
  for (long h = 0; h <= g; ++h) {
    const long num = (2 * g - 2) - n * (2 * h - 2);
    if (num >= 0 && num % (n - 1) == 0) best = std::max(best, num / (n - 1));
  }
  return best;
}

std::set<int> fixed_set(const std::vector<int>& img, long k) {
  std::set<int> out;
  for (int i = 0; i < static_cast<int>(img.size()); ++i) {
    int x = i;
    for (long j = 0; j < k; ++j) x = img[x];
    if (x == i) out.insert(i);
  }
  return out;
}

}  // namespace

TEST_CASE("euler characteristic and Lefschetz consistency") {
  const FixedLocus three{3, {}};
  CHECK(euler_characteristic(three) == 3);
  const EigenProfile p({{1, 2}, {66, 1}});
  CHECK(check_lefschetz_consistency(three, p).pass);
  CHECK_FALSE(check_lefschetz_consistency({2, {}}, p).pass);
  const FixedLocus c10{0, {{10}}};
  CHECK(euler_characteristic(c10) == -18);
  CHECK(check_lefschetz_consistency(c10, EigenProfile({{1, 1}, {2, 21}})).pass);
  CHECK(CurveComponent{10}.self_intersection() == 18);
  CHECK(CurveComponent{0}.self_intersection() == -2);
  CHECK(three.to_string().find('3') != std::string::npos);
}

TEST_CASE("Hodge index bound") {
  const auto h = hodge_index_genus_bound({10}, 12, 4);
  CHECK(h.feasible == std::vector<long>{0, 1});
  CHECK(h.equality == std::vector<long>{1});
  for (long k = 0; k < 10; ++k) {
    const bool ok = 18 * (2 * k + 6) <= 144;
    CHECK(ok == (std::find(h.feasible.begin(), h.feasible.end(), k) != h.feasible.end()));
  }
  CHECK_THROWS_AS(hodge_index_genus_bound({1}, 12, 4), std::invalid_argument);
}

TEST_CASE("rational squares") {
  CHECK_FALSE(is_rational_square(Rational(1, 3)));
  CHECK_FALSE(is_rational_square(Rational(6, 18)));
  CHECK(is_rational_square(Rational(4, 9)));
  CHECK(is_rational_square(Rational(8, 18)));
  CHECK(is_rational_square(Rational(0)));
  CHECK_FALSE(is_rational_square(Rational(-4)));
  CHECK(is_perfect_square(BigInt(144)));
  CHECK_FALSE(is_perfect_square(BigInt(143)));
}

TEST_CASE("Riemann-Hurwitz") {
  CHECK(rh_max_fixed_points(3, 9) == 11);
  CHECK(rh_max_fixed_points(3, 9) < 14);
  CHECK(rh_quotient_genus(2, 5, 12) == 0);
  CHECK(rh_quotient_genus(3, 9, 11) == 0);
  CHECK(rh_quotient_genus(3, 9, 12) == -1);
  for (long n : {2L, 3L, 5L, 7L, 11L})
    for (long g = 0; g <= 12; ++g) {
      CAPTURE(n);
      CAPTURE(g);
      CHECK(rh_max_fixed_points(n, g) == rh_oracle(n, g));
    }
  // Monotone in g for n = 2 and 3; not for larger primes (n = 5: g = 0 gives 2, g = 1 gives 0).
  for (long n : {2L, 3L})
    for (long g = 0; g < 12; ++g) CHECK(rh_max_fixed_points(n, g) <= rh_max_fixed_points(n, g + 1));
  CHECK(rh_max_fixed_points(5, 0) == 2);
  CHECK(rh_max_fixed_points(5, 1) == 0);
  CHECK_THROWS_AS(rh_max_fixed_points(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(rh_max_fixed_points(3, -1), std::invalid_argument);
}

TEST_CASE("fixed-set identities on random permutations") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    const FiniteAction s(img);
    const long a = 1 + rng() % 12, b = 1 + rng() % 12;
    const auto ids = fix_identities(s, a, b);
    CHECK(ids[0]);
    CHECK(ids[1]);
    CHECK(ids[2]);
    // Oracle: direct set computations.
    const auto f1 = fixed_set(img, 1), fa = fixed_set(img, a), fb = fixed_set(img, b);
    const auto fd = fixed_set(img, std::gcd(a, b));
    CHECK(std::includes(fa.begin(), fa.end(), f1.begin(), f1.end()));
    std::set<int> meet;
    std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(), std::inserter(meet, meet.end()));
    CHECK(meet == fd);
    if (std::gcd(a, s.order()) == 1) CHECK(f1 == fa);
    const auto fp = s.fixed_points();
    CHECK(std::set<int>(fp.begin(), fp.end()) == f1);
    CHECK(s.power(s.order()).fixed_points().size() == static_cast<std::size_t>(n));
  }
}
