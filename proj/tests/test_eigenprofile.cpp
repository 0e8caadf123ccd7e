#include <doctest.h>

#include "k3v/eigenprofile.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

using namespace k3v;

namespace {

// Profiles as explicit eigenvalue lists: exponents k of zeta_N^k, N = 66.
constexpr long N = 66;

std::vector<long> expand(const std::map<long, int>& orbits) {
  std::vector<long> ks;
  for (const auto& [d, r] : orbits)
    for (long j = 0; j < d; ++j)
      if (std::gcd(j, d) == 1)
        for (int i = 0; i < r; ++i) ks.push_back(j * (N / d));
  return ks;
}

int mobius(long n) {
  int sign = 1;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    n /= q;
    if (n % q == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

long order_of(long k) { return N / std::gcd(k, N); }

std::map<long, int> regroup(const std::vector<long>& ks) {
  std::map<long, long> count;
  for (long k : ks) ++count[order_of(k)];
  std::map<long, int> out;
  long phi;
  for (const auto& [d, c] : count) {
    phi = 0;
    for (long j = 1; j <= d; ++j) phi += std::gcd(j, d) == 1;
    out[d] = static_cast<int>(c / phi);
  }
  return out;
}

long list_order(const std::vector<long>& ks) {
  long o = 1;
  for (long k : ks) o = std::lcm(o, order_of(k));
  return o;
}

// Every orbit-wise multiplicity map on the divisors of 66 with total 22.
std::vector<std::map<long, int>> all_profiles() {
  const std::vector<long> ds = {1, 2, 3, 6, 11, 22, 33, 66};
  const std::vector<long> phis = {1, 1, 2, 2, 10, 10, 20, 20};
  std::vector<std::map<long, int>> out;
  std::map<long, int> cur;
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == ds.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (long r = 0; r * phis[i] <= left; ++r) {
      if (r) cur[ds[i]] = static_cast<int>(r);
      else cur.erase(ds[i]);
      rec(i + 1, left - r * phis[i]);
    }
    cur.erase(ds[i]);
  };
  rec(0, 22);
  return out;
}

}  // namespace

TEST_CASE("construction and validation") {
  const EigenProfile p({{1, 2}, {66, 1}});
  CHECK(p.dimension() == 22);
  CHECK(p.multiplicity(66) == 1);
  CHECK(p.multiplicity(3) == 0);
  CHECK_THROWS_AS(EigenProfile(std::map<long, int>{{1, 2}}), std::invalid_argument);
  CHECK(EigenProfile::identity().multiplicity(1) == 22);
}

TEST_CASE("printing and parsing") {
  const EigenProfile p({{1, 2}, {66, 1}});
  const EigenProfile m({{1, 1}, {2, 1}, {66, 1}});
  CHECK(p.to_string() == "[1.2, z66:20]");
  CHECK(m.to_string() == "[1, -1, z66:20]");
  CHECK(EigenProfile::parse("[1.2, z66:20]") == p);
  CHECK(EigenProfile::parse("[1, z66:20, 1]") == p);
  CHECK(EigenProfile::parse("[1, -1.20, 1]") == EigenProfile({{1, 2}, {2, 20}}));
  CHECK(EigenProfile::parse("[1, -1:20, 1]") == EigenProfile({{1, 2}, {2, 20}}));
  CHECK(EigenProfile::parse("[1, (z6:2).10, 1]") == EigenProfile({{1, 2}, {6, 10}}));
  CHECK(EigenProfile::parse("[1, (z11:10).2, 1]") == EigenProfile({{1, 2}, {11, 2}}));
  CHECK_THROWS(EigenProfile::parse("[1, z66:19]"));
  for (const auto& e : all_profiles()) {
    const EigenProfile q(e);
    CHECK(EigenProfile::parse(q.to_string()) == q);
  }
}

TEST_CASE("bracketed computations for the two order-66 candidates") {
  const EigenProfile p({{1, 2}, {66, 1}});
  const EigenProfile m({{1, 1}, {2, 1}, {66, 1}});
  CHECK(lefschetz_number(p) == 3);
  CHECK(power_profile(p, 11) == EigenProfile({{1, 2}, {6, 10}}));
  CHECK(lefschetz_number(power_profile(p, 11)) == 14);
  CHECK(power_profile(p, 33) == EigenProfile({{1, 2}, {2, 20}}));
  CHECK(power_profile(m, 33) == EigenProfile({{1, 1}, {2, 21}}));
  CHECK(lefschetz_number(power_profile(m, 33)) == -18);
  CHECK(lefschetz_number(power_profile(m, 11)) == 12);
  CHECK(power_profile(m, 22) == EigenProfile({{1, 2}, {3, 10}}));
  CHECK(lefschetz_number(power_profile(m, 22)) == -6);
  CHECK(invariant_dimension(power_profile(m, 33)) == 1);
  CHECK(invariant_dimension(power_profile(p, 33)) == 2);
  CHECK(profile_order(p) == 66);
  CHECK(profile_order(EigenProfile({{1, 2}, {11, 2}})) == 11);
  CHECK(trace(EigenProfile::identity()) == 22);
}

TEST_CASE("power, trace and order agree with explicit eigenvalue lists") {
  for (const auto& e : all_profiles()) {
    const EigenProfile p(e);
    const auto ks = expand(e);
    CHECK(profile_order(p) == list_order(ks));
    // Each full orbit of primitive d-th roots sums to mu(d).
    long tr = 0;
    for (const auto& [d, r] : e) tr += r * mobius(d);
    CHECK(trace(p) == tr);
    for (long k : {2L, 3L, 6L, 11L, 22L, 33L}) {
      std::vector<long> pk;
      for (long x : ks) pk.push_back(x * k % N);
      CHECK(power_profile(p, k) == EigenProfile(regroup(pk)));
    }
  }
}

TEST_CASE("enumeration matches brute-force filtering") {
  using namespace constraint;
  const std::vector<ProfileConstraint> tame = {ExactProfileOrder{66}, RequiresEigenvalueOne{}, ContainsFullOrbit{66}};
  const auto got = enumerate_profiles(22, tame);
  std::vector<EigenProfile> want;
  for (const auto& e : all_profiles()) {
    const auto ks = expand(e);
    if (list_order(ks) == 66 && e.count(1) && e.count(66)) want.push_back(EigenProfile(e));
  }
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  CHECK(got.size() == 2);

  const EigenProfile g6({{1, 2}, {11, 2}});
  const std::vector<ProfileConstraint> wild = {ExactProfileOrder{66}, RequiresEigenvalueOne{},
                                               PrescribedPowerProfile{6, g6}};
  const auto got_w = enumerate_profiles(22, wild);
  std::vector<EigenProfile> want_w;
  for (const auto& e : all_profiles()) {
    const auto ks = expand(e);
    std::vector<long> p6;
    for (long x : ks) p6.push_back(x * 6 % N);
    if (list_order(ks) == 66 && e.count(1) && EigenProfile(regroup(p6)) == g6) want_w.push_back(EigenProfile(e));
  }
  std::sort(want_w.begin(), want_w.end());
  CHECK(got_w == want_w);
  CHECK(got_w.size() == 3);
  CHECK(std::find(got_w.begin(), got_w.end(), EigenProfile({{1, 1}, {2, 1}, {33, 1}})) != got_w.end());

  CHECK_THROWS_AS(enumerate_profiles(22, {RequiresEigenvalueOne{}}), std::invalid_argument);
}

TEST_CASE("constraint descriptions") {
  using namespace constraint;
  CHECK_FALSE(describe(RequiresEigenvalueOne{}).empty());
  CHECK(satisfies(EigenProfile({{1, 2}, {66, 1}}), ContainsFullOrbit{66}));
  CHECK_FALSE(satisfies(EigenProfile({{1, 2}, {66, 1}}), ContainsFullOrbit{33}));
}
