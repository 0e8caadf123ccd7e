#include <doctest.h>

#include "k3v/factor.hpp"
#include "k3v/fixture.hpp"
#include "k3v/pointcount.hpp"
#include "small_field.hpp"

#include <random>
#include <set>

using namespace k3v;

namespace {

std::vector<long> residues(const BinaryForm& f, long p) {
  std::vector<long> out;
  for (const auto& c : f.coefficients()) {
    const mpz_class n = c.value().get_num();
    out.push_back(mpz_class((n % p + p) % p).get_si());
  }
  return out;
}

long eval_form(const SmallField& F, const std::vector<long>& c, long t0, long t1) {
  const int d = static_cast<int>(c.size()) - 1;
  long s = 0;
  for (int i = 0; i <= d; ++i) {
    long term = c[i];
    for (int j = 0; j < d - i; ++j) term = F.mul(term, t0);
    for (int j = 0; j < i; ++j) term = F.mul(term, t1);
    s = F.add(s, term);
  }
  return s;
}

// Points of y^2 + x^3 + a x + b = 0 by enumerating all pairs, plus infinity.
long fibre_oracle(const SmallField& F, long a, long b) {
  long n = 1;
  for (long x = 0; x < F.q; ++x) {
    const long rhs = F.add(F.add(F.mul(F.mul(x, x), x), F.mul(a, x)), b);
    for (long y = 0; y < F.q; ++y)
      if (F.add(F.mul(y, y), rhs) == 0) ++n;
  }
  return n;
}

// Fibre counts over t = 0..q-1 (in the oracle's own element order), then inf.
std::vector<long> surface_oracle(const WeierstrassModel& w, long p, long k) {
  const SmallField F(p, k);
  const auto a = residues(w.a(), p), b = residues(w.b(), p);
  std::vector<long> out;
  for (long t = 0; t < F.q; ++t) out.push_back(fibre_oracle(F, eval_form(F, a, 1, t), eval_form(F, b, 1, t)));
  out.push_back(fibre_oracle(F, eval_form(F, a, 0, 1), eval_form(F, b, 0, 1)));
  return out;
}

long sum(const std::vector<long>& v) {
  long s = 0;
  for (long x : v) s += x;
  return s;
}

std::multiset<long> counts(const PointCountRecord& r) {
  std::multiset<long> s;
  for (const auto& f : r.fibres) s.insert(f.count);
  return s;
}

bool is_prime_slow(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("field axioms") {
  for (std::uint64_t q : {11u, 121u, 49u}) {
    CAPTURE(q);
    const auto F = FiniteField::of_size(q);
    const auto el = F.elements();
    REQUIRE(el.size() == q);
    std::mt19937 rng(static_cast<unsigned>(q));
    for (int i = 0; i < 2000; ++i) {
      const auto& a = el[rng() % q];
      const auto& b = el[rng() % q];
      const auto& c = el[rng() % q];
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == F.zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == F.one());
    }
    for (const auto& a : el) CHECK(a.pow(q) == a);
    CHECK_THROWS(F.zero().inverse());
  }
  CHECK(FiniteField::of_size(121).nonresidue() == 2);
  CHECK_THROWS(FiniteField::of_size(12));
}

TEST_CASE("quadratic character") {
  const FiniteField f11(11, 1);
  CHECK(quadratic_character(f11.element(1)) == 1);
  CHECK(quadratic_character(f11.zero()) == 0);
  CHECK(quadratic_character(f11.element(2)) == -1);
  for (long c = 1; c < 11; ++c) {
    bool square = false;
    for (long x = 1; x < 11; ++x) square = square || (x * x) % 11 == c;
    CHECK(quadratic_character(f11.element(c)) == (square ? 1 : -1));
  }
  const FiniteField f121(11, 2);
  int squares = 0;
  for (const auto& e : f121.elements()) squares += quadratic_character(e) == 1;
  CHECK(squares == 60);
  for (long c = 1; c < 11; ++c) CHECK(quadratic_character(f121.element(c)) == 1);
  CHECK_THROWS(quadratic_character(FiniteField(2, 1).one()));
}

TEST_CASE("Y66 over F_11 and F_121") {
  const auto w = builtin_fixture("Y66").model;
  const auto r11 = count_points(w, 11);
  CHECK(r11.total == 144);
  CHECK(r11.fibres.size() == 12);
  for (const auto& f : r11.fibres) {
    CHECK(f.count == 12);
    CHECK(f.type == KodairaType(KodairaType::Kind::II));
  }
  const auto oracle11 = surface_oracle(w, 11, 1);
  CHECK(sum(oracle11) == 144);
  CHECK(counts(r11) == std::multiset<long>(oracle11.begin(), oracle11.end()));

  const auto r121 = count_points(w, 121);
  const auto oracle121 = surface_oracle(w, 11, 2);
  CHECK(r121.fibres.size() == 122);
  CHECK(r121.total == sum(oracle121));
  CHECK(counts(r121) == std::multiset<long>(oracle121.begin(), oracle121.end()));
  CHECK(r121.total == 1 + 22 * 121 + 121 * 121);

  const auto h = hasse_check(r121);
  CHECK(h.pass);
  CHECK(h.smooth_fibres == 110);
  CHECK(h.cusp_fibres == 12);
  // Vacuous over F_11: every F_11-point carries a cusp.
  CHECK(extension_check(r11, r121).rows.empty());
}

TEST_CASE("X66 reductions: counts, Hasse and the a_{p^2} relation") {
  const auto x = builtin_fixture("X66").model;
  for (long p : {7L, 13L}) {
    CAPTURE(p);
    const auto w = x.reduce(static_cast<unsigned long>(p));
    const auto rp = count_points(w, p);
    const auto rp2 = count_points(w, p * p);
    const auto op = surface_oracle(w, p, 1);
    const auto op2 = surface_oracle(w, p, 2);
    CHECK(rp.total == sum(op));
    CHECK(rp2.total == sum(op2));
    CHECK(counts(rp) == std::multiset<long>(op.begin(), op.end()));
    CHECK(counts(rp2) == std::multiset<long>(op2.begin(), op2.end()));
    CHECK(hasse_check(rp).pass);
    CHECK(hasse_check(rp2).pass);
    const auto ext = extension_check(rp, rp2);
    CHECK(ext.pass());
    CHECK(ext.rows.size() == (p == 7 ? 6u : 12u));
    for (const auto& row : ext.rows) CHECK(row.a_p2 == row.a_p * row.a_p - 2 * p);
  }
}

TEST_CASE("Hasse failures are reported") {
  auto r = count_points(builtin_fixture("Y66").model, 121);
  for (auto& f : r.fibres)
    if (f.type.is_smooth()) {
      f.count += 100;
      break;
    }
  const auto h = hasse_check(r);
  CHECK_FALSE(h.pass);
  CHECK_FALSE(h.first_failure.empty());
}

TEST_CASE("count_points refuses bad models") {
  const auto nonminimal = WeierstrassModel(BinaryForm(11, 8), BinaryForm(11, std::vector<long>{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK_THROWS_AS(count_points(nonminimal, 11), NonMinimalError);
  // v(B) = 3 at t = 0 with A = 0: type I*0.
  const auto istar = WeierstrassModel(BinaryForm(11, 8), BinaryForm(11, std::vector<long>{0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK_THROWS_AS(count_points(istar, 11), ReducibleFibreError);
  // v(B) = 2: type IV.
  const auto iv = WeierstrassModel(BinaryForm(11, 8), BinaryForm(11, std::vector<long>{0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK_THROWS_AS(count_points(iv, 11), ReducibleFibreError);
  const auto y = builtin_fixture("Y66").model;
  CHECK_THROWS(count_points(y, 13));
  CHECK_THROWS(count_points(builtin_fixture("X66").model, 7));
}

TEST_CASE("supersingularity congruence") {
  auto t = supersingular_congruence_test(131, 66);
  CHECK(t.supersingular);
  CHECK(t.nu == 1);
  t = supersingular_congruence_test(5, 66);
  CHECK_FALSE(t.supersingular);
  CHECK_FALSE(t.nu.has_value());
  CHECK(t.order == 10);
  t = supersingular_congruence_test(11, 12);
  CHECK(t.supersingular);
  CHECK(t.nu == 1);
  CHECK_THROWS(supersingular_congruence_test(65, 66));
  CHECK_THROWS(supersingular_congruence_test(11, 66));

  // Oracle: list the cyclic subgroup generated by p mod 66.
  for (long p = 2; p < 200; ++p) {
    if (!is_prime_slow(p) || 66 % p == 0) continue;
    CAPTURE(p);
    std::vector<long> powers;
    long x = p % 66;
    while (std::find(powers.begin(), powers.end(), x) == powers.end()) {
      powers.push_back(x);
      x = x * p % 66;
    }
    const auto it = std::find(powers.begin(), powers.end(), 65L);
    const auto r = supersingular_congruence_test(p, 66);
    CHECK(r.order == static_cast<long>(powers.size()));
    CHECK(r.supersingular == (it != powers.end()));
    if (it != powers.end()) CHECK(r.nu == static_cast<long>(it - powers.begin()) + 1);
  }
}
