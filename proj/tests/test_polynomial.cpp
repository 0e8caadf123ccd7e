#include <doctest.h>

#include "k3v/factor.hpp"

#include <random>

using namespace k3v;

namespace {

FieldPoly random_poly(std::mt19937& rng, unsigned long p, int degree, long range) {
  std::vector<Scalar> c;
  for (int i = 0; i <= degree; ++i)
    c.emplace_back(p, static_cast<long>(rng() % (2 * range + 1)) - range);
  if (c.back().is_zero()) c.back() = Scalar(p, 1L);
  return FieldPoly(p, c);
}

// Over F_p: no monic divisor of degree 1..deg/2, by exhaustive trial.
bool irreducible_oracle(const FieldPoly& f) {
  const unsigned long p = f.characteristic();
  const long n = f.degree();
  for (long d = 1; 2 * d <= n; ++d) {
    std::vector<long> c(d + 1, 0);
    c[d] = 1;
    for (;;) {
      if (FieldPoly(p, c).divides(f)) return false;
      long i = 0;
      while (i < d && ++c[i] == static_cast<long>(p)) c[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("scalars") {
  const Scalar a(11, 3L), b(11, 5L);
  CHECK((a * b).value() == 4);
  CHECK((a / b * b) == a);
  CHECK(Scalar(11, -1L).value() == 10);
  CHECK(Scalar(11, -1L).to_signed_string() == "-1");
  CHECK(Scalar(0, Rational(5, 3)).to_string() == "5/3");
  CHECK(Scalar(7, Rational(1, 2)).value() == 4);
  CHECK_THROWS(Scalar(7, Rational(1, 7)));
  CHECK_THROWS(Scalar(11, 0L).inverse());
  CHECK(Scalar::parse(0, "-7/2") == Scalar(0, Rational(-7, 2)));
  CHECK(Scalar::parse(11, "-1") == Scalar(11, 10L));
  CHECK(Scalar(11, 2L).pow(10).is_one());
}

TEST_CASE("field polynomials") {
  const FieldPoly f(0, std::vector<long>{-1, 0, 1});  // t^2 - 1
  const FieldPoly g(0, std::vector<long>{-1, 1});     // t - 1
  CHECK(g.divides(f));
  CHECK(f / g == FieldPoly(0, std::vector<long>{1, 1}));
  CHECK((f % g).is_zero());
  CHECK(f.derivative() == FieldPoly(0, std::vector<long>{0, 2}));
  CHECK(gcd(f, FieldPoly(0, std::vector<long>{1, 1})) == FieldPoly(0, std::vector<long>{1, 1}));
  CHECK(f.shift(Scalar(0, 1L)) == FieldPoly(0, std::vector<long>{0, 2, 1}));
  CHECK(f.evaluate(Scalar(0, 3L)) == Scalar(0, 8L));
  CHECK(f.to_string() == "t^2 - 1");
  CHECK_THROWS(f / FieldPoly(0, std::vector<long>{1, 0, 0, 1}));
  // (t + 1)^11 = t^11 + 1 in characteristic 11.
  const FieldPoly h(11, std::vector<long>{1, 1});
  std::vector<long> c(12, 0);
  c[0] = c[11] = 1;
  CHECK(h.pow(11) == FieldPoly(11, c));
}

TEST_CASE("binary forms") {
  std::vector<long> b(13, 0);
  b[12] = 1;
  b[1] = -1;
  const BinaryForm B(0, b);
  CHECK(B.degree() == 12);
  CHECK(B.valuation_at_infinity() == 0);
  CHECK(B.support() == std::vector<int>{1, 12});
  CHECK(B.dehomogenize() == FieldPoly(0, std::vector<long>{0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(BinaryForm(0, 8).is_zero());
  CHECK(BinaryForm(0, 8).valuation_at_infinity() == -1);
  CHECK(BinaryForm::place_at_infinity(0).evaluate(Scalar(0, 0L), Scalar(0, 1L)).is_zero());
  std::vector<long> y(13, 0);
  y[11] = 1;
  y[1] = -1;
  const BinaryForm Y(11, y);
  CHECK(Y.valuation_at_infinity() == 1);
  CHECK(Y.translate(Scalar(11, 1L)) == Y);
  CHECK_FALSE(B.translate(Scalar(0, 1L)) == B);
  CHECK(BinaryForm::from_affine(B.dehomogenize(), 12) == B);
}

TEST_CASE("factorisation over F_11 round trips and yields irreducible factors") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = 1 + static_cast<int>(rng() % 8);
    FieldPoly f = random_poly(rng, 11, deg, 5);
    if (trial % 4 == 0) f = f * f;
    const auto fac = factor(f);
    CHECK(fac.expand() == f);
    for (const auto& [g, e] : fac.factors) {
      CHECK(g.is_monic());
      CHECK(e >= 1);
      if (g.degree() <= 6) CHECK(irreducible_oracle(g));
    }
  }
  // Phi_11 splits into degree-10 / ord(p mod 11) pieces.
  const FieldPoly phi11(7, std::vector<long>(11, 1));
  CHECK(factor(phi11).factors.size() == 1);
  CHECK(factor(FieldPoly(23, std::vector<long>(11, 1))).factors.size() == 10);
  CHECK(factor(FieldPoly(3, std::vector<long>(11, 1))).factors.size() == 2);
}

TEST_CASE("factorisation over Q round trips") {
  std::mt19937 rng(0);
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = 1 + static_cast<int>(rng() % 8);
    FieldPoly f = random_poly(rng, 0, deg, 9);
    if (trial % 3 == 0) f = f * random_poly(rng, 0, 1 + static_cast<int>(rng() % 3), 4);
    const auto fac = factor(f);
    CHECK(fac.expand() == f);
    for (const auto& [g, e] : fac.factors) {
      CHECK(g.is_monic());
      // A factor refactors to itself.
      const auto again = factor(g);
      CHECK(again.factors.size() == 1);
      CHECK(again.factors[0].second == 1);
    }
  }
  // t^4 + 1 is irreducible over Q but splits mod every prime.
  const FieldPoly t4(0, std::vector<long>{1, 0, 0, 0, 1});
  CHECK(factor(t4).factors.size() == 1);
  CHECK(factor(FieldPoly(0, std::vector<long>(11, 1))).factors.size() == 1);
  // t^12 - t = t (t - 1) Phi_11
  std::vector<long> c(13, 0);
  c[12] = 1;
  c[1] = -1;
  const auto x = factor(FieldPoly(0, c));
  REQUIRE(x.factors.size() == 3);
  CHECK(x.factors[2].first.degree() == 10);
  const auto sq = squarefree_decomposition(FieldPoly(0, std::vector<long>{0, 0, 1, 1}));
  CHECK(sq.size() == 2);
  CHECK_THROWS_AS(factor(FieldPoly(0)), std::invalid_argument);
}
