#pragma once

// Roots of unity, cyclotomic polynomials and cyclotomic integers.
//
// Everything here is exact. A root of unity is an exponent on a fixed
// primitive root; a cyclotomic integer lives in Z[x]/(Phi_n) using the power
// basis 1, x, ..., x^(phi(n)-1), so equality is coefficient comparison.

#include "k3v/bigint.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace k3v {

long gcd(long a, long b);
long lcm(long a, long b);
long mod(long a, long n);

/// Euler's totient.
long euler_phi(long n);

/// Positive divisors of n in ascending order.
std::vector<long> divisors(long n);

/// Prime factorisation as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<long, int>> factorize(long n);

bool is_prime(long n);

/// Dense integer polynomial, coefficient i multiplies x^i. The zero
/// polynomial has no coefficients; otherwise the top coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coefficients);

  static IntPoly monomial(const BigInt& c, std::size_t degree);
  static IntPoly constant(const BigInt& c) { return monomial(c, 0); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t i) const;
  const BigInt& leading() const { return coeffs_.back(); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const BigInt& c) const;
  bool operator==(const IntPoly& o) const = default;

  /// Quotient and remainder on division by a monic polynomial.
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

struct CyclotomicPolynomial {
  long index = 0;
  IntPoly poly;

  long degree() const { return poly.degree(); }
};

/// Phi_n by exact division of x^n - 1 by the lower cyclotomic factors.
/// Throws std::invalid_argument for n < 1.
CyclotomicPolynomial cyclotomic_polynomial(long n);

/// Sum of all primitive n-th roots of unity (the Moebius function).
int primitive_root_sum(long n);

/// zeta_n^k for a fixed compatible system of primitive roots zeta_n.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(long modulus, long exponent);

  static RootOfUnity one() { return {1, 0}; }
  static RootOfUnity minus_one() { return {2, 1}; }

  long modulus() const { return modulus_; }
  long exponent() const { return exponent_; }
  long primitive_order() const;
  /// (order d, exponent j) with the value equal to zeta_d^j, gcd(j, d) = 1.
  std::pair<long, long> canonical() const;

  RootOfUnity power(long k) const;
  RootOfUnity inverse() const { return power(-1); }
  RootOfUnity operator*(const RootOfUnity& o) const;
  /// The same value written over a modulus that is a multiple of its order.
  RootOfUnity over(long modulus) const;

  bool operator==(const RootOfUnity& o) const { return canonical() == o.canonical(); }
  std::strong_ordering operator<=>(const RootOfUnity& o) const {
    return canonical() <=> o.canonical();
  }

  /// "1", "-1", or "z<d>^<j>" (canonical form, "z<d>" when j = 1).
  std::string to_string() const;

 private:
  long modulus_ = 1;
  long exponent_ = 0;
};

/// The Galois orbit of z: every primitive root of the same order, ordered by
/// exponent.
std::vector<RootOfUnity> conjugate_orbit(const RootOfUnity& z);

/// Element of Z[zeta_n] in the power basis modulo Phi_n.
class CyclotomicInteger {
 public:
  CyclotomicInteger(long conductor, const BigInt& value);
  /// z must be an n-th root of unity for n = conductor.
  CyclotomicInteger(long conductor, const RootOfUnity& z);

  long conductor() const { return conductor_; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  CyclotomicInteger operator+(const CyclotomicInteger& o) const;
  CyclotomicInteger operator-(const CyclotomicInteger& o) const;
  CyclotomicInteger operator*(const CyclotomicInteger& o) const;
  bool operator==(const CyclotomicInteger& o) const = default;

  /// The rational integer this element equals, if it lies in Z.
  bool is_rational_integer() const;
  BigInt rational_value() const;

 private:
  CyclotomicInteger(long conductor, const IntPoly& residue);
  void check_compatible(const CyclotomicInteger& o) const;

  long conductor_;
  std::vector<BigInt> coeffs_;
};

}  // namespace k3v
