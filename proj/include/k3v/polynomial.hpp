#pragma once

// Univariate polynomials and binary forms over an exact prime field.

#include "k3v/scalar.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace k3v {

/// Dense polynomial in one variable over Q or F_p. Coefficient i multiplies
/// t^i; the zero polynomial has no coefficients.
class FieldPoly {
 public:
  explicit FieldPoly(unsigned long characteristic = 0) : p_(characteristic) {}
  FieldPoly(unsigned long characteristic, std::vector<Scalar> coefficients);
  FieldPoly(unsigned long characteristic, const std::vector<long>& coefficients);

  static FieldPoly constant(const Scalar& c);
  static FieldPoly monomial(const Scalar& c, std::size_t degree);
  /// t - c
  static FieldPoly linear_root(const Scalar& c);

  unsigned long characteristic() const { return p_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(std::size_t i) const;
  const Scalar& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading().is_one(); }
  bool is_constant() const { return degree() <= 0; }

  FieldPoly operator+(const FieldPoly& o) const;
  FieldPoly operator-(const FieldPoly& o) const;
  FieldPoly operator*(const FieldPoly& o) const;
  FieldPoly operator*(const Scalar& c) const;
  FieldPoly operator-() const;
  bool operator==(const FieldPoly& o) const = default;
  /// Canonical order: degree first, then coefficients from t^0 upwards.
  std::strong_ordering operator<=>(const FieldPoly& o) const;

  std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& divisor) const;
  FieldPoly operator/(const FieldPoly& divisor) const;  // exact; throws otherwise
  FieldPoly operator%(const FieldPoly& divisor) const { return divmod(divisor).second; }
  bool divides(const FieldPoly& f) const;

  FieldPoly monic() const;
  FieldPoly derivative() const;
  FieldPoly pow(unsigned long e) const;
  Scalar evaluate(const Scalar& x) const;
  /// f(t + c)
  FieldPoly shift(const Scalar& c) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  unsigned long p_ = 0;
  std::vector<Scalar> coeffs_;
};

/// Monic gcd (zero only when both inputs are zero).
FieldPoly gcd(const FieldPoly& a, const FieldPoly& b);

/// Binary form of fixed degree D in (t0, t1): coefficient i multiplies
/// t0^(D-i) t1^i. The affine coordinate is t = t1 / t0; the place t0 = 0 is
/// t = infinity.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(unsigned long characteristic, int degree);
  BinaryForm(unsigned long characteristic, std::vector<Scalar> coefficients);
  BinaryForm(unsigned long characteristic, const std::vector<long>& coefficients);

  static BinaryForm from_affine(const FieldPoly& f, int degree);
  /// The linear form t0, whose zero is t = infinity.
  static BinaryForm place_at_infinity(unsigned long characteristic);

  unsigned long characteristic() const { return p_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  const Scalar& coefficient(int i) const { return coeffs_.at(i); }
  bool is_zero() const;

  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm operator*(const Scalar& c) const;
  BinaryForm pow(unsigned e) const;
  bool operator==(const BinaryForm& o) const = default;

  /// f(1, t).
  FieldPoly dehomogenize() const;
  /// Order of vanishing at t0 = 0; -1 for the zero form.
  int valuation_at_infinity() const;
  /// f(t0, t1 + c t0).
  BinaryForm translate(const Scalar& c) const;
  /// Exponents of t1 carrying a nonzero coefficient.
  std::vector<int> support() const;

  Scalar evaluate(const Scalar& t0, const Scalar& t1) const;

  std::string to_string() const;

 private:
  unsigned long p_ = 0;
  std::vector<Scalar> coeffs_;
};

}  // namespace k3v
