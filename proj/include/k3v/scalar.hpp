#pragma once

// Elements of an exact prime field: the rationals (characteristic 0) or
// F_p. Values in F_p are stored as integers in [0, p).

#include "k3v/bigint.hpp"

#include <compare>
#include <string>

namespace k3v {

class Scalar {
 public:
  Scalar() = default;
  Scalar(unsigned long characteristic, const Rational& value);
  Scalar(unsigned long characteristic, long value) : Scalar(characteristic, Rational(value)) {}

  /// "3", "-7", "5/3".
  static Scalar parse(unsigned long characteristic, const std::string& text);

  unsigned long characteristic() const { return p_; }
  const Rational& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(unsigned long e) const;

  bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
  std::strong_ordering operator<=>(const Scalar& o) const;

  /// Rational string; in characteristic p the residue in [0, p).
  std::string to_string() const;
  /// Signed residue in (-p/2, p/2] for printing forms over F_p.
  std::string to_signed_string() const;

 private:
  void check(const Scalar& o) const;
  unsigned long p_ = 0;
  Rational v_ = 0;
};

}  // namespace k3v
