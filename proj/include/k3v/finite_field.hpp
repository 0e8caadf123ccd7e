#pragma once

// F_p and F_{p^2} = F_p[s]/(s^2 - r), r the smallest quadratic non-residue.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace k3v {

class FiniteField;

class FieldElement {
 public:
  FieldElement() = default;

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return deg_; }
  /// u + v s
  std::uint64_t u() const { return u_; }
  std::uint64_t v() const { return v_; }
  bool is_zero() const { return u_ == 0 && v_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement pow(std::uint64_t e) const;
  /// Throws std::domain_error for zero.
  FieldElement inverse() const;
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

  bool operator==(const FieldElement& o) const = default;

  std::string to_string() const;

 private:
  friend class FiniteField;
  FieldElement(std::uint64_t p, int deg, std::uint64_t r, std::uint64_t u, std::uint64_t v)
      : p_(p), deg_(deg), r_(r), u_(u), v_(v) {}
  void check(const FieldElement& o) const;

  std::uint64_t p_ = 0;
  int deg_ = 1;
  std::uint64_t r_ = 0;
  std::uint64_t u_ = 0;
  std::uint64_t v_ = 0;
};

class FiniteField {
 public:
  /// p prime (< 2^31), degree 1 or 2.
  FiniteField(std::uint64_t p, int degree);
  /// q = p or p^2.
  static FiniteField of_size(std::uint64_t q);

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return deg_; }
  std::uint64_t size() const { return deg_ == 1 ? p_ : p_ * p_; }
  /// The non-residue r with s^2 = r (degree 2 only; 0 otherwise).
  std::uint64_t nonresidue() const { return r_; }

  FieldElement element(long u, long v = 0) const;
  FieldElement zero() const { return element(0); }
  FieldElement one() const { return element(1); }
  /// All elements, u + v s ordered by (v, u).
  std::vector<FieldElement> elements() const;

 private:
  std::uint64_t p_;
  int deg_;
  std::uint64_t r_ = 0;
};

/// -1, 0 or +1 via c^((q-1)/2). Rejects characteristic 2.
int quadratic_character(const FieldElement& c);

}  // namespace k3v
