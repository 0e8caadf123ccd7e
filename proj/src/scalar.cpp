#include "k3v/scalar.hpp"

#include <stdexcept>

namespace k3v {

namespace {

BigInt reduce(const BigInt& a, unsigned long p) {
  BigInt r = a % BigInt(p);
  if (r < 0) r += p;
  return r;
}

}  // namespace

Scalar::Scalar(unsigned long characteristic, const Rational& value) : p_(characteristic) {
  if (p_ == 0) {
    v_ = value;
    v_.canonicalize();
    return;
  }
  Rational q = value;
  q.canonicalize();
  const BigInt den = reduce(q.get_den(), p_);
  if (den == 0) throw std::domain_error("Scalar: denominator divisible by the characteristic");
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), BigInt(p_).get_mpz_t());
  v_ = Rational(reduce(q.get_num() * inv, p_));
}

Scalar Scalar::parse(unsigned long characteristic, const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("Scalar: cannot parse '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Scalar: zero denominator in '" + text + "'");
  return Scalar(characteristic, q);
}

void Scalar::check(const Scalar& o) const {
  if (p_ != o.p_) throw std::domain_error("Scalar: characteristic mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  return Scalar(p_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  return Scalar(p_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  return Scalar(p_, v_ * o.v_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return Scalar(p_, -v_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  return Scalar(p_, 1 / v_);
}

Scalar Scalar::pow(unsigned long e) const {
  Scalar result(p_, 1L), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  if (auto c = p_ <=> o.p_; c != 0) return c;
  const int s = cmp(v_, o.v_);
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const { return v_.get_str(); }

std::string Scalar::to_signed_string() const {
  if (p_ == 0) return to_string();
  BigInt v = v_.get_num();
  if (2 * v > BigInt(p_)) v -= p_;
  return v.get_str();
}

}  // namespace k3v
