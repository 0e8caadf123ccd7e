#include "k3v/finite_field.hpp"

#include "k3v/cyclotomic.hpp"

#include <stdexcept>

namespace k3v {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (a %= p; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

}  // namespace

void FieldElement::check(const FieldElement& o) const {
  if (p_ != o.p_ || deg_ != o.deg_) throw std::invalid_argument("FieldElement: different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  return {p_, deg_, r_, (u_ + o.u_) % p_, (v_ + o.v_) % p_};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check(o);
  return {p_, deg_, r_, (u_ + p_ - o.u_) % p_, (v_ + p_ - o.v_) % p_};
}

FieldElement FieldElement::operator-() const { return {p_, deg_, r_, (p_ - u_) % p_, (p_ - v_) % p_}; }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check(o);
  // (u + vs)(u' + v's) = uu' + r vv' + (uv' + vu') s
  const std::uint64_t u = (mulmod(u_, o.u_, p_) + mulmod(r_, mulmod(v_, o.v_, p_), p_)) % p_;
  const std::uint64_t v = (mulmod(u_, o.v_, p_) + mulmod(v_, o.u_, p_)) % p_;
  return {p_, deg_, r_, u, v};
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement r{p_, deg_, r_, 1 % p_, 0}, a = *this;
  for (; e; e >>= 1, a = a * a)
    if (e & 1) r = r * a;
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElement: inverse of zero");
  const std::uint64_t q = deg_ == 1 ? p_ : p_ * p_;
  return pow(q - 2);
}

std::string FieldElement::to_string() const {
  if (deg_ == 1 || v_ == 0) return std::to_string(u_);
  std::string s = v_ == 1 ? "s" : std::to_string(v_) + "s";
  return u_ == 0 ? s : std::to_string(u_) + "+" + s;
}

FiniteField::FiniteField(std::uint64_t p, int degree) : p_(p), deg_(degree) {
  if (p >= (1ull << 31) || !is_prime(static_cast<long>(p)))
    throw std::invalid_argument("FiniteField: characteristic must be a prime below 2^31");
  if (degree != 1 && degree != 2) throw std::invalid_argument("FiniteField: degree must be 1 or 2");
  if (degree == 2) {
    if (p == 2) {
      throw std::invalid_argument("FiniteField: F_4 is not of the form F_2[s]/(s^2 - r)");
    }
    r_ = 2;
    while (powmod(r_, (p - 1) / 2, p) != p - 1) ++r_;
  }
}

FiniteField FiniteField::of_size(std::uint64_t q) {
  if (q >= 2 && is_prime(static_cast<long>(q))) return FiniteField(q, 1);
  std::uint64_t p = 2;
  while (p * p < q) ++p;
  if (p * p == q && is_prime(static_cast<long>(p))) return FiniteField(p, 2);
  throw std::invalid_argument("FiniteField: size " + std::to_string(q) + " is neither p nor p^2");
}

FieldElement FiniteField::element(long u, long v) const {
  if (deg_ == 1 && mod(v, static_cast<long>(p_)) != 0)
    throw std::invalid_argument("FiniteField: prime field element with an s component");
  const long p = static_cast<long>(p_);
  return {p_, deg_, r_, static_cast<std::uint64_t>(mod(u, p)), static_cast<std::uint64_t>(mod(v, p))};
}

std::vector<FieldElement> FiniteField::elements() const {
  std::vector<FieldElement> out;
  out.reserve(size());
  for (std::uint64_t v = 0; v < (deg_ == 1 ? 1 : p_); ++v)
    for (std::uint64_t u = 0; u < p_; ++u) out.push_back({p_, deg_, r_, u, v});
  return out;
}

int quadratic_character(const FieldElement& c) {
  if (c.characteristic() == 2) throw std::invalid_argument("quadratic_character: characteristic 2");
  if (c.is_zero()) return 0;
  const std::uint64_t q = c.degree() == 1 ? c.characteristic() : c.characteristic() * c.characteristic();
  const FieldElement t = c.pow((q - 1) / 2);
  return t.u() == 1 && t.v() == 0 ? 1 : -1;
}

}  // namespace k3v
