#include "k3v/polynomial.hpp"

#include <stdexcept>

namespace k3v {

namespace {

std::string term(const std::string& coeff, const std::string& monomial, bool first) {
  std::string c = coeff;
  bool negative = !c.empty() && c[0] == '-';
  if (negative) c = c.substr(1);
  std::string out = first ? (negative ? "-" : "") : (negative ? " - " : " + ");
  if (monomial.empty()) return out + c;
  if (c != "1") out += c + "*";
  return out + monomial;
}

std::string power_of(const std::string& var, long e) {
  if (e == 0) return "";
  return e == 1 ? var : var + "^" + std::to_string(e);
}

}  // namespace

// -------------------------------------------------------------- FieldPoly

FieldPoly::FieldPoly(unsigned long characteristic, std::vector<Scalar> coefficients)
    : p_(characteristic), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_)
    if (c.characteristic() != p_) throw std::domain_error("FieldPoly: characteristic mismatch");
  normalize();
}

FieldPoly::FieldPoly(unsigned long characteristic, const std::vector<long>& coefficients)
    : p_(characteristic) {
  for (long c : coefficients) coeffs_.emplace_back(characteristic, c);
  normalize();
}

FieldPoly FieldPoly::constant(const Scalar& c) { return monomial(c, 0); }

FieldPoly FieldPoly::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> v(degree + 1, Scalar(c.characteristic(), 0L));
  v[degree] = c;
  return FieldPoly(c.characteristic(), std::move(v));
}

FieldPoly FieldPoly::linear_root(const Scalar& c) {
  return FieldPoly(c.characteristic(), {-c, Scalar(c.characteristic(), 1L)});
}

void FieldPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar FieldPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar(p_, 0L);
}

FieldPoly FieldPoly::operator+(const FieldPoly& o) const {
  if (p_ != o.p_) throw std::domain_error("FieldPoly: characteristic mismatch");
  std::vector<Scalar> v(std::max(coeffs_.size(), o.coeffs_.size()), Scalar(p_, 0L));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return FieldPoly(p_, std::move(v));
}

FieldPoly FieldPoly::operator-(const FieldPoly& o) const { return *this + (-o); }

FieldPoly FieldPoly::operator-() const {
  FieldPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

FieldPoly FieldPoly::operator*(const FieldPoly& o) const {
  if (p_ != o.p_) throw std::domain_error("FieldPoly: characteristic mismatch");
  if (is_zero() || o.is_zero()) return FieldPoly(p_);
  std::vector<Scalar> v(coeffs_.size() + o.coeffs_.size() - 1, Scalar(p_, 0L));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return FieldPoly(p_, std::move(v));
}

FieldPoly FieldPoly::operator*(const Scalar& c) const {
  FieldPoly out = *this;
  for (auto& x : out.coeffs_) x *= c;
  out.normalize();
  return out;
}

std::strong_ordering FieldPoly::operator<=>(const FieldPoly& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (auto c = coeffs_[i] <=> o.coeffs_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::pair<FieldPoly, FieldPoly> FieldPoly::divmod(const FieldPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("FieldPoly: division by zero polynomial");
  if (p_ != divisor.p_) throw std::domain_error("FieldPoly: characteristic mismatch");
  if (degree() < divisor.degree()) return {FieldPoly(p_), *this};
  std::vector<Scalar> rem = coeffs_;
  const long dd = divisor.degree();
  const Scalar inv = divisor.leading().inverse();
  std::vector<Scalar> quot(rem.size() - dd, Scalar(p_, 0L));
  for (long i = static_cast<long>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    const Scalar q = rem[i] * inv;
    quot[i - dd] = q;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeffs_[j];
  }
  return {FieldPoly(p_, std::move(quot)), FieldPoly(p_, std::move(rem))};
}

FieldPoly FieldPoly::operator/(const FieldPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::domain_error("FieldPoly: inexact division");
  return q;
}

bool FieldPoly::divides(const FieldPoly& f) const { return (f % *this).is_zero(); }

FieldPoly FieldPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

FieldPoly FieldPoly::derivative() const {
  if (coeffs_.size() <= 1) return FieldPoly(p_);
  std::vector<Scalar> v;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v.push_back(coeffs_[i] * Scalar(p_, static_cast<long>(i)));
  return FieldPoly(p_, std::move(v));
}

FieldPoly FieldPoly::pow(unsigned long e) const {
  FieldPoly result = constant(Scalar(p_, 1L)), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Scalar FieldPoly::evaluate(const Scalar& x) const {
  Scalar acc(p_, 0L);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

FieldPoly FieldPoly::shift(const Scalar& c) const {
  // Horner in the shifted variable.
  FieldPoly acc(p_);
  const FieldPoly t_plus_c = FieldPoly(p_, {c, Scalar(p_, 1L)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * t_plus_c + constant(*it);
  return acc;
}

std::string FieldPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    if (coeffs_[i].is_zero()) continue;
    out += term(coeffs_[i].to_signed_string(), power_of(var, i), out.empty());
  }
  return out;
}

FieldPoly gcd(const FieldPoly& a, const FieldPoly& b) {
  FieldPoly x = a, y = b;
  while (!y.is_zero()) {
    FieldPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ------------------------------------------------------------- BinaryForm

BinaryForm::BinaryForm(unsigned long characteristic, int degree)
    : p_(characteristic), coeffs_(degree + 1, Scalar(characteristic, 0L)) {
  if (degree < 0) throw std::invalid_argument("BinaryForm: negative degree");
}

BinaryForm::BinaryForm(unsigned long characteristic, std::vector<Scalar> coefficients)
    : p_(characteristic), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("BinaryForm: no coefficient slots");
  for (const auto& c : coeffs_)
    if (c.characteristic() != p_) throw std::domain_error("BinaryForm: characteristic mismatch");
}

BinaryForm::BinaryForm(unsigned long characteristic, const std::vector<long>& coefficients)
    : p_(characteristic) {
  if (coefficients.empty()) throw std::invalid_argument("BinaryForm: no coefficient slots");
  for (long c : coefficients) coeffs_.emplace_back(characteristic, c);
}

BinaryForm BinaryForm::from_affine(const FieldPoly& f, int degree) {
  if (f.degree() > degree) throw std::invalid_argument("BinaryForm: affine degree too large");
  BinaryForm out(f.characteristic(), degree);
  for (long i = 0; i <= f.degree(); ++i) out.coeffs_[i] = f.coefficient(i);
  return out;
}

BinaryForm BinaryForm::place_at_infinity(unsigned long characteristic) {
  return BinaryForm(characteristic, std::vector<long>{1, 0});
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (degree() != o.degree() || p_ != o.p_)
    throw std::invalid_argument("BinaryForm: adding forms of different degree or field");
  BinaryForm out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
  return out;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + o * Scalar(p_, -1L); }

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  if (p_ != o.p_) throw std::domain_error("BinaryForm: characteristic mismatch");
  BinaryForm out(p_, degree() + o.degree());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return out;
}

BinaryForm BinaryForm::operator*(const Scalar& c) const {
  BinaryForm out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

BinaryForm BinaryForm::pow(unsigned e) const {
  BinaryForm result(p_, std::vector<long>{1});
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

FieldPoly BinaryForm::dehomogenize() const { return FieldPoly(p_, coeffs_); }

int BinaryForm::valuation_at_infinity() const {
  for (int i = degree(); i >= 0; --i)
    if (!coeffs_[i].is_zero()) return degree() - i;
  return -1;
}

BinaryForm BinaryForm::translate(const Scalar& c) const {
  return from_affine(dehomogenize().shift(c), degree());
}

std::vector<int> BinaryForm::support() const {
  std::vector<int> out;
  for (int i = 0; i <= degree(); ++i)
    if (!coeffs_[i].is_zero()) out.push_back(i);
  return out;
}

Scalar BinaryForm::evaluate(const Scalar& t0, const Scalar& t1) const {
  Scalar acc(p_, 0L);
  for (int i = 0; i <= degree(); ++i)
    acc += coeffs_[i] * t0.pow(degree() - i) * t1.pow(i);
  return acc;
}

std::string BinaryForm::to_string() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (coeffs_[i].is_zero()) continue;
    std::string mono = power_of("t1", i);
    const std::string t0 = power_of("t0", degree() - i);
    if (!t0.empty()) mono = mono.empty() ? t0 : t0 + "*" + mono;
    out += term(coeffs_[i].to_signed_string(), mono, out.empty());
  }
  return out.empty() ? "0" : out;
}

}  // namespace k3v
