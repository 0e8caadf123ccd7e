#include "k3v/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace k3v {

long gcd(long a, long b) { return std::gcd(a, b); }

long lcm(long a, long b) { return (a == 0 || b == 0) ? 0 : std::lcm(a, b); }

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long euler_phi(long n) {
  long phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1, 0);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const BigInt& c) const {
  std::vector<BigInt> v = coeffs_;
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
  if (divisor.is_zero() || divisor.leading() != 1)
    throw std::invalid_argument("divmod_monic: divisor must be monic");
  std::vector<BigInt> rem = coeffs_;
  const long dd = divisor.degree();
  if (degree() < dd) return {IntPoly{}, *this};
  std::vector<BigInt> quot(rem.size() - dd, 0);
  for (long i = static_cast<long>(rem.size()) - 1; i >= dd; --i) {
    const BigInt q = rem[i];
    if (q == 0) continue;
    quot[i - dd] = q;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeffs_[j];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || a != 1) out += a.get_str();
    if (i > 0) {
      if (a != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

// ------------------------------------------------------ cyclotomic polys

namespace {

std::mutex cache_mutex;
std::map<long, IntPoly> cache;

IntPoly x_pow_minus_one(long n) {
  std::vector<BigInt> v(n + 1, 0);
  v[0] = -1;
  v[n] = 1;
  return IntPoly(std::move(v));
}

}  // namespace

CyclotomicPolynomial cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  std::lock_guard lock(cache_mutex);
  for (long d : divisors(n)) {
    if (cache.count(d)) continue;
    IntPoly product = IntPoly::constant(1);
    for (long e : divisors(d))
      if (e < d) product = product * cache.at(e);
    auto [q, r] = x_pow_minus_one(d).divmod_monic(product);
    if (!r.is_zero()) throw std::logic_error("cyclotomic_polynomial: inexact division");
    cache.emplace(d, std::move(q));
  }
  return {n, cache.at(n)};
}

int primitive_root_sum(long n) {
  if (n < 1) throw std::invalid_argument("primitive_root_sum: n must be >= 1");
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

// ---------------------------------------------------------- RootOfUnity

RootOfUnity::RootOfUnity(long modulus, long exponent) : modulus_(modulus) {
  if (modulus < 1) throw std::invalid_argument("RootOfUnity: modulus must be >= 1");
  exponent_ = mod(exponent, modulus);
}

long RootOfUnity::primitive_order() const { return modulus_ / gcd(modulus_, exponent_); }

std::pair<long, long> RootOfUnity::canonical() const {
  const long g = gcd(modulus_, exponent_);
  const long d = modulus_ / g;
  return {d, mod(exponent_ / g, d)};
}

RootOfUnity RootOfUnity::power(long k) const {
  // exponent * k can be large; reduce k first.
  return {modulus_, static_cast<long>((static_cast<__int128>(exponent_) * mod(k, modulus_)) %
                                      modulus_)};
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  const long l = lcm(modulus_, o.modulus_);
  return {l, exponent_ * (l / modulus_) + o.exponent_ * (l / o.modulus_)};
}

RootOfUnity RootOfUnity::over(long modulus) const {
  const long d = primitive_order();
  if (modulus < 1 || modulus % d != 0)
    throw std::invalid_argument("RootOfUnity::over: modulus is not a multiple of the order");
  auto [order, j] = canonical();
  return {modulus, j * (modulus / order)};
}

std::string RootOfUnity::to_string() const {
  auto [d, j] = canonical();
  if (d == 1) return "1";
  if (d == 2) return "-1";
  std::string s = "z" + std::to_string(d);
  if (j != 1) s += "^" + std::to_string(j);
  return s;
}

std::vector<RootOfUnity> conjugate_orbit(const RootOfUnity& z) {
  const long d = z.primitive_order();
  std::vector<RootOfUnity> out;
  for (long j = 0; j < d; ++j)
    if (gcd(j, d) == 1) out.emplace_back(d, j);
  return out;
}

// ----------------------------------------------------- CyclotomicInteger

CyclotomicInteger::CyclotomicInteger(long conductor, const IntPoly& residue)
    : conductor_(conductor) {
  const auto phi = cyclotomic_polynomial(conductor);
  auto [q, r] = residue.divmod_monic(phi.poly);
  coeffs_.assign(phi.degree(), 0);
  for (std::size_t i = 0; i < r.coefficients().size(); ++i) coeffs_[i] = r.coefficients()[i];
}

CyclotomicInteger::CyclotomicInteger(long conductor, const BigInt& value)
    : CyclotomicInteger(conductor, IntPoly::constant(value)) {}

CyclotomicInteger::CyclotomicInteger(long conductor, const RootOfUnity& z)
    : CyclotomicInteger(conductor, IntPoly::monomial(1, z.over(conductor).exponent())) {}

void CyclotomicInteger::check_compatible(const CyclotomicInteger& o) const {
  if (conductor_ != o.conductor_)
    throw std::invalid_argument("CyclotomicInteger: conductor mismatch");
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
  check_compatible(o);
  CyclotomicInteger out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
  return out;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const {
  check_compatible(o);
  CyclotomicInteger out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= o.coeffs_[i];
  return out;
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
  check_compatible(o);
  return CyclotomicInteger(conductor_, IntPoly(coeffs_) * IntPoly(o.coeffs_));
}

bool CyclotomicInteger::is_rational_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

BigInt CyclotomicInteger::rational_value() const {
  if (!is_rational_integer())
    throw std::domain_error("CyclotomicInteger: element is not a rational integer");
  return coeffs_.empty() ? BigInt(0) : coeffs_[0];
}

}  // namespace k3v
