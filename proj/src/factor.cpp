#include "k3v/factor.hpp"

#include "k3v/cyclotomic.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <tuple>

namespace k3v {

namespace {

// ------------------------------------------------- polynomials mod small p

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // t^0 first, no trailing zeros

struct Zp {
  u64 p;

  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
  }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1 % p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a == 0) throw std::domain_error("Zp: inverse of zero");
    return pow(a, p - 2);
  }
};

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long deg(const ModPoly& a) { return static_cast<long>(a.size()) - 1; }

ModPoly mp_add(const Zp& F, const ModPoly& a, const ModPoly& b) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

ModPoly mp_sub(const Zp& F, const ModPoly& a, const ModPoly& b) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

ModPoly mp_mul(const Zp& F, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<ModPoly, ModPoly> mp_divmod(const Zp& F, const ModPoly& a, const ModPoly& b) {
  if (b.empty()) throw std::domain_error("ModPoly: division by zero");
  if (deg(a) < deg(b)) return {{}, a};
  ModPoly rem = a, quot(a.size() - b.size() + 1, 0);
  const u64 inv = F.inv(b.back());
  for (long i = deg(rem); i >= deg(b); --i) {
    if (rem[i] == 0) continue;
    const u64 q = F.mul(rem[i], inv);
    quot[i - deg(b)] = q;
    for (long j = 0; j <= deg(b); ++j) rem[i - deg(b) + j] = F.sub(rem[i - deg(b) + j], F.mul(q, b[j]));
  }
  trim(rem);
  trim(quot);
  return {quot, rem};
}

ModPoly mp_mod(const Zp& F, const ModPoly& a, const ModPoly& b) { return mp_divmod(F, a, b).second; }

ModPoly mp_monic(const Zp& F, ModPoly a) {
  if (a.empty()) return a;
  const u64 inv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

ModPoly mp_gcd(const Zp& F, ModPoly a, ModPoly b) {
  while (!b.empty()) {
    ModPoly r = mp_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(F, a);
}

// d = s a + t b with d monic.
std::tuple<ModPoly, ModPoly, ModPoly> mp_xgcd(const Zp& F, ModPoly a, ModPoly b) {
  ModPoly s0{1}, s1{}, t0{}, t1{1};
  while (!b.empty()) {
    auto [q, r] = mp_divmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
    ModPoly s2 = mp_sub(F, s0, mp_mul(F, q, s1));
    ModPoly t2 = mp_sub(F, t0, mp_mul(F, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = F.inv(a.back());
  for (auto* v : {&a, &s0, &t0})
    for (auto& c : *v) c = F.mul(c, inv);
  return {a, s0, t0};
}

ModPoly mp_derivative(const Zp& F, const ModPoly& a) {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
  trim(r);
  return r;
}

ModPoly mp_powmod(const Zp& F, ModPoly base, BigInt e, const ModPoly& m) {
  ModPoly result{1};
  base = mp_mod(F, base, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mp_mod(F, mp_mul(F, result, base), m);
    base = mp_mod(F, mp_mul(F, base, base), m);
    e >>= 1;
  }
  return mp_mod(F, result, m);
}

bool is_one(const ModPoly& a) { return a.size() == 1 && a[0] == 1; }

std::vector<std::pair<ModPoly, int>> mp_squarefree(const Zp& F, const ModPoly& f) {
  std::vector<std::pair<ModPoly, int>> out;
  if (deg(f) <= 0) return out;
  const ModPoly fp = mp_derivative(F, f);
  auto pth_root = [&](const ModPoly& a) {
    ModPoly r;
    for (std::size_t i = 0; i < a.size(); i += F.p) r.push_back(a[i]);
    trim(r);
    return r;
  };
  ModPoly c;
  if (fp.empty()) {
    c = f;
  } else {
    c = mp_gcd(F, f, fp);
    ModPoly w = mp_divmod(F, f, c).first;
    int i = 1;
    while (deg(w) > 0) {
      ModPoly y = mp_gcd(F, w, c);
      ModPoly z = mp_divmod(F, w, y).first;
      if (deg(z) > 0) out.emplace_back(mp_monic(F, z), i);
      ++i;
      w = y;
      c = mp_divmod(F, c, y).first;
    }
  }
  if (deg(c) > 0) {
    for (auto& [h, e] : mp_squarefree(F, mp_monic(F, pth_root(c))))
      out.emplace_back(h, e * static_cast<int>(F.p));
  }
  return out;
}

// Distinct-degree factorisation of a monic square-free polynomial.
std::vector<std::pair<ModPoly, int>> mp_distinct_degree(const Zp& F, ModPoly f) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x{0, 1};
  ModPoly h = mp_mod(F, x, f);
  for (int d = 1; deg(f) >= 2 * d; ++d) {
    h = mp_powmod(F, h, BigInt(F.p), f);
    ModPoly g = mp_gcd(F, f, mp_sub(F, h, x));
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      f = mp_divmod(F, f, g).first;
      h = mp_mod(F, h, f);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, static_cast<int>(deg(f)));
  return out;
}

void mp_equal_degree(const Zp& F, const ModPoly& f, int d, std::mt19937_64& rng,
                     std::vector<ModPoly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  std::uniform_int_distribution<u64> coeff(0, F.p - 1);
  BigInt exponent = 1;
  for (int i = 0; i < d; ++i) exponent *= F.p;
  exponent = (exponent - 1) / 2;
  for (;;) {
    ModPoly a(deg(f));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (deg(a) <= 0) continue;
    ModPoly b;
    if (F.p == 2) {
      // Trace map to F_2.
      ModPoly term = mp_mod(F, a, f);
      b = term;
      for (int i = 1; i < d; ++i) {
        term = mp_mod(F, mp_mul(F, term, term), f);
        b = mp_add(F, b, term);
      }
    } else {
      b = mp_sub(F, mp_powmod(F, a, exponent, f), ModPoly{1});
    }
    ModPoly g = mp_gcd(F, f, b);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      mp_equal_degree(F, g, d, rng, out);
      mp_equal_degree(F, mp_monic(F, mp_divmod(F, f, g).first), d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic square-free polynomial mod p.
std::vector<ModPoly> mp_factor_squarefree(const Zp& F, const ModPoly& f) {
  std::vector<ModPoly> out;
  std::mt19937_64 rng(0x6b33766b33ULL);
  for (auto& [g, d] : mp_distinct_degree(F, f)) mp_equal_degree(F, g, d, rng, out);
  return out;
}

ModPoly to_mod(const FieldPoly& f) {
  ModPoly out;
  for (const auto& c : f.coefficients()) out.push_back(c.value().get_num().get_ui());
  trim(out);
  return out;
}

ModPoly to_mod(const IntPoly& f, u64 p) {
  ModPoly out;
  for (const auto& c : f.coefficients()) {
    BigInt r = c % BigInt(p);
    if (r < 0) r += p;
    out.push_back(r.get_ui());
  }
  trim(out);
  return out;
}

FieldPoly from_mod(const ModPoly& f, unsigned long p) {
  std::vector<Scalar> v;
  for (u64 c : f) v.emplace_back(p, Rational(BigInt(c)));
  return FieldPoly(p, std::move(v));
}

IntPoly from_mod_int(const ModPoly& f) {
  std::vector<BigInt> v;
  for (u64 c : f) v.emplace_back(BigInt(c));
  return IntPoly(std::move(v));
}

// -------------------------------------------- integer polynomials mod M

BigInt reduce_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

IntPoly reduce_mod(const IntPoly& f, const BigInt& m) {
  std::vector<BigInt> v;
  for (const auto& c : f.coefficients()) v.push_back(reduce_mod(c, m));
  return IntPoly(std::move(v));
}

IntPoly symmetric(const IntPoly& f, const BigInt& m) {
  std::vector<BigInt> v;
  const BigInt half = m / 2;
  for (const auto& c : f.coefficients()) {
    BigInt r = reduce_mod(c, m);
    if (r > half) r -= m;
    v.push_back(r);
  }
  return IntPoly(std::move(v));
}

// Division by a monic divisor, all arithmetic mod m.
std::pair<IntPoly, IntPoly> divmod_monic_mod(const IntPoly& a, const IntPoly& b, const BigInt& m) {
  auto [q, r] = reduce_mod(a, m).divmod_monic(reduce_mod(b, m));
  return {reduce_mod(q, m), reduce_mod(r, m)};
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), reduce_mod(a, m).get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("inverse_mod: not invertible");
  return inv;
}

IntPoly content_free(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& c : f.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return f;
  if (f.leading() < 0) g = -g;
  std::vector<BigInt> v;
  for (const auto& c : f.coefficients()) v.push_back(c / g);
  return IntPoly(std::move(v));
}

std::optional<IntPoly> exact_quotient(const IntPoly& f, const IntPoly& g) {
  if (g.degree() > f.degree()) return std::nullopt;
  std::vector<BigInt> rem = f.coefficients();
  std::vector<BigInt> quot(rem.size() - g.coefficients().size() + 1, 0);
  const long dg = g.degree();
  for (long i = f.degree(); i >= dg; --i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), g.leading().get_mpz_t())) return std::nullopt;
    const BigInt q = rem[i] / g.leading();
    quot[i - dg] = q;
    for (long j = 0; j <= dg; ++j) rem[i - dg + j] -= q * g.coefficients()[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic,
// lifted to modulus m^2.
void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t, BigInt& m) {
  const BigInt m2 = m * m;
  const IntPoly e = reduce_mod(f - g * h, m2);
  auto [q, r] = divmod_monic_mod(s * e, h, m2);
  const IntPoly g1 = reduce_mod(g + t * e + q * g, m2);
  const IntPoly h1 = reduce_mod(h + r, m2);
  const IntPoly b = reduce_mod(s * g1 + t * h1 - IntPoly::constant(1), m2);
  auto [c, d] = divmod_monic_mod(s * b, h1, m2);
  s = reduce_mod(s - d, m2);
  t = reduce_mod(t - t * b - c * g1, m2);
  g = g1;
  h = h1;
  m = m2;
}

// Lifts f = lc(f) * prod factors (mod p) to monic factors mod p^(2^steps).
std::vector<IntPoly> hensel_lift(const IntPoly& f, std::span<const ModPoly> factors, u64 p,
                                 int steps, const BigInt& target) {
  if (factors.size() == 1) {
    const BigInt inv = inverse_mod(f.leading(), target);
    return {reduce_mod(f * inv, target)};
  }
  const Zp F{p};
  const std::size_t k = factors.size() / 2;
  ModPoly g0 = to_mod(IntPoly::constant(f.leading()), p);
  for (std::size_t i = 0; i < k; ++i) g0 = mp_mul(F, g0, factors[i]);
  ModPoly h0{1};
  for (std::size_t i = k; i < factors.size(); ++i) h0 = mp_mul(F, h0, factors[i]);
  auto [d, s0, t0] = mp_xgcd(F, g0, h0);
  if (!is_one(d)) throw std::logic_error("hensel_lift: factors are not coprime");

  IntPoly g = from_mod_int(g0), h = from_mod_int(h0), s = from_mod_int(s0), t = from_mod_int(t0);
  BigInt m = p;
  for (int i = 0; i < steps; ++i) hensel_step(f, g, h, s, t, m);

  auto left = hensel_lift(g, factors.subspan(0, k), p, steps, target);
  auto right = hensel_lift(h, factors.subspan(k), p, steps, target);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  const long n = f.degree();
  if (n <= 1) return {f};

  // Pick among the first few usable primes the one with fewest modular factors.
  u64 best_p = 0;
  std::size_t best_count = 0;
  int tried = 0;
  for (u64 p = 3; tried < 5; p += 2) {
    if (!is_prime(static_cast<long>(p))) continue;
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    const Zp F{p};
    const ModPoly fp = mp_monic(F, to_mod(f, p));
    if (deg(fp) != n || !is_one(mp_gcd(F, fp, mp_derivative(F, fp)))) continue;
    std::size_t count = 0;
    for (auto& [g, d] : mp_distinct_degree(F, fp)) count += static_cast<std::size_t>(deg(g) / d);
    ++tried;
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
    }
    if (count == 1) break;
  }
  if (best_count == 1) return {f};

  const Zp F{best_p};
  std::vector<ModPoly> modular = mp_factor_squarefree(F, mp_monic(F, to_mod(f, best_p)));
  std::sort(modular.begin(), modular.end());

  BigInt max_coeff = 0;
  for (const auto& c : f.coefficients()) max_coeff = std::max<BigInt>(max_coeff, abs(c));
  BigInt bound = abs(f.leading()) * max_coeff * (n + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  const BigInt needed = 2 * bound + 1;
  int steps = 0;
  BigInt modulus = best_p;
  while (modulus <= needed) {
    modulus *= modulus;
    ++steps;
  }

  const std::vector<IntPoly> lifted = hensel_lift(f, modular, best_p, steps, modulus);

  std::vector<IntPoly> result;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  IntPoly current = f;

  for (std::size_t size = 1; 2 * size <= remaining.size();) {
    bool found = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      IntPoly candidate = IntPoly::constant(current.leading());
      for (std::size_t i : pick) candidate = reduce_mod(candidate * lifted[remaining[i]], modulus);
      candidate = content_free(symmetric(candidate, modulus));
      if (auto q = exact_quotient(current, candidate)) {
        result.push_back(candidate);
        current = *q;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(remaining[i]);
        remaining = std::move(keep);
        found = true;
        break;
      }
      // next combination
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == remaining.size() - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++size;
  }
  result.push_back(content_free(current));
  return result;
}

// Primitive integer polynomial with positive leading coefficient.
IntPoly primitive_integer(const FieldPoly& f) {
  BigInt den = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.value().get_den_mpz_t());
  std::vector<BigInt> v;
  for (const auto& c : f.coefficients()) v.push_back(BigInt(c.value() * den));
  return content_free(IntPoly(std::move(v)));
}

FieldPoly monic_rational(const IntPoly& f) {
  std::vector<Scalar> v;
  for (const auto& c : f.coefficients()) v.emplace_back(0, Rational(c, f.leading()));
  return FieldPoly(0, std::move(v));
}

}  // namespace

FieldPoly Factorization::expand() const {
  FieldPoly out = FieldPoly::constant(unit);
  for (const auto& [g, e] : factors) out = out * g.pow(static_cast<unsigned long>(e));
  return out;
}

std::vector<std::pair<FieldPoly, int>> squarefree_decomposition(const FieldPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  const unsigned long p = f.characteristic();
  std::vector<std::pair<FieldPoly, int>> out;
  if (p != 0) {
    const Zp F{p};
    for (auto& [g, e] : mp_squarefree(F, mp_monic(F, to_mod(f)))) out.emplace_back(from_mod(g, p), e);
  } else {
    // Yun's algorithm.
    const FieldPoly fm = f.monic();
    if (fm.degree() <= 0) return out;
    const FieldPoly d0 = fm.derivative();
    FieldPoly a = gcd(fm, d0);
    FieldPoly b = fm / a;
    FieldPoly c = d0 / a;
    FieldPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
      a = gcd(b, d);
      b = b / a;
      c = d / a;
      d = c - b.derivative();
      if (a.degree() > 0) out.emplace_back(a, i);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.second, x.first) < std::tie(y.second, y.first);
  });
  return out;
}

Factorization factor(const FieldPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  const unsigned long p = f.characteristic();
  Factorization out{f.leading(), {}};
  std::map<FieldPoly, int> collected;
  for (auto& [part, e] : squarefree_decomposition(f)) {
    if (p != 0) {
      const Zp F{p};
      for (auto& g : mp_factor_squarefree(F, to_mod(part))) collected[from_mod(g, p)] += e;
    } else {
      for (auto& g : zassenhaus(primitive_integer(part))) collected[monic_rational(g)] += e;
    }
  }
  out.factors.assign(collected.begin(), collected.end());
  return out;
}

}  // namespace k3v
