#include "k3v/weights.hpp"

#include "k3v/elliptic.hpp"

#include <cctype>
#include <stdexcept>

namespace k3v {

CongruenceSystem::CongruenceSystem(long modulus, std::vector<std::string> unknowns)
    : n_(modulus), names_(std::move(unknowns)) {
  if (n_ < 1) throw std::invalid_argument("CongruenceSystem: modulus must be positive");
  if (names_.empty() || names_.size() > 4)
    throw std::invalid_argument("CongruenceSystem: between one and four unknowns");
}

long CongruenceSystem::reduce(long c) const {
  long r = mod(c, n_);
  return 2 * r > n_ ? r - n_ : r;
}

void CongruenceSystem::add(Relation r) {
  r.lhs.resize(names_.size(), 0);
  r.rhs.resize(names_.size(), 0);
  if (r.lhs.size() != names_.size() || r.rhs.size() != names_.size())
    throw std::invalid_argument("CongruenceSystem: relation has too many coefficients");
  for (auto& c : r.lhs) c = reduce(c);
  for (auto& c : r.rhs) c = reduce(c);
  r.constant = mod(r.constant, n_);
  relations_.push_back(std::move(r));
}

Relation CongruenceSystem::parse_relation(const std::string& text) const {
  const auto eq = text.find('=');
  if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos)
    throw std::invalid_argument("relation '" + text + "' needs exactly one '='");
  Relation r;
  r.lhs.assign(names_.size(), 0);
  r.rhs.assign(names_.size(), 0);
  auto side = [&](const std::string& s, std::vector<long>& coeffs, long sign) {
    std::size_t i = 0;
    bool any = false;
    auto skip = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    while (i < s.size()) {
      long sgn = 1;
      if (s[i] == '+' || s[i] == '-') {
        if (s[i] == '-') sgn = -1;
        ++i;
        skip();
      } else if (any) {
        throw std::invalid_argument("relation '" + text + "': expected + or -");
      }
      long c = 1;
      bool has_number = false;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        c = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) c = c * 10 + (s[i++] - '0');
        has_number = true;
        skip();
        if (i < s.size() && s[i] == '*') {
          ++i;
          skip();
        }
      }
      if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
        const std::string name(1, s[i++]);
        std::size_t k = 0;
        while (k < names_.size() && names_[k] != name) ++k;
        if (k == names_.size()) throw std::invalid_argument("relation '" + text + "': unknown " + name);
        coeffs[k] += sgn * c;
      } else if (has_number) {
        r.constant -= sign * sgn * c;
      } else {
        throw std::invalid_argument("relation '" + text + "': expected a term");
      }
      any = true;
      skip();
    }
    if (!any) throw std::invalid_argument("relation '" + text + "': empty side");
  };
  side(text.substr(0, eq), r.lhs, 1);
  side(text.substr(eq + 1), r.rhs, -1);
  return r;
}

bool CongruenceSystem::satisfies(const Relation& r, const std::vector<long>& values) const {
  long s = -r.constant;
  for (std::size_t i = 0; i < names_.size(); ++i) s += (r.lhs[i] - r.rhs[i]) * values[i];
  return mod(s, n_) == 0;
}

bool CongruenceSystem::satisfied_by(const std::vector<long>& values) const {
  if (values.size() != names_.size()) throw std::invalid_argument("satisfied_by: wrong arity");
  for (const auto& r : relations_)
    if (!satisfies(r, values)) return false;
  return true;
}

std::string CongruenceSystem::format(const Relation& r) const {
  auto side = [&](const std::vector<long>& c, long constant) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      const long a = c[i] < 0 ? -c[i] : c[i];
      if (out.empty())
        out += c[i] < 0 ? "-" : "";
      else
        out += c[i] < 0 ? " - " : " + ";
      out += (a == 1 ? std::string() : std::to_string(a)) + names_[i];
    }
    if (constant != 0 || out.empty())
      out += out.empty() ? std::to_string(constant) : " + " + std::to_string(constant);
    return out;
  };
  return side(r.lhs, 0) + " = " + side(r.rhs, r.constant) + " (mod " + std::to_string(n_) + ")";
}

std::string CongruenceSystem::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < relations_.size(); ++i) out += (i ? "; " : "") + format(relations_[i]);
  return out + "}";
}

std::string WeightSolution::to_string() const {
  std::string l = "(", r = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    l += (i ? ", " : "") + unknowns[i];
    r += (i ? ", " : "") + std::to_string(values[i]);
  }
  return l + ") = " + r + ")";
}

CongruenceSystem weights_from_invariance(const std::vector<std::vector<long>>& monomials, long n) {
  if (monomials.empty()) throw std::invalid_argument("weights_from_invariance: no monomials");
  const std::size_t k = monomials.front().size();
  static const char* kNames[] = {"a", "b", "c", "d"};
  if (k < 1 || k > 4) throw std::invalid_argument("weights_from_invariance: 1 to 4 variables");
  std::vector<std::string> names(kNames, kNames + k);
  CongruenceSystem s(n, names);
  for (std::size_t i = 0; i + 1 < monomials.size(); ++i) {
    if (monomials[i].size() != k || monomials[i + 1].size() != k)
      throw std::invalid_argument("weights_from_invariance: exponent vectors differ in length");
    s.add(Relation{monomials[i], monomials[i + 1], 0});
  }
  return s;
}

std::vector<WeightSolution> solve(const CongruenceSystem& s) {
  const std::size_t k = s.unknowns().size();
  const long n = s.modulus();
  std::vector<WeightSolution> out;
  std::vector<long> v(k, 0);
  for (;;) {
    if (s.satisfied_by(v)) out.push_back({s.unknowns(), v});
    std::size_t i = k;
    while (i > 0 && ++v[i - 1] == n) v[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

OrderDecomposition order_decomposition(long full_order, const RootOfUnity& omega_multiplier) {
  if (full_order < 1) throw std::invalid_argument("order_decomposition: order must be positive");
  const long n = omega_multiplier.primitive_order();
  if (full_order % n != 0)
    throw InconsistentActionError("order_decomposition: multiplier of order " + std::to_string(n) +
                                  " does not divide " + std::to_string(full_order));
  return {full_order / n, n};
}

}  // namespace k3v
