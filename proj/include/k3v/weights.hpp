#pragma once

// Linear congruences mod n in up to four unknowns (the weights a, b, c, d of
// a diagonal action on x, y, t, ...), solved by exhaustive search.

#include "k3v/cyclotomic.hpp"

#include <string>
#include <vector>

namespace k3v {

/// lhs . u = rhs . u + constant (mod n). Coefficients are kept reduced to
/// the symmetric range (-n/2, n/2].
struct Relation {
  std::vector<long> lhs;
  std::vector<long> rhs;
  long constant = 0;
};

class CongruenceSystem {
 public:
  CongruenceSystem(long modulus, std::vector<std::string> unknowns);

  long modulus() const { return n_; }
  const std::vector<std::string>& unknowns() const { return names_; }
  const std::vector<Relation>& relations() const { return relations_; }

  void add(Relation r);
  /// Parses "11a = 22", "3a = 2b", "a + c - b = 5" over this system's unknowns.
  Relation parse_relation(const std::string& text) const;
  void add(const std::string& text) { add(parse_relation(text)); }

  bool satisfied_by(const std::vector<long>& values) const;
  bool satisfies(const Relation& r, const std::vector<long>& values) const;
  std::string format(const Relation& r) const;
  std::string to_string() const;

 private:
  long reduce(long c) const;
  long n_;
  std::vector<std::string> names_;
  std::vector<Relation> relations_;
};

struct WeightSolution {
  std::vector<std::string> unknowns;
  std::vector<long> values;  // residues in [0, n)

  /// "(a, b, c) = (2, 3, 6)"
  std::string to_string() const;
  bool operator==(const WeightSolution&) const = default;
};

/// Monomials as exponent vectors, all of the same length k (1 <= k <= 4);
/// unknown i is named a, b, c, d. Consecutive monomials get equal weight.
CongruenceSystem weights_from_invariance(const std::vector<std::vector<long>>& monomials, long n);

/// All solutions in ascending lexicographic order. At most four unknowns.
std::vector<WeightSolution> solve(const CongruenceSystem& s);

struct OrderDecomposition {
  long m = 1;  // order of the kernel on the 2-form
  long n = 1;  // order of the 2-form multiplier

  std::string to_string() const { return std::to_string(m) + "." + std::to_string(n); }
  bool operator==(const OrderDecomposition&) const = default;
};

/// Throws InconsistentActionError when the multiplier order does not divide
/// full_order.
OrderDecomposition order_decomposition(long full_order, const RootOfUnity& omega_multiplier);

}  // namespace k3v
