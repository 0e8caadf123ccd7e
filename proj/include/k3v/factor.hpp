#pragma once

// Factorisation of univariate polynomials over Q and F_p.
//
// Over F_p: square-free decomposition, distinct-degree and Cantor-Zassenhaus
// equal-degree splitting with a fixed seed. Over Q: Zassenhaus (modular
// factorisation, Hensel lifting, subset recombination).

#include "k3v/polynomial.hpp"

#include <utility>
#include <vector>

namespace k3v {

struct Factorization {
  Scalar unit;
  /// Monic irreducible factors with multiplicities, in canonical order.
  std::vector<std::pair<FieldPoly, int>> factors;

  FieldPoly expand() const;
};

/// Throws std::invalid_argument for the zero polynomial.
Factorization factor(const FieldPoly& f);

/// Monic square-free parts: f = lc * prod part^multiplicity, parts pairwise
/// coprime, ascending multiplicity.
std::vector<std::pair<FieldPoly, int>> squarefree_decomposition(const FieldPoly& f);

}  // namespace k3v
