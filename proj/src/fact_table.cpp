#include "k3v/fact_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3v {

namespace {

std::vector<Axiom> build() {
  return {
      {"tame.purely-non-symplectic",
       "g tame of order 66 on a K3 surface",
       {"ord(g) = 1.66"},
       "classification of tame symplectic orders: no nontrivial power of g is symplectic"},
      {"eigen.integrality",
       "g of finite order n, tame, non-symplectic of 2-form order n, X projective",
       {"zeta_n is an eigenvalue of g*", "an invariant ample class gives eigenvalue 1",
        "the characteristic polynomial has integer coefficients"},
       "integrality of the cohomological action"},
      {"lefschetz.tame",
       "g tame",
       {"e(Fix g) = 2 + Tr(g* | H^2)"},
       "topological Lefschetz fixed point formula for tame automorphisms"},
      {"involution.rank-one",
       "h of order 2 with dim H^2(X)^h = 1",
       {"Fix(h) is one smooth curve", "X / h is the projective plane, Fix(h) maps to a smooth sextic"},
       "non-symplectic involutions with invariant lattice of rank 1"},
      {"involution.rank-two",
       "h of order 2 with dim H^2(X)^h = 2",
       {"Fix(h) = C9 (genus 9, a 4-section) or R + C10 (a section and a genus 10 3-section)",
        "Fix(h) = R + C10, a section and a genus 10 3-section, X / h = F4",
        "singular fibres are I1, I2, II or III", "C10 passes through each cusp with multiplicity 3"},
       "non-symplectic involutions with invariant lattice of rank 2"},
      {"chern.injective",
       "g with dim H^2(X)^g = 1 and a power whose fixed locus has curve components",
       {"distinct invariant curve components give independent invariant classes",
        "Fix(g^22) contains no smooth rational curve"},
       "injectivity of the Chern class map into crystalline cohomology"},
      {"plane.order-three",
       "an automorphism of order 3 of the projective plane",
       {"its fixed locus is 3 isolated points", "its fixed locus is a line and a point"},
       "linear algebra of diagonalisable 3x3 matrices"},
      {"fibration.invariant",
       "Fix(g^33) = R + C10 and X / g^33 = F4",
       {"g preserves the pulled back ruling", "g^33 acts trivially on the base"},
       "uniqueness of the ruling of F4"},
      {"fibre.independent-classes",
       "a power of g preserving each component of a reducible fibre",
       {"fibre components, the zero section and an ample class span 3 invariant classes"},
       "intersection matrix of fibre components and a section"},
      {"curve.automorphism-bound",
       "an automorphism of an elliptic curve fixing a point",
       {"its order is at most 6, 12 or 24 in characteristic 0 or >= 5, 3, 2"},
       "structure of automorphism groups of elliptic curves"},
      {"fibre.cm-action",
       "g^11 of order 6 acting trivially on the base and fixing the zero section",
       {"g^11 is complex multiplication of order 6 on the general fibre", "x -> zeta_3 x, y -> -y"},
       "automorphisms of j = 0 curves"},
      {"complex.projective",
       "a complex K3 surface with a non-symplectic automorphism of finite order",
       {"X is projective"},
       "non-projective complex K3 surfaces admit only symplectic finite automorphisms"},
      {"wild.max-symplectic-order",
       "characteristic 11",
       {"a finite symplectic automorphism has order at most 11"},
       "classification of finite symplectic automorphisms in characteristic 11"},
      {"wild.mathieu",
       "characteristic 11, g^6 symplectic of order 11",
       {"[g^6*] = [1.2, (z11:10).2]"},
       "Mathieu character of finite symplectic group actions in characteristic 11"},
      {"wild.faithful",
       "any K3 surface",
       {"Aut(X) acts faithfully on H^2", "g* has order 66"},
       "faithfulness of the representation on l-adic cohomology"},
      {"wild.tame-powers",
       "characteristic 11, g of order 66",
       {"g^33, g^22, g^11 are tame and satisfy the Lefschetz formula"},
       "orders prime to the characteristic"},
      {"wild.base-fixed-point",
       "an automorphism of order p of the projective line in characteristic p",
       {"it fixes exactly one point"},
       "unipotent elements of PGL(2)"},
  };
}

}  // namespace

const FactTable& FactTable::standard() {
  static const FactTable table = [] {
    FactTable t;
    t.axioms_ = build();
    return t;
  }();
  return table;
}

const Axiom& FactTable::get(const std::string& id) const {
  for (const auto& a : axioms_)
    if (a.id == id) return a;
  throw std::out_of_range("unknown axiom " + id);
}

std::vector<std::string> FactTable::declared_for(const std::string& case_tag) {
  std::vector<std::string> ids = {"chern.injective",      "curve.automorphism-bound", "eigen.integrality",
                                  "fibration.invariant",  "fibre.cm-action",          "fibre.independent-classes",
                                  "involution.rank-one",  "involution.rank-two",      "lefschetz.tame",
                                  "plane.order-three"};
  if (case_tag == "tame" || case_tag == "complex") {
    ids.push_back("tame.purely-non-symplectic");
    if (case_tag == "complex") ids.push_back("complex.projective");
  } else if (case_tag == "wild-11") {
    for (const char* id : {"wild.max-symplectic-order", "wild.mathieu", "wild.faithful", "wild.tame-powers",
                           "wild.base-fixed-point"})
      ids.push_back(id);
  } else {
    throw std::invalid_argument("unknown case " + case_tag);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace k3v
