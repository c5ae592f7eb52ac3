#pragma once

#include <vector>

#include "homlink/polynomial.hpp"

namespace homlink {

/// Reduced Groebner basis of an ideal (one component, shift 0) or of a
/// submodule of a graded free module with the given component shifts.
/// Elements are monic and sorted ascending by leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<int> shifts{0};
  std::vector<Polynomial> elements;
  bool reduced = true;

  std::size_t size() const { return elements.size(); }
  bool is_unit() const;
  std::vector<Monomial> leading_monomials() const;
};

/// Buchberger's algorithm with the sugar selection strategy (the normal
/// strategy on homogeneous input) and the Gebauer-Moeller criteria.
/// Pairs are processed by (sugar, newer index, older index). Inputs need not
/// be homogeneous. Module elements use position-over-term comparison.
GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> gens, std::vector<int> shifts = {0});

/// Fully reduced remainder of f modulo G.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
/// Remainder of multivariate division by an arbitrary divisor list.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Every S-polynomial of same-component leading terms reduces to zero.
bool is_groebner_basis(const GroebnerBasis& G);
/// Monic, minimal leading terms, fully tail-reduced.
bool is_reduced(const GroebnerBasis& G);

}  // namespace homlink
