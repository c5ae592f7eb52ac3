#pragma once

#include <vector>

#include "homlink/ideal.hpp"

namespace homlink {

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

/// I ∩ J by eliminating t from t·I + (1-t)·J.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// I : (g) = (I ∩ (g)) / g.
Ideal ideal_quotient(const Ideal& a, const Polynomial& g);
/// I : J as the intersection of I : g over the generators g of J.
/// Throws std::invalid_argument when J is zero.
Ideal ideal_quotient(const Ideal& a, const Ideal& b);

/// I : J from linear algebra modulo the Groebner basis of I, degree by
/// degree up to max_degree: (I:J)_d = {f in S_d : NF(f·g) = 0 for all g}.
/// Generators of I : J above max_degree are not searched for.
Ideal ideal_quotient_linear(const Ideal& a, const Ideal& b, int max_degree);

/// Largest degree of a standard monomial of S/I when S/I is Artinian, -1
/// otherwise. Every form of higher degree lies in I.
int top_standard_degree(const Ideal& a);

/// I : (g) read off the kernel of S^{1+r} -> S, (h, a_1..a_r) ↦ h·g + Σ a_i f_i.
/// Independent of the elimination route; used as a cross-check.
Ideal ideal_quotient_by_syzygies(const Ideal& a, const Polynomial& g);

/// Stable value of I : J^n.
Ideal saturate(const Ideal& a, const Ideal& b);

/// I_{≤j}: the ideal generated by the forms of degree at most j in I.
Ideal truncate(const Ideal& a, int j);

/// Dimension of S/I from maximal independent sets of variables modulo the
/// leading-term ideal. Throws std::domain_error for the unit ideal.
int krull_dim(const Ideal& a);
/// Dimension of S/M for a proper monomial ideal M.
int monomial_krull_dim(const std::vector<Monomial>& gens, std::size_t nvars);
/// Number of variables minus krull_dim.
int height(const Ideal& a);

struct HilbertData {
  /// N(t) with HS(S/I) = N(t)/(1-t)^n, n = number of variables.
  std::vector<long long> numerator;
  int dim = 0;
  /// N(t)/(1-t)^(n-dim), lowest terms.
  std::vector<long long> h_vector;
  /// Multiplicity e(S/I) = h(1).
  long long degree = 0;
  /// Hilbert function of S/I in degrees 0..max_degree.
  std::vector<long long> values;
};

/// Hilbert series of S/I from the leading-term ideal.
HilbertData hilbert(const Ideal& a, int max_degree = 0);

/// Numerator N(t) of the Hilbert series of S/M for a monomial ideal given
/// by generators (pivot recursion).
std::vector<long long> hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars);

/// dim_k I_d, counting leading monomials of degree d.
long long graded_piece_dim(const Ideal& a, int d);

/// Basis {m - NF(m)} of I_d, m running over the leading monomials of degree d.
std::vector<Polynomial> graded_basis(const Ideal& a, int d);

/// Minimal generators of a monomial ideal given by monomials.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);

}  // namespace homlink
