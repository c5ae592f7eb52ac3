#pragma once

#include <vector>

#include "homlink/polynomial.hpp"

namespace homlink {

/// Dense matrix over a field, row-major.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> data;

  Scalar& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Rank by Gaussian elimination; over the rationals the matrix is scaled
/// to integers and reduced fraction-free (Bareiss).
std::size_t matrix_rank(const Field& F, Matrix m);

/// Indices of a maximal linearly independent subset of `forms`, chosen
/// greedily in input order. All inputs must share one (shifted) degree.
std::vector<std::size_t> independent_subset(const std::vector<Polynomial>& forms);

/// Row-echelon basis (distinct leading monomials) of the span of `forms`.
std::vector<Polynomial> echelon_basis(const std::vector<Polynomial>& forms);

/// Macaulay matrix in degree d: rows are m*g for generators g and monomials
/// m with deg(m*g) = d, columns the degree-d monomials of the ring.
Matrix macaulay_matrix(const RingPtr& ring, const std::vector<Polynomial>& gens, int d);

/// Determinant of a square matrix.
Scalar determinant(const Field& F, Matrix m);

}  // namespace homlink
