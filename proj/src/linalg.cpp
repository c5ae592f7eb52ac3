#include "homlink/linalg.hpp"

#include <map>
#include <stdexcept>

#include "homlink/groebner.hpp"

namespace homlink {

namespace {

std::size_t rank_prime(const Field& F, Matrix& m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t piv = rank;
    while (piv < m.rows && F.is_zero(m.at(piv, c))) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(rank, k));
    Scalar inv = F.inv(m.at(rank, c));
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (F.is_zero(m.at(r, c))) continue;
      Scalar f = F.mul(m.at(r, c), inv);
      for (std::size_t k = c; k < m.cols; ++k) m.at(r, k) = F.sub(m.at(r, k), F.mul(f, m.at(rank, k)));
    }
    ++rank;
  }
  return rank;
}

// Fraction-free elimination on an integer matrix.
std::size_t rank_bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]);
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t matrix_rank(const Field& F, Matrix m) {
  if (F.is_prime_field()) return rank_prime(F, m);
  std::vector<std::vector<mpz_class>> a(m.rows, std::vector<mpz_class>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols; ++c) {
      const auto& q = std::get<mpq_class>(m.at(r, c));
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols; ++c) {
      const auto& q = std::get<mpq_class>(m.at(r, c));
      a[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  return rank_bareiss(a, m.cols);
}

std::vector<Polynomial> echelon_basis(const std::vector<Polynomial>& forms) {
  std::vector<Polynomial> basis;
  for (const auto& f : forms) {
    Polynomial r = normal_form(f, basis);
    if (!r.is_zero()) basis.push_back(r.monic());
  }
  return basis;
}

std::vector<std::size_t> independent_subset(const std::vector<Polynomial>& forms) {
  std::vector<Polynomial> basis;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    Polynomial r = normal_form(forms[i], basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    chosen.push_back(i);
  }
  return chosen;
}

Matrix macaulay_matrix(const RingPtr& ring, const std::vector<Polynomial>& gens, int d) {
  const auto cols = monomials_of_degree(ring->nvars(), d);
  std::map<std::array<std::uint16_t, kMaxVars>, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i].exp] = i;
  const Field& F = ring->field();
  Matrix m;
  m.cols = cols.size();
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int e = d - g.degree();
    if (e < 0) continue;
    for (const auto& mult : monomials_of_degree(ring->nvars(), e)) {
      std::vector<Scalar> row(m.cols, F.zero());
      for (const auto& t : g.terms()) row[index.at((t.mono * mult).exp)] = t.coeff;
      m.data.insert(m.data.end(), row.begin(), row.end());
      ++m.rows;
    }
  }
  return m;
}

Scalar determinant(const Field& F, Matrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
  Scalar det = F.one();
  const std::size_t n = m.rows;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && F.is_zero(m.at(piv, c))) ++piv;
    if (piv == n) return F.zero();
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m.at(piv, k), m.at(c, k));
      det = F.neg(det);
    }
    det = F.mul(det, m.at(c, c));
    Scalar inv = F.inv(m.at(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (F.is_zero(m.at(r, c))) continue;
      Scalar f = F.mul(m.at(r, c), inv);
      for (std::size_t k = c; k < n; ++k) m.at(r, k) = F.sub(m.at(r, k), F.mul(f, m.at(c, k)));
    }
  }
  return det;
}

}  // namespace homlink
