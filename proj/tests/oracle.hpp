#pragma once
// Independent reference computations used by the test suites. Nothing here
// calls the Groebner engine: ranks are plain Gaussian elimination, division
// is the textbook algorithm.

#include <random>
#include <string>
#include <vector>

#include "homlink/ideal.hpp"
#include "homlink/parse.hpp"

namespace oracle {

using namespace homlink;

inline RingPtr qq_ring(std::vector<std::string> names = {"x", "y", "z"}) {
  return make_ring(std::move(names), Field::rationals());
}

inline Ideal ideal(const RingPtr& R, const std::string& gens) { return Ideal(R, parse_polynomial_list(gens, R)); }

inline const char* kNonLicci = "z^3, x*y*z, x^3*y, x^4, y^6, y^5*z, x*y^5";
inline const char* kMinimalChain = "z^3, x*y*z, x^3*y, x^4, y^6, y^5*z + x^2*y^4, x*y^5";
inline const char* kNonMinimalChain =
    "x^2*y + y^3 - y*z^2 - z^3, x*y^2 - x*z^2, x^3*z - x*y*z^2, y^2*z^2 - z^4, x^6, z^6, x*z^5";

// Rank of a dense matrix of field elements by row reduction with pivoting.
inline std::size_t rank(const Field& F, std::vector<std::vector<Scalar>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && F.is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Scalar inv = F.inv(rows[r][c]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (F.is_zero(rows[i][c])) continue;
      Scalar f = F.mul(rows[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    ++r;
  }
  return r;
}

// Coordinates of homogeneous forms of degree d on the monomial basis.
inline std::vector<std::vector<Scalar>> coordinates(const RingPtr& R, const std::vector<Polynomial>& forms, int d) {
  auto mons = monomials_of_degree(R->nvars(), d);
  std::vector<std::vector<Scalar>> rows;
  for (const auto& f : forms) {
    std::vector<Scalar> row(mons.size(), R->field().zero());
    for (const auto& t : f.terms())
      for (std::size_t k = 0; k < mons.size(); ++k)
        if (mons[k] == t.mono) row[k] = t.coeff;
    rows.push_back(std::move(row));
  }
  return rows;
}

// All products m*g of degree d, m a monomial.
inline std::vector<Polynomial> degree_piece_spanning_set(const RingPtr& R, const std::vector<Polynomial>& gens, int d) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(R->nvars(), d - g.degree()))
      out.push_back(g.mul_term(R->field().one(), m));
  }
  return out;
}

// dim_k I_d from the Macaulay matrix.
inline long long piece_dim(const Ideal& I, int d) {
  const RingPtr& R = I.ring_ptr();
  return static_cast<long long>(rank(R->field(), coordinates(R, degree_piece_spanning_set(R, I.generators(), d), d)));
}

// Hilbert function of S/I in degree d.
inline long long hilbert_value(const Ideal& I, int d) {
  return count_monomials(I.ring().nvars(), d) - piece_dim(I, d);
}

// f lies in the span of the degree-deg(f) piece of I (homogeneous f).
inline bool member(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) return true;
  const RingPtr& R = I.ring_ptr();
  const int d = f.degree();
  auto span = degree_piece_spanning_set(R, I.generators(), d);
  auto rows = coordinates(R, span, d);
  std::size_t before = rank(R->field(), rows);
  rows.push_back(coordinates(R, {f}, d)[0]);
  return rank(R->field(), rows) == before;
}

inline bool contains(const Ideal& big, const Ideal& small) {
  for (const auto& g : small.generators())
    if (!member(big, g)) return false;
  return true;
}

// Equality of homogeneous ideals by mutual degree-wise containment.
inline bool same_ideal(const Ideal& a, const Ideal& b) { return contains(a, b) && contains(b, a); }

// Remainder of the multivariate division of f by G.
inline Polynomial remainder(Polynomial f, const std::vector<Polynomial>& G) {
  const RingPtr& R = f.ring_ptr();
  Polynomial r(R);
  while (!f.is_zero()) {
    bool divided = false;
    for (const auto& g : G) {
      if (divides(g.lead_monomial(), f.lead_monomial())) {
        Scalar c = R->field().div(f.lead_coeff(), g.lead_coeff());
        f = f - g.mul_term(c, f.lead_monomial() / g.lead_monomial());
        divided = true;
        break;
      }
    }
    if (!divided) {
      r = r + Polynomial::monomial(R, f.lead_monomial(), f.lead_coeff());
      f = f - Polynomial::monomial(R, f.lead_monomial(), f.lead_coeff());
    }
  }
  return r;
}

inline Polynomial reference_spoly(const Polynomial& f, const Polynomial& g) {
  const Field& F = f.field();
  Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  return f.mul_term(F.inv(f.lead_coeff()), l / f.lead_monomial()) -
         g.mul_term(F.inv(g.lead_coeff()), l / g.lead_monomial());
}

inline Polynomial monomial(const RingPtr& R, const std::vector<int>& e) {
  return Polynomial::monomial(R, Monomial::from_exponents(e), R->field().one());
}

// Monomial ideal in k[x,y,z] containing x^a, y^b, z^c plus a few random
// monomials of degree <= max_deg.
inline Ideal random_artinian_monomial(const RingPtr& R, std::mt19937_64& rng, int max_deg = 6, int extra = 4) {
  const std::size_t n = R->nvars();
  std::uniform_int_distribution<int> pw(2, max_deg), cnt(1, extra);
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<int> e(n, 0);
    e[v] = pw(rng);
    gens.push_back(monomial(R, e));
  }
  const int k = cnt(rng);
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> deg(2, max_deg);
    int d = deg(rng);
    std::vector<int> e(n, 0);
    for (int j = 0; j < d; ++j) e[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)]++;
    gens.push_back(monomial(R, e));
  }
  return Ideal(R, gens);
}

// Random polynomial with small integer or fractional coefficients, mixed degrees.
inline Polynomial random_poly(const RingPtr& R, std::mt19937_64& rng, int max_deg = 3, int terms = 4) {
  const std::size_t n = R->nvars();
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4), deg(0, max_deg), nt(0, terms);
  std::vector<Term> ts;
  const int k = nt(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<int> e(n, 0);
    int d = deg(rng);
    for (int j = 0; j < d; ++j) e[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)]++;
    Scalar c = R->field().is_prime_field() ? R->field().from_int(num(rng) * 1009 + num(rng))
                                           : R->field().from_mpq(mpq_class(num(rng), den(rng)));
    ts.push_back(Term{c, Monomial::from_exponents(e)});
  }
  return Polynomial(R, std::move(ts));
}

// f(images[0], ..., images[n-1]).
inline Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  const RingPtr& R = f.ring_ptr();
  Polynomial out(R);
  for (const auto& t : f.terms()) {
    Polynomial p = Polynomial::monomial(R, Monomial::from_exponents(std::vector<int>(R->nvars(), 0)), t.coeff);
    for (std::size_t v = 0; v < R->nvars(); ++v) p = p * images[v].pow(t.mono.exp[v]);
    out = out + p;
  }
  return out;
}

// Random invertible linear change of coordinates x_i -> x_i + c*x_j (j > i).
inline std::vector<Polynomial> random_triangular_change(const RingPtr& R, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < R->nvars(); ++i) {
    Polynomial p = Polynomial::variable(R, i);
    for (std::size_t j = i + 1; j < R->nvars(); ++j)
      p = p + Polynomial::variable(R, j).scale(R->field().from_int(c(rng)));
    images.push_back(p);
  }
  return images;
}

inline Ideal substitute(const Ideal& I, const std::vector<Polynomial>& images) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(substitute(g, images));
  return Ideal(I.ring_ptr(), gens);
}

}  // namespace oracle
