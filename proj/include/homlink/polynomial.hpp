#pragma once

#include <string>
#include <vector>

#include "homlink/field.hpp"
#include "homlink/ring.hpp"

namespace homlink {

struct Term {
  Scalar coeff;
  Monomial mono;
};

/// Sparse polynomial (or free-module element, when monomials carry
/// component tags). Terms are sorted strictly descending in the ring order
/// and never have zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts, merges duplicate monomials, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  /// Adopts terms that already satisfy the ordering invariant (no checks).
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }
  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Scalar c);
  static Polynomial variable(RingPtr ring, std::size_t i);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Requires !is_zero().
  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const Scalar& lead_coeff() const { return terms_.front().coeff; }

  /// Maximum total degree over terms (plus component shift when given); -1 for zero.
  int degree() const;
  int degree(const std::vector<int>& shifts) const;
  bool is_homogeneous() const;
  bool is_homogeneous(const std::vector<int>& shifts) const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const Scalar& c, const Monomial& m) const;
  /// this - c*m*g, in one merge pass.
  Polynomial sub_mul(const Scalar& c, const Monomial& m, const Polynomial& g) const;
  Polynomial monic() const;
  Polynomial pow(unsigned e) const;

  /// Entry in component c of a module element, as a ring element.
  Polynomial component(std::uint16_t c) const;
  /// Ring element placed into component c.
  Polynomial in_component(std::uint16_t c) const;
  /// Largest component index with a nonzero term, or -1.
  int max_component() const;

  /// Exact divisibility by a monomial; requires every term divisible.
  Polynomial divide_by_monomial(const Monomial& m) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Exact division f / g for polynomials in one component; throws
/// std::domain_error if g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Greatest common divisor of the monomials of a list (component ignored).
Monomial monomial_gcd(const std::vector<Monomial>& ms);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace homlink
