#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "homlink/field.hpp"

namespace homlink {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector x_1^{a_1}...x_n^{a_n}, optionally tagged with a free-module
/// component (component 0 for plain ring elements).
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint16_t comp = 0;
  std::uint16_t deg = 0;  // total degree of exp; kept in sync by all constructors

  Monomial() = default;
  static Monomial from_exponents(const std::vector<int>& e, std::uint16_t comp = 0);

  bool operator==(const Monomial& o) const { return exp == o.exp && comp == o.comp; }

  /// Both are assumed to lie in the same component (or one of them in component 0).
  Monomial operator*(const Monomial& o) const;
  /// Requires divides(o, *this).
  Monomial operator/(const Monomial& o) const;
  friend bool divides(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  /// True when a and b share no variable.
  friend bool coprime(const Monomial& a, const Monomial& b);
  bool is_one() const { return deg == 0; }
  /// Copy with the component tag replaced.
  Monomial in_component(std::uint16_t c) const {
    Monomial m = *this;
    m.comp = c;
    return m;
  }
};

class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Block order eliminating the first `block` variables.
  static MonomialOrder elimination(std::size_t block) { return MonomialOrder(Kind::Elimination, block); }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  /// Position-over-term: a lower component index is larger.
  std::strong_ordering compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;

  bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && block_ == o.block_; }
  std::string name() const;

 private:
  MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}
  Kind kind_;
  std::size_t block_;
};

/// Standard-graded polynomial ring k[x_1..x_n].
class Ring {
 public:
  Ring(std::vector<std::string> names, Field field, MonomialOrder order = MonomialOrder::grevlex());

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  /// Index of a variable, or -1.
  int index_of(const std::string& name) const;
  Monomial variable(std::size_t i) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b, names_.size());
  }

  bool same_as(const Ring& o) const {
    return this == &o || (names_ == o.names_ && field_ == o.field_ && order_ == o.order_);
  }

  std::string monomial_to_string(const Monomial& m) const;
  std::string describe() const;

 private:
  std::vector<std::string> names_;
  Field field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, Field field,
                  MonomialOrder order = MonomialOrder::grevlex());

/// All monomials of total degree d in n variables, descending in grevlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

/// binomial(n + d - 1, d): dimension of the degree-d piece of k[x_1..x_n].
long long count_monomials(std::size_t nvars, int d);

}  // namespace homlink
