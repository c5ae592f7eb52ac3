#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "homlink/groebner.hpp"
#include "homlink/polynomial.hpp"

namespace homlink {

/// Homogeneous ideal of a polynomial ring. Copies share the lazily
/// computed reduced Groebner basis and minimal generators.
class Ideal {
 public:
  /// Zero generators are dropped. Throws std::invalid_argument on
  /// non-homogeneous generators or ring mismatch.
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// Ideal generated by the elements of a reduced Groebner basis, which is
  /// adopted as the cached basis.
  static Ideal from_groebner(GroebnerBasis G);
  /// The homogeneous maximal ideal (x_1, ..., x_n).
  static Ideal maximal(RingPtr ring);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  const GroebnerBasis& groebner() const;
  /// Minimal homogeneous generators, ascending by degree (the reduced GB
  /// elements when they are already minimal).
  const std::vector<Polynomial>& minimal_generators() const;
  std::vector<Monomial> leading_monomials() const { return groebner().leading_monomials(); }

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const { return groebner().is_unit(); }
  bool is_zero() const { return gens_.empty(); }
  /// True when every generator is a single term.
  bool is_monomial() const;

  /// Equality of reduced Groebner bases.
  bool operator==(const Ideal& o) const;
  bool operator!=(const Ideal& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag gb_once;
    std::optional<GroebnerBasis> gb;
    std::once_flag mingens_once;
    std::vector<Polynomial> mingens;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Degrees of a list of forms.
std::vector<int> degrees_of(const std::vector<Polynomial>& forms);

}  // namespace homlink
