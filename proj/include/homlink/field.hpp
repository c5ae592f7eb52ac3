#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace homlink {

/// Field element. Prime-field elements are canonical representatives in
/// [0, p); rational elements are always in lowest terms.
using Scalar = std::variant<std::uint32_t, mpq_class>;

/// Exact coefficient field: the rationals or GF(p).
class Field {
 public:
  enum class Kind { Rationals, Prime };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// Parses "QQ" or "GF:p" (also "GF(p)").
  static Field parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::Prime; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_mpq(const mpq_class& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;
  /// Sign used only for printing: prime-field elements are printed in
  /// the symmetric range (-p/2, p/2].
  bool prints_negative(const Scalar& a) const;

  std::string to_string(const Scalar& a) const;
  std::string name() const;

  /// Uniform element of GF(p); throws std::logic_error over the rationals.
  Scalar random(std::mt19937_64& rng) const;

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

/// Default field for generic constructions.
inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t n);

/// splitmix64 step; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace homlink
