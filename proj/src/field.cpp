#include "homlink/field.hpp"

#include <stdexcept>

namespace homlink {

namespace {

std::uint32_t pval(const Scalar& a) { return std::get<std::uint32_t>(a); }
const mpq_class& qval(const Scalar& a) { return std::get<mpq_class>(a); }

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  return Field(Kind::Prime, p);
}

Field Field::parse(const std::string& text) {
  if (text == "QQ" || text == "Q") return rationals();
  std::string digits;
  if (text.rfind("GF:", 0) == 0) {
    digits = text.substr(3);
  } else if (text.rfind("GF(", 0) == 0 && text.back() == ')') {
    digits = text.substr(3, text.size() - 4);
  } else {
    throw std::invalid_argument("unknown field '" + text + "' (expected QQ or GF:p)");
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad field characteristic in '" + text + "'");
  return prime(static_cast<std::uint32_t>(std::stoull(digits)));
}

Scalar Field::zero() const {
  if (is_prime_field()) return std::uint32_t{0};
  return mpq_class(0);
}

Scalar Field::one() const {
  if (is_prime_field()) return std::uint32_t{1};
  return mpq_class(1);
}

Scalar Field::from_int(long long v) const {
  if (is_prime_field()) {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }
  return mpq_class(mpz_class(std::to_string(v)));
}

Scalar Field::from_mpq(const mpq_class& v) const {
  if (!is_prime_field()) {
    mpq_class c(v);
    c.canonicalize();
    return c;
  }
  mpz_class num = v.get_num() % p_;
  mpz_class den = v.get_den() % p_;
  if (num < 0) num += p_;
  if (den == 0) throw std::domain_error("denominator vanishes in " + name());
  Scalar n = static_cast<std::uint32_t>(num.get_ui());
  Scalar d = static_cast<std::uint32_t>(den.get_ui());
  return div(n, d);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) {
    std::uint32_t s = pval(a) + pval(b);
    return s >= p_ ? s - p_ : s;
  }
  return mpq_class(qval(a) + qval(b));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) {
    std::uint32_t x = pval(a), y = pval(b);
    return x >= y ? x - y : x + p_ - y;
  }
  return mpq_class(qval(a) - qval(b));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime_field())
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(pval(a)) * pval(b) % p_);
  return mpq_class(qval(a) * qval(b));
}

Scalar Field::neg(const Scalar& a) const {
  if (is_prime_field()) {
    std::uint32_t x = pval(a);
    return x == 0 ? 0u : p_ - x;
  }
  return mpq_class(-qval(a));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero");
  if (is_prime_field()) return pow_mod(pval(a), p_ - 2, p_);
  return mpq_class(1 / qval(a));
}

bool Field::is_zero(const Scalar& a) const {
  if (is_prime_field()) return pval(a) == 0;
  return sgn(qval(a)) == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (is_prime_field()) return pval(a) == 1;
  return qval(a) == 1;
}

bool Field::equal(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) return pval(a) == pval(b);
  return qval(a) == qval(b);
}

bool Field::prints_negative(const Scalar& a) const {
  if (is_prime_field()) return pval(a) > p_ / 2;
  return sgn(qval(a)) < 0;
}

std::string Field::to_string(const Scalar& a) const {
  if (is_prime_field()) {
    std::uint32_t x = pval(a);
    if (x > p_ / 2) return "-" + std::to_string(p_ - x);
    return std::to_string(x);
  }
  return qval(a).get_str();
}

std::string Field::name() const {
  if (is_prime_field()) return "GF:" + std::to_string(p_);
  return "QQ";
}

Scalar Field::random(std::mt19937_64& rng) const {
  if (!is_prime_field())
    throw std::logic_error("random coefficients are only drawn over prime fields");
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = (~std::uint64_t{0} / p_) * p_;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return static_cast<std::uint32_t>(r % p_);
}

}  // namespace homlink
