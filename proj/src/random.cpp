#include "homlink/random.hpp"

#include <random>
#include <stdexcept>

namespace homlink {

Polynomial random_form(const RingPtr& ring, int degree, std::uint64_t seed) {
  const Field& F = ring->field();
  if (!F.is_prime_field())
    throw std::logic_error("random forms require a prime field; rational coefficients would grow without bound");
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(degree)));
  const auto monos = monomials_of_degree(ring->nvars(), degree);
  for (;;) {
    std::vector<Term> terms;
    terms.reserve(monos.size());
    for (const auto& m : monos) terms.push_back(Term{F.random(rng), m});
    Polynomial p(ring, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

Polynomial random_combination(const RingPtr& ring, const std::vector<Polynomial>& basis,
                              std::uint64_t seed, int rational_bound) {
  const Field& F = ring->field();
  Polynomial acc(ring);
  if (basis.empty()) return acc;
  std::mt19937_64 rng(mix_seed(seed, 0x5eed));
  for (int attempt = 0; acc.is_zero(); ++attempt) {
    for (const auto& b : basis) {
      Scalar c;
      if (F.is_prime_field()) {
        c = F.random(rng);
      } else {
        long long span = 2LL * rational_bound + 1;
        c = F.from_int(static_cast<long long>(rng() % static_cast<std::uint64_t>(span)) - rational_bound);
      }
      acc = acc + b.scale(c);
    }
    if (attempt > 64) throw std::runtime_error("could not draw a nonzero combination");
  }
  return acc;
}

}  // namespace homlink
