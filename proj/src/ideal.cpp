#include "homlink/ideal.hpp"

#include <stdexcept>

#include "homlink/module.hpp"

namespace homlink {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (!g.ring().same_as(*ring_)) throw std::invalid_argument("generator belongs to a different ring");
    if (g.is_zero()) continue;
    if (g.max_component() > 0) throw std::invalid_argument("ideal generators must be ring elements");
    if (!g.is_homogeneous()) throw std::invalid_argument("generator is not homogeneous: " + g.to_string());
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::from_groebner(GroebnerBasis G) {
  RingPtr ring = G.ring;
  Ideal out(ring, G.elements);
  std::call_once(out.cache_->gb_once, [&] { out.cache_->gb = std::move(G); });
  return out;
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(vars));
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->gb_once, [this] { cache_->gb = buchberger(ring_, gens_, {0}); });
  return *cache_->gb;
}

const std::vector<Polynomial>& Ideal::minimal_generators() const {
  std::call_once(cache_->mingens_once, [this] {
    if (is_unit()) {
      cache_->mingens = {Polynomial::constant(ring_, 1)};
      return;
    }
    // Reduced GB elements are canonical; drop the redundant ones.
    cache_->mingens = homlink::minimal_generators(ring_, groebner().elements, {0});
  });
  return cache_->mingens;
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f, groebner()).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_monomial() const {
  for (const auto& g : gens_)
    if (!g.is_monomial()) return false;
  return true;
}

bool Ideal::operator==(const Ideal& o) const {
  if (!ring_->same_as(*o.ring_)) return false;
  const auto& a = groebner().elements;
  const auto& b = o.groebner().elements;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) out += (i ? ", " : "") + gens_[i].to_string();
  return out + ")";
}

std::vector<int> degrees_of(const std::vector<Polynomial>& forms) {
  std::vector<int> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(f.degree());
  return out;
}

}  // namespace homlink
