#include "homlink/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace homlink {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const Ring& R = *ring_;
  const Field& F = R.field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = F.add(terms_.back().coeff, t.coeff);
      if (F.is_zero(terms_.back().coeff)) terms_.pop_back();
      continue;
    }
    if (!F.is_zero(t.coeff)) terms_.push_back(std::move(t));
  }
  // A merge above may have zeroed a coefficient that was then followed by the same monomial.
  std::erase_if(terms_, [&](const Term& t) { return F.is_zero(t.coeff); });
}

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  Scalar s = ring->field().from_int(c);
  return monomial(std::move(ring), Monomial{}, std::move(s));
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Scalar c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back(Term{std::move(c), m});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  Monomial m = ring->variable(i);
  Scalar one = ring->field().one();
  return monomial(std::move(ring), m, std::move(one));
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.deg);
  return d;
}

int Polynomial::degree(const std::vector<int>& shifts) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.deg + shifts.at(t.mono.comp));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.deg != terms_.front().mono.deg) return false;
  return true;
}

bool Polynomial::is_homogeneous(const std::vector<int>& shifts) const {
  if (terms_.empty()) return true;
  const int d = terms_.front().mono.deg + shifts.at(terms_.front().mono.comp);
  for (const auto& t : terms_)
    if (t.mono.deg + shifts.at(t.mono.comp) != d) return false;
  return true;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!ring_->same_as(*o.ring_)) throw std::invalid_argument("polynomials belong to different rings");
}

namespace {

// Merge a and (sign * c * m * b) into a sorted term list.
std::vector<Term> merge(const Ring& R, const std::vector<Term>& a, const std::vector<Term>& b,
                        const Scalar* c, const Monomial* m, bool subtract) {
  const Field& F = R.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto scaled = [&](const Term& t) {
    Term s{t.coeff, t.mono};
    if (m) s.mono = t.mono * *m;
    if (c) s.coeff = F.mul(*c, t.coeff);
    if (subtract) s.coeff = F.neg(s.coeff);
    return s;
  };
  while (i < a.size() && j < b.size()) {
    Term tb = scaled(b[j]);
    auto cmp = R.compare(a[i].mono, tb.mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(tb));
      ++j;
    } else {
      Scalar s = F.add(a[i].coeff, tb.coeff);
      if (!F.is_zero(s)) out.push_back(Term{std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(scaled(b[j]));
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  Polynomial r(ring_);
  r.terms_ = merge(*ring_, terms_, o.terms_, nullptr, nullptr, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_ring(o);
  Polynomial r(ring_);
  r.terms_ = merge(*ring_, terms_, o.terms_, nullptr, nullptr, true);
  return r;
}

Polynomial Polynomial::sub_mul(const Scalar& c, const Monomial& m, const Polynomial& g) const {
  if (field().is_zero(c)) return *this;
  Polynomial r(ring_);
  r.terms_ = merge(*ring_, terms_, g.terms_, &c, &m, true);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  const Field& F = field();
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc.push_back(Term{F.mul(a.coeff, b.coeff), a.mono * b.mono});
  return Polynomial(ring_, std::move(acc));
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{field().neg(t.coeff), t.mono});
  return r;
}

Polynomial Polynomial::scale(const Scalar& c) const {
  Polynomial r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{field().mul(c, t.coeff), t.mono});
  return r;
}

Polynomial Polynomial::mul_term(const Scalar& c, const Monomial& m) const {
  Polynomial r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{field().mul(c, t.coeff), t.mono * m});
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || field().is_one(lead_coeff())) return *this;
  return scale(field().inv(lead_coeff()));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ring_, 1);
  Polynomial b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Polynomial Polynomial::component(std::uint16_t c) const {
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (t.mono.comp == c) r.terms_.push_back(Term{t.coeff, t.mono.in_component(0)});
  return r;
}

Polynomial Polynomial::in_component(std::uint16_t c) const {
  // Terms of one component keep their relative order under position-over-term.
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.coeff, t.mono.in_component(c)});
  return r;
}

int Polynomial::max_component() const {
  int c = -1;
  for (const auto& t : terms_) c = std::max<int>(c, t.mono.comp);
  return c;
}

Polynomial Polynomial::divide_by_monomial(const Monomial& m) const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  Monomial mm = m.in_component(0);
  for (const auto& t : terms_) {
    Monomial probe = mm.in_component(t.mono.comp);
    if (!divides(probe, t.mono)) throw std::domain_error("monomial does not divide polynomial");
    Monomial q = t.mono / probe;
    q.comp = t.mono.comp;
    r.terms_.push_back(Term{t.coeff, q});
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_->same_as(*o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == o.terms_[i].mono)) return false;
    if (!field().equal(terms_[i].coeff, o.terms_[i].coeff)) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& F = field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = F.prints_negative(t.coeff);
    Scalar mag = neg ? F.neg(t.coeff) : t.coeff;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = ring().monomial_to_string(t.mono.in_component(0));
    if (t.mono.comp) mono = (mono == "1" ? "" : mono + "*") + "e" + std::to_string(t.mono.comp);
    if (F.is_one(mag)) {
      out += mono;
    } else if (mono == "1") {
      out += F.to_string(mag);
    } else {
      out += F.to_string(mag) + "*" + mono;
    }
  }
  return out;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Field& F = f.field();
  Polynomial q(f.ring_ptr());
  Polynomial rem = f;
  const Scalar inv = F.inv(g.lead_coeff());
  while (!rem.is_zero()) {
    const Term& lt = rem.lead();
    if (!divides(g.lead_monomial(), lt.mono)) throw std::domain_error("polynomial division is not exact");
    Monomial m = lt.mono / g.lead_monomial();
    Scalar c = F.mul(lt.coeff, inv);
    q = q + Polynomial::monomial(f.ring_ptr(), m, c);
    rem = rem.sub_mul(c, m, g);
  }
  return q;
}

Monomial monomial_gcd(const std::vector<Monomial>& ms) {
  if (ms.empty()) return Monomial{};
  Monomial g = ms.front().in_component(0);
  for (const auto& m : ms) g = gcd(g, m.in_component(0));
  return g;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace homlink
