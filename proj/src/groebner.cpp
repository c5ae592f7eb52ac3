#include "homlink/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace homlink {

bool GroebnerBasis::is_unit() const {
  return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero() &&
         elements[0].lead_monomial().comp == 0 && shifts.size() == 1;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(g.lead_monomial());
  return out;
}

namespace {

using Terms = std::vector<Term>;

// f[k..] -= c * m * g, where c*m*LT(g) is not larger than f[k].
void sub_mul_tail(const Ring& R, Terms& f, std::size_t k, const Scalar& c, const Monomial& m, const Terms& g,
                  Terms& scratch) {
  const Field& F = R.field();
  scratch.clear();
  scratch.reserve(f.size() + g.size());
  for (std::size_t i = 0; i < k; ++i) scratch.push_back(std::move(f[i]));
  const Scalar nc = F.neg(c);
  std::size_t i = k, j = 0;
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].mono * m;
    auto cmp = R.compare(f[i].mono, gm);
    if (cmp > 0) {
      scratch.push_back(std::move(f[i++]));
    } else if (cmp < 0) {
      scratch.push_back(Term{F.mul(nc, g[j].coeff), gm});
      ++j;
    } else {
      Scalar s = F.add(f[i].coeff, F.mul(nc, g[j].coeff));
      if (!F.is_zero(s)) scratch.push_back(Term{std::move(s), gm});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) scratch.push_back(std::move(f[i]));
  for (; j < g.size(); ++j) scratch.push_back(Term{F.mul(nc, g[j].coeff), g[j].mono * m});
  f.swap(scratch);
}

void make_monic(const Field& F, Terms& f) {
  if (f.empty() || F.is_one(f[0].coeff)) return;
  Scalar inv = F.inv(f[0].coeff);
  for (auto& t : f) t.coeff = F.mul(inv, t.coeff);
}

struct Elem {
  Terms terms;
  int sugar = 0;
  bool redundant = false;
};

struct Pair {
  int i;  // -1 for an input generator
  int j;
  Monomial lcm;
  int sugar;
};

class Engine {
 public:
  Engine(const RingPtr& ring, std::vector<int> shifts) : ring_(ring), R_(*ring), shifts_(std::move(shifts)) {}

  GroebnerBasis run(std::vector<Polynomial> gens) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (!g.ring().same_as(R_)) throw std::invalid_argument("generator belongs to a different ring");
      if (g.max_component() >= static_cast<int>(shifts_.size()))
        throw std::invalid_argument("generator has a component outside the free module");
      inputs_.push_back(g.terms());
    }
    for (std::size_t k = 0; k < inputs_.size(); ++k)
      pairs_.push_back(Pair{-1, static_cast<int>(k), Monomial{}, sugar_of(inputs_[k])});

    while (!pairs_.empty() && !unit_) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
      });
      Pair p = *best;
      pairs_.erase(best);
      Terms h;
      int sugar;
      if (p.i < 0) {
        h = inputs_[p.j];
        sugar = p.sugar;
      } else {
        h = spoly(elems_[p.i].terms, elems_[p.j].terms);
        sugar = p.sugar;
      }
      top_reduce(h, sugar);
      if (h.empty()) continue;
      make_monic(R_.field(), h);
      insert(std::move(h), sugar);
    }
    return finish();
  }

 private:
  int wdeg(const Monomial& m) const { return m.deg + shifts_[m.comp]; }

  int sugar_of(const Terms& t) const {
    int s = 0;
    for (const auto& x : t) s = std::max(s, wdeg(x.mono));
    return s;
  }

  Terms spoly(const Terms& f, const Terms& g) {
    Monomial l = lcm(f[0].mono, g[0].mono);
    Monomial mf = l / f[0].mono;
    Monomial mg = l / g[0].mono;
    Terms out;
    out.reserve(f.size() + g.size());
    // Both are monic: S = mf*f - mg*g, leading terms cancel.
    for (std::size_t i = 1; i < f.size(); ++i) out.push_back(Term{f[i].coeff, f[i].mono * mf});
    Terms scratch;
    Terms gtail(g.begin() + 1, g.end());
    sub_mul_tail(R_, out, 0, R_.field().one(), mg, gtail, scratch);
    return out;
  }

  const Elem* find_divisor(const Monomial& m) const {
    for (std::size_t idx : active_) {
      const Elem& e = elems_[idx];
      if (divides(e.terms[0].mono, m)) return &e;
    }
    return nullptr;
  }

  void top_reduce(Terms& h, int& sugar) {
    while (!h.empty()) {
      const Elem* g = find_divisor(h[0].mono);
      if (!g) return;
      Monomial m = h[0].mono / g->terms[0].mono;
      Scalar c = h[0].coeff;
      sugar = std::max(sugar, static_cast<int>(m.deg) + g->sugar);
      sub_mul_tail(R_, h, 0, c, m, g->terms, scratch_);
    }
  }

  void insert(Terms h, int sugar) {
    const int t = static_cast<int>(elems_.size());
    const Monomial lm = h[0].mono;
    if (lm.deg == 0 && lm.comp == 0 && shifts_.size() == 1) unit_ = true;
    elems_.push_back(Elem{std::move(h), sugar, false});
    const bool product_criterion = shifts_.size() == 1;

    // Gebauer-Moeller update.
    std::vector<Pair> C;
    for (std::size_t idx : active_) {
      const Monomial& g = elems_[idx].terms[0].mono;
      if (g.comp != lm.comp) continue;
      Monomial l = lcm(g, lm);
      int s = std::max(elems_[idx].sugar + (l.deg - g.deg), sugar + (l.deg - lm.deg));
      C.push_back(Pair{static_cast<int>(idx), t, l, s});
    }
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = product_criterion && coprime(elems_[p.i].terms[0].mono, lm);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (divides(C[b].lcm, p.lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (divides(D[b].lcm, p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> next;
    next.reserve(pairs_.size() + D.size());
    for (auto& p : pairs_) {
      if (p.i >= 0 && divides(lm, p.lcm)) {
        const Monomial& a = elems_[p.i].terms[0].mono;
        const Monomial& b = elems_[p.j].terms[0].mono;
        if (!(lcm(a, lm) == p.lcm) && !(lcm(b, lm) == p.lcm)) continue;
      }
      next.push_back(std::move(p));
    }
    for (auto& p : D) {
      if (product_criterion && coprime(elems_[p.i].terms[0].mono, lm)) continue;
      next.push_back(p);
    }
    pairs_.swap(next);

    std::vector<std::size_t> still;
    for (std::size_t idx : active_) {
      if (divides(lm, elems_[idx].terms[0].mono)) {
        elems_[idx].redundant = true;
      } else {
        still.push_back(idx);
      }
    }
    still.push_back(static_cast<std::size_t>(t));
    active_.swap(still);
  }

  GroebnerBasis finish() {
    GroebnerBasis G;
    G.ring = ring_;
    G.shifts = shifts_;
    if (unit_) {
      G.elements.push_back(Polynomial::constant(ring_, 1));
      return G;
    }
    std::vector<std::size_t> minimal;
    for (std::size_t idx : active_) {
      const Monomial& m = elems_[idx].terms[0].mono;
      bool dominated = false;
      for (std::size_t o : minimal)
        if (divides(elems_[o].terms[0].mono, m)) dominated = true;
      if (!dominated) minimal.push_back(idx);
    }
    std::vector<Polynomial> divisors;
    for (std::size_t idx : minimal) divisors.push_back(Polynomial::from_sorted(ring_, elems_[idx].terms));
    for (std::size_t a = 0; a < divisors.size(); ++a) {
      Terms f = divisors[a].terms();
      std::size_t k = 1;
      while (k < f.size()) {
        const Polynomial* div = nullptr;
        for (std::size_t b = 0; b < divisors.size(); ++b) {
          if (b != a && divides(divisors[b].lead_monomial(), f[k].mono)) {
            div = &divisors[b];
            break;
          }
        }
        if (!div) {
          ++k;
          continue;
        }
        Monomial m = f[k].mono / div->lead_monomial();
        Scalar c = R_.field().div(f[k].coeff, div->lead_coeff());
        sub_mul_tail(R_, f, k, c, m, div->terms(), scratch_);
      }
      make_monic(R_.field(), f);
      G.elements.push_back(Polynomial::from_sorted(ring_, std::move(f)));
    }
    // Tail reduction against the not-yet-reduced divisors is still valid:
    // leading terms never change, so every tail ends up irreducible.
    std::sort(G.elements.begin(), G.elements.end(), [&](const Polynomial& a, const Polynomial& b) {
      return R_.compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    return G;
  }

  RingPtr ring_;
  const Ring& R_;
  std::vector<int> shifts_;
  std::vector<Terms> inputs_;
  std::vector<Elem> elems_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  Terms scratch_;
  bool unit_ = false;
};

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> gens, std::vector<int> shifts) {
  if (shifts.empty()) throw std::invalid_argument("free module of rank zero");
  return Engine(ring, std::move(shifts)).run(std::move(gens));
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  const Ring& R = f.ring();
  const Field& F = R.field();
  Terms t = f.terms();
  Terms scratch;
  std::size_t k = 0;
  while (k < t.size()) {
    const Polynomial* div = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && divides(g.lead_monomial(), t[k].mono)) {
        div = &g;
        break;
      }
    }
    if (!div) {
      ++k;
      continue;
    }
    Monomial m = t[k].mono / div->lead_monomial();
    Scalar c = F.div(t[k].coeff, div->lead_coeff());
    sub_mul_tail(R, t, k, c, m, div->terms(), scratch);
  }
  return Polynomial::from_sorted(f.ring_ptr(), std::move(t));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (!f.ring().same_as(*G.ring)) throw std::invalid_argument("polynomial and basis belong to different rings");
  return normal_form(f, G.elements);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  const Field& F = f.field();
  Polynomial a = f.mul_term(F.inv(f.lead_coeff()), l / f.lead_monomial());
  Polynomial b = g.mul_term(F.inv(g.lead_coeff()), l / g.lead_monomial());
  return a - b;
}

bool is_groebner_basis(const GroebnerBasis& G) {
  const auto& E = G.elements;
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = i + 1; j < E.size(); ++j) {
      if (E[i].lead_monomial().comp != E[j].lead_monomial().comp) continue;
      if (!normal_form(s_polynomial(E[i], E[j]), E).is_zero()) return false;
    }
  return true;
}

bool is_reduced(const GroebnerBasis& G) {
  const auto& E = G.elements;
  const Field& F = G.ring->field();
  for (std::size_t i = 0; i < E.size(); ++i) {
    if (E[i].is_zero() || !F.is_one(E[i].lead_coeff())) return false;
    for (std::size_t j = 0; j < E.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : E[i].terms())
        if (divides(E[j].lead_monomial(), t.mono)) return false;
    }
  }
  return true;
}

}  // namespace homlink
