#include "homlink/idealops.hpp"

#include <algorithm>
#include <stdexcept>

#include "homlink/module.hpp"

namespace homlink {

namespace {

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (!a.ring().same_as(b.ring())) throw std::invalid_argument("ideals belong to different rings");
}

// R[t] with t eliminated first; `t` is variable 0.
RingPtr elimination_ring(const Ring& R) {
  std::vector<std::string> names;
  std::string t = "_t";
  while (R.index_of(t) >= 0) t += "_";
  names.push_back(t);
  for (const auto& n : R.names()) names.push_back(n);
  return make_ring(std::move(names), R.field(), MonomialOrder::elimination(1));
}

Polynomial lift(const Polynomial& f, const RingPtr& big) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i + 1 < kMaxVars; ++i) m.exp[i + 1] = t.mono.exp[i];
    m.deg = t.mono.deg;
    terms.push_back(Term{t.coeff, m});
  }
  return Polynomial(big, std::move(terms));
}

Polynomial drop(const Polynomial& f, const RingPtr& small) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i + 1 < kMaxVars; ++i) m.exp[i] = t.mono.exp[i + 1];
    m.deg = t.mono.deg;
    terms.push_back(Term{t.coeff, m});
  }
  return Polynomial(small, std::move(terms));
}

using Series = std::vector<long long>;

Series series_shift_add(Series a, const Series& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

Series numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {1};
  // Pairwise coprime generators: product of (1 - t^deg).
  bool coprime_all = true;
  std::vector<int> seen(nvars, 0);
  std::vector<int> mixed(nvars, 0);  // occurrences in generators that are not pure powers
  for (const auto& g : gens) {
    int support = 0;
    for (std::size_t v = 0; v < nvars; ++v)
      if (g.exp[v]) ++support;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (!g.exp[v]) continue;
      if (++seen[v] > 1) coprime_all = false;
      if (support > 1) ++mixed[v];
    }
  }
  if (coprime_all) {
    Series acc{1};
    for (const auto& g : gens) {
      Series term(g.deg + 1, 0);
      term[0] = 1;
      term[g.deg] -= 1;
      Series next(acc.size() + term.size() - 1, 0);
      for (std::size_t i = 0; i < acc.size(); ++i)
        for (std::size_t j = 0; j < term.size(); ++j) next[i + j] += acc[i] * term[j];
      acc = std::move(next);
    }
    while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
    return acc;
  }
  // Pivot on the variable most used by mixed generators, at the median of
  // its exponents there; a pure power x_v^f in M forces all those exponents
  // below f, so the pivot is never already in M.
  std::size_t v = static_cast<std::size_t>(std::max_element(mixed.begin(), mixed.end()) - mixed.begin());
  std::vector<int> exps;
  for (const auto& g : gens) {
    int support = 0;
    for (std::size_t w = 0; w < nvars; ++w)
      if (g.exp[w]) ++support;
    if (support > 1 && g.exp[v]) exps.push_back(g.exp[v]);
  }
  std::sort(exps.begin(), exps.end());
  int e = exps[exps.size() / 2];
  Monomial p;
  p.exp[v] = static_cast<std::uint16_t>(e);
  p.deg = static_cast<std::uint16_t>(e);
  // N(M) = N(M + (p)) + t^deg(p) N(M : p)
  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g / gcd(g, p));
  Series a = numerator_rec(std::move(plus), nvars);
  Series b = numerator_rec(std::move(colon), nvars);
  return series_shift_add(std::move(a), b, e);
}

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.exp > b.exp;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (divides(o, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring_ptr(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring_ptr(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring_ptr());
  RingPtr big = elimination_ring(a.ring());
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * lift(f, big));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * lift(g, big));
  GroebnerBasis G = buchberger(big, std::move(gens));
  std::vector<Polynomial> out;
  for (const auto& g : G.elements) {
    bool has_t = false;
    for (const auto& term : g.terms())
      if (term.mono.exp[0]) has_t = true;
    if (!has_t) out.push_back(drop(g, a.ring_ptr()));
  }
  return Ideal(a.ring_ptr(), std::move(out));
}

Ideal ideal_quotient(const Ideal& a, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("quotient by the zero polynomial");
  if (a.contains(g)) return Ideal::unit(a.ring_ptr());
  Ideal principal(a.ring_ptr(), {g});
  Ideal meet = ideal_intersection(a, principal);
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators()) gens.push_back(exact_divide(h, g));
  return Ideal(a.ring_ptr(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (b.is_zero()) throw std::invalid_argument("quotient by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : b.generators()) {
    Ideal q = ideal_quotient(a, g);
    if (q.is_unit()) continue;
    acc = acc ? ideal_intersection(*acc, q) : q;
  }
  if (!acc) return Ideal::unit(a.ring_ptr());
  // Canonical generators: the reduced Groebner basis.
  return Ideal::from_groebner(acc->groebner());
}

Ideal ideal_quotient_by_syzygies(const Ideal& a, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("quotient by the zero polynomial");
  std::vector<Polynomial> columns{g};
  columns.insert(columns.end(), a.generators().begin(), a.generators().end());
  std::vector<Polynomial> gens;
  for (const auto& s : syzygies(a.ring_ptr(), columns, {0})) {
    Polynomial h = s.component(0);
    if (!h.is_zero()) gens.push_back(h);
  }
  return Ideal(a.ring_ptr(), std::move(gens));
}

Ideal saturate(const Ideal& a, const Ideal& b) {
  Ideal cur = a;
  for (;;) {
    Ideal next = ideal_quotient(cur, b);
    if (next == cur) return cur;
    cur = next;
  }
}

Ideal truncate(const Ideal& a, int j) {
  // Every form of degree <= j has a standard representation through basis
  // elements of degree <= j, so these generate I_{<=j}. They need not be a
  // Groebner basis of it.
  std::vector<Polynomial> gens;
  for (const auto& g : a.groebner().elements)
    if (g.degree() <= j) gens.push_back(g);
  return Ideal(a.ring_ptr(), std::move(gens));
}

int krull_dim(const Ideal& a) {
  if (a.is_unit()) throw std::domain_error("dimension of the unit ideal is undefined");
  return monomial_krull_dim(a.leading_monomials(), a.ring().nvars());
}

int monomial_krull_dim(const std::vector<Monomial>& gens, std::size_t n) {
  auto lead = minimalize_monomials(gens);
  std::vector<std::uint32_t> supports;
  for (const auto& m : lead) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (m.exp[v]) s |= 1u << v;
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t u = 0; u < (1u << n); ++u) {
    int size = __builtin_popcount(u);
    if (size <= best) continue;
    bool independent = true;
    for (auto s : supports)
      if ((s & ~u) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

int height(const Ideal& a) { return static_cast<int>(a.ring().nvars()) - krull_dim(a); }

std::vector<long long> hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars) {
  return numerator_rec(gens, nvars);
}

HilbertData hilbert(const Ideal& a, int max_degree) {
  HilbertData h;
  const std::size_t n = a.ring().nvars();
  if (a.is_unit()) {
    h.numerator = {0};
    h.dim = -1;
    h.h_vector = {0};
    h.values.assign(static_cast<std::size_t>(std::max(max_degree, 0)) + 1, 0);
    return h;
  }
  h.numerator = hilbert_numerator(a.leading_monomials(), n);
  // Divide out (1 - t) while N(1) = 0.
  std::vector<long long> cur = h.numerator;
  int k = 0;
  for (;;) {
    long long at_one = 0;
    for (auto c : cur) at_one += c;
    if (at_one != 0 || cur.size() <= 1) break;
    std::vector<long long> q(cur.size() - 1);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      acc += cur[i];
      q[i] = acc;
    }
    cur = std::move(q);
    ++k;
  }
  h.dim = static_cast<int>(n) - k;
  h.h_vector = cur;
  h.degree = 0;
  for (auto c : cur) h.degree += c;
  for (int d = 0; d <= max_degree; ++d) {
    long long v = 0;
    for (std::size_t i = 0; i < h.numerator.size(); ++i)
      v += h.numerator[i] * binom(d - static_cast<long long>(i) + static_cast<long long>(n) - 1,
                                  static_cast<long long>(n) - 1);
    h.values.push_back(v);
  }
  return h;
}

long long graded_piece_dim(const Ideal& a, int d) {
  if (d < 0) return 0;
  if (a.is_unit()) return count_monomials(a.ring().nvars(), d);
  auto lead = a.leading_monomials();
  long long count = 0;
  for (const auto& m : monomials_of_degree(a.ring().nvars(), d)) {
    for (const auto& l : lead)
      if (divides(l, m)) {
        ++count;
        break;
      }
  }
  return count;
}

std::vector<Polynomial> graded_basis(const Ideal& a, int d) {
  std::vector<Polynomial> out;
  if (d < 0) return out;
  const auto& G = a.groebner();
  auto lead = G.leading_monomials();
  const Scalar one = a.ring().field().one();
  for (const auto& m : monomials_of_degree(a.ring().nvars(), d)) {
    bool in_lead = false;
    for (const auto& l : lead)
      if (divides(l, m)) {
        in_lead = true;
        break;
      }
    if (!in_lead) continue;
    Polynomial mono = Polynomial::monomial(a.ring_ptr(), m, one);
    out.push_back(mono - normal_form(mono, G));
  }
  return out;
}

}  // namespace homlink
