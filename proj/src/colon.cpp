#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "homlink/idealops.hpp"

namespace homlink {

namespace {

struct PrimeK {
  using T = std::uint32_t;
  std::uint64_t p;
  explicit PrimeK(const Field& F) : p(F.characteristic()) {}
  T zero() const { return 0; }
  T one() const { return 1; }
  T from(const Scalar& s) const { return std::get<std::uint32_t>(s); }
  Scalar to(T x) const { return x; }
  bool is_zero(T x) const { return x == 0; }
  T add(T a, T b) const { return static_cast<T>((std::uint64_t{a} + b) % p); }
  T sub(T a, T b) const { return static_cast<T>((std::uint64_t{a} + p - b) % p); }
  T mul(T a, T b) const { return static_cast<T>(std::uint64_t{a} * b % p); }
  T neg(T a) const { return a ? static_cast<T>(p - a) : 0; }
  T inv(T a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return static_cast<T>(r);
  }
  // acc += a * b
  void fma(T& acc, T a, T b) const { acc = static_cast<T>((acc + std::uint64_t{a} * b) % p); }
};

struct RationalK {
  using T = mpq_class;
  explicit RationalK(const Field&) {}
  T zero() const { return 0; }
  T one() const { return 1; }
  T from(const Scalar& s) const { return std::get<mpq_class>(s); }
  Scalar to(const T& x) const { return x; }
  bool is_zero(const T& x) const { return sgn(x) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const { return 1 / a; }
  void fma(T& acc, const T& a, const T& b) const { acc += a * b; }
};

struct ExpHash {
  std::size_t operator()(const std::array<std::uint16_t, kMaxVars>& e) const {
    std::size_t h = 0;
    for (auto v : e) h = h * 1000003u + v;
    return h;
  }
};

template <class K>
class Quotienter {
 public:
  using T = typename K::T;
  using Vec = std::vector<T>;

  Quotienter(const Ideal& a, K k) : ring_(a.ring_ptr()), k_(std::move(k)), G_(a.groebner().elements) {
    std::stable_sort(G_.begin(), G_.end(), [](const Polynomial& x, const Polynomial& y) { return x.size() < y.size(); });
  }

  // Standard monomials of degree d, with their positions.
  const std::vector<Monomial>& standard(int d) {
    auto it = std_.find(d);
    if (it != std_.end()) return it->second.list;
    Std s;
    for (const auto& m : monomials_of_degree(ring_->nvars(), d))
      if (!divisor(m)) {
        s.index[m.exp] = s.list.size();
        s.list.push_back(m);
      }
    return std_.emplace(d, std::move(s)).first->second.list;
  }

  // Coordinates of NF(m) on the standard monomials of its degree.
  const Vec& nf(const Monomial& m) {
    auto& table = memo_[m.deg];
    if (auto it = table.find(m.exp); it != table.end()) return it->second;
    const auto& basis = standard(m.deg);
    Vec v(basis.size(), k_.zero());
    if (const Polynomial* h = divisor(m)) {
      Monomial u = m / h->lead_monomial();
      const T lc_inv = k_.inv(k_.from(h->lead_coeff()));
      for (std::size_t i = 1; i < h->terms().size(); ++i) {
        const auto& t = h->terms()[i];
        T c = k_.neg(k_.mul(lc_inv, k_.from(t.coeff)));
        const Vec& w = nf(u * t.mono);
        for (std::size_t j = 0; j < w.size(); ++j)
          if (!k_.is_zero(w[j])) k_.fma(v[j], c, w[j]);
      }
    } else {
      v[std_.at(m.deg).index.at(m.exp)] = k_.from(ring_->field().one());
    }
    return memo_[m.deg].emplace(m.exp, std::move(v)).first->second;
  }

  // NF(f * g) for f given by coordinates on standard(d).
  Vec nf_product(const Vec& f, int d, const Polynomial& g) {
    const auto& basis = standard(d);
    Vec out(standard(d + g.degree()).size(), k_.zero());
    for (std::size_t s = 0; s < basis.size(); ++s) {
      if (k_.is_zero(f[s])) continue;
      for (const auto& t : g.terms()) {
        T c = k_.mul(f[s], k_.from(t.coeff));
        const Vec& w = nf(basis[s] * t.mono);
        for (std::size_t j = 0; j < w.size(); ++j)
          if (!k_.is_zero(w[j])) k_.fma(out[j], c, w[j]);
      }
    }
    return out;
  }

  void forget_below(int d) {
    for (auto it = memo_.begin(); it != memo_.end();) it = it->first < d ? memo_.erase(it) : std::next(it);
  }

  Polynomial to_poly(const Vec& v, int d) {
    const auto& basis = standard(d);
    std::vector<Term> terms;
    for (std::size_t s = 0; s < basis.size(); ++s)
      if (!k_.is_zero(v[s])) terms.push_back(Term{k_.to(v[s]), basis[s]});
    return Polynomial(ring_, std::move(terms));
  }

  const K& k() const { return k_; }

 private:
  struct Std {
    std::vector<Monomial> list;
    std::unordered_map<std::array<std::uint16_t, kMaxVars>, std::size_t, ExpHash> index;
  };

  const Polynomial* divisor(const Monomial& m) const {
    for (const auto& g : G_)
      if (divides(g.lead_monomial(), m)) return &g;
    return nullptr;
  }

  RingPtr ring_;
  K k_;
  std::vector<Polynomial> G_;
  std::map<int, Std> std_;
  std::map<int, std::unordered_map<std::array<std::uint16_t, kMaxVars>, Vec, ExpHash>> memo_;
};

// Row echelon form kept with pivots; reduces vectors against it.
template <class K>
struct Echelon {
  using T = typename K::T;
  const K& k;
  std::vector<std::vector<T>> rows;
  std::vector<std::size_t> pivots;

  // Reduces v in place; returns true (and stores v) if it was independent.
  bool insert(std::vector<T>& v) {
    reduce(v);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!k.is_zero(v[j])) {
        T inv = k.inv(v[j]);
        for (auto& x : v) x = k.mul(x, inv);
        rows.push_back(v);
        pivots.push_back(j);
        return true;
      }
    return false;
  }
  void reduce(std::vector<T>& v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const T c = v[pivots[r]];
      if (k.is_zero(c)) continue;
      const T nc = k.neg(c);
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!k.is_zero(rows[r][j])) k.fma(v[j], nc, rows[r][j]);
    }
  }
};

// Basis of {c : Σ c_s rows[s] = 0}.
template <class K>
std::vector<std::vector<typename K::T>> left_kernel(const K& k, const std::vector<std::vector<typename K::T>>& rows,
                                                    std::size_t width) {
  using T = typename K::T;
  const std::size_t n = rows.size();
  std::vector<std::vector<T>> aug(n, std::vector<T>(width + n, k.zero()));
  for (std::size_t s = 0; s < n; ++s) {
    std::copy(rows[s].begin(), rows[s].end(), aug[s].begin());
    aug[s][width + s] = k.one();
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && k.is_zero(aug[piv][c])) ++piv;
    if (piv == n) continue;
    std::swap(aug[piv], aug[r]);
    const T inv = k.inv(aug[r][c]);
    for (std::size_t i = r + 1; i < n; ++i) {
      if (k.is_zero(aug[i][c])) continue;
      const T f = k.neg(k.mul(aug[i][c], inv));
      for (std::size_t j = c; j < width + n; ++j)
        if (!k.is_zero(aug[r][j])) k.fma(aug[i][j], f, aug[r][j]);
    }
    ++r;
  }
  std::vector<std::vector<T>> out;
  for (std::size_t i = r; i < n; ++i) out.emplace_back(aug[i].begin() + width, aug[i].end());
  return out;
}

template <class K>
Ideal quotient_impl(const Ideal& a, const Ideal& b, int max_degree, K k) {
  Quotienter<K> Q(a, std::move(k));
  const K& kk = Q.k();
  std::vector<Polynomial> conds;
  for (const auto& g : b.generators())
    if (!a.contains(g)) conds.push_back(g);
  std::vector<Polynomial> gens = a.generators();
  if (conds.empty()) return Ideal::unit(a.ring_ptr());
  const std::size_t n = a.ring().nvars();
  std::vector<std::vector<typename K::T>> prev;  // kernel basis in degree d-1
  for (int d = 0; d <= max_degree; ++d) {
    Q.forget_below(d);
    const auto& basis = Q.standard(d);
    if (basis.empty()) break;
    // The part of the answer generated in lower degrees.
    Echelon<K> known{kk, {}, {}};
    for (const auto& v : prev)
      for (std::size_t x = 0; x < n; ++x) {
        std::vector<typename K::T> w(basis.size(), kk.zero());
        const auto& low = Q.standard(d - 1);
        for (std::size_t s = 0; s < low.size(); ++s) {
          if (kk.is_zero(v[s])) continue;
          const auto& img = Q.nf(low[s] * a.ring().variable(x));
          for (std::size_t j = 0; j < img.size(); ++j)
            if (!kk.is_zero(img[j])) kk.fma(w[j], v[s], img[j]);
        }
        known.insert(w);
      }
    std::vector<std::vector<typename K::T>> rows(basis.size());
    std::size_t width = 0;
    for (const auto& g : conds) {
      for (std::size_t s = 0; s < basis.size(); ++s) {
        std::vector<typename K::T> e(basis.size(), kk.zero());
        e[s] = kk.one();
        auto img = Q.nf_product(e, d, g);
        rows[s].insert(rows[s].end(), img.begin(), img.end());
      }
      width += Q.standard(d + g.degree()).size();
    }
    auto kernel = left_kernel(kk, rows, width);
    for (auto v : kernel) {
      auto copy = v;
      if (known.insert(copy)) gens.push_back(Q.to_poly(v, d));
    }
    prev = std::move(kernel);
  }
  return Ideal(a.ring_ptr(), std::move(gens));
}

}  // namespace

Ideal ideal_quotient_linear(const Ideal& a, const Ideal& b, int max_degree) {
  if (!a.ring().same_as(b.ring())) throw std::invalid_argument("ideals belong to different rings");
  if (b.is_zero()) throw std::invalid_argument("quotient by the zero ideal");
  const Field& F = a.ring().field();
  if (F.is_prime_field()) return quotient_impl(a, b, max_degree, PrimeK(F));
  return quotient_impl(a, b, max_degree, RationalK(F));
}

int top_standard_degree(const Ideal& a) {
  if (a.is_unit()) return -1;
  if (krull_dim(a) != 0) return -1;
  auto lead = a.leading_monomials();
  // S/a is spanned by monomials below the pure powers x_i^{e_i} in in(a).
  int top = 0;
  for (std::size_t v = 0; v < a.ring().nvars(); ++v) {
    int e = 0;
    for (const auto& m : lead) {
      if (m.deg != m.exp[v]) continue;
      e = e ? std::min<int>(e, m.exp[v]) : m.exp[v];
    }
    top += e - 1;
  }
  for (int d = top; d >= 0; --d)
    for (const auto& m : monomials_of_degree(a.ring().nvars(), d)) {
      bool standard = true;
      for (const auto& l : lead)
        if (divides(l, m)) {
          standard = false;
          break;
        }
      if (standard) return d;
    }
  return 0;
}

}  // namespace homlink
