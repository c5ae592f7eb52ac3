#include "homlink/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace homlink {

Monomial Monomial::from_exponents(const std::vector<int>& e, std::uint16_t comp) {
  if (e.size() > kMaxVars) throw std::invalid_argument("too many variables");
  Monomial m;
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > 0xffff) throw std::invalid_argument("exponent out of range");
    m.exp[i] = static_cast<std::uint16_t>(e[i]);
    d += e[i];
  }
  m.deg = static_cast<std::uint16_t>(d);
  m.comp = comp;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = exp[i] + o.exp[i];
  r.deg = deg + o.deg;
  r.comp = comp + o.comp;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = exp[i] - o.exp[i];
  r.deg = deg - o.deg;
  r.comp = comp == o.comp ? 0 : comp;
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.comp != b.comp || a.deg > b.deg) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  int d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
    d += r.exp[i];
  }
  r.deg = static_cast<std::uint16_t>(d);
  r.comp = a.comp;
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  int d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = std::min(a.exp[i], b.exp[i]);
    d += r.exp[i];
  }
  r.deg = static_cast<std::uint16_t>(d);
  r.comp = a.comp;
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] && b.exp[i]) return false;
  return true;
}

namespace {

// Reverse lexicographic tie-break on [lo, hi): the smaller last exponent wins.
std::strong_ordering revlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exp[i] != b.exp[i]) return b.exp[i] <=> a.exp[i];
  }
  return std::strong_ordering::equal;
}

int block_degree(const Monomial& m, std::size_t lo, std::size_t hi) {
  int d = 0;
  for (std::size_t i = lo; i < hi; ++i) d += m.exp[i];
  return d;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b,
                                            std::size_t nvars) const {
  if (a.comp != b.comp) return b.comp <=> a.comp;
  switch (kind_) {
    case Kind::Grevlex:
      if (a.deg != b.deg) return a.deg <=> b.deg;
      return revlex(a, b, 0, nvars);
    case Kind::Lex:
      for (std::size_t i = 0; i < nvars; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] <=> b.exp[i];
      return std::strong_ordering::equal;
    case Kind::Elimination: {
      int da = block_degree(a, 0, block_), db = block_degree(b, 0, block_);
      if (da != db) return da <=> db;
      if (auto c = revlex(a, b, 0, block_); c != 0) return c;
      if (a.deg != b.deg) return a.deg <=> b.deg;
      return revlex(a, b, block_, nvars);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::Elimination: return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

Ring::Ring(std::vector<std::string> names, Field field, MonomialOrder order)
    : names_(std::move(names)), field_(field), order_(order) {
  if (names_.size() > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
  if (order_.kind() == MonomialOrder::Kind::Elimination && order_.block() > names_.size())
    throw std::invalid_argument("elimination block larger than the variable count");
}

int Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

Monomial Ring::variable(std::size_t i) const {
  Monomial m;
  m.exp.at(i) = 1;
  m.deg = 1;
  return m;
}

std::string Ring::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!m.exp[i]) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Ring::describe() const {
  std::string out = field_.name() + "[";
  for (std::size_t i = 0; i < names_.size(); ++i) out += (i ? "," : "") + names_[i];
  return out + "] " + order_.name();
}

RingPtr make_ring(std::vector<std::string> names, Field field, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), field, order);
}

namespace {

void enumerate(std::size_t nvars, std::size_t pos, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur.exp[pos] = static_cast<std::uint16_t>(left);
    out.push_back(cur);
    cur.exp[pos] = 0;
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur.exp[pos] = static_cast<std::uint16_t>(e);
    enumerate(nvars, pos + 1, left - e, cur, out);
  }
  cur.exp[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  enumerate(nvars, 0, d, cur, out);
  for (auto& m : out) m.deg = static_cast<std::uint16_t>(d);
  auto order = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b, nvars) > 0; });
  return out;
}

long long count_monomials(std::size_t nvars, int d) {
  if (d < 0) return 0;
  if (nvars == 0) return d == 0 ? 1 : 0;
  // binomial(nvars - 1 + d, nvars - 1)
  long long r = 1;
  for (long long k = 1; k <= static_cast<long long>(nvars) - 1; ++k) r = r * (d + k) / k;
  return r;
}

}  // namespace homlink
