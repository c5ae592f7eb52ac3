#include "homlink/module.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "homlink/linalg.hpp"

namespace homlink {

std::vector<Polynomial> minimal_generators(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                           const std::vector<int>& shifts) {
  std::map<int, std::vector<Polynomial>> by_degree;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous(shifts)) throw std::invalid_argument("minimal_generators expects homogeneous elements");
    by_degree[g.degree(shifts)].push_back(g);
  }
  std::vector<Polynomial> accepted;
  GroebnerBasis G{ring, shifts, {}, true};
  for (auto& [deg, group] : by_degree) {
    // Normal forms modulo the lower-degree part are a linear projection in
    // this degree, so linear independence of the remainders decides.
    std::vector<Polynomial> remainders;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < group.size(); ++i) {
      Polynomial r = normal_form(group[i], G);
      if (r.is_zero()) continue;
      remainders.push_back(std::move(r));
      origin.push_back(i);
    }
    if (remainders.empty()) continue;
    for (std::size_t k : independent_subset(remainders)) accepted.push_back(group[origin[k]]);
    G = buchberger(ring, accepted, shifts);
  }
  return accepted;
}

std::vector<Polynomial> syzygies(const RingPtr& ring, const std::vector<Polynomial>& columns,
                                 const std::vector<int>& target_shifts) {
  const std::size_t r = target_shifts.size();
  const std::size_t m = columns.size();
  if (r + m > 0xffff) throw std::invalid_argument("free module rank too large");
  std::vector<int> shifts = target_shifts;
  std::vector<int> col_degrees;
  for (const auto& c : columns) {
    if (!c.is_zero() && !c.is_homogeneous(target_shifts)) throw std::invalid_argument("syzygies of a non-homogeneous map");
    if (c.max_component() >= static_cast<int>(r)) throw std::invalid_argument("column outside the target module");
    col_degrees.push_back(c.is_zero() ? 0 : c.degree(target_shifts));
  }
  // Zero columns are unit syzygies; give them a degree anyway.
  shifts.insert(shifts.end(), col_degrees.begin(), col_degrees.end());
  std::vector<Polynomial> graph;
  graph.reserve(m);
  const Scalar one = ring->field().one();
  for (std::size_t i = 0; i < m; ++i) {
    Monomial e;
    e.comp = static_cast<std::uint16_t>(r + i);
    graph.push_back(columns[i] + Polynomial::monomial(ring, e, one));
  }
  GroebnerBasis G = buchberger(ring, std::move(graph), shifts);
  std::vector<Polynomial> out;
  for (const auto& g : G.elements) {
    if (g.lead_monomial().comp < r) continue;
    // Under position-over-term, the whole element lives in the last m components.
    std::vector<Term> terms;
    terms.reserve(g.size());
    for (const auto& t : g.terms()) {
      Monomial mono = t.mono;
      mono.comp = static_cast<std::uint16_t>(mono.comp - r);
      terms.push_back(Term{t.coeff, mono});
    }
    out.push_back(Polynomial::from_sorted(ring, std::move(terms)));
  }
  return out;
}

Polynomial apply(const ModuleMap& f, const Polynomial& v) {
  Polynomial acc(v.ring_ptr());
  for (std::size_t i = 0; i < f.columns.size(); ++i) {
    Polynomial coeff = v.component(static_cast<std::uint16_t>(i));
    if (coeff.is_zero()) continue;
    acc = acc + coeff * f.columns[i];
  }
  return acc;
}

}  // namespace homlink
