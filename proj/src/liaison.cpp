#include "homlink/liaison.hpp"

#include <algorithm>
#include <numeric>

#include "homlink/idealops.hpp"
#include "homlink/linalg.hpp"
#include "homlink/random.hpp"

namespace homlink {

namespace {

bool raises_height(const Ideal& K, const Polynomial& f) {
  Ideal bigger(K.ring_ptr(), [&] {
    auto g = K.generators();
    g.push_back(f);
    return g;
  }());
  if (bigger.is_unit()) return false;
  return height(bigger) == height(K) + 1;
}

Ideal with_form(const Ideal& I, const Polynomial& f) {
  auto g = I.generators();
  g.push_back(f);
  return Ideal(I.ring_ptr(), std::move(g));
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Polynomial power(const RingPtr& ring, std::size_t var, int e) {
  std::vector<int> exps(ring->nvars(), 0);
  exps[var] = e;
  return Polynomial::monomial(ring, Monomial::from_exponents(exps), ring->field().one());
}

// Minimal generators of in(J) avoid the last variable, so it is a
// nonzerodivisor on S/J (grevlex: in(J : x_n) = in(J) : x_n).
bool last_variable_regular(const Ideal& J) {
  if (J.ring().order().kind() != MonomialOrder::Kind::Grevlex) return false;
  const std::size_t last = J.ring().nvars() - 1;
  for (const auto& m : minimalize_monomials(J.leading_monomials()))
    if (m.exp[last]) return false;
  return true;
}

}  // namespace

LinkedIdeal linked_ideal(const Ideal& CI, const Ideal& I) {
  Ideal gens(I.ring_ptr(), I.minimal_generators());
  const int top = top_standard_degree(CI);
  if (top >= 0) return {ideal_quotient_linear(CI, gens, top), "linear-artinian"};
  // Twists in the last step of a minimal resolution of S/I are at least
  // indeg(I) + c - 1, which bounds the generators of L : I when S/I is CM.
  // The result is accepted only with a certificate: it is contained in
  // L : I by construction, so equal multiplicity plus unmixedness of the
  // candidate force equality.
  const int c = height(CI);
  const auto& d = degrees_of(CI.generators());
  int sum = 0, top_d = 0;
  for (int x : d) sum += x, top_d = std::max(top_d, x);
  int indeg = gens.generators().front().degree();
  for (const auto& g : gens.generators()) indeg = std::min(indeg, g.degree());
  const int bound = std::max(top_d, sum - indeg - c + 1);
  if (static_cast<int>(I.ring().nvars()) - c == 1) {
    Ideal cand = ideal_quotient_linear(CI, gens, bound);
    if (!cand.is_unit() && height(cand) == c && last_variable_regular(cand) &&
        hilbert(cand).degree == hilbert(CI).degree - hilbert(I).degree)
      return {cand, "linear-certified"};
  }
  return {ideal_quotient(CI, gens), "elimination"};
}

RegularSequenceCert is_regular_sequence(const std::vector<Polynomial>& forms) {
  RegularSequenceCert cert;
  cert.forms = forms;
  cert.degrees = degrees_of(forms);
  if (forms.empty()) {
    cert.verified = true;
    return cert;
  }
  const RingPtr& ring = forms.front().ring_ptr();
  std::vector<Polynomial> prefix;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    prefix.push_back(forms[i]);
    bool ok = !forms[i].is_zero() && forms[i].degree() > 0;
    if (ok) {
      Ideal P(ring, prefix);
      ok = !P.is_unit() && height(P) == static_cast<int>(i + 1);
    }
    if (!ok) {
      cert.failed_at = i + 1;
      return cert;
    }
  }
  cert.verified = true;
  return cert;
}

std::vector<int> min_reg_seq_degrees(const Ideal& I) {
  const int c = height(I);
  // I_{<=d} only changes in degrees where the reduced basis has elements.
  std::vector<int> steps;
  for (const auto& g : I.groebner().elements) steps.push_back(g.degree());
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  std::vector<int> out;
  std::size_t k = 0;
  int h = 0;
  for (int i = 1; i <= c; ++i) {
    while (h < i && k < steps.size()) h = height(truncate(I, steps[k++]));
    out.push_back(steps[k - 1]);
  }
  return out;
}

std::optional<RegularSequenceCert> find_reg_seq(const Ideal& I, const std::vector<int>& degrees,
                                                std::uint64_t seed, int retries) {
  std::vector<std::vector<Polynomial>> bases;
  for (int d : degrees) {
    bases.push_back(graded_basis(I, d));
    if (bases.back().empty()) return std::nullopt;
  }
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<Polynomial> forms;
    for (std::size_t i = 0; i < bases.size(); ++i)
      forms.push_back(random_combination(I.ring_ptr(), bases[i], mix_seed(seed, attempt * 64 + i)));
    auto cert = is_regular_sequence(forms);
    if (cert.verified) return cert;
  }
  return std::nullopt;
}

long long complete_intersection_piece_dim(std::size_t nvars, const std::vector<int>& degrees, int t) {
  // HS(S/L) = Π(1 - t^{d_i}) / (1 - t)^n.
  std::vector<long long> num{1};
  for (int d : degrees) {
    std::vector<long long> next(num.size() + d, 0);
    for (std::size_t k = 0; k < num.size(); ++k) {
      next[k] += num[k];
      next[k + d] -= num[k];
    }
    num = std::move(next);
  }
  long long quotient = 0;
  for (std::size_t k = 0; k < num.size() && static_cast<int>(k) <= t; ++k)
    quotient += num[k] * count_monomials(nvars, t - static_cast<int>(k));
  return count_monomials(nvars, t) - quotient;
}

std::optional<DimensionObstruction> dimension_obstruction(const Ideal& I, const std::vector<int>& degrees,
                                                          int max_t) {
  if (degrees.empty()) return std::nullopt;
  const int top = *std::max_element(degrees.begin(), degrees.end());
  Ideal H = truncate(I, top);
  for (int t = 0; t <= max_t; ++t) {
    long long ci = complete_intersection_piece_dim(I.ring().nvars(), degrees, t);
    long long h = graded_piece_dim(H, t);
    if (ci > h) return DimensionObstruction{t, ci, h};
  }
  return std::nullopt;
}

DimensionObstruction dimension_count(const Ideal& I, const std::vector<int>& degrees, int t) {
  const int top = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
  return DimensionObstruction{t, complete_intersection_piece_dim(I.ring().nvars(), degrees, t),
                              graded_piece_dim(truncate(I, top), t)};
}

LinkStep link(const Ideal& I, const RegularSequenceCert& L, bool check_back) {
  using K = LinkError::Kind;
  if (!L.verified) throw LinkError(K::NotRegular, "sequence is not a verified regular sequence");
  Ideal CI(I.ring_ptr(), L.forms);
  for (std::size_t i = 0; i < L.forms.size(); ++i)
    if (!I.contains(L.forms[i]))
      throw LinkError(K::NotContained, "form " + std::to_string(i + 1) + " is not in the ideal: " +
                                           L.forms[i].to_string());
  const int h = height(I);
  if (static_cast<int>(L.forms.size()) != h)
    throw LinkError(K::HeightMismatch, "sequence has length " + std::to_string(L.forms.size()) +
                                           " but the ideal has height " + std::to_string(h));
  if (CI == I) throw LinkError(K::Degenerate, "the ideal is the complete intersection itself");
  auto forward = linked_ideal(CI, I);
  LinkStep step{I, L, forward.ideal, min_reg_seq_degrees(I), false, false, forward.method};
  step.minimal = sorted(L.degrees) == step.min_degrees;
  if (check_back) {
    if (step.target.is_unit() || linked_ideal(CI, step.target).ideal != I)
      throw LinkError(K::BackCheck, "L : (L : I) differs from I");
    step.back_verified = true;
  }
  return step;
}

bool is_complete_intersection(const Ideal& I) {
  if (I.is_unit()) return false;
  const auto& mins = I.minimal_generators();
  if (static_cast<int>(mins.size()) != height(I)) return false;
  return is_regular_sequence(mins).verified;
}

StandardForm standard_form(const Ideal& I) {
  if (!I.is_monomial()) throw std::invalid_argument("standard form needs a monomial ideal");
  const std::size_t n = I.ring().nvars();
  StandardForm sf;
  sf.powers.assign(n, 0);
  for (const auto& m : minimalize_monomials(I.leading_monomials())) {
    int support = 0;
    std::size_t var = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (m.exp[v]) {
        ++support;
        var = v;
      }
    if (support == 1)
      sf.powers[var] = m.exp[var];
    else
      sf.sharp.push_back(m);
  }
  for (std::size_t v = 0; v < n; ++v)
    if (sf.powers[v] == 0) throw std::invalid_argument("ideal is not primary to the maximal ideal");
  return sf;
}

DoubleLink monomial_double_link(const Ideal& I) {
  StandardForm sf = standard_form(I);
  if (sf.sharp.empty()) throw std::invalid_argument("I# is zero");
  Monomial g = monomial_gcd(sf.sharp);
  if (g.is_one()) throw std::invalid_argument("I# has trivial gcd");
  if (sf.sharp.size() == 1) throw std::invalid_argument("I# is principal, so K is the unit ideal");
  const RingPtr& ring = I.ring_ptr();
  DoubleLink out{Ideal::zero(ring), {}, {}, g};
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    out.first.push_back(power(ring, v, sf.powers[v]));
    out.second.push_back(power(ring, v, sf.powers[v] - g.exp[v]));
  }
  std::vector<Monomial> mons;
  for (const auto& p : out.second) mons.push_back(p.lead_monomial());
  for (const auto& m : sf.sharp) mons.push_back(m / g);
  for (const auto& m : minimalize_monomials(mons)) gens.push_back(Polynomial::monomial(ring, m, ring->field().one()));
  out.result = Ideal(ring, std::move(gens));
  return out;
}

std::string to_string(LicciVerdict v) {
  switch (v) {
    case LicciVerdict::ReducedToCI: return "reduced-to-CI";
    case LicciVerdict::NotLicci: return "not-licci";
    case LicciVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

LicciScan monomial_licci_scan(const Ideal& start) {
  if (!start.is_monomial()) throw std::invalid_argument("licci scan needs a monomial ideal");
  LicciScan scan;
  Ideal I = start;
  const RingPtr& ring = start.ring_ptr();
  for (;;) {
    scan.trace.push_back(I);
    StandardForm sf = standard_form(I);
    scan.fixpoint_sharp = sf.sharp;
    if (sf.sharp.empty()) {
      scan.sharp_height = 0;
      scan.verdict = LicciVerdict::ReducedToCI;
      return scan;
    }
    Monomial g = monomial_gcd(sf.sharp);
    scan.sharp_height = static_cast<int>(ring->nvars()) - monomial_krull_dim(sf.sharp, ring->nvars());
    if (sf.sharp.size() == 1) {
      // (x_i^{a_i}) : m = (x_i^{a_i - b_i}), a complete intersection.
      std::vector<Polynomial> powers;
      for (std::size_t v = 0; v < ring->nvars(); ++v) powers.push_back(power(ring, v, sf.powers[v] - g.exp[v]));
      scan.trace.push_back(Ideal(ring, std::move(powers)));
      scan.verdict = LicciVerdict::ReducedToCI;
      scan.note = "I# is principal; one link by the pure powers reaches a complete intersection";
      return scan;
    }
    if (g.is_one()) {
      if (scan.sharp_height >= 2) {
        scan.verdict = LicciVerdict::NotLicci;
        return scan;
      }
      throw std::logic_error("height-one I# with trivial gcd");
    }
    I = monomial_double_link(I).result;
  }
}

SocleCheck socle_degree_bound_check(const Ideal& I, const std::vector<int>& degrees) {
  if (!is_cohen_macaulay(I)) throw std::invalid_argument("S/I is not Cohen-Macaulay");
  const int c = height(I);
  BettiTable b = betti_table(I);
  SocleCheck out;
  out.sum = std::accumulate(degrees.begin(), degrees.end(), 0);
  out.bound = b.max_degree(c - 1);
  bool ci_of_these_degrees =
      static_cast<int>(degrees.size()) == c && is_complete_intersection(I) &&
      sorted(degrees_of(I.minimal_generators())) == sorted(degrees);
  out.strict = !ci_of_these_degrees;
  out.passes = out.strict ? out.sum > out.bound : out.sum >= out.bound;
  return out;
}

bool betti_symmetric(const BettiTable& b, int height) {
  // Quotient table: index q = i + 1, plus b_{0,0} = 1.
  auto q = [&](int i, int j) -> long long {
    if (i == 0) return j == 0 ? 1 : 0;
    return b.get(i - 1, j);
  };
  if (b.length() + 1 != height || b.rank(height - 1) != 1) return false;
  const int s = b.max_degree(height - 1);
  for (int i = 0; i <= height; ++i)
    for (int j = 0; j <= s; ++j)
      if (q(i, j) != q(height - i, s - j)) return false;
  return true;
}

void check_params(const Thm32Params& p) {
  if (!(4 <= p.a1 + 3)) throw std::invalid_argument("need 4 <= a1 + 3");
  if (!(p.a1 + 3 <= p.a2)) throw std::invalid_argument("need a1 + 3 <= a2");
  if (!(p.a2 < p.a3)) throw std::invalid_argument("need a2 < a3");
  if (!(p.a3 < p.a4)) throw std::invalid_argument("need a3 < a4");
  if (p.a1 == 2) throw std::invalid_argument("need a1 != 2");
  if (!(p.a2 + p.a3 <= std::min(2, p.a1) + p.a4)) throw std::invalid_argument("need a2 + a3 <= min(2, a1) + a4");
}

namespace {

// Every choice of four of the linear forms is linearly independent.
bool four_wise_independent(const RingPtr& ring, const std::vector<Polynomial>& forms) {
  const std::size_t n = ring->nvars();
  const Field& F = ring->field();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& f : forms) {
    std::vector<Scalar> row(n, F.zero());
    for (const auto& t : f.terms())
      for (std::size_t v = 0; v < n; ++v)
        if (t.mono.exp[v]) row[v] = t.coeff;
    rows.push_back(std::move(row));
  }
  const std::size_t m = rows.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c)
        for (std::size_t d = c + 1; d < m; ++d) {
          Matrix M;
          M.rows = 4;
          M.cols = n;
          for (auto r : {a, b, c, d}) M.data.insert(M.data.end(), rows[r].begin(), rows[r].end());
          if (matrix_rank(F, M) != 4) return false;
        }
  return true;
}

Polynomial product(const RingPtr& ring, const std::vector<Polynomial>& fs) {
  Polynomial acc = Polynomial::constant(ring, 1);
  for (const auto& f : fs) acc *= f;
  return acc;
}

}  // namespace

Thm32Instance construct_thm32(const RingPtr& ring, const Thm32Params& p, int retries) {
  check_params(p);
  if (ring->nvars() < 4) throw std::invalid_argument("the construction needs at least four variables");
  if (!ring->field().is_prime_field()) throw std::invalid_argument("the construction draws over a prime field");
  const Polynomial x0 = Polynomial::variable(ring, 0);
  for (int draw = 0; draw < retries; ++draw) {
    std::uint64_t s = mix_seed(p.seed, draw);
    std::uint64_t k = 0;
    auto next = [&](int deg) { return random_form(ring, deg, mix_seed(s, ++k)); };
    Polynomial L1 = next(1), L2 = next(1);
    Polynomial F1(ring), F2(ring), F3(ring), F4(ring);
    if (p.a1 == 1) {
      std::vector<Polynomial> ls, ms, ns;
      for (int i = 2; i <= p.a2; ++i) ls.push_back(next(1));
      for (int i = 2; i <= p.a3; ++i) ms.push_back(next(1));
      for (int i = 1; i <= p.a4; ++i) ns.push_back(next(1));
      std::vector<Polynomial> all{x0, L1, L2};
      for (const auto* v : {&ls, &ms, &ns}) all.insert(all.end(), v->begin(), v->end());
      if (!four_wise_independent(ring, all)) continue;
      F1 = x0;
      F2 = x0 * product(ring, ls);
      F3 = L1 * product(ring, ms);
      F4 = product(ring, ns);
    } else {
      F1 = next(p.a1);
      F4 = next(p.a4);
      if (!is_regular_sequence({L1, F1, F4}).verified) continue;
      Ideal I1(ring, {L1, F1, F4});
      F2 = random_combination(ring, graded_basis(I1, p.a2), mix_seed(s, ++k));
      F3 = random_combination(ring, graded_basis(I1, p.a3), mix_seed(s, ++k));
    }
    if (!is_regular_sequence({L1, F1, F4}).verified) continue;
    if (!is_regular_sequence({F2, F3}).verified || !is_regular_sequence({L1, F2}).verified) continue;
    if (!is_regular_sequence({L2, F2, F3}).verified) continue;
    Ideal I1(ring, {L1, F1, F4});
    Ideal I(ring, {L2 * L1, L2 * F1, L2 * F4, F2, F3});
    return Thm32Instance{p, L1, L2, F1, F2, F3, F4, I1, I, draw + 1};
  }
  throw std::runtime_error("no generic choice found after " + std::to_string(retries) + " draws");
}

BettiTable star_table(const Thm32Params& p) {
  const int a1 = p.a1, a2 = p.a2, a3 = p.a3, a4 = p.a4;
  return table_from_shape({{2, a1 + 1, a4 + 1, a2, a3},
                           {a1 + 2, a4 + 2, a1 + a4 + 1, a2 + a3, a2 + 1, a3 + 1},
                           {a1 + a4 + 2, a2 + a3 + 1}});
}

StarCheck star_condition_check(const Ideal& I, const Thm32Params& p, std::uint64_t seed) {
  StarCheck out;
  out.height_ok = !I.is_unit() && height(I) == 3;
  if (!out.height_ok) return out;
  out.sequence = find_reg_seq(I, {2, p.a2, p.a4 + 1}, seed);
  out.betti = betti_table(I);
  out.shape_ok = reachable_by_cancellation(star_table(p), out.betti);
  return out;
}

std::vector<LinkStep> thm32_double_link(const Thm32Instance& inst, std::uint64_t seed, int retries) {
  const RingPtr& ring = inst.I.ring_ptr();
  for (int g = 1; g <= inst.params.a4; ++g) {
    auto basis = graded_basis(inst.I1, g);
    if (basis.empty()) continue;
    // Below a_4 a generic element already fails, so one more draw suffices.
    const int tries = g < inst.params.a4 ? 2 : retries;
    for (int draw = 0; draw < tries; ++draw) {
      Polynomial G = random_combination(ring, basis, mix_seed(seed, g * 1000 + draw));
      auto inner = is_regular_sequence({G, inst.F2, inst.F3});
      if (!inner.verified) continue;
      auto outer = is_regular_sequence({G * inst.L2, inst.F2, inst.F3});
      if (!outer.verified) continue;
      LinkStep first = link(inst.I, outer, true);
      LinkStep second = link(first.target, inner, true);
      return {first, second};
    }
  }
  throw std::runtime_error("no form G in I1 gives a regular sequence with F2, F3");
}

HypersurfaceSection hypersurface_section(const Ideal& I, const std::vector<LinkStep>& chain, int D,
                                         std::uint64_t seed, int retries) {
  const int c = height(I);
  const int reg = regularity(betti_table(I));
  if (D < c * reg)
    throw std::invalid_argument("degree " + std::to_string(D) + " is below height * reg = " +
                                std::to_string(c * reg));
  std::vector<Ideal> stages{I};
  for (const auto& s : chain) stages.push_back(s.target);
  for (int draw = 0; draw < retries; ++draw) {
    Polynomial F = random_form(I.ring_ptr(), D, mix_seed(seed, draw));
    bool regular = true;
    for (const auto& K : stages)
      if (!raises_height(K, F)) {
        regular = false;
        break;
      }
    if (!regular) continue;
    HypersurfaceSection out{F, with_form(I, F), {}, draw + 1};
    Ideal cur = out.ideal;
    for (const auto& s : chain) {
      auto forms = s.sequence.forms;
      forms.push_back(F);
      auto cert = is_regular_sequence(forms);
      LinkStep lifted = link(cur, cert, true);
      if (lifted.target != with_form(s.target, F))
        throw std::runtime_error("lifted link does not match (J, F)");
      cur = lifted.target;
      out.lifted.push_back(std::move(lifted));
    }
    return out;
  }
  throw std::runtime_error("no form of degree " + std::to_string(D) + " was regular on the chain");
}

}  // namespace homlink
