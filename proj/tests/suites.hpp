#pragma once
// Randomized property suites shared by the unit tests and the acceptance
// binary. Each returns how many instances ran and how many disagreed with
// the reference.

#include <fstream>
#include <sstream>

#include "homlink/idealops.hpp"
#include "homlink/liaison.hpp"
#include "homlink/resolution.hpp"
#include "homlink/script.hpp"
#include "oracle.hpp"

namespace suites {

using namespace homlink;

struct Outcome {
  int instances = 0;
  int discrepancies = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++instances;
    if (ok) return;
    if (discrepancies++ == 0) first_failure = what;
  }
  bool clean() const { return discrepancies == 0; }
};

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(HOMLINK_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Polynomial one_term(const RingPtr& R, const Monomial& m) { return Polynomial::monomial(R, m, R->field().one()); }

// L : f for monomial L and f.
inline Ideal monomial_colon(const Ideal& L, const Monomial& m) {
  std::vector<Polynomial> gens;
  for (const auto& g : L.generators()) gens.push_back(one_term(L.ring_ptr(), g.lead_monomial() / gcd(g.lead_monomial(), m)));
  return Ideal(L.ring_ptr(), gens);
}

// L : I for monomial ideals, as the intersection of L : m over generators m of I.
inline Ideal monomial_link(const Ideal& L, const Ideal& I) {
  std::optional<Ideal> out;
  for (const auto& g : I.generators()) {
    Ideal c = monomial_colon(L, g.lead_monomial());
    out = out ? ideal_intersection(*out, c) : c;
  }
  return *out;
}

inline Monomial random_monomial(std::size_t n, int deg, std::mt19937_64& rng) {
  std::vector<int> e(n, 0);
  for (int j = 0; j < deg; ++j) e[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)]++;
  return Monomial::from_exponents(e);
}

// Principal and ideal colons: intersection route, syzygy route, degree-wise
// linear algebra, and the monomial formula transported by a linear change
// of coordinates.
inline Outcome colon_cross_check(std::uint64_t seed, int count) {
  auto R = oracle::qq_ring();
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int k = 0; k < count; ++k) {
    Ideal M = oracle::random_artinian_monomial(R, rng);
    Monomial m = random_monomial(3, 1 + static_cast<int>(rng() % 4), rng);
    Ideal expected = monomial_colon(M, m);
    auto change = oracle::random_triangular_change(R, rng);
    Ideal I = oracle::substitute(M, change);
    auto f = oracle::substitute(one_term(R, m), change);
    Ideal a = ideal_quotient(I, f), b = ideal_quotient_by_syzygies(I, f);
    Ideal c = ideal_quotient_linear(I, Ideal(R, {f}), top_standard_degree(I));
    bool ok = ideal_quotient(M, one_term(R, m)) == expected && a == b && a == c &&
              a == oracle::substitute(expected, change);
    for (const auto& h : a.generators()) ok = ok && oracle::member(I, h * f);
    out.record(ok, I.to_string() + " : " + f.to_string());
  }
  return out;
}

// Hilbert function of S/I in degrees 0..10 against Macaulay matrix ranks.
inline Outcome hilbert_oracle(std::uint64_t seed, int count) {
  auto R = oracle::qq_ring();
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int k = 0; k < count; ++k) {
    Ideal M = oracle::random_artinian_monomial(R, rng);
    if (k % 3 == 0) {
      // Drop the pure power of z to get a one-dimensional quotient.
      std::vector<Polynomial> gens(M.generators().begin(), M.generators().end());
      gens.erase(gens.begin() + 2);
      M = Ideal(R, gens);
    }
    Ideal I = k % 2 ? M : oracle::substitute(M, oracle::random_triangular_change(R, rng));
    auto H = hilbert(I, 10);
    bool ok = H.values.size() == 11;
    for (int d = 0; ok && d <= 10; ++d) ok = H.values[d] == oracle::hilbert_value(I, d);
    out.record(ok, I.to_string());
  }
  return out;
}

// L : (L : I) = I on the twelve links of the fixture chains and on random
// monomial m-primary ideals (CM) linked by pure powers, half of them
// moved by a linear change of coordinates.
inline Outcome link_involution(std::uint64_t seed, int count) {
  Outcome out;
  for (const char* name : {"ex2.3.chain", "thm2.4.chain"}) {
    ChainScript s = parse_chain_script(read_fixture(name));
    Ideal current = s.ideal;
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
      Ideal L(s.ring, s.steps[i].forms);
      Ideal J = ideal_quotient(L, current);
      out.record(J == *s.steps[i].expect && ideal_quotient(L, J) == current,
                 std::string(name) + " step " + std::to_string(i + 1));
      current = J;
    }
  }
  auto R = oracle::qq_ring();
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    Ideal I = oracle::random_artinian_monomial(R, rng);
    auto sf = standard_form(I);
    std::vector<Polynomial> seq;
    for (std::size_t v = 0; v < 3; ++v) {
      std::vector<int> e(3, 0);
      e[v] = sf.powers[v] + static_cast<int>(rng() % 3);
      seq.push_back(oracle::monomial(R, e));
    }
    Ideal L(R, seq);
    if (L == I) {
      seq[0] = seq[0] * Polynomial::variable(R, 0);
      L = Ideal(R, seq);
    }
    Ideal J_ref = monomial_link(L, I);
    bool ok = monomial_link(L, J_ref) == I;
    if (k % 2) {
      auto change = oracle::random_triangular_change(R, rng);
      I = oracle::substitute(I, change);
      for (auto& f : seq) f = oracle::substitute(f, change);
      J_ref = oracle::substitute(J_ref, change);
    }
    try {
      LinkStep st = link(I, is_regular_sequence(seq), true);
      ok = ok && st.back_verified && st.target == J_ref && ideal_quotient(Ideal(R, seq), st.target) == I;
    } catch (const std::exception& e) {
      ok = false;
    }
    out.record(ok, I.to_string());
  }
  return out;
}

// The double link cancelling the gcd of I^# against two explicit links and
// against the closed form (x_i^{a_i - b_i}) + I^#/gcd.
inline Outcome double_link_equivalence(std::uint64_t seed, int count) {
  auto R = oracle::qq_ring();
  std::mt19937_64 rng(seed);
  Outcome out;
  int attempts = 0;
  while (out.instances < count && ++attempts < 50 * count) {
    // Sharp part with a common factor, pure powers beyond it.
    Monomial g = random_monomial(3, 1 + static_cast<int>(rng() % 2), rng);
    std::vector<Polynomial> gens;
    for (int i = 0, k = 2 + static_cast<int>(rng() % 3); i < k; ++i)
      gens.push_back(one_term(R, g * random_monomial(3, 1 + static_cast<int>(rng() % 3), rng)));
    for (std::size_t v = 0; v < 3; ++v) {
      std::vector<int> e(3, 0);
      e[v] = 2 + static_cast<int>(rng() % 5);
      gens.push_back(oracle::monomial(R, e));
    }
    Ideal I(R, gens);
    if (krull_dim(I) != 0) continue;
    std::optional<DoubleLink> D;
    try {
      D = monomial_double_link(I);
    } catch (const std::invalid_argument&) {
      continue;
    }
    auto sf = standard_form(I);
    Monomial h = monomial_gcd(sf.sharp);
    std::vector<Polynomial> closed;
    for (std::size_t v = 0; v < 3; ++v) {
      std::vector<int> e(3, 0);
      e[v] = sf.powers[v] - h.exp[v];
      closed.push_back(oracle::monomial(R, e));
    }
    for (const auto& m : sf.sharp) closed.push_back(one_term(R, m / h));
    bool ok = D->gcd == h && D->result == Ideal(R, closed);
    try {
      LinkStep a = link(I, is_regular_sequence(D->first), true);
      LinkStep b = link(a.target, is_regular_sequence(D->second), true);
      ok = ok && b.target == D->result;
    } catch (const std::exception&) {
      ok = false;
    }
    out.record(ok, I.to_string());
  }
  return out;
}

// Σ d_i against the last twist of the resolution of a CM ideal, for every
// verified regular sequence tried: pure powers when I is monomial and
// m-primary, and the minimal-degree sequence found by find_reg_seq.
// Strict inequality is required unless I is a complete intersection.
inline void socle_bound_on(const Ideal& I, std::uint64_t seed, Outcome& out) {
  const int c = height(I);
  BettiTable b = betti_table(I);
  const int last = b.max_degree(c - 1);
  const bool ci = is_complete_intersection(I);
  std::vector<RegularSequenceCert> seqs;
  if (I.is_monomial() && krull_dim(I) == 0) {
    std::vector<Polynomial> pp;
    for (std::size_t v = 0; v < I.ring().nvars(); ++v) {
      std::vector<int> e(I.ring().nvars(), 0);
      e[v] = standard_form(I).powers[v];
      pp.push_back(oracle::monomial(I.ring_ptr(), e));
    }
    seqs.push_back(is_regular_sequence(pp));
  }
  if (auto found = find_reg_seq(I, min_reg_seq_degrees(I), seed)) seqs.push_back(*found);
  // For m-primary I the last twist is the socle degree plus n.
  if (krull_dim(I) == 0) {
    int top = 0;
    for (int d = 0; oracle::hilbert_value(I, d) != 0; ++d) top = d;
    out.record(last == top + static_cast<int>(I.ring().nvars()), "last twist " + I.to_string());
  }
  for (const auto& s : seqs) {
    if (!s.verified) {
      out.record(false, "unverified sequence " + I.to_string());
      continue;
    }
    int sum = 0;
    for (int d : s.degrees) sum += d;
    SocleCheck chk = socle_degree_bound_check(I, s.degrees);
    bool ok = chk.bound == last && chk.sum == sum && (ci ? sum >= last : sum > last) && chk.passes;
    out.record(ok, I.to_string());
  }
}

inline Outcome socle_bound(std::uint64_t seed, int count, const std::vector<Ideal>& extra = {}) {
  Outcome out;
  auto R = oracle::qq_ring();
  for (const char* g : {oracle::kNonLicci, oracle::kMinimalChain, oracle::kNonMinimalChain}) socle_bound_on(oracle::ideal(R, g), seed, out);
  for (const char* name : {"ex2.3.chain", "thm2.4.chain"}) {
    ChainScript s = parse_chain_script(read_fixture(name));
    for (const auto& st : s.steps) socle_bound_on(*st.expect, seed, out);
  }
  for (const auto& I : extra) socle_bound_on(I, seed, out);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) socle_bound_on(oracle::random_artinian_monomial(R, rng, 6), seed + k, out);
  return out;
}

}  // namespace suites
