// One line per acceptance criterion: "AC<n> PASS|FAIL <title> (<seconds>s) <detail>".
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "suites.hpp"

using namespace homlink;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (!ok) notes << "; ";
    notes << what;
    ok = false;
  }
};

std::string joined(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

RingPtr gf_ring() { return make_ring({"x0", "x1", "x2", "x3"}, Field::prime(32003)); }

const std::vector<std::vector<int>> kNonLicciShape{{3, 3, 4, 4, 6, 6, 6}, {5, 5, 5, 7, 7, 7, 7, 7, 8, 8}, {8, 8, 9, 9}};
const std::vector<std::vector<int>> kMinimalChainShape{{3, 3, 4, 4, 6, 6, 6}, {5, 5, 5, 7, 7, 7, 7, 7, 8}, {8, 9, 9}};

// The construction is shared by criteria 5, 6, 7 and 9.
const Thm32Instance& n28() {
  static const Thm32Instance inst = construct_thm32(gf_ring(), Thm32Params{1, 4, 5, 8, 7});
  return inst;
}

void ex22(Check& c) {
  auto R = oracle::qq_ring();
  Ideal I = oracle::ideal(R, oracle::kNonLicci);
  auto H = hilbert(I);
  c.require(H.h_vector == std::vector<long long>{1, 3, 6, 8, 7, 6, 2}, "h-vector");
  BettiTable b = betti_table(I);
  BettiTable expected;
  for (auto [i, j, v] : std::vector<std::tuple<int, int, int>>{
           {0, 3, 2}, {0, 4, 2}, {0, 6, 3}, {1, 5, 3}, {1, 7, 5}, {1, 8, 2}, {2, 8, 2}, {2, 9, 2}})
    expected.set(i, j, v);
  c.require(b == expected, "Betti table");
  c.require(b == table_from_shape(kNonLicciShape), "Betti table against the displayed resolution");
  auto scan = monomial_licci_scan(I);
  c.require(scan.verdict == LicciVerdict::NotLicci, "scan verdict " + to_string(scan.verdict));
  std::vector<Polynomial> sharp;
  for (const auto& m : scan.fixpoint_sharp) sharp.push_back(suites::one_term(R, m));
  c.require(Ideal(R, sharp) == oracle::ideal(R, "x*z, y^4*z, x*y^4"), "fixpoint sharp part");
  c.require(scan.sharp_height == 2 && height(Ideal(R, sharp)) == 2, "sharp height");
}

void ex23(Check& c) {
  ChainScript s = parse_chain_script(suites::read_fixture("ex2.3.chain"));
  auto rep = chain_verify(s);
  c.require(rep.complete && rep.steps.size() == 6, "replay: " + rep.failure);
  for (std::size_t i = 0; i < rep.steps.size(); ++i) {
    c.require(rep.steps[i].expect_matched == std::optional<bool>(true), "step " + std::to_string(i + 1) + " ideal");
    c.require(rep.steps[i].step.minimal, "step " + std::to_string(i + 1) + " minimal");
  }
  c.require(!rep.steps.empty() && rep.steps.back().step.target == oracle::ideal(s.ring, "y, z, x^3"), "terminal");
  c.require(rep.minimally_licci(), "minimally licci");
  BettiTable b = betti_table(s.ideal);
  c.require(b == table_from_shape(kMinimalChainShape) && b.get(2, 8) == 1 && b.get(2, 9) == 2, "Betti table");
}

void thm24(Check& c) {
  ChainScript s = parse_chain_script(suites::read_fixture("thm2.4.chain"));
  const Ideal& I = s.ideal;
  c.require(min_reg_seq_degrees(I) == std::vector<int>{3, 3, 6}, "min degrees " + joined(min_reg_seq_degrees(I)));
  auto rep = chain_verify(s);
  c.require(rep.complete && rep.steps.size() == 6, "replay: " + rep.failure);
  for (std::size_t i = 0; i < rep.steps.size(); ++i)
    c.require(rep.steps[i].expect_matched == std::optional<bool>(true), "step " + std::to_string(i + 1) + " ideal");
  c.require(rep.terminal_is_ci && rep.steps.back().step.target == oracle::ideal(s.ring, "z, y, x^3"), "terminal CI");
  c.require(!rep.steps[0].step.minimal && rep.steps[0].step.sequence.degrees == std::vector<int>{3, 4, 6},
            "step 1 flagged non-minimal with degrees (3,4,6)");
  for (std::uint64_t seed : {1, 2, 3}) c.require(!find_reg_seq(I, {3, 3, 4}, seed), "found a (3,3,4) sequence");
  // Dimension count in degree 7.
  BettiTable b = betti_table(I);
  long long bound = 0;
  for (int j = 0; j <= 4; ++j) bound += b.get(0, j) * count_monomials(3, 7 - j);
  for (int j = 0; j <= 5; ++j) bound -= b.get(1, j) * count_monomials(3, 7 - j);
  auto dc = dimension_count(I, {3, 3, 4}, 7);
  c.require(dc.ci_dim == 35, "complete intersection piece " + std::to_string(dc.ci_dim));
  c.require(bound == 32, "bound from the resolution " + std::to_string(bound));
  c.require(dc.ideal_dim == graded_piece_dim(truncate(I, 4), 7) && dc.ideal_dim <= bound && bound < dc.ci_dim,
            "graded_piece_dim " + std::to_string(dc.ideal_dim));
}

void indistinguishable(Check& c) {
  auto R = oracle::qq_ring();
  Ideal a = oracle::ideal(R, oracle::kNonLicci), b = oracle::ideal(R, oracle::kMinimalChain), d = oracle::ideal(R, oracle::kNonMinimalChain);
  c.require(betti_table(b) == betti_table(d), "Betti tables of 2.3 and 2.4 differ");
  c.require(hilbert(a).h_vector == hilbert(b).h_vector, "h-vectors of 2.2 and 2.3 differ");
  c.require(betti_table(a) != betti_table(b), "Betti tables of 2.2 and 2.3 agree");
  c.require(betti_table(a).get(2, 8) == 2 && betti_table(b).get(2, 8) == 1, "b_{2,8}");
}

struct Invariants {
  int height;
  long long degree;
  std::vector<int> min_degrees;
  BettiTable betti;
  bool operator==(const Invariants&) const = default;
};

Invariants invariants(const Ideal& I) { return {height(I), hilbert(I).degree, min_reg_seq_degrees(I), betti_table(I)}; }

void cor33(Check& c) {
  const auto& inst = n28();
  Thm32Params p = inst.params;
  Invariants inv = invariants(inst.I);
  c.require(inv.height == 3, "height");
  c.require(inv.degree == 28, "degree " + std::to_string(inv.degree));
  c.require(inv.min_degrees == std::vector<int>{2, 4, 9}, "min degrees " + joined(inv.min_degrees));
  c.require(is_cohen_macaulay(inst.I), "Cohen-Macaulay");
  c.require(star_condition_check(inst.I, p, 7).holds(), "condition (star)");
  auto dl = thm32_double_link(inst, 7);
  c.require(dl.size() == 2 && dl[0].back_verified && dl[1].back_verified, "double link verified both ways");
  c.require(!dl.empty() && dl.back().target == inst.I1, "double link reaches I1");
  auto n29 = construct_thm32(gf_ring(), Thm32Params{1, 4, 5, 9, 7});
  c.require(hilbert(n29.I).degree == 29, "(1,4,5,9) degree " + std::to_string(hilbert(n29.I).degree));
  for (std::uint64_t seed : {11, 23, 101}) {
    p.seed = seed;
    c.require(invariants(construct_thm32(gf_ring(), p).I) == inv, "seed " + std::to_string(seed) + " invariants");
  }
}

void star_propagation(Check& c) {
  const auto& inst = n28();
  auto minimal_link = [&](const Ideal& I, std::uint64_t seed) {
    auto seq = find_reg_seq(I, min_reg_seq_degrees(I), seed);
    if (!seq) throw std::runtime_error("no minimal regular sequence");
    return link(I, *seq, true);
  };
  LinkStep first = minimal_link(inst.I, 21);
  LinkStep second = minimal_link(first.target, 22);
  c.require(first.minimal && second.minimal, "links minimal");
  c.require(first.back_verified && second.back_verified, "links verified");
  c.require(star_condition_check(second.target, inst.params, 23).holds(), "condition (star) after two links");
  const Ideal& J = first.target;
  c.require(graded_piece_dim(J, 1) == 0, "J contains a linear form");
  c.require(!betti_symmetric(betti_table(J), 3), "Betti table of J symmetric");
}

void socle(Check& c) {
  auto out = suites::socle_bound(31, 50, {n28().I});
  c.require(out.instances >= 100, "instances " + std::to_string(out.instances));
  c.require(out.clean(), std::to_string(out.discrepancies) + " violations, first " + out.first_failure);
}

void oracle_suites(Check& c) {
  struct Named {
    const char* name;
    suites::Outcome out;
  };
  for (const auto& [name, out] : {Named{"colon", suites::colon_cross_check(101, 60)},
                                  Named{"hilbert", suites::hilbert_oracle(102, 60)},
                                  Named{"involution", suites::link_involution(103, 50)},
                                  Named{"double link", suites::double_link_equivalence(104, 50)}}) {
    c.require(out.instances >= 50, std::string(name) + " ran " + std::to_string(out.instances));
    c.require(out.clean(), std::string(name) + ": " + std::to_string(out.discrepancies) + " discrepancies, first " +
                               out.first_failure);
  }
}

void section(Check& c) {
  const auto& inst = n28();
  auto chain = thm32_double_link(inst, 7);
  const int D = height(inst.I) * regularity(betti_table(inst.I));
  auto hs = hypersurface_section(inst.I, chain, D, mix_seed(7, 0x5ec));
  c.require(D == 24, "D = " + std::to_string(D));
  c.require(height(hs.ideal) == 4, "height of (I,F)");
  c.require(hs.lifted.size() == 2, "lifted steps");
  Ideal current = hs.ideal;
  for (std::size_t i = 0; i < hs.lifted.size(); ++i) {
    // Replay each lifted step from its certified sequence.
    const auto& st = hs.lifted[i];
    LinkStep again = link(current, is_regular_sequence(st.sequence.forms), true);
    c.require(st.back_verified && again.back_verified && again.target == st.target,
              "lifted step " + std::to_string(i + 1));
    current = again.target;
  }
  auto md = min_reg_seq_degrees(hs.ideal);
  c.require(md == std::vector<int>{2, 4, 9, D}, "min degrees " + joined(md));
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"non-licci monomial ideal", ex22},
      {"minimal chain to a complete intersection", ex23},
      {"licci chain with a forced non-minimal link", thm24},
      {"Hilbert/Betti indistinguishability", indistinguishable},
      {"degree-28 construction, double link, degree 29, seeds", cor33},
      {"condition (star) after two minimal links", star_propagation},
      {"regular sequence degrees against the last twist", socle},
      {"oracle suites", oracle_suites},
      {"hypersurface section lift", section},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!c.ok) ++failed;
    std::printf("AC%zu %s %s (%.1fs)%s%s\n", k + 1, c.ok ? "PASS" : "FAIL", criteria[k].first, secs,
                c.ok ? "" : " ", c.notes.str().c_str());
    std::fflush(stdout);
  }
  return failed;
}
