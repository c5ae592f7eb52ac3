#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homlink/ideal.hpp"
#include "homlink/resolution.hpp"

namespace homlink {

/// Forms f_1..f_c with height((f_1..f_i)) = i for every prefix.
struct RegularSequenceCert {
  std::vector<Polynomial> forms;
  std::vector<int> degrees;
  bool verified = false;
  /// 1-based index of the first prefix whose height did not go up; 0 if none.
  std::size_t failed_at = 0;
};

RegularSequenceCert is_regular_sequence(const std::vector<Polynomial>& forms);

/// d_i = min{d : height(I_{≤d}) ≥ i}, i = 1..height(I).
std::vector<int> min_reg_seq_degrees(const Ideal& I);

/// Random combinations of bases of I_{d_i}, re-drawn up to `retries` times
/// until they form a regular sequence. Deterministic in the seed.
std::optional<RegularSequenceCert> find_reg_seq(const Ideal& I, const std::vector<int>& degrees,
                                                std::uint64_t seed, int retries = 20);

/// dim_k of the degree-t piece of a complete intersection of the given
/// degrees in n variables.
long long complete_intersection_piece_dim(std::size_t nvars, const std::vector<int>& degrees, int t);

/// Certificate that I_{≤max d} has no complete intersection of the given
/// degrees: some degree t where the complete intersection would be larger.
struct DimensionObstruction {
  int degree = 0;
  long long ci_dim = 0;
  long long ideal_dim = 0;
};
std::optional<DimensionObstruction> dimension_obstruction(const Ideal& I, const std::vector<int>& degrees,
                                                          int max_t);
/// Both dimensions in degree t; an obstruction when ci_dim > ideal_dim.
DimensionObstruction dimension_count(const Ideal& I, const std::vector<int>& degrees, int t);

class LinkError : public std::runtime_error {
 public:
  enum class Kind { NotRegular, NotContained, HeightMismatch, Degenerate, BackCheck };
  LinkError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct LinkStep {
  Ideal source;
  RegularSequenceCert sequence;
  Ideal target;
  std::vector<int> min_degrees;
  bool minimal = false;
  /// L : target == source was checked and holds.
  bool back_verified = false;
  /// How L : I was computed (see linked_ideal).
  std::string method;
};

struct LinkedIdeal {
  Ideal ideal;
  std::string method;
};

/// L : I for a complete intersection L inside I of the same height.
/// Artinian S/L: linear algebra up to the top degree of S/L
/// ("linear-artinian"). One-dimensional S/I: linear algebra up to the
/// degree bound valid for CM ideals, accepted when the candidate has the
/// multiplicity e(S/L) - e(S/I) and positive depth ("linear-certified").
/// Otherwise the elimination-based ideal_quotient ("elimination").
LinkedIdeal linked_ideal(const Ideal& CI, const Ideal& I);

/// J = L : I. Throws LinkError when L is not a verified regular sequence
/// inside I of the same height, when L = I, or when the back-check fails.
LinkStep link(const Ideal& I, const RegularSequenceCert& L, bool check_back = true);

/// Minimal generators form a regular sequence (count equals height).
bool is_complete_intersection(const Ideal& I);

struct StandardForm {
  /// Exponent of the pure power of each variable.
  std::vector<int> powers;
  /// Remaining minimal generators, ascending.
  std::vector<Monomial> sharp;
};

/// Throws std::invalid_argument unless I is a monomial ideal containing a
/// power of every variable.
StandardForm standard_form(const Ideal& I);

struct DoubleLink {
  Ideal result;
  std::vector<Polynomial> first;   // (x_i^{a_i})
  std::vector<Polynomial> second;  // (x_i^{a_i - b_i})
  Monomial gcd;
};

/// Double link cancelling the monomial gcd of I^#. Throws
/// std::invalid_argument when I^# is zero, the gcd is 1, or I^# is principal.
DoubleLink monomial_double_link(const Ideal& I);

enum class LicciVerdict { ReducedToCI, NotLicci, Inconclusive };
std::string to_string(LicciVerdict v);

struct LicciScan {
  LicciVerdict verdict = LicciVerdict::Inconclusive;
  /// Ideals visited, starting with the input.
  std::vector<Ideal> trace;
  std::vector<Monomial> fixpoint_sharp;
  /// Height of the fixpoint's I^#; 0 when it is zero.
  int sharp_height = 0;
  std::string note;
};

LicciScan monomial_licci_scan(const Ideal& I);

struct SocleCheck {
  bool passes = false;
  bool strict = false;
  int sum = 0;
  int bound = 0;
};

/// Σd_i against the largest twist in the last step of the minimal
/// resolution of I. Throws std::invalid_argument when S/I is not CM.
SocleCheck socle_degree_bound_check(const Ideal& I, const std::vector<int>& degrees);

/// The minimal resolution of S/I has a palindromic table.
bool betti_symmetric(const BettiTable& b, int height);

struct Thm32Params {
  int a1 = 1, a2 = 4, a3 = 5, a4 = 8;
  std::uint64_t seed = 1;
};
/// Throws std::invalid_argument naming the violated inequality.
void check_params(const Thm32Params& p);

struct Thm32Instance {
  Thm32Params params;
  Polynomial L1, L2, F1, F2, F3, F4;
  Ideal I1;
  Ideal I;
  int draws = 0;
};

/// Builds I = L_2·(L_1, F_1, F_4) + (F_2, F_3) over a prime field with at
/// least four variables; x_0 is the first variable.
Thm32Instance construct_thm32(const RingPtr& ring, const Thm32Params& p, int retries = 20);

/// Table of the (not necessarily minimal) resolution shape of (★).
BettiTable star_table(const Thm32Params& p);

struct StarCheck {
  bool height_ok = false;
  std::optional<RegularSequenceCert> sequence;
  BettiTable betti;
  bool shape_ok = false;
  bool holds() const { return height_ok && sequence && shape_ok; }
};

StarCheck star_condition_check(const Ideal& I, const Thm32Params& p, std::uint64_t seed);

/// I → (G·L_2, F_2, F_3) : I → (G, F_2, F_3) : J = I_1, with G of least
/// degree in I_1 making G, F_2, F_3 regular.
std::vector<LinkStep> thm32_double_link(const Thm32Instance& inst, std::uint64_t seed, int retries = 20);

struct HypersurfaceSection {
  Polynomial F;
  Ideal ideal;
  std::vector<LinkStep> lifted;
  int draws = 0;
};

/// (I, F) for a random form F of degree D regular modulo I and every
/// ideal of the chain, together with the chain lifted by appending F to
/// each regular sequence. Throws std::invalid_argument when D is below
/// height(I)·reg(S/I) and std::runtime_error when no draw is regular.
HypersurfaceSection hypersurface_section(const Ideal& I, const std::vector<LinkStep>& chain, int D,
                                         std::uint64_t seed, int retries = 20);

}  // namespace homlink
