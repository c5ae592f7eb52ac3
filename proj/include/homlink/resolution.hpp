#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homlink/ideal.hpp"
#include "homlink/module.hpp"

namespace homlink {

/// Graded Betti numbers of an ideal I, indexed from the ideal: b(0, j) is
/// the number of minimal generators of degree j, b(i, j) the rank of S(-j)
/// in the i-th syzygy module. (The resolution of S/I is the same table
/// shifted one step to the right, plus b_{0,0} = 1.)
class BettiTable {
 public:
  BettiTable() = default;

  long long get(int i, int j) const;
  void set(int i, int j, long long v);
  void add(int i, int j, long long v) { set(i, j, get(i, j) + v); }

  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Largest homological index with a nonzero entry (projective dimension
  /// of I); -1 when empty.
  int length() const;
  /// Largest j with b(i, j) != 0, or -1.
  int max_degree(int i) const;
  /// Total rank of step i.
  long long rank(int i) const;

  bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }
  bool operator!=(const BettiTable& o) const { return !(*this == o); }

  /// Grid with rows j - i and columns i for the resolution of S/I,
  /// Macaulay2 style ("total:" row first).
  std::string to_grid() const;

  /// Coefficients of Σ (-1)^i b(i,j) t^j, indexed by j.
  std::vector<long long> alternating_sum() const;

 private:
  std::map<std::pair<int, int>, long long> entries_;
};

struct FreeResolution {
  /// modules[i] is F_i (F_0 maps onto the ideal); maps[i] : F_i -> F_{i-1},
  /// with maps[0] : F_0 -> S giving the generators.
  std::vector<FreeModule> modules;
  std::vector<ModuleMap> maps;
  bool minimal = false;
};

/// Minimal graded free resolution of a proper homogeneous ideal: each step
/// takes minimal generators of the kernel of the previous map.
FreeResolution free_resolution(const Ideal& ideal);

/// Throws std::invalid_argument unless the resolution is minimal.
BettiTable betti_table(const FreeResolution& res);
BettiTable betti_table(const Ideal& ideal);

/// Castelnuovo-Mumford regularity of S/I: max over the quotient table of
/// j - i (that is, max over the ideal table of j - i - 1, and 0 for an
/// empty table).
int regularity(const BettiTable& b);
/// Projective dimension of I (pd(S/I) is one more).
int proj_dim(const BettiTable& b);
/// pd(S/I) == height(I).
bool is_cohen_macaulay(const Ideal& ideal);

/// No nonzero constant entries in any map.
bool is_minimal(const FreeResolution& res);
/// Consecutive maps compose to zero.
bool composes_to_zero(const FreeResolution& res);

/// Betti table of a resolution shape given as lists of twists per step,
/// e.g. {{3,3,4,4,6,6,6}, {5,5,5,7,...}, {8,9,9}}.
BettiTable table_from_shape(const std::vector<std::vector<int>>& twists);

/// True when `minimal` is obtained from `shape` by cancelling pairs
/// b(i, j), b(i+1, j) (so it also has the same alternating sums).
bool reachable_by_cancellation(const BettiTable& shape, const BettiTable& minimal);

}  // namespace homlink
