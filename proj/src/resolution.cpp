#include "homlink/resolution.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "homlink/idealops.hpp"

namespace homlink {

long long BettiTable::get(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, long long v) {
  if (v < 0) throw std::invalid_argument("negative Betti number");
  if (v == 0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = v;
  }
}

int BettiTable::length() const {
  int l = -1;
  for (const auto& [k, v] : entries_) l = std::max(l, k.first);
  return l;
}

int BettiTable::max_degree(int i) const {
  int d = -1;
  for (const auto& [k, v] : entries_)
    if (k.first == i) d = std::max(d, k.second);
  return d;
}

long long BettiTable::rank(int i) const {
  long long r = 0;
  for (const auto& [k, v] : entries_)
    if (k.first == i) r += v;
  return r;
}

std::vector<long long> BettiTable::alternating_sum() const {
  std::vector<long long> out;
  for (const auto& [k, v] : entries_) {
    if (static_cast<std::size_t>(k.second) >= out.size()) out.resize(k.second + 1, 0);
    out[k.second] += (k.first % 2 ? -v : v);
  }
  return out;
}

std::string BettiTable::to_grid() const {
  // Quotient indexing: column i+1 holds the ideal's step i.
  const int cols = length() + 2;
  std::map<int, std::map<int, long long>> rows;
  rows[0][0] = 1;
  for (const auto& [k, v] : entries_) rows[k.second - k.first - 1][k.first + 1] = v;
  std::vector<long long> totals(cols, 0);
  totals[0] = 1;
  for (const auto& [k, v] : entries_) totals[k.first + 1] += v;
  std::size_t width = 1;
  for (auto t : totals) width = std::max(width, std::to_string(t).size());
  std::ostringstream os;
  const int label = 7;
  os << std::setw(label) << "" << std::right;
  for (int c = 0; c < cols; ++c) os << ' ' << std::setw(static_cast<int>(width)) << c;
  os << '\n' << std::setw(label) << "total:";
  for (auto t : totals) os << ' ' << std::setw(static_cast<int>(width)) << t;
  os << '\n';
  if (rows.empty()) return os.str();
  for (int r = rows.begin()->first; r <= rows.rbegin()->first; ++r) {
    os << std::setw(label - 1) << r << ':';
    for (int c = 0; c < cols; ++c) {
      long long v = 0;
      if (auto it = rows.find(r); it != rows.end())
        if (auto jt = it->second.find(c); jt != it->second.end()) v = jt->second;
      os << ' ' << std::setw(static_cast<int>(width)) << (v ? std::to_string(v) : ".");
    }
    os << '\n';
  }
  return os.str();
}

FreeResolution free_resolution(const Ideal& ideal) {
  if (ideal.is_unit()) throw std::invalid_argument("resolution of the unit ideal");
  const RingPtr& ring = ideal.ring_ptr();
  FreeResolution res;
  if (ideal.is_zero()) {
    res.minimal = true;
    return res;
  }
  const auto& gens = ideal.minimal_generators();
  ModuleMap first;
  first.target.shifts = {0};
  first.columns = gens;
  first.source.shifts = degrees_of(gens);
  res.modules.push_back(first.source);
  res.maps.push_back(first);
  // Hilbert's syzygy theorem bounds the length.
  for (std::size_t step = 1; step <= ring->nvars() + 1; ++step) {
    const ModuleMap& prev = res.maps.back();
    auto kernel = syzygies(ring, prev.columns, prev.target.shifts);
    if (kernel.empty()) break;
    auto mins = minimal_generators(ring, kernel, prev.source.shifts);
    if (mins.empty()) break;
    ModuleMap next;
    next.target = prev.source;
    next.columns = mins;
    for (const auto& c : mins) next.source.shifts.push_back(c.degree(prev.source.shifts));
    res.modules.push_back(next.source);
    res.maps.push_back(std::move(next));
  }
  res.minimal = is_minimal(res);
  return res;
}

bool is_minimal(const FreeResolution& res) {
  for (std::size_t k = 1; k < res.maps.size(); ++k)
    for (const auto& col : res.maps[k].columns)
      for (const auto& t : col.terms())
        if (t.mono.deg == 0) return false;
  return true;
}

bool composes_to_zero(const FreeResolution& res) {
  for (std::size_t k = 1; k < res.maps.size(); ++k)
    for (const auto& col : res.maps[k].columns)
      if (!apply(res.maps[k - 1], col).is_zero()) return false;
  return true;
}

BettiTable betti_table(const FreeResolution& res) {
  if (!res.minimal) throw std::invalid_argument("Betti numbers need a minimal resolution");
  BettiTable b;
  for (std::size_t i = 0; i < res.modules.size(); ++i)
    for (int s : res.modules[i].shifts) b.add(static_cast<int>(i), s, 1);
  return b;
}

BettiTable betti_table(const Ideal& ideal) { return betti_table(free_resolution(ideal)); }

int regularity(const BettiTable& b) {
  int reg = 0;
  for (const auto& [k, v] : b.entries()) reg = std::max(reg, k.second - k.first - 1);
  return reg;
}

int proj_dim(const BettiTable& b) { return b.length(); }

bool is_cohen_macaulay(const Ideal& ideal) {
  if (ideal.is_unit()) return false;
  if (ideal.is_zero()) return true;
  return proj_dim(betti_table(ideal)) + 1 == height(ideal);
}

BettiTable table_from_shape(const std::vector<std::vector<int>>& twists) {
  BettiTable b;
  for (std::size_t i = 0; i < twists.size(); ++i)
    for (int j : twists[i]) b.add(static_cast<int>(i), j, 1);
  return b;
}

bool reachable_by_cancellation(const BettiTable& shape, const BettiTable& minimal) {
  std::set<int> degrees;
  int len = std::max(shape.length(), minimal.length());
  for (const auto& [k, v] : shape.entries()) degrees.insert(k.second);
  for (const auto& [k, v] : minimal.entries()) degrees.insert(k.second);
  for (int j : degrees) {
    // x_i cancellations between steps i and i+1 in degree j:
    // diff_i = x_{i-1} + x_i, all x_i >= 0, x_{-1} = x_len = 0.
    long long carry = 0;
    for (int i = 0; i <= len; ++i) {
      long long diff = shape.get(i, j) - minimal.get(i, j);
      long long x = diff - carry;
      if (x < 0) return false;
      carry = x;
    }
    if (carry != 0) return false;
  }
  return true;
}

}  // namespace homlink
