#pragma once

#include <vector>

#include "homlink/groebner.hpp"
#include "homlink/polynomial.hpp"

namespace homlink {

/// Graded free module S(-shift_0) + ... + S(-shift_{r-1}).
struct FreeModule {
  std::vector<int> shifts;
  std::size_t rank() const { return shifts.size(); }
};

/// Homogeneous map F -> G given by the images of the basis of F
/// (`columns[i]` is an element of G with component tags).
struct ModuleMap {
  FreeModule source;
  FreeModule target;
  std::vector<Polynomial> columns;
};

/// Minimal homogeneous generating set of the submodule of a free module
/// (shifts given) generated by `gens`. Picks, degree by degree, elements
/// not in the span of previously accepted ones; returns input elements,
/// sorted by degree, stable within a degree.
std::vector<Polynomial> minimal_generators(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                           const std::vector<int>& shifts);

/// Generators of the kernel of the map given by `columns` (elements of a
/// free module with `target_shifts`), as elements of the free module
/// whose shifts are the column degrees. Computed through a
/// position-over-term Groebner basis of the graph module.
std::vector<Polynomial> syzygies(const RingPtr& ring, const std::vector<Polynomial>& columns,
                                 const std::vector<int>& target_shifts);

/// Image of v (element of the source free module) under the map.
Polynomial apply(const ModuleMap& f, const Polynomial& v);

}  // namespace homlink
