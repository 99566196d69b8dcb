#pragma once

#include <cstddef>
#include <optional>

#include "densesol/group.hpp"
#include "densesol/lattice.hpp"

namespace densesol {

/// A pair H < K, H not maximal in K, with no solitary subgroup strictly
/// between them.
struct DensityCounterexample {
  std::size_t lower;  // node index of H
  std::size_t upper;  // node index of K
  Subgroup lower_subgroup;
  Subgroup upper_subgroup;
};

struct DensityReport {
  bool verdict = true;
  std::optional<DensityCounterexample> counterexample;
  /// Non-maximal pairs H < K examined.
  std::size_t checked_pairs = 0;
};

/// Scans K in canonical order and, for each K, the proper subgroups H of K in
/// canonical order, skipping cover pairs. Stops at the first pair whose open
/// interval has no solitary subgroup. Solitarity is taken in the whole group.
DensityReport has_dense_solitary(const SubgroupLattice& lat, const BitSet& solitary);
DensityReport has_dense_solitary(const FiniteGroup& group,
                                 std::size_t cap = kDefaultOrderCap);

/// Re-checks a counterexample against its lattice: H < K, H not maximal in K,
/// and no solitary node in between.
bool counterexample_holds(const SubgroupLattice& lat, const BitSet& solitary,
                          const DensityCounterexample& ce);

}  // namespace densesol
