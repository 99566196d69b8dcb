#include "densesol/density.hpp"

#include "densesol/solitary.hpp"

namespace densesol {

DensityReport has_dense_solitary(const SubgroupLattice& lat, const BitSet& solitary) {
  DensityReport report;
  for (std::size_t k = 0; k < lat.size(); ++k) {
    const BitSet& below = lat.below(k);
    for (std::size_t h = below.first(); h < k; ++h) {
      if (!below.contains(h) || lat.is_cover(h, k)) continue;
      ++report.checked_pairs;
      BitSet between = lat.open_interval(h, k);
      if (!between.intersects(solitary)) {
        report.verdict = false;
        report.counterexample = DensityCounterexample{h, k, lat.node(h), lat.node(k)};
        return report;
      }
    }
  }
  return report;
}

DensityReport has_dense_solitary(const FiniteGroup& group, std::size_t cap) {
  const auto lat = all_subgroups(group, cap);
  return has_dense_solitary(lat, solitary_mask(group, lat));
}

bool counterexample_holds(const SubgroupLattice& lat, const BitSet& solitary,
                          const DensityCounterexample& ce) {
  if (ce.lower >= lat.size() || ce.upper >= lat.size()) return false;
  if (!(lat.node(ce.lower) == ce.lower_subgroup) ||
      !(lat.node(ce.upper) == ce.upper_subgroup))
    return false;
  if (!ce.lower_subgroup.is_subgroup_of(ce.upper_subgroup) ||
      ce.lower_subgroup.order() == ce.upper_subgroup.order())
    return false;
  bool something_between = false;
  for (std::size_t x = 0; x < lat.size(); ++x) {
    const Subgroup& node = lat.node(x);
    const bool between = ce.lower_subgroup.is_subgroup_of(node) &&
                         node.is_subgroup_of(ce.upper_subgroup) &&
                         node.order() != ce.lower_subgroup.order() &&
                         node.order() != ce.upper_subgroup.order();
    if (!between) continue;
    something_between = true;
    if (solitary.contains(x)) return false;
  }
  return something_between;
}

}  // namespace densesol
