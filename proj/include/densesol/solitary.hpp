#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "densesol/group.hpp"
#include "densesol/lattice.hpp"

namespace densesol {

/// Isomorphism invariants. Equal fingerprints are necessary, not sufficient.
struct IsoFingerprint {
  std::size_t order = 0;
  std::map<std::size_t, std::size_t> element_orders;  // order -> count
  bool abelian = false;
  std::size_t center_order = 0;
  friend bool operator==(const IsoFingerprint&, const IsoFingerprint&) = default;
};

IsoFingerprint fingerprint(const FiniteGroup& group);
/// Fingerprint of a subgroup, computed inside the ambient group.
IsoFingerprint fingerprint(const FiniteGroup& group, const Subgroup& h);

/// The subgroup as a standalone group: element k is the k-th smallest member
/// of h.
FiniteGroup subgroup_as_group(const FiniteGroup& group, const Subgroup& h);

/// Fingerprint filter, then backtracking over images of a generating
/// sequence of `a`, checking the homomorphism law on every Cayley-graph edge.
bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

/// Node set of the subgroups with no other isomorphic subgroup in the group.
BitSet solitary_mask(const FiniteGroup& group, const SubgroupLattice& lat);

std::vector<Subgroup> solitary_subgroups(const FiniteGroup& group,
                                         std::size_t cap = kDefaultOrderCap);

struct SolitaryLatticeCheck {
  /// Every pair of solitary subgroups has a join and a meet inside the
  /// solitary set under inclusion.
  bool is_lattice = true;
  /// Each meet found equals the plain intersection.
  bool meets_are_intersections = true;
  /// Each join found equals the subgroup generated by the pair.
  bool joins_are_generated = true;
  std::size_t solitary_count = 0;
};

SolitaryLatticeCheck check_solitary_lattice(const SubgroupLattice& lat,
                                            const BitSet& solitary);
SolitaryLatticeCheck check_solitary_lattice(const FiniteGroup& group,
                                            std::size_t cap = kDefaultOrderCap);

}  // namespace densesol
