#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "densesol/bitset.hpp"
#include "densesol/group.hpp"

namespace densesol {

/// Smallest subgroup containing `gens`.
Subgroup generated_subgroup(const FiniteGroup& group, std::span<const Element> gens);

/// All subgroups of a group, sorted canonically (trivial first, whole group
/// last), with strict inclusion and the cover (Hasse) relation. Node sets are
/// BitSets over node indices.
class SubgroupLattice {
 public:
  SubgroupLattice(std::size_t group_order, std::vector<Subgroup> nodes);

  std::size_t group_order() const { return group_order_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<Subgroup>& nodes() const { return nodes_; }
  const Subgroup& node(std::size_t i) const { return nodes_[i]; }
  std::size_t trivial() const { return 0; }
  std::size_t top() const { return nodes_.size() - 1; }

  std::optional<std::size_t> index_of(const Subgroup& h) const;
  /// Index of `h`, throwing std::invalid_argument if it is not a node.
  std::size_t require_index(const Subgroup& h) const;

  /// Strict inclusion node(i) < node(j).
  bool less(std::size_t i, std::size_t j) const { return above_[i].contains(j); }
  bool less_equal(std::size_t i, std::size_t j) const { return i == j || less(i, j); }
  /// Nodes strictly above / below.
  const BitSet& above(std::size_t i) const { return above_[i]; }
  const BitSet& below(std::size_t i) const { return below_[i]; }
  /// Nodes covering node(i).
  const BitSet& covers(std::size_t i) const { return covers_[i]; }
  bool is_cover(std::size_t lower, std::size_t upper) const {
    return covers_[lower].contains(upper);
  }
  std::size_t cover_count() const;

  /// Open interval (node(lo), node(hi)) as a node set.
  BitSet open_interval(std::size_t lo, std::size_t hi) const {
    return above_[lo] & below_[hi];
  }

 private:
  std::size_t group_order_;
  std::vector<Subgroup> nodes_;
  std::unordered_map<BitSet, std::size_t, BitSetHash> index_;
  std::vector<BitSet> above_, below_, covers_;
};

/// Seeds with every cyclic subgroup and joins with cyclic subgroups until a
/// fixed point. Throws OrderCapExceeded when |G| > cap.
SubgroupLattice all_subgroups(const FiniteGroup& group,
                              std::size_t cap = kDefaultOrderCap);

/// True iff nothing lies strictly between h and k. Throws
/// std::invalid_argument unless h < k.
bool is_maximal_in(const SubgroupLattice& lat, const Subgroup& h, const Subgroup& k);

/// Subgroups X with h < X < k, in canonical order. Throws
/// std::invalid_argument unless h <= k.
std::vector<Subgroup> interval(const SubgroupLattice& lat, const Subgroup& h,
                               const Subgroup& k);

/// Distinct conjugates g h g^-1, in canonical order.
std::vector<Subgroup> conjugates(const FiniteGroup& group, const Subgroup& h);
bool is_normal(const FiniteGroup& group, const Subgroup& h);

}  // namespace densesol
