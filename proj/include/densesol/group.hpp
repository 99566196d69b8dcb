#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "densesol/bitset.hpp"

namespace densesol {

/// Element of a finite group, identified by its index in the Cayley table.
using Element = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 512;

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OrderCapExceeded : public GroupError {
 public:
  OrderCapExceeded(std::size_t order, std::size_t cap);
  std::size_t order() const { return order_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t order_;
  std::size_t cap_;
};

/// Throws OrderCapExceeded when order > cap.
void check_order_cap(std::size_t order, std::size_t cap);

/// A subgroup given by its member set. The universe of the set is the order
/// of the ambient group.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(BitSet members)
      : members_(std::move(members)), order_(members_.count()) {}

  const BitSet& members() const { return members_; }
  std::size_t order() const { return order_; }
  bool contains(Element g) const { return members_.contains(g); }
  bool is_subgroup_of(const Subgroup& other) const {
    return members_.is_subset_of(other.members_);
  }
  std::vector<Element> elements() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }

 private:
  BitSet members_;
  std::size_t order_ = 0;
};

/// Canonical order: by subgroup order, then by sorted member list.
bool canonical_less(const Subgroup& a, const Subgroup& b);

/// Finite group backed by a dense Cayley table. Immutable after construction.
class FiniteGroup {
 public:
  /// `table[i * order + j]` is the product of elements i and j. Validates the
  /// Latin-square property, the identity and inverses, and associativity
  /// (Light's test over a generating set, which is equivalent to the full
  /// triple check). Throws GroupError on failure.
  FiniteGroup(std::string label, std::size_t order, std::vector<Element> table);

  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }
  Element identity() const { return identity_; }

  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  /// a^k for any integer k.
  Element power(Element a, long long k) const;
  /// g h g^-1
  Element conjugate(Element g, Element h) const {
    return mul(mul(g, h), inverse_[g]);
  }
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }
  bool is_abelian() const;

  std::span<const Element> table() const { return table_; }

 private:
  std::string label_;
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
};

FiniteGroup make_cyclic(std::size_t n, std::size_t cap = kDefaultOrderCap);

/// Elements r^i s^e at index i + e*n; s r s = r^-1.
FiniteGroup make_dihedral(std::size_t n, std::size_t cap = kDefaultOrderCap);

/// Q_{2^k}: elements a^i b^e at index i + e*2^(k-1), with a^(2^(k-1)) = 1,
/// b^2 = a^(2^(k-2)) and b^-1 a b = a^-1.
FiniteGroup make_generalized_quaternion(unsigned k,
                                        std::size_t cap = kDefaultOrderCap);

/// Pairs (g, h) at index g*|H| + h with componentwise multiplication.
FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                std::size_t cap = kDefaultOrderCap);

std::size_t element_order(const FiniteGroup& group, Element g);
std::vector<std::size_t> element_orders(const FiniteGroup& group);

/// Elements commuting with every element of the group.
Subgroup center(const FiniteGroup& group);

/// Closure of `gens` under multiplication (identity included).
BitSet generate(const FiniteGroup& group, std::span<const Element> gens);

/// Greedy generating sequence of the subgroup with members `members`,
/// preferring elements of large order.
std::vector<Element> generating_sequence(const FiniteGroup& group,
                                         const BitSet& members);

/// O(n^3) check of associativity plus identity/inverse laws. Meant for tests.
bool satisfies_group_axioms_exhaustive(const FiniteGroup& group);

/// A corpus group, built on demand.
struct CorpusEntry {
  std::string label;
  std::size_t order;
  std::function<FiniteGroup(std::size_t cap)> make;
};

/// Cyclic groups, dihedral and generalized quaternion groups, C_p x C_p and a
/// few other direct products, all of order <= max_order.
std::vector<CorpusEntry> corpus_entries(std::size_t max_order);
std::vector<FiniteGroup> build_corpus(std::size_t max_order,
                                      std::size_t cap = kDefaultOrderCap);

}  // namespace densesol
