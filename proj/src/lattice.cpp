#include "densesol/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace densesol {

Subgroup generated_subgroup(const FiniteGroup& group, std::span<const Element> gens) {
  return Subgroup(generate(group, gens));
}

SubgroupLattice::SubgroupLattice(std::size_t group_order, std::vector<Subgroup> nodes)
    : group_order_(group_order), nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end(), canonical_less);
  const std::size_t count = nodes_.size();
  index_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!index_.emplace(nodes_[i].members(), i).second)
      throw std::invalid_argument("duplicate subgroup in lattice");
  }

  above_.assign(count, BitSet(count));
  below_.assign(count, BitSet(count));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) {
      const auto oi = nodes_[i].order(), oj = nodes_[j].order();
      if (oj > oi && oj % oi == 0 && nodes_[i].is_subgroup_of(nodes_[j])) {
        above_[i].insert(j);
        below_[j].insert(i);
      }
    }

  // X covers H iff X > H and no Y with H < Y < X.
  covers_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    BitSet reach(count);
    above_[i].for_each([&](std::size_t j) { reach |= above_[j]; });
    covers_[i] = above_[i];
    covers_[i].subtract(reach);
  }
}

std::optional<std::size_t> SubgroupLattice::index_of(const Subgroup& h) const {
  if (h.members().universe() != group_order_) return std::nullopt;
  auto it = index_.find(h.members());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubgroupLattice::require_index(const Subgroup& h) const {
  auto i = index_of(h);
  if (!i) throw std::invalid_argument("subgroup is not a node of this lattice");
  return *i;
}

std::size_t SubgroupLattice::cover_count() const {
  std::size_t c = 0;
  for (const auto& row : covers_) c += row.count();
  return c;
}

namespace {

// Dimino's step: <H, g> as a union of right cosets of H. `gens` generates
// <H, g>. Only coset representatives need testing, since H x s is inside a
// union of right H-cosets iff x s is.
BitSet extend_subgroup(const FiniteGroup& group, const std::vector<Element>& h_elements,
                       const BitSet& h_members, std::span<const Element> gens) {
  BitSet set = h_members;
  std::vector<Element> elements = h_elements;
  const std::size_t block = h_elements.size();
  for (std::size_t rep = 0; rep < elements.size(); rep += block) {
    for (Element s : gens) {
      const Element y = group.mul(elements[rep], s);
      if (set.contains(y)) continue;
      for (std::size_t j = 0; j < block; ++j) {
        const Element z = group.mul(h_elements[j], y);
        set.insert(z);
        elements.push_back(z);
      }
    }
  }
  return set;
}

// Smallest divisor of `order` that is a multiple of `base` and at least
// `lower_bound`.
std::size_t smallest_admissible_order(std::size_t order, std::size_t base,
                                      std::size_t lower_bound) {
  for (std::size_t k = base; k <= order; k += base)
    if (order % k == 0 && k >= lower_bound) return k;
  return order;
}

}  // namespace

SubgroupLattice all_subgroups(const FiniteGroup& group, std::size_t cap) {
  check_order_cap(group.order(), cap);
  const std::size_t order = group.order();

  struct Entry {
    BitSet members;
    std::vector<Element> gens;
  };
  std::vector<Entry> found;
  std::unordered_map<BitSet, std::size_t, BitSetHash> seen;

  // Cyclic subgroups, one generator each.
  std::vector<std::pair<Element, BitSet>> cyclic;
  for (Element g = 0; g < order; ++g) {
    const Element gen[] = {g};
    BitSet c = generate(group, gen);
    if (seen.emplace(c, found.size()).second) {
      std::vector<Element> gens;
      if (g != group.identity()) gens.push_back(g);
      found.push_back({c, std::move(gens)});
      if (g != group.identity()) cyclic.emplace_back(g, std::move(c));
    }
  }

  BitSet whole(order);
  for (std::size_t i = 0; i < order; ++i) whole.insert(i);

  // Every subgroup is a join of cyclic subgroups, so joining each found
  // subgroup with each cyclic subgroup reaches the full set. <H, g> depends
  // only on the double coset H g H, so one generator per double coset is
  // enough.
  BitSet done(order);
  for (std::size_t i = 0; i < found.size(); ++i) {
    const BitSet h = found[i].members;
    const std::vector<Element> h_gens = found[i].gens;
    std::vector<Element> h_elements;
    h.for_each([&](std::size_t x) { h_elements.push_back(static_cast<Element>(x)); });
    const std::size_t ho = h_elements.size();
    done = h;

    for (const auto& [g, c] : cyclic) {
      if (done.contains(g)) continue;
      const std::size_t co = c.count();
      const std::size_t product = ho * co / h.intersection_count(c);
      const std::size_t lcm = std::lcm(ho, co);
      std::vector<Element> gens = h_gens;
      gens.push_back(g);
      BitSet joined;
      if (smallest_admissible_order(order, lcm, product) == order) {
        // |<H, C>| is a multiple of lcm(|H|, |C|), divides |G| and is at
        // least |HC|.
        joined = whole;
      } else {
        joined = extend_subgroup(group, h_elements, h, gens);
      }
      for (Element x : h_elements) {
        done.insert(group.mul(x, g));
        done.insert(group.mul(g, x));
      }
      if (seen.emplace(joined, found.size()).second)
        found.push_back({std::move(joined), std::move(gens)});
    }
  }

  std::vector<Subgroup> nodes;
  nodes.reserve(found.size());
  for (auto& e : found) nodes.emplace_back(std::move(e.members));
  return SubgroupLattice(order, std::move(nodes));
}

bool is_maximal_in(const SubgroupLattice& lat, const Subgroup& h, const Subgroup& k) {
  const auto i = lat.require_index(h), j = lat.require_index(k);
  if (!lat.less(i, j)) throw std::invalid_argument("is_maximal_in needs H < K");
  return lat.is_cover(i, j);
}

std::vector<Subgroup> interval(const SubgroupLattice& lat, const Subgroup& h,
                               const Subgroup& k) {
  const auto i = lat.require_index(h), j = lat.require_index(k);
  if (!lat.less_equal(i, j)) throw std::invalid_argument("interval needs H <= K");
  std::vector<Subgroup> out;
  if (i == j) return out;
  lat.open_interval(i, j).for_each([&](std::size_t x) { out.push_back(lat.node(x)); });
  return out;
}

std::vector<Subgroup> conjugates(const FiniteGroup& group, const Subgroup& h) {
  std::vector<Subgroup> out;
  std::unordered_map<BitSet, bool, BitSetHash> seen;
  const auto elems = h.elements();
  for (Element g = 0; g < group.order(); ++g) {
    BitSet c(group.order());
    for (Element x : elems) c.insert(group.conjugate(g, x));
    if (seen.emplace(c, true).second) out.emplace_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_normal(const FiniteGroup& group, const Subgroup& h) {
  BitSet all(group.order());
  for (std::size_t i = 0; i < group.order(); ++i) all.insert(i);
  const auto group_gens = generating_sequence(group, all);
  const auto h_gens = generating_sequence(group, h.members());
  for (Element g : group_gens)
    for (Element x : h_gens)
      if (!h.contains(group.conjugate(g, x))) return false;
  return true;
}

}  // namespace densesol
