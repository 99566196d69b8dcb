#include "densesol/solitary.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace densesol {

namespace {

IsoFingerprint fingerprint_of(const FiniteGroup& group, const BitSet& members,
                              const std::vector<std::size_t>& orders) {
  IsoFingerprint fp;
  fp.order = members.count();
  members.for_each([&](std::size_t i) { ++fp.element_orders[orders[i]]; });
  const auto gens = generating_sequence(group, members);
  fp.abelian = true;
  for (std::size_t i = 0; i < gens.size() && fp.abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!group.commute(gens[i], gens[j])) {
        fp.abelian = false;
        break;
      }
  members.for_each([&](std::size_t i) {
    const auto x = static_cast<Element>(i);
    if (std::all_of(gens.begin(), gens.end(),
                    [&](Element g) { return group.commute(x, g); }))
      ++fp.center_order;
  });
  return fp;
}

BitSet everything(std::size_t n) {
  BitSet s(n);
  for (std::size_t i = 0; i < n; ++i) s.insert(i);
  return s;
}

// Extends `image` from <gens[0..level)> to <gens[0..level]> given the image
// of gens[level]. Returns false on a homomorphism or injectivity conflict.
bool extend_map(const FiniteGroup& a, const FiniteGroup& b,
                const std::vector<Element>& gens, std::size_t level,
                std::vector<Element>& image, std::vector<std::uint8_t>& mapped,
                BitSet& used) {
  // BFS over the Cayley graph of <gens[0..level]> from the identity.
  std::vector<Element> queue{a.identity()};
  std::vector<std::uint8_t> visited(a.order(), 0);
  visited[a.identity()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    for (std::size_t k = 0; k <= level; ++k) {
      const Element y = a.mul(x, gens[k]);
      const Element fy = b.mul(image[x], image[gens[k]]);
      if (mapped[y]) {
        if (image[y] != fy) return false;
      } else {
        if (used.contains(fy)) return false;
        image[y] = fy;
        mapped[y] = 1;
        used.insert(fy);
      }
      if (!visited[y]) {
        visited[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return true;
}

bool search(const FiniteGroup& a, const FiniteGroup& b,
            const std::vector<Element>& gens,
            const std::vector<std::size_t>& a_orders,
            const std::vector<std::size_t>& b_orders, std::size_t level,
            const std::vector<Element>& image, const std::vector<std::uint8_t>& mapped,
            const BitSet& used) {
  if (level == gens.size()) return true;
  const Element g = gens[level];
  for (Element c = 0; c < b.order(); ++c) {
    if (b_orders[c] != a_orders[g] || used.contains(c)) continue;
    auto next_image = image;
    auto next_mapped = mapped;
    auto next_used = used;
    next_image[g] = c;
    next_mapped[g] = 1;
    next_used.insert(c);
    if (!extend_map(a, b, gens, level, next_image, next_mapped, next_used)) continue;
    if (search(a, b, gens, a_orders, b_orders, level + 1, next_image, next_mapped,
               next_used))
      return true;
  }
  return false;
}

}  // namespace

IsoFingerprint fingerprint(const FiniteGroup& group) {
  return fingerprint_of(group, everything(group.order()), element_orders(group));
}

IsoFingerprint fingerprint(const FiniteGroup& group, const Subgroup& h) {
  return fingerprint_of(group, h.members(), element_orders(group));
}

FiniteGroup subgroup_as_group(const FiniteGroup& group, const Subgroup& h) {
  const auto elems = h.elements();
  std::vector<Element> local(group.order(), 0);
  for (std::size_t k = 0; k < elems.size(); ++k) local[elems[k]] = static_cast<Element>(k);
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element prod = group.mul(elems[i], elems[j]);
      if (!h.contains(prod))
        throw GroupError("subgroup_as_group: member set is not closed");
      table[i * n + j] = local[prod];
    }
  return FiniteGroup(group.label() + "|" + std::to_string(n), n, std::move(table));
}

bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  if (!(fingerprint(a) == fingerprint(b))) return false;
  const auto gens = generating_sequence(a, everything(a.order()));
  const auto a_orders = element_orders(a), b_orders = element_orders(b);
  std::vector<Element> image(a.order(), 0);
  std::vector<std::uint8_t> mapped(a.order(), 0);
  BitSet used(b.order());
  image[a.identity()] = b.identity();
  mapped[a.identity()] = 1;
  used.insert(b.identity());
  return search(a, b, gens, a_orders, b_orders, 0, image, mapped, used);
}

BitSet solitary_mask(const FiniteGroup& group, const SubgroupLattice& lat) {
  BitSet mask(lat.size());
  const auto orders = element_orders(group);

  // Nodes are sorted by order, so equal-order nodes are contiguous.
  std::size_t begin = 0;
  while (begin < lat.size()) {
    std::size_t end = begin;
    while (end < lat.size() && lat.node(end).order() == lat.node(begin).order()) ++end;
    if (end - begin == 1) {
      mask.insert(begin);
      begin = end;
      continue;
    }

    std::vector<std::pair<IsoFingerprint, std::vector<std::size_t>>> buckets;
    for (std::size_t i = begin; i < end; ++i) {
      auto fp = fingerprint_of(group, lat.node(i).members(), orders);
      auto it = std::find_if(buckets.begin(), buckets.end(),
                             [&](const auto& b) { return b.first == fp; });
      if (it == buckets.end())
        buckets.push_back({std::move(fp), {i}});
      else
        it->second.push_back(i);
    }

    for (const auto& [fp, members] : buckets) {
      if (members.size() == 1) {
        mask.insert(members.front());
        continue;
      }
      // Isomorphism classes inside the bucket, via class representatives.
      std::vector<FiniteGroup> reps;
      std::vector<std::vector<std::size_t>> classes;
      for (std::size_t i : members) {
        auto g = subgroup_as_group(group, lat.node(i));
        bool placed = false;
        for (std::size_t c = 0; c < reps.size(); ++c) {
          if (are_isomorphic(reps[c], g)) {
            classes[c].push_back(i);
            placed = true;
            break;
          }
        }
        if (!placed) {
          reps.push_back(std::move(g));
          classes.push_back({i});
        }
      }
      for (const auto& cls : classes)
        if (cls.size() == 1) mask.insert(cls.front());
    }
    begin = end;
  }
  return mask;
}

std::vector<Subgroup> solitary_subgroups(const FiniteGroup& group, std::size_t cap) {
  const auto lat = all_subgroups(group, cap);
  std::vector<Subgroup> out;
  solitary_mask(group, lat).for_each([&](std::size_t i) { out.push_back(lat.node(i)); });
  return out;
}

SolitaryLatticeCheck check_solitary_lattice(const SubgroupLattice& lat,
                                            const BitSet& solitary) {
  SolitaryLatticeCheck result;
  const auto sol = solitary.to_vector();
  result.solitary_count = sol.size();

  // Least element of `candidates` under inclusion, if one exists.
  auto least = [&](const std::vector<std::size_t>& candidates) -> std::optional<std::size_t> {
    for (std::size_t c : candidates)
      if (std::all_of(candidates.begin(), candidates.end(),
                      [&](std::size_t o) { return lat.less_equal(c, o); }))
        return c;
    return std::nullopt;
  };
  auto greatest = [&](const std::vector<std::size_t>& candidates) -> std::optional<std::size_t> {
    for (std::size_t c : candidates)
      if (std::all_of(candidates.begin(), candidates.end(),
                      [&](std::size_t o) { return lat.less_equal(o, c); }))
        return c;
    return std::nullopt;
  };

  for (std::size_t i = 0; i < sol.size(); ++i)
    for (std::size_t j = i; j < sol.size(); ++j) {
      const std::size_t x = sol[i], y = sol[j];
      std::vector<std::size_t> upper, lower;
      for (std::size_t z : sol) {
        if (lat.less_equal(x, z) && lat.less_equal(y, z)) upper.push_back(z);
        if (lat.less_equal(z, x) && lat.less_equal(z, y)) lower.push_back(z);
      }
      const auto join = least(upper);
      const auto meet = greatest(lower);
      if (!join || !meet) {
        result.is_lattice = false;
        continue;
      }
      const BitSet inter = lat.node(x).members() & lat.node(y).members();
      if (!(lat.node(*meet).members() == inter)) result.meets_are_intersections = false;

      // Join in L(G): nodes are sorted by order and the join lies below every
      // other common upper bound, so it is the first common upper bound.
      BitSet ux = lat.above(x), uy = lat.above(y);
      ux.insert(x);
      uy.insert(y);
      const std::size_t first = (ux & uy).first();
      const std::optional<std::size_t> subgroup_join =
          first < lat.size() ? std::optional<std::size_t>(first) : std::nullopt;
      if (!subgroup_join || *subgroup_join != *join) result.joins_are_generated = false;
    }
  return result;
}

SolitaryLatticeCheck check_solitary_lattice(const FiniteGroup& group, std::size_t cap) {
  const auto lat = all_subgroups(group, cap);
  return check_solitary_lattice(lat, solitary_mask(group, lat));
}

}  // namespace densesol
