#include "densesol/group.hpp"

#include <algorithm>
#include <numeric>

#include "densesol/number_theory.hpp"

namespace densesol {

OrderCapExceeded::OrderCapExceeded(std::size_t order, std::size_t cap)
    : GroupError("group order " + std::to_string(order) +
                 " exceeds the order cap " + std::to_string(cap)),
      order_(order),
      cap_(cap) {}

void check_order_cap(std::size_t order, std::size_t cap) {
  if (order > cap) throw OrderCapExceeded(order, cap);
}

std::vector<Element> Subgroup::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  members_.for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
  return out;
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return BitSet::lex_less(a.members(), b.members());
}

FiniteGroup::FiniteGroup(std::string label, std::size_t order,
                         std::vector<Element> table)
    : label_(std::move(label)), order_(order), table_(std::move(table)) {
  if (order_ == 0) throw GroupError("group must be non-empty");
  if (table_.size() != order_ * order_)
    throw GroupError("Cayley table has wrong size");

  // Latin square: every row and column is a permutation.
  std::vector<std::uint8_t> seen(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < order_; ++j) {
      const Element v = table_[i * order_ + j];
      if (v >= order_ || seen[v]) throw GroupError(label_ + ": row is not a permutation");
      seen[v] = 1;
    }
  }
  for (std::size_t j = 0; j < order_; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < order_; ++i) {
      const Element v = table_[i * order_ + j];
      if (seen[v]) throw GroupError(label_ + ": column is not a permutation");
      seen[v] = 1;
    }
  }

  // In a Latin square, e*e = e pins down the only candidate identity.
  bool found = false;
  for (Element e = 0; e < order_; ++e) {
    if (mul(e, e) == e) {
      identity_ = e;
      found = true;
      break;
    }
  }
  if (!found) throw GroupError(label_ + ": no identity element");
  for (Element g = 0; g < order_; ++g)
    if (mul(identity_, g) != g || mul(g, identity_) != g)
      throw GroupError(label_ + ": identity is not two-sided");

  inverse_.assign(order_, 0);
  for (Element g = 0; g < order_; ++g) {
    for (Element h = 0; h < order_; ++h) {
      if (mul(g, h) == identity_) {
        inverse_[g] = h;
        break;
      }
    }
    if (mul(inverse_[g], g) != identity_)
      throw GroupError(label_ + ": inverse is not two-sided");
  }

  // Light's associativity test: the elements a with (xa)y = x(ay) for all
  // x, y form a closed set, so checking a generating set suffices.
  BitSet all(order_);
  for (std::size_t i = 0; i < order_; ++i) all.insert(i);
  for (Element a : generating_sequence(*this, all)) {
    for (Element x = 0; x < order_; ++x) {
      const Element xa = mul(x, a);
      for (Element y = 0; y < order_; ++y)
        if (mul(xa, y) != mul(x, mul(a, y)))
          throw GroupError(label_ + ": multiplication is not associative");
    }
  }
}

Element FiniteGroup::power(Element a, long long k) const {
  if (k < 0) {
    a = inverse_[a];
    k = -k;
  }
  Element result = identity_;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (!commute(a, b)) return false;
  return true;
}


FiniteGroup make_cyclic(std::size_t n, std::size_t cap) {
  if (n == 0) throw GroupError("cyclic group order must be positive");
  check_order_cap(n, cap);
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<Element>((i + j) % n);
  return FiniteGroup("C" + std::to_string(n), n, std::move(table));
}

FiniteGroup make_dihedral(std::size_t n, std::size_t cap) {
  if (n < 2) throw GroupError("dihedral group needs n >= 2");
  const std::size_t order = 2 * n;
  check_order_cap(order, cap);
  std::vector<Element> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    const std::size_t i = a % n, e = a / n;
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t j = b % n, f = b / n;
      // r^i s^e r^j s^f = r^(i + (-1)^e j) s^(e+f)
      const std::size_t rot = e ? (i + n - j) % n : (i + j) % n;
      table[a * order + b] = static_cast<Element>(rot + ((e ^ f) ? n : 0));
    }
  }
  return FiniteGroup("D" + std::to_string(order), order, std::move(table));
}

FiniteGroup make_generalized_quaternion(unsigned k, std::size_t cap) {
  if (k < 3) throw GroupError("generalized quaternion group needs k >= 3");
  if (k >= 32) throw OrderCapExceeded(std::size_t{1} << 31, cap);
  const std::size_t order = std::size_t{1} << k;
  check_order_cap(order, cap);
  const std::size_t half = order / 2;     // order of a
  const std::size_t quarter = order / 4;  // b^2 = a^quarter
  std::vector<Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % half, e = x / half;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t j = y % half, f = y / half;
      // a^i b^e a^j b^f = a^(i + (-1)^e j) b^e b^f, and b b = a^quarter.
      std::size_t rot = e ? (i + half - j) % half : (i + j) % half;
      if (e && f) rot = (rot + quarter) % half;
      table[x * order + y] = static_cast<Element>(rot + ((e ^ f) ? half : 0));
    }
  }
  return FiniteGroup("Q" + std::to_string(order), order, std::move(table));
}

FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                std::size_t cap) {
  const std::size_t gn = g.order(), hn = h.order();
  const std::size_t order = gn * hn;
  check_order_cap(order, cap);
  std::vector<Element> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const Element left = g.mul(static_cast<Element>(a / hn), static_cast<Element>(b / hn));
      const Element right = h.mul(static_cast<Element>(a % hn), static_cast<Element>(b % hn));
      table[a * order + b] = static_cast<Element>(left * hn + right);
    }
  return FiniteGroup(g.label() + "x" + h.label(), order, std::move(table));
}

std::size_t element_order(const FiniteGroup& group, Element g) {
  std::size_t k = 1;
  for (Element x = g; x != group.identity(); x = group.mul(x, g)) ++k;
  return k;
}

std::vector<std::size_t> element_orders(const FiniteGroup& group) {
  std::vector<std::size_t> out(group.order());
  for (Element g = 0; g < group.order(); ++g) out[g] = element_order(group, g);
  return out;
}

Subgroup center(const FiniteGroup& group) {
  BitSet all(group.order());
  for (std::size_t i = 0; i < group.order(); ++i) all.insert(i);
  const auto gens = generating_sequence(group, all);
  BitSet z(group.order());
  for (Element x = 0; x < group.order(); ++x) {
    if (std::all_of(gens.begin(), gens.end(),
                    [&](Element g) { return group.commute(x, g); }))
      z.insert(x);
  }
  return Subgroup(std::move(z));
}

BitSet generate(const FiniteGroup& group, std::span<const Element> gens) {
  BitSet set(group.order());
  std::vector<Element> queue{group.identity()};
  set.insert(group.identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    for (Element g : gens) {
      const Element y = group.mul(x, g);
      if (!set.contains(y)) {
        set.insert(y);
        queue.push_back(y);
      }
    }
  }
  return set;
}

std::vector<Element> generating_sequence(const FiniteGroup& group,
                                         const BitSet& members) {
  std::vector<std::pair<std::size_t, Element>> by_order;
  members.for_each([&](std::size_t i) {
    const auto g = static_cast<Element>(i);
    if (g != group.identity()) by_order.emplace_back(element_order(group, g), g);
  });
  std::sort(by_order.begin(), by_order.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });

  std::vector<Element> gens;
  BitSet span(group.order());
  span.insert(group.identity());
  const std::size_t target = members.count();
  for (const auto& [ord, g] : by_order) {
    if (span.count() == target) break;
    if (span.contains(g)) continue;
    gens.push_back(g);
    span = generate(group, gens);
  }
  return gens;
}

bool satisfies_group_axioms_exhaustive(const FiniteGroup& group) {
  const std::size_t n = group.order();
  for (Element a = 0; a < n; ++a) {
    if (group.mul(group.identity(), a) != a || group.mul(a, group.identity()) != a)
      return false;
    if (group.mul(a, group.inverse(a)) != group.identity() ||
        group.mul(group.inverse(a), a) != group.identity())
      return false;
    for (Element b = 0; b < n; ++b) {
      const Element ab = group.mul(a, b);
      for (Element c = 0; c < n; ++c)
        if (group.mul(ab, c) != group.mul(a, group.mul(b, c))) return false;
    }
  }
  return true;
}

std::vector<CorpusEntry> corpus_entries(std::size_t max_order) {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string label, std::size_t order,
                 std::function<FiniteGroup(std::size_t)> make) {
    if (order <= max_order) out.push_back({std::move(label), order, std::move(make)});
  };
  for (std::size_t n = 1; n <= max_order; ++n)
    add("C" + std::to_string(n), n, [n](std::size_t cap) { return make_cyclic(n, cap); });
  for (std::size_t n = 2; 2 * n <= max_order; ++n)
    add("D" + std::to_string(2 * n), 2 * n,
        [n](std::size_t cap) { return make_dihedral(n, cap); });
  for (unsigned k = 3; k < 31 && (std::size_t{1} << k) <= max_order; ++k)
    add("Q" + std::to_string(std::size_t{1} << k), std::size_t{1} << k,
        [k](std::size_t cap) { return make_generalized_quaternion(k, cap); });
  for (std::size_t p = 2; p * p <= max_order; ++p)
    if (is_prime(p))
      add("C" + std::to_string(p) + "xC" + std::to_string(p), p * p, [p](std::size_t cap) {
        return make_direct_product(make_cyclic(p), make_cyclic(p), cap);
      });

  using Maker = FiniteGroup (*)();
  auto product = [&](const char* left_label, std::size_t left_order, Maker left,
                     const char* right_label, std::size_t right_order, Maker right) {
    add(std::string(left_label) + "x" + right_label, left_order * right_order,
        [left, right](std::size_t cap) { return make_direct_product(left(), right(), cap); });
  };
  static constexpr Maker c2 = [] { return make_cyclic(2); };
  static constexpr Maker c3 = [] { return make_cyclic(3); };
  static constexpr Maker c4 = [] { return make_cyclic(4); };
  static constexpr Maker c5 = [] { return make_cyclic(5); };
  static constexpr Maker c6 = [] { return make_cyclic(6); };
  static constexpr Maker s3 = [] { return make_dihedral(3); };
  static constexpr Maker q8 = [] { return make_generalized_quaternion(3); };
  static constexpr Maker c2c2 = [] { return make_direct_product(make_cyclic(2), make_cyclic(2)); };
  product("C2xC2", 4, c2c2, "C2", 2, c2);
  product("C2", 2, c2, "C4", 4, c4);
  product("C4", 4, c4, "C4", 4, c4);
  product("C2", 2, c2, "C6", 6, c6);
  product("C3", 3, c3, "D6", 6, s3);
  product("C5", 5, c5, "D6", 6, s3);
  product("C2", 2, c2, "Q8", 8, q8);
  product("C3", 3, c3, "Q8", 8, q8);
  product("D6", 6, s3, "D6", 6, s3);
  return out;
}

std::vector<FiniteGroup> build_corpus(std::size_t max_order, std::size_t cap) {
  std::vector<FiniteGroup> corpus;
  for (const auto& entry : corpus_entries(std::min(max_order, cap)))
    corpus.push_back(entry.make(cap));
  return corpus;
}

}  // namespace densesol
