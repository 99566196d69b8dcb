// Randomized and exhaustive property checks over ZM triples and the corpus.

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <numeric>
#include <random>

#include "densesol/classify.hpp"
#include "densesol/density.hpp"
#include "densesol/solitary.hpp"
#include "oracle.hpp"

using namespace densesol;

namespace {

std::vector<ZmParams> sample_triples(std::size_t max_order, std::size_t count, unsigned seed) {
  auto all = enumerate_zm_triples(max_order);
  std::mt19937 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  if (all.size() > count) all.erase(all.begin() + static_cast<std::ptrdiff_t>(count), all.end());
  return all;
}

std::multiset<std::size_t> order_profile(const SubgroupLattice& lat) {
  std::multiset<std::size_t> out;
  for (const auto& h : lat.nodes()) out.insert(h.order());
  return out;
}

}  // namespace

TEST_CASE("parameter set is in bijection with the subgroup lattice") {
  for (const auto& p : sample_triples(250, 60, 1)) {
    CAPTURE(p.label());
    const auto g = zm_group(p);
    const auto lat = all_subgroups(g);
    const auto triples = enumerate_triple_set(p);
    CHECK(triples.size() == lat.size());
    std::vector<bool> hit(lat.size(), false);
    for (const auto& t : triples) {
      const auto h = triple_to_subgroup(p, t);
      CHECK(h.order() == p.order() / (std::size_t{t.m1} * t.n1));
      const auto idx = lat.index_of(h);
      REQUIRE(idx);
      CHECK_FALSE(hit[*idx]);
      hit[*idx] = true;
    }
  }
}

TEST_CASE("center is <b^d> of order n/d") {
  for (const auto& p : sample_triples(300, 40, 2)) {
    CAPTURE(p.label());
    const auto z = center(zm_group(p));
    CHECK(z == triple_to_subgroup(p, {p.m(), p.d(), 0}));
    CHECK(z.order() == p.n() / p.d());
  }
}

TEST_CASE("solitary, normal and unique-of-its-order coincide in ZM groups") {
  for (const auto& p : sample_triples(200, 40, 3)) {
    CAPTURE(p.label());
    const auto g = zm_group(p);
    const auto lat = all_subgroups(g);
    const auto sol = solitary_mask(g, lat);
    std::map<std::size_t, std::size_t> per_order;
    for (const auto& h : lat.nodes()) ++per_order[h.order()];
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const bool unique = per_order[lat.node(i).order()] == 1;
      CHECK(sol.contains(i) == unique);
      CHECK(is_normal(g, lat.node(i)) == unique);
    }
    // Same set from the parameter side.
    BitSet expected(lat.size());
    for (const auto& t : zm_solitary_triples(p)) expected.insert(*lat.index_of(triple_to_subgroup(p, t)));
    CHECK(expected == sol);
  }
}

TEST_CASE("equal-order subgroups of ZM groups are conjugate") {
  for (const auto& p : sample_triples(200, 40, 4)) {
    CAPTURE(p.label());
    const auto g = zm_group(p);
    const auto lat = all_subgroups(g);
    std::map<std::size_t, std::vector<std::size_t>> by_order;
    for (std::size_t i = 0; i < lat.size(); ++i) by_order[lat.node(i).order()].push_back(i);
    for (const auto& [order, ids] : by_order) {
      const auto conj = conjugates(g, lat.node(ids.front()));
      CHECK(conj.size() == ids.size());
      for (const auto& c : conj) CHECK(lat.index_of(c));
    }
  }
}

TEST_CASE("are_isomorphic is an equivalence relation on small groups") {
  std::vector<FiniteGroup> groups;
  for (const auto& e : corpus_entries(24))
    if (e.order == 8 || e.order == 12 || e.order == 16) groups.push_back(e.make(kDefaultOrderCap));
  for (const auto& p : enumerate_zm_triples(16)) groups.push_back(zm_group(p));
  for (std::size_t i = 0; i < groups.size(); ++i) {
    CHECK(are_isomorphic(groups[i], groups[i]));
    for (std::size_t j = 0; j < groups.size(); ++j) {
      const bool ij = are_isomorphic(groups[i], groups[j]);
      CHECK(ij == are_isomorphic(groups[j], groups[i]));
      if (!(fingerprint(groups[i]) == fingerprint(groups[j]))) CHECK_FALSE(ij);
      if (!ij) continue;
      for (std::size_t k = 0; k < groups.size(); ++k)
        if (are_isomorphic(groups[j], groups[k])) CHECK(are_isomorphic(groups[i], groups[k]));
    }
  }
}

TEST_CASE("lattice, solitary set and verdict survive relabelling") {
  std::mt19937 rng(11);
  for (const auto& p : sample_triples(120, 15, 5)) {
    const auto g = zm_group(p);
    std::vector<Element> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = oracle::relabel(g, perm);
    CAPTURE(p.label());
    const auto lg = all_subgroups(g), lh = all_subgroups(h);
    CHECK(order_profile(lg) == order_profile(lh));
    CHECK(solitary_mask(g, lg).count() == solitary_mask(h, lh).count());
    CHECK(has_dense_solitary(lg, solitary_mask(g, lg)).verdict ==
          has_dense_solitary(lh, solitary_mask(h, lh)).verdict);
    CHECK(are_isomorphic(g, h));
    // Relabelled member sets of g's subgroups are exactly h's subgroups.
    for (const auto& sub : lg.nodes()) {
      BitSet moved(g.order());
      sub.members().for_each([&](std::size_t x) { moved.insert(perm[x]); });
      CHECK(lh.index_of(Subgroup(moved)));
    }
  }
}

TEST_CASE("isomorphic ZM triples get the same classification") {
  const auto triples = enumerate_zm_triples(120);
  std::map<std::size_t, std::vector<const ZmParams*>> by_order;
  for (const auto& p : triples) by_order[p.order()].push_back(&p);
  std::size_t compared = 0;
  for (const auto& [order, list] : by_order) {
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        if (!are_isomorphic(zm_group(*list[i]), zm_group(*list[j]))) continue;
        ++compared;
        CHECK(classify_zm(*list[i]).verdict == classify_zm(*list[j]).verdict);
      }
  }
  CHECK(compared > 0);
}

TEST_CASE("a unique subgroup of order p: exactly the cyclic and generalized quaternion p-groups") {
  struct Case {
    FiniteGroup group;
    std::size_t prime;
    bool expected;
  };
  std::vector<Case> cases;
  for (std::size_t p : {2u, 3u, 5u})
    for (std::size_t q = p; q <= 128; q *= p) cases.push_back({make_cyclic(q), p, true});
  for (unsigned k = 3; k <= 6; ++k) cases.push_back({make_generalized_quaternion(k), 2, true});
  for (std::size_t n : {2u, 4u, 8u, 16u, 32u}) cases.push_back({make_dihedral(n), 2, false});
  for (std::size_t p : {2u, 3u, 5u})
    cases.push_back({make_direct_product(make_cyclic(p), make_cyclic(p)), p, false});
  cases.push_back({make_direct_product(make_cyclic(2), make_generalized_quaternion(3)), 2, false});
  for (const auto& c : cases) {
    CAPTURE(c.group.label());
    std::size_t count = 0;
    const auto lat_h = all_subgroups(c.group);
    for (const auto& h : lat_h.nodes()) count += h.order() == c.prime;
    CHECK((count == 1) == c.expected);
  }
}
