// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "densesol/classify.hpp"
#include "densesol/density.hpp"
#include "densesol/number_theory.hpp"
#include "densesol/solitary.hpp"
#include "oracle.hpp"

using namespace densesol;

namespace {

constexpr std::size_t kSweepOrder = 400;
constexpr double kSweepSeconds = 60.0;

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] AC%d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool dense(const FiniteGroup& g) { return has_dense_solitary(g).verdict; }

struct PerTriple {
  std::size_t checked = 0;
  std::vector<std::string> eq1_failures;
  std::vector<std::string> bijection_failures;
  std::vector<std::string> conjugacy_failures;
  std::vector<std::string> lattice_failures;
  std::size_t meets_not_intersections = 0;
};

std::string first_few(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size() && i < 5; ++i) out += (i ? ", " : " ") + v[i];
  return out;
}

void check_triple(const SweepItem& item, PerTriple& acc) {
  const auto& p = item.params;
  const auto& lat = item.lattice;
  ++acc.checked;

  // Parameter-side solitary set against the generic one.
  BitSet from_params(lat.size());
  bool mapped = true;
  for (const auto& t : zm_solitary_triples(p)) {
    const auto idx = lat.index_of(triple_to_subgroup(p, t));
    if (!idx) {
      mapped = false;
      break;
    }
    from_params.insert(*idx);
  }
  if (!mapped || !(from_params == item.solitary)) acc.eq1_failures.push_back(p.label());

  // |L| = number of subgroups, injective map, order formula.
  const auto triples = enumerate_triple_set(p);
  bool bijection = triples.size() == lat.size();
  std::vector<bool> hit(lat.size(), false);
  for (const auto& t : triples) {
    const auto h = triple_to_subgroup(p, t);
    const auto idx = lat.index_of(h);
    if (!idx || hit[*idx] || h.order() != p.order() / (std::size_t{t.m1} * t.n1)) {
      bijection = false;
      break;
    }
    hit[*idx] = true;
  }
  if (!bijection) acc.bijection_failures.push_back(p.label());

  // Equal order implies conjugate.
  std::map<std::size_t, std::vector<std::size_t>> by_order;
  for (std::size_t i = 0; i < lat.size(); ++i) by_order[lat.node(i).order()].push_back(i);
  for (const auto& [order, ids] : by_order) {
    const auto conj = conjugates(item.group, lat.node(ids.front()));
    if (conj.size() != ids.size()) {
      acc.conjugacy_failures.push_back(p.label() + " order " + std::to_string(order));
      break;
    }
  }

  const auto sol = check_solitary_lattice(lat, item.solitary);
  if (!sol.is_lattice) acc.lattice_failures.push_back(p.label());
  if (!sol.meets_are_intersections) ++acc.meets_not_intersections;
}

}  // namespace

int main() {
  // AC1, with AC3, AC4, AC7 and the ZM half of AC8 riding on the same sweep.
  PerTriple per;
  SweepOptions options;
  options.on_triple = [&](const SweepItem& item) { check_triple(item, per); };
  const auto start = std::chrono::steady_clock::now();
  const auto sweep = verify_theorem(kSweepOrder, options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  {
    std::string detail = std::to_string(sweep.triples) + " ZM triples and " +
                         std::to_string(sweep.corpus_groups) + " corpus groups up to order " +
                         std::to_string(kSweepOrder) + ", " +
                         std::to_string(sweep.disagreements.size()) + " disagreements, " +
                         std::to_string(seconds) + " s (limit " +
                         std::to_string(static_cast<int>(kSweepSeconds)) + " s)";
    for (const auto& d : sweep.disagreements) detail += "; " + d.label;
    report(1, "theorem sweep", sweep.triples == 802 && sweep.disagreements.empty() &&
                                   seconds < kSweepSeconds && sweep.beta0_witness &&
                                   sweep.beta1_witness,
           detail);
  }

  // AC2
  {
    bool ok = dense(zm_group(validate_zm_triple(3, 2, 2))) &&
              dense(zm_group(validate_zm_triple(3, 4, 2))) &&
              dense(zm_group(validate_zm_triple(13, 12, 12))) &&
              dense(zm_group(validate_zm_triple(13, 6, 12)));
    bool literal_rejected = false;
    try {
      validate_zm_triple(13, 6, 2);
    } catch (const ZmError& e) {
      literal_rejected = e.kind() == ZmErrorKind::OrderViolation && pow_mod(2, 6, 13) == 12;
    }
    report(2, "worked examples", ok && literal_rejected,
           std::string("ZM(3,2,2), ZM(3,4,2), ZM(13,12,12), ZM(13,6,12) dense: ") +
               (ok ? "yes" : "no") + "; ZM(13,6,2) rejected (2^6 = 12 mod 13): " +
               (literal_rejected ? "yes" : "no"));
  }

  report(3, "solitary set from parameters", per.checked == sweep.triples && per.eq1_failures.empty(),
         std::to_string(per.checked) + " triples, " + std::to_string(per.eq1_failures.size()) +
             " mismatches" + first_few(per.eq1_failures));
  report(4, "parameter set bijection", per.checked == sweep.triples && per.bijection_failures.empty(),
         std::to_string(per.checked) + " triples, " +
             std::to_string(per.bijection_failures.size()) + " failures" +
             first_few(per.bijection_failures));

  // AC5 and AC6 share the p-group corpus.
  struct PGroup {
    FiniteGroup group;
    std::size_t prime;
    bool cyclic;
    bool quaternion;
  };
  std::vector<PGroup> pgroups;
  for (std::size_t p : {2u, 3u, 5u})
    for (std::size_t q = p; q <= 128; q *= p) pgroups.push_back({make_cyclic(q), p, true, false});
  for (unsigned k = 3; k <= 5; ++k)
    pgroups.push_back({make_generalized_quaternion(k), 2, false, true});
  pgroups.push_back({make_dihedral(4), 2, false, false});
  pgroups.push_back({make_dihedral(8), 2, false, false});
  for (std::size_t p : {2u, 3u, 5u})
    pgroups.push_back({make_direct_product(make_cyclic(p), make_cyclic(p)), p, false, false});
  {
    std::vector<std::string> wrong;
    for (const auto& g : pgroups)
      if (dense(g.group) != g.cyclic) wrong.push_back(g.group.label());
    report(5, "p-groups dense iff cyclic", wrong.empty(),
           std::to_string(pgroups.size()) + " p-groups, " + std::to_string(wrong.size()) +
               " wrong" + first_few(wrong));
  }
  {
    std::vector<std::string> wrong;
    for (const auto& g : pgroups) {
      std::size_t count = 0;
      const auto lat_h = all_subgroups(g.group);
      for (const auto& h : lat_h.nodes()) count += h.order() == g.prime;
      if ((count == 1) != (g.cyclic || g.quaternion)) wrong.push_back(g.group.label());
    }
    report(6, "unique subgroup of order p", wrong.empty(),
           std::to_string(pgroups.size()) + " p-groups, " + std::to_string(wrong.size()) +
               " wrong" + first_few(wrong));
  }

  report(7, "equal order implies conjugate", per.checked == sweep.triples && per.conjugacy_failures.empty(),
         std::to_string(per.checked) + " ZM groups, " +
             std::to_string(per.conjugacy_failures.size()) + " findings" +
             first_few(per.conjugacy_failures));

  // AC8: corpus half (the ZM half ran in the sweep).
  {
    std::vector<std::string> corpus_failures;
    std::size_t corpus = 0;
    std::size_t corpus_meets = 0;
    for (const auto& entry : corpus_entries(kSweepOrder)) {
      const auto g = entry.make(kDefaultOrderCap);
      ++corpus;
      const auto check = check_solitary_lattice(g);
      if (!check.is_lattice) corpus_failures.push_back(entry.label);
      if (!check.meets_are_intersections) ++corpus_meets;
    }
    for (const auto& g : pgroups) {
      ++corpus;
      const auto check = check_solitary_lattice(g.group);
      if (!check.is_lattice) corpus_failures.push_back(g.group.label());
      if (!check.meets_are_intersections) ++corpus_meets;
    }
    const bool ok = per.lattice_failures.empty() && corpus_failures.empty();
    report(8, "solitary subgroups form a lattice", ok,
           std::to_string(per.checked) + " ZM groups and " + std::to_string(corpus) +
               " corpus groups, " +
               std::to_string(per.lattice_failures.size() + corpus_failures.size()) +
               " failures" + first_few(per.lattice_failures) + first_few(corpus_failures) +
               "; meet differs from intersection in " +
               std::to_string(per.meets_not_intersections) + " ZM and " +
               std::to_string(corpus_meets) + " corpus groups");
  }

  // AC9: frozen counts, each established by subset enumeration and by the
  // library.
  {
    const auto s3 = zm_group(validate_zm_triple(3, 2, 2));
    const auto q8 = make_generalized_quaternion(3);
    const auto dic3 = zm_group(validate_zm_triple(3, 4, 2));
    auto sizes = [](const std::vector<oracle::MemberList>& v) {
      std::vector<std::size_t> out;
      for (const auto& s : v) out.push_back(s.size());
      return out;
    };
    auto lib_sol = [](const FiniteGroup& g) {
      std::vector<oracle::MemberList> out;
      for (const auto& h : solitary_subgroups(g)) out.push_back(h.elements());
      return out;
    };
    const auto s3_sol = oracle::solitary_by_definition(s3);
    const auto q8_sol = oracle::solitary_by_definition(q8);
    const bool counts = oracle::subgroups_by_subsets(s3).size() == 6 &&
                        all_subgroups(s3).size() == 6 &&
                        oracle::subgroups_by_subsets(q8).size() == 6 &&
                        all_subgroups(q8).size() == 6 &&
                        oracle::subgroups_by_subsets(dic3).size() == 8 &&
                        all_subgroups(dic3).size() == 8;
    const bool sol = sizes(s3_sol) == std::vector<std::size_t>{1, 3, 6} && lib_sol(s3) == s3_sol &&
                     sizes(q8_sol) == std::vector<std::size_t>{1, 2, 8} && lib_sol(q8) == q8_sol &&
                     q8_sol[1] == center(q8).elements();
    report(9, "known counts", counts && sol,
           std::string("|L(S3)| = |L(Q8)| = 6, |L(Dic3)| = 8: ") + (counts ? "yes" : "no") +
               "; Sol(S3) = {1, A3, S3}, Sol(Q8) = {1, Z, Q8}: " + (sol ? "yes" : "no"));
  }

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
