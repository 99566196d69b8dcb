#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "densesol/density.hpp"
#include "densesol/group.hpp"
#include "densesol/lattice.hpp"
#include "densesol/zm.hpp"

namespace densesol {

enum class Branch { Cyclic, ZmClassified, Rejected };

const char* to_string(Branch branch);

/// n = d^alpha * p^beta with beta in {0, 1}; p is absent when beta = 0.
struct ZmDecomposition {
  std::uint32_t m = 0;
  std::uint32_t d = 0;
  unsigned alpha = 0;
  std::optional<std::uint64_t> p;
  unsigned beta = 0;
};

struct ClassificationResult {
  bool verdict = false;
  Branch branch = Branch::Rejected;
  /// Set when branch is ZmClassified.
  std::optional<ZmDecomposition> detail;
  /// The triple (m, n, r) a ZM group was recognized as, if any.
  std::optional<std::array<std::uint32_t, 3>> triple;
  /// Why the group was rejected; empty otherwise.
  std::string reason;
};

/// Decides whether ZM(m, n, r) has dense solitary subgroups from its
/// parameters: m prime, d = o_m(r) prime, and n = d^alpha p^beta with
/// alpha >= 1, beta in {0, 1}, p prime and p != d.
ClassificationResult classify_zm(const ZmParams& p);
/// Validates first; throws ZmError on an invalid triple.
ClassificationResult classify_zm(long long m, long long n, long long r);

/// Cyclic groups are accepted outright; otherwise the group is matched
/// against some ZM(m, n, r) by scanning element pairs (a, b) with
/// |a| = m, |b| = n, gcd(m, n) = 1 and b^-1 a b = a^r, then classified by
/// classify_zm. Anything else is rejected.
ClassificationResult classify_group(const FiniteGroup& group);

/// Every valid triple with m n <= max_order, lexicographic in (m, n, r).
/// Isomorphic triples are kept.
std::vector<ZmParams> enumerate_zm_triples(std::size_t max_order);

struct Disagreement {
  std::string label;
  bool predicate = false;    // classification verdict
  bool brute_force = false;  // has_dense_solitary verdict
  friend auto operator<=>(const Disagreement&, const Disagreement&) = default;
};

struct SweepReport {
  std::size_t max_order = 0;
  std::size_t triples = 0;
  std::size_t corpus_groups = 0;
  std::size_t agreements = 0;
  std::vector<Disagreement> disagreements;  // sorted
  std::size_t dense_triples = 0;
  /// First triple with a dense verdict of each shape of n.
  std::optional<std::string> beta0_witness;
  std::optional<std::string> beta1_witness;
  double seconds = 0.0;
};

/// Everything computed for one swept ZM group, for callers that want to run
/// further checks without rebuilding the lattice.
struct SweepItem {
  const ZmParams& params;
  const FiniteGroup& group;
  const SubgroupLattice& lattice;
  const BitSet& solitary;
  const ClassificationResult& predicate;
  const DensityReport& density;
};

struct SweepOptions {
  std::size_t cap = kDefaultOrderCap;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Also compare classify_group with brute force on build_corpus(max_order).
  bool include_corpus = true;
  /// Called once per ZM triple. Calls are serialized.
  std::function<void(const SweepItem&)> on_triple;
};

/// Compares classify_zm with has_dense_solitary for every enumerated triple,
/// and classify_group with has_dense_solitary on the corpus.
SweepReport verify_theorem(std::size_t max_order, const SweepOptions& options = {});

}  // namespace densesol
