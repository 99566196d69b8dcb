#include "densesol/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>

#include "densesol/number_theory.hpp"
#include "densesol/solitary.hpp"

namespace densesol {

const char* to_string(Branch branch) {
  switch (branch) {
    case Branch::Cyclic: return "cyclic";
    case Branch::ZmClassified: return "zm-classified";
    case Branch::Rejected: return "rejected";
  }
  return "unknown";
}

ClassificationResult classify_zm(const ZmParams& p) {
  ClassificationResult result;
  result.triple = std::array<std::uint32_t, 3>{p.m(), p.n(), p.r()};
  const std::uint32_t m = p.m(), n = p.n(), d = p.d();
  if (!is_prime(m)) {
    result.reason = "m = " + std::to_string(m) + " is not prime";
    return result;
  }
  if (!is_prime(d)) {
    result.reason = "d = o_m(r) = " + std::to_string(d) + " is not prime";
    return result;
  }
  ZmDecomposition dec;
  dec.m = m;
  dec.d = d;
  std::uint32_t rest = n;
  while (rest % d == 0) {
    rest /= d;
    ++dec.alpha;
  }
  if (rest == 1) {
    dec.beta = 0;
  } else if (is_prime(rest)) {
    dec.beta = 1;
    dec.p = rest;
  } else {
    result.reason = "n / d^alpha = " + std::to_string(rest) + " is neither 1 nor a prime";
    return result;
  }
  result.verdict = true;
  result.branch = Branch::ZmClassified;
  result.detail = dec;
  return result;
}

ClassificationResult classify_zm(long long m, long long n, long long r) {
  return classify_zm(validate_zm_triple(m, n, r));
}

ClassificationResult classify_group(const FiniteGroup& group) {
  ClassificationResult result;
  const std::size_t order = group.order();
  const auto orders = element_orders(group);
  if (std::find(orders.begin(), orders.end(), order) != orders.end()) {
    result.verdict = true;
    result.branch = Branch::Cyclic;
    return result;
  }

  // A Sylow p-subgroup is cyclic iff some element has the full p-part as order.
  for (const auto& [prime, exponent] : factorize(order)) {
    std::size_t part = 1;
    for (unsigned i = 0; i < exponent; ++i) part *= prime;
    if (std::find(orders.begin(), orders.end(), part) == orders.end()) {
      result.reason = "Sylow " + std::to_string(prime) + "-subgroup is not cyclic";
      return result;
    }
  }

  std::vector<long long> position(order);
  for (auto m : divisors(order)) {
    const std::size_t n = order / m;
    if (m < 3 || n < 2 || std::gcd(m, n) != 1) continue;
    for (Element a = 0; a < order; ++a) {
      if (orders[a] != m) continue;
      std::fill(position.begin(), position.end(), -1);
      Element x = group.identity();
      for (std::size_t i = 0; i < m; ++i, x = group.mul(x, a)) position[x] = static_cast<long long>(i);
      for (Element b = 0; b < order; ++b) {
        if (orders[b] != n) continue;
        const long long r = position[group.mul(group.mul(group.inverse(b), a), b)];
        if (r < 2 || std::gcd(static_cast<long long>(m), r - 1) != 1) continue;
        // <a> is normalized by b and |<a>||<b>| = |G|, so G = <a, b>.
        auto classified = classify_zm(static_cast<long long>(m), static_cast<long long>(n), r);
        return classified;
      }
    }
  }
  result.reason = "no ZM presentation found";
  return result;
}

std::vector<ZmParams> enumerate_zm_triples(std::size_t max_order) {
  std::vector<ZmParams> out;
  for (std::uint64_t m = 3; 2 * m <= max_order; ++m)
    for (std::uint64_t n = 2; m * n <= max_order; ++n) {
      if (std::gcd(m, n) != 1) continue;
      for (std::uint64_t r = 2; r < m; ++r) {
        if (std::gcd(m, r - 1) != 1 || pow_mod(r, n, m) != 1) continue;
        out.push_back(validate_zm_triple(static_cast<long long>(m),
                                         static_cast<long long>(n),
                                         static_cast<long long>(r)));
      }
    }
  return out;
}

namespace {

struct Outcome {
  std::string label;
  bool predicate = false;
  bool brute_force = false;
  std::optional<unsigned> beta;
};

template <class Job>
void run_parallel(std::size_t count, unsigned threads, Job&& job) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) job(i);
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace

SweepReport verify_theorem(std::size_t max_order, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  check_order_cap(max_order, options.cap);

  SweepReport report;
  report.max_order = max_order;
  const auto triples = enumerate_zm_triples(max_order);
  const auto corpus = options.include_corpus ? corpus_entries(max_order)
                                             : std::vector<CorpusEntry>{};
  report.triples = triples.size();
  report.corpus_groups = corpus.size();

  std::vector<Outcome> outcomes(triples.size() + corpus.size());
  std::mutex callback_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  run_parallel(outcomes.size(), options.threads, [&](std::size_t i) {
    try {
      Outcome& out = outcomes[i];
      if (i < triples.size()) {
        const ZmParams& p = triples[i];
        const auto group = zm_group(p, options.cap);
        const auto lat = all_subgroups(group, options.cap);
        const auto sol = solitary_mask(group, lat);
        const auto density = has_dense_solitary(lat, sol);
        const auto predicate = classify_zm(p);
        out.label = p.label();
        out.predicate = predicate.verdict;
        out.brute_force = density.verdict;
        if (predicate.detail) out.beta = predicate.detail->beta;
        if (options.on_triple) {
          std::lock_guard lock(callback_mutex);
          options.on_triple(SweepItem{p, group, lat, sol, predicate, density});
        }
      } else {
        const auto& entry = corpus[i - triples.size()];
        const auto group = entry.make(options.cap);
        out.label = entry.label;
        out.predicate = classify_group(group).verdict;
        out.brute_force = has_dense_solitary(group, options.cap).verdict;
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& out = outcomes[i];
    if (out.predicate == out.brute_force) {
      ++report.agreements;
    } else {
      report.disagreements.push_back({out.label, out.predicate, out.brute_force});
    }
    if (i < triples.size() && out.brute_force) {
      ++report.dense_triples;
      if (out.beta == 0u && !report.beta0_witness) report.beta0_witness = out.label;
      if (out.beta == 1u && !report.beta1_witness) report.beta1_witness = out.label;
    }
  }
  std::sort(report.disagreements.begin(), report.disagreements.end());
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace densesol
