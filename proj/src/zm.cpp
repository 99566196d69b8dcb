#include "densesol/zm.hpp"

#include <numeric>

#include "densesol/number_theory.hpp"

namespace densesol {

const char* to_string(ZmErrorKind kind) {
  switch (kind) {
    case ZmErrorKind::Domain: return "domain";
    case ZmErrorKind::AbelianTriple: return "abelian_triple";
    case ZmErrorKind::GcdViolation: return "gcd_violation";
    case ZmErrorKind::OrderViolation: return "order_violation";
    case ZmErrorKind::NotInTripleSet: return "not_in_triple_set";
  }
  return "unknown";
}

std::string ZmParams::label() const {
  return "ZM(" + std::to_string(m_) + "," + std::to_string(n_) + "," +
         std::to_string(r_) + ")";
}

ZmParams validate_zm_triple(long long m, long long n, long long r) {
  const std::string name = "(" + std::to_string(m) + "," + std::to_string(n) +
                           "," + std::to_string(r) + ")";
  constexpr long long kLimit = 1LL << 30;
  if (m < 2 || n < 2 || m > kLimit || n > kLimit)
    throw ZmError(ZmErrorKind::Domain, name + ": need m >= 2 and n >= 2");
  if (r < 1 || r >= m)
    throw ZmError(ZmErrorKind::Domain, name + ": need 1 <= r < m");
  if (r == 1)
    throw ZmError(ZmErrorKind::AbelianTriple, name + ": r = 1 gives an abelian group");
  if (std::gcd(m, n) != 1)
    throw ZmError(ZmErrorKind::GcdViolation, name + ": gcd(m, n) != 1");
  if (std::gcd(m, r - 1) != 1)
    throw ZmError(ZmErrorKind::GcdViolation, name + ": gcd(m, r - 1) != 1");
  const auto um = static_cast<std::uint64_t>(m), un = static_cast<std::uint64_t>(n),
             ur = static_cast<std::uint64_t>(r);
  if (pow_mod(ur, un, um) != 1)
    throw ZmError(ZmErrorKind::OrderViolation,
                  name + ": r^n != 1 (mod m), r^n = " +
                      std::to_string(pow_mod(ur, un, um)) + " (mod m)");

  ZmParams p;
  p.m_ = static_cast<std::uint32_t>(m);
  p.n_ = static_cast<std::uint32_t>(n);
  p.r_ = static_cast<std::uint32_t>(r);
  p.d_ = static_cast<std::uint32_t>(multiplicative_order(ur, um));
  p.r_powers_.resize(p.n_);
  std::uint64_t x = 1;
  for (std::uint32_t u = 0; u < p.n_; ++u) {
    p.r_powers_[u] = static_cast<std::uint32_t>(x);
    x = x * ur % um;
  }
  return p;
}

ZmElement zm_mul(const ZmParams& p, ZmElement g, ZmElement h) {
  if (g.x >= p.n() || h.x >= p.n() || g.y >= p.m() || h.y >= p.m())
    throw ZmError(ZmErrorKind::Domain, "ZM element out of range for " + p.label());
  const std::uint64_t y = (std::uint64_t{g.y} * p.r_pow(h.x) + h.y) % p.m();
  return {(g.x + h.x) % p.n(), static_cast<std::uint32_t>(y)};
}

FiniteGroup zm_group(const ZmParams& p, std::size_t cap) {
  const std::size_t order = p.order();
  check_order_cap(order, cap);
  const std::uint32_t m = p.m(), n = p.n();
  std::vector<Element> table(order * order);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < m; ++y) {
      const std::size_t row = (std::size_t{x} * m + y) * order;
      for (std::uint32_t u = 0; u < n; ++u) {
        const std::uint32_t bx = (x + u) % n;
        const std::uint64_t shifted = std::uint64_t{y} * p.r_pow(u);
        for (std::uint32_t v = 0; v < m; ++v)
          table[row + std::size_t{u} * m + v] =
              bx * m + static_cast<std::uint32_t>((shifted + v) % m);
      }
    }
  return FiniteGroup(p.label(), order, std::move(table));
}

namespace {

// sum_{k < n/n1} r^(n1 k) mod m1, the integer (r^n - 1)/(r^n1 - 1) reduced.
std::uint64_t quotient_mod(const ZmParams& p, std::uint32_t n1, std::uint32_t m1) {
  const std::uint64_t step = pow_mod(p.r(), n1, m1);
  std::uint64_t term = 1 % m1, sum = 0;
  for (std::uint32_t k = 0; k < p.n() / n1; ++k) {
    sum = (sum + term) % m1;
    term = term * step % m1;
  }
  return sum;
}

}  // namespace

bool in_triple_set(const ZmParams& p, SubgroupTriple t) {
  if (t.m1 == 0 || t.n1 == 0 || p.m() % t.m1 || p.n() % t.n1 || t.s >= t.m1)
    return false;
  return std::uint64_t{t.s} * quotient_mod(p, t.n1, t.m1) % t.m1 == 0;
}

std::vector<SubgroupTriple> enumerate_triple_set(const ZmParams& p) {
  std::vector<SubgroupTriple> out;
  for (auto m1 : divisors(p.m()))
    for (auto n1 : divisors(p.n())) {
      const auto q = quotient_mod(p, static_cast<std::uint32_t>(n1),
                                  static_cast<std::uint32_t>(m1));
      for (std::uint64_t s = 0; s < m1; ++s)
        if (s * q % m1 == 0)
          out.push_back({static_cast<std::uint32_t>(m1),
                         static_cast<std::uint32_t>(n1),
                         static_cast<std::uint32_t>(s)});
    }
  return out;
}

Subgroup triple_to_subgroup(const ZmParams& p, SubgroupTriple t) {
  if (!in_triple_set(p, t))
    throw ZmError(ZmErrorKind::NotInTripleSet,
                  "(" + std::to_string(t.m1) + "," + std::to_string(t.n1) + "," +
                      std::to_string(t.s) + ") is not in the parameter set of " +
                      p.label());
  BitSet members(p.order());
  const ZmElement alpha{t.n1 % p.n(), t.s};
  ZmElement coset{0, 0};
  for (std::uint32_t k = 0; k < p.n() / t.n1; ++k) {
    coset = zm_mul(p, coset, alpha);
    for (std::uint32_t j = 0; j < p.m(); j += t.m1)
      members.insert(zm_index(p, zm_mul(p, coset, ZmElement{0, j})));
  }
  return Subgroup(std::move(members));
}

std::vector<SubgroupTriple> zm_solitary_triples(const ZmParams& p) {
  std::vector<SubgroupTriple> out;
  for (auto m1 : divisors(p.m()))
    for (auto n1 : divisors(p.n())) {
      // m1 | r^n1 - 1
      if (pow_mod(p.r(), n1, m1) == 1 % m1)
        out.push_back({static_cast<std::uint32_t>(m1), static_cast<std::uint32_t>(n1), 0});
    }
  return out;
}

}  // namespace densesol
