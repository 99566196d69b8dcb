#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "densesol/group.hpp"

namespace densesol {

enum class ZmErrorKind {
  Domain,          // m < 2, n < 2, r outside 1..m-1, or element out of range
  AbelianTriple,   // r = 1, so o_m(r) = 1
  GcdViolation,    // gcd(m, n) != 1 or gcd(m, r - 1) != 1
  OrderViolation,  // r^n != 1 (mod m)
  NotInTripleSet,  // (m1, n1, s) outside the parameter set
};

/// Stable machine-readable name, e.g. "gcd_violation".
const char* to_string(ZmErrorKind kind);

class ZmError : public std::invalid_argument {
 public:
  ZmError(ZmErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  ZmErrorKind kind() const { return kind_; }

 private:
  ZmErrorKind kind_;
};

/// Validated parameters of ZM(m, n, r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r>.
/// Only validate_zm_triple creates these.
class ZmParams {
 public:
  std::uint32_t m() const { return m_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t r() const { return r_; }
  /// Multiplicative order of r modulo m.
  std::uint32_t d() const { return d_; }
  std::size_t order() const { return std::size_t{m_} * n_; }
  /// r^u mod m for 0 <= u < n.
  std::uint32_t r_pow(std::uint32_t u) const { return r_powers_[u]; }
  std::string label() const;

  friend bool operator==(const ZmParams& a, const ZmParams& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.r_ == b.r_;
  }

 private:
  friend ZmParams validate_zm_triple(long long m, long long n, long long r);
  ZmParams() = default;

  std::uint32_t m_ = 0, n_ = 0, r_ = 0, d_ = 0;
  std::vector<std::uint32_t> r_powers_;
};

/// Normal form b^x a^y.
struct ZmElement {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  friend auto operator<=>(const ZmElement&, const ZmElement&) = default;
};

/// (m1, n1, s): names the subgroup <a^m1, b^n1 a^s>.
struct SubgroupTriple {
  std::uint32_t m1 = 1;
  std::uint32_t n1 = 1;
  std::uint32_t s = 0;
  friend auto operator<=>(const SubgroupTriple&, const SubgroupTriple&) = default;
};

ZmParams validate_zm_triple(long long m, long long n, long long r);

/// (x, y)(u, v) = (x + u mod n, y r^u + v mod m), from a b = b a^r.
ZmElement zm_mul(const ZmParams& p, ZmElement g, ZmElement h);

/// Canonical layout: (x, y) sits at index x*m + y.
inline Element zm_index(const ZmParams& p, ZmElement e) { return e.x * p.m() + e.y; }
inline ZmElement zm_element(const ZmParams& p, Element i) {
  return {static_cast<std::uint32_t>(i / p.m()), static_cast<std::uint32_t>(i % p.m())};
}

FiniteGroup zm_group(const ZmParams& p, std::size_t cap = kDefaultOrderCap);

/// Membership in the parameter set: m1 | m, n1 | n, s < m1 and
/// m1 | s (r^n - 1)/(r^n1 - 1). The quotient is evaluated as
/// sum_{k < n/n1} r^(n1 k) mod m1.
bool in_triple_set(const ZmParams& p, SubgroupTriple t);

/// All members of the parameter set, sorted.
std::vector<SubgroupTriple> enumerate_triple_set(const ZmParams& p);

/// The union over k of (b^n1 a^s)^k <a^m1>, as a member set in the canonical
/// layout of zm_group(p). Throws ZmError(NotInTripleSet) for t outside the set.
Subgroup triple_to_subgroup(const ZmParams& p, SubgroupTriple t);

/// Triples (m1, n1, 0) of the parameter set with m1 | r^n1 - 1: the solitary
/// (equivalently normal) subgroups.
std::vector<SubgroupTriple> zm_solitary_triples(const ZmParams& p);

}  // namespace densesol
