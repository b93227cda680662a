#ifndef CHEVKIT_ZCOUNT_HPP
#define CHEVKIT_ZCOUNT_HPP

// Counting z-classes by formula: partitions, the partition-product count
// z(n), and truncated generating functions built from z(x).

#include "chevkit/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevkit {

/// Multiplicities k_1..k_n of a partition of n = Σ i k_i (index 0 is k_1).
using Partition = std::vector<uint32_t>;

namespace detail {

inline void partitions_rec(uint32_t n, uint32_t remaining, uint32_t max_part, Partition& cur,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (uint32_t part = std::min(max_part, remaining); part >= 1; --part) {
    ++cur[part - 1];
    partitions_rec(n, remaining - part, part, cur, out);
    --cur[part - 1];
  }
}

}  // namespace detail

/// All partitions of n, largest parts first.
inline std::vector<Partition> partitions(uint32_t n) {
  std::vector<Partition> out;
  Partition cur(n, 0);
  detail::partitions_rec(n, n, n, cur, out);
  return out;
}

/// p(0..n) by the standard coin-change recurrence.
inline std::vector<BigInt> partition_counts(uint32_t n) {
  std::vector<BigInt> p(n + 1, 0);
  p[0] = 1;
  for (uint32_t part = 1; part <= n; ++part)
    for (uint32_t m = part; m <= n; ++m) p[m] += p[m - part];
  return p;
}

inline BigInt partition_count(uint32_t n) { return partition_counts(n)[n]; }

/// C(m+k-1, k): multisets of size k from m kinds.
inline BigInt multichoose(const BigInt& m, uint32_t k) {
  BigInt r = 1;
  for (uint32_t i = 1; i <= k; ++i) r = r * (m + i - 1) / i;
  return r;
}

/// z(n) = Σ over partitions (1^k1 ... n^kn) of Π_i C(p(i)+k_i-1, k_i).
inline BigInt z_closed(uint32_t n) {
  if (n < 1) throw std::invalid_argument("z_closed needs n >= 1");
  const auto p = partition_counts(n);
  BigInt total = 0;
  for (const auto& part : partitions(n)) {
    BigInt term = 1;
    for (uint32_t i = 1; i <= n; ++i)
      if (part[i - 1]) term *= multichoose(p[i], part[i - 1]);
    total += term;
  }
  return total;
}

/// Truncated power series c_0..c_N.
struct Series {
  std::vector<BigInt> c;

  size_t terms() const { return c.size() - 1; }
  Series operator*(const Series& o) const {
    const size_t n = std::min(c.size(), o.c.size());
    Series r{std::vector<BigInt>(n, 0)};
    for (size_t i = 0; i < n; ++i) {
      if (c[i] == 0) continue;
      for (size_t j = 0; i + j < n; ++j) r.c[i + j] += c[i] * o.c[j];
    }
    return r;
  }
  /// s(x^k), truncated to the same length.
  Series substitute_power(size_t k) const {
    Series r{std::vector<BigInt>(c.size(), 0)};
    for (size_t i = 0; i * k < c.size(); ++i) r.c[i * k] = c[i];
    return r;
  }
  friend bool operator==(const Series& a, const Series& b) { return a.c == b.c; }
};

enum class SeriesKind { Closed, Real, FiniteLargeQ };

inline SeriesKind parse_series_kind(const std::string& s) {
  if (s == "closed") return SeriesKind::Closed;
  if (s == "real") return SeriesKind::Real;
  if (s == "fq" || s == "finite_large_q") return SeriesKind::FiniteLargeQ;
  throw std::invalid_argument("unknown series '" + s + "' (closed | real | fq)");
}

/// z(x) = Π_i (1 - x^i)^(-p(i)), expanding each factor as Σ_k C(p(i)+k-1, k) x^(ik).
inline Series z_series(uint32_t N) {
  const auto p = partition_counts(N);
  Series s{std::vector<BigInt>(N + 1, 0)};
  s.c[0] = 1;
  for (uint32_t i = 1; i <= N; ++i) {
    Series factor{std::vector<BigInt>(N + 1, 0)};
    for (uint32_t k = 0; k * i <= N; ++k) factor.c[k * i] = multichoose(p[i], k);
    s = s * factor;
  }
  return s;
}

inline Series series(SeriesKind kind, uint32_t N) {
  if (N < 1 || N > 64) throw std::invalid_argument("series length must lie in 1..64");
  const Series z = z_series(N);
  switch (kind) {
    case SeriesKind::Closed: return z;
    case SeriesKind::Real: return z * z.substitute_power(2);
    case SeriesKind::FiniteLargeQ: {
      Series s = z;
      for (uint32_t i = 2; i <= N; ++i) s = s * z.substitute_power(i);
      return s;
    }
  }
  return z;
}

/// z-classes of the compact unitary group U(n+1): p(n+1).
inline BigInt u_compact(uint32_t n) { return partition_count(n + 1); }

struct LorentzCounts {
  BigInt hyperbolic, elliptic, parabolic;
};

/// z-classes of hyperbolic, elliptic and parabolic elements of U(n,1).
inline LorentzCounts u_lorentz(uint32_t n) {
  if (n < 2) throw std::invalid_argument("u_lorentz needs n >= 2");
  const auto p = partition_counts(n + 1);
  LorentzCounts r;
  r.hyperbolic = p[n - 1];
  r.elliptic = 0;
  for (uint32_t m = 1; m <= n + 1; ++m) r.elliptic += p[n + 1 - m];
  r.parabolic = 2 + p[n - 1] + p[n - 2];
  return r;
}

}  // namespace chevkit

#endif  // CHEVKIT_ZCOUNT_HPP
