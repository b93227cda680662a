#include "chevkit/polyclass.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace chevkit;

namespace {

int mobius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  return n > 1 ? -m : m;
}

// Number of monic irreducibles of degree d over GF(q), by Möbius inversion.
long long necklace(long long q, int d) {
  long long total = 0;
  for (int k = 1; k <= d; ++k)
    if (d % k == 0) {
      long long pw = 1;
      for (int i = 0; i < d / k; ++i) pw *= q;
      total += mobius(k) * pw;
    }
  return total / d;
}

// Monic irreducible self-U-reciprocal polynomials of odd degree d over GF(q^2):
// (1/d) Σ_{e | d} μ(d/e) (q^e + 1).
long long self_u_count(long long q, int d) {
  long long total = 0;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) {
      long long pw = 1;
      for (int i = 0; i < e; ++i) pw *= q;
      total += mobius(d / e) * (pw + 1);
    }
  return total / d;
}

Poly poly(const FiniteField& f, const std::vector<long long>& c) {
  std::vector<Fq> v;
  for (long long x : c) v.push_back(f.from_int(x));
  return Poly(f, v);
}

}  // namespace

TEST(Poly, ArithmeticAndEvaluation) {
  const auto& f = FiniteField::get(5);
  const auto a = poly(f, {1, 1}), b = poly(f, {4, 1});
  EXPECT_EQ(a * b, poly(f, {4, 0, 1}));
  EXPECT_EQ((a * b)(f.from_int(2)), f.from_int(3));
  EXPECT_TRUE((a * b).mod(a).is_zero());
  EXPECT_EQ(poly(f, {3, 0, 1}).mod(a), poly(f, {4}));
  EXPECT_EQ(poly(f, {0, 0, 0}).degree(), -1);
}

TEST(Irreducible, CountsMatchNecklaceFormula) {
  for (uint64_t q : {2u, 3u, 4u, 5u}) {
    const auto& f = FiniteField::of_order(q);
    for (int d = 1; d <= 4; ++d) {
      if (q == 5 && d == 4) continue;
      long long count = 0;
      std::vector<uint32_t> idx(size_t(d), 0);
      for (;;) {
        std::vector<Fq> c;
        for (uint32_t v : idx) c.push_back(f.element(v));
        c.push_back(f.one());
        count += is_irreducible(Poly(f, c));
        size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == q) idx[pos++] = 0;
        if (pos == idx.size()) break;
      }
      EXPECT_EQ(count, necklace(q, d)) << "q=" << q << " d=" << d;
    }
  }
}

TEST(Irreducible, RootFreeCubics) {
  const auto& f = FiniteField::get(7);
  for (long long a = 0; a < 7; ++a) {
    const auto p = poly(f, {a, 0, 0, 1});
    bool has_root = false;
    for (const Fq& x : enumerate_elements(f)) has_root |= p(x).is_zero();
    EXPECT_EQ(is_irreducible(p), !has_root) << a;
  }
}

TEST(URecip, Examples) {
  const auto& f = FiniteField::of_order(4);
  const Fq w = f.from_coeffs({0, 1});
  const Poly lin = Poly::linear(w);
  // x - w is self-U-reciprocal exactly when w has norm 1.
  EXPECT_EQ(is_self_u_reciprocal(lin), (w * frobenius(w)).is_one());
  EXPECT_EQ(u_reciprocal(u_reciprocal(lin)), lin);
  EXPECT_THROW(u_reciprocal(poly(f, {0, 1})), std::domain_error);
}

TEST(Dual, Examples) {
  const auto& f = FiniteField::get(7);
  EXPECT_EQ(dual(poly(f, {2, 1})), poly(f, {4, 1}));
  EXPECT_TRUE(is_self_dual(poly(f, {1, 1, 1})));
  EXPECT_THROW(dual(poly(f, {1, 6})), std::domain_error);
  EXPECT_THROW(dual(poly(f, {0, 1})), std::domain_error);
  EXPECT_THROW(is_self_dual(poly(f, {1, 2})), std::invalid_argument);
}

TEST(SelfUReciprocal, OnlyOddDegreesOccur) {
  for (uint32_t q : {2u, 3u, 5u}) {
    const int dmax = q == 5 ? 3 : 4;
    std::map<int, int> by_degree;
    for (const Poly& p : enumerate_self_u_irreducibles(q, dmax)) {
      ASSERT_TRUE(p.is_monic());
      ASSERT_TRUE(is_self_u_reciprocal(p));
      ASSERT_TRUE(is_irreducible(p));
      ++by_degree[p.degree()];
    }
    EXPECT_EQ(by_degree[1], int(q + 1));
    for (const auto& [d, n] : by_degree) EXPECT_EQ(d % 2, 1) << "q=" << q << " degree " << d;
  }
}

TEST(SelfUReciprocal, OddDegreeCountsMatchFormula) {
  for (const auto& [q, dmax] : std::vector<std::pair<uint32_t, int>>{{2, 5}, {3, 5}, {4, 3}, {5, 3}}) {
    std::map<int, long long> by_degree;
    for (const Poly& p : enumerate_self_u_irreducibles(q, dmax)) ++by_degree[p.degree()];
    for (int d = 1; d <= dmax; d += 2) EXPECT_EQ(by_degree[d], self_u_count(q, d)) << "q=" << q << " d=" << d;
  }
}

TEST(SelfUReciprocal, DegreeOneMatchesNormOneElements) {
  for (uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto& f = FiniteField::of_order(uint64_t(q) * q);
    size_t norm_one = 0;
    for (const Fq& a : enumerate_elements(f)) norm_one += (a * frobenius(a)).is_one();
    EXPECT_EQ(enumerate_self_u_irreducibles(f, 1).size(), norm_one);
  }
}

TEST(SelfDual, SmallFields) {
  const auto list = enumerate_self_dual_irreducibles(FiniteField::get(3), 4);
  std::map<int, int> by_degree;
  for (const Poly& p : list) ++by_degree[p.degree()];
  EXPECT_EQ(by_degree[1], 0);
  EXPECT_EQ(by_degree[2], 1);
  EXPECT_EQ(by_degree[3], 0);
  EXPECT_EQ(by_degree[4], 2);
  for (const Poly& p : enumerate_self_dual_irreducibles(FiniteField::get(7), 4)) EXPECT_EQ(p.degree() % 2, 0);
}

TEST(Enumeration, ArgumentChecks) {
  EXPECT_THROW(enumerate_self_u_irreducibles(FiniteField::get(5), 2), std::invalid_argument);
  EXPECT_THROW(enumerate_self_u_irreducibles(3, 0), std::invalid_argument);
  EXPECT_THROW(enumerate_self_dual_irreducibles(FiniteField::get(5), 7), std::invalid_argument);
}
