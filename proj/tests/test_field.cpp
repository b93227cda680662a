#include "chevkit/field.hpp"
#include "chevkit/rng.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

using namespace chevkit;

namespace {

// Schoolbook product of coefficient vectors reduced by a monic modulus, all mod p.
std::vector<long long> naive_mul(std::vector<long long> a, std::vector<long long> b, const std::vector<uint32_t>& mod,
                                 long long p) {
  std::vector<long long> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  const size_t m = mod.size() - 1;
  for (size_t k = r.size(); k-- > m;) {
    const long long c = r[k];
    if (!c) continue;
    for (size_t t = 0; t <= m; ++t) r[k - m + t] = ((r[k - m + t] - c * mod[t]) % p + p) % p;
  }
  r.resize(m);
  return r;
}

std::vector<long long> as_ll(const std::vector<uint32_t>& v) { return {v.begin(), v.end()}; }

long long powmod(long long b, long long e, long long p) {
  long long r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

TEST(PrimeField, ArithmeticExamples) {
  const auto& f = FiniteField::get(7);
  EXPECT_EQ(f.from_int(3) + f.from_int(5), f.from_int(1));
  EXPECT_EQ(f.from_int(3).inverse(), f.from_int(5));
  EXPECT_EQ(f.from_int(-1), f.from_int(6));
  EXPECT_EQ(f.from_int(2) / f.from_int(4), f.from_int(4));
  EXPECT_THROW(f.from_int(1) / f.zero(), std::domain_error);
}

TEST(PrimeField, RejectsCompositeCharacteristic) {
  EXPECT_THROW(FiniteField::get(6), std::invalid_argument);
  EXPECT_THROW(FiniteField::of_order(12), std::invalid_argument);
}

TEST(ExtensionField, DefaultModulusIsSmallestIrreducible) {
  EXPECT_EQ(FiniteField::of_order(9).modulus(), (std::vector<uint32_t>{1, 0, 1}));
  EXPECT_EQ(FiniteField::of_order(4).modulus(), (std::vector<uint32_t>{1, 1, 1}));
  EXPECT_EQ(FiniteField::of_order(25).modulus(), (std::vector<uint32_t>{1, 1, 1}));
  EXPECT_EQ(FiniteField::of_order(8).modulus(), (std::vector<uint32_t>{1, 0, 1, 1}));
}

TEST(ExtensionField, XSquaredInGF9) {
  const auto& f = FiniteField::of_order(9);
  const Fq x = f.from_coeffs({0, 1});
  EXPECT_EQ(x * x, f.from_int(2));
}

TEST(ExtensionField, MultiplicationMatchesPolynomialReduction) {
  for (uint64_t q : {4u, 8u, 9u, 25u, 27u, 49u}) {
    const auto& f = FiniteField::of_order(q);
    for (uint32_t a = 0; a < f.order(); ++a)
      for (uint32_t b = 0; b < f.order(); ++b) {
        const auto expect = naive_mul(as_ll(f.coeffs(a)), as_ll(f.coeffs(b)), f.modulus(), f.characteristic());
        ASSERT_EQ(as_ll(f.coeffs(f.mul(a, b))), expect) << f.name() << " " << a << "*" << b;
      }
  }
}

TEST(ExtensionField, FieldAxiomsOnRandomTriples) {
  SplitMix64 rng(11);
  for (uint64_t q : {7u, 9u, 16u, 81u, 125u}) {
    const auto& f = FiniteField::of_order(q);
    for (int k = 0; k < 2000; ++k) {
      const Fq a = f.element(uint32_t(rng.uniform(q))), b = f.element(uint32_t(rng.uniform(q))),
               c = f.element(uint32_t(rng.uniform(q)));
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ((a - b) + b, a);
      if (!a.is_zero()) ASSERT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(PrimeField, UntabledFieldAgreesWithPowerLaw) {
  const auto& f = FiniteField::get(65537);
  EXPECT_FALSE(f.has_tables());
  SplitMix64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const Fq a = f.element(1 + uint32_t(rng.uniform(f.order() - 1)));
    ASSERT_TRUE(a.pow(f.order() - 1).is_one());
    ASSERT_EQ(a * a.inverse(), f.one());
  }
}

TEST(ExtensionField, LargeExtensionsRejected) { EXPECT_THROW(FiniteField::get(257, 2), std::invalid_argument); }

TEST(ExtensionField, MismatchedFieldsThrow) {
  EXPECT_THROW(FiniteField::get(5).one() + FiniteField::get(7).one(), std::invalid_argument);
}

TEST(Frobenius, ExamplesInGF9) {
  const auto& f = FiniteField::of_order(9);
  const Fq x = f.from_coeffs({0, 1});
  EXPECT_EQ(frobenius(x), f.from_coeffs({0, 2}));
  for (long long a = 0; a < 3; ++a) EXPECT_EQ(frobenius(f.from_int(a)), f.from_int(a));
  for (const Fq& a : enumerate_elements(f)) EXPECT_EQ(frobenius(frobenius(a)), a);
}

TEST(Frobenius, RingAutomorphismExhaustive) {
  for (uint64_t q : {9u, 25u, 4u, 16u}) {
    const auto& f = FiniteField::of_order(q);
    const uint64_t r = uint64_t(std::sqrt(double(q)) + 0.5);
    for (const Fq& a : enumerate_elements(f)) {
      ASSERT_EQ(frobenius(a), a.pow(r));
      for (const Fq& b : enumerate_elements(f)) {
        ASSERT_EQ(frobenius(a * b), frobenius(a) * frobenius(b));
        ASSERT_EQ(frobenius(a + b), frobenius(a) + frobenius(b));
      }
    }
  }
}

TEST(SquareClass, EulerCriterionExamples) {
  const auto& f = FiniteField::get(7);
  EXPECT_TRUE(square_class(f.from_int(2)).is_trivial());
  EXPECT_TRUE(square_class(f.from_int(3)).is_nonresidue());
  EXPECT_EQ(square_class(Rational(8)).tag(), 2);
  EXPECT_EQ(square_class(Rational(BigRational(-3, 12))).tag(), -1);
  EXPECT_THROW(square_class(f.zero()), std::domain_error);
}

TEST(SquareClass, PrimeFieldsAgreeWithEuler) {
  for (uint32_t p : {3u, 5u, 7u, 11u, 13u, 31u, 97u}) {
    const auto& f = FiniteField::get(p);
    for (uint32_t a = 1; a < p; ++a)
      ASSERT_EQ(square_class(f.from_int(a)).is_nonresidue(), powmod(a, (p - 1) / 2, p) == p - 1) << p << " " << a;
  }
}

TEST(SquareClass, ClassMatchesSqrtExistence) {
  for (uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u, 25u, 27u, 49u}) {
    const auto& f = FiniteField::of_order(q);
    std::set<uint32_t> squares;
    for (const Fq& r : enumerate_elements(f)) squares.insert((r * r).index());
    for (const Fq& a : enumerate_elements(f)) {
      if (a.is_zero()) continue;
      const bool is_sq = squares.count(a.index()) > 0;
      ASSERT_EQ(square_class(a).is_trivial(), is_sq);
      const auto s = sqrt(a);
      ASSERT_EQ(s.has_value(), is_sq);
      if (s) ASSERT_EQ(*s * *s, a);
    }
  }
}

TEST(SquareClass, MultiplicationIsClassProduct) {
  const auto& f = FiniteField::of_order(25);
  for (const Fq& a : enumerate_elements(f))
    for (const Fq& b : enumerate_elements(f)) {
      if (a.is_zero() || b.is_zero()) continue;
      ASSERT_EQ(square_class(a) * square_class(b), square_class(a * b));
    }
  EXPECT_EQ(square_class(Rational(6)) * square_class(Rational(10)), square_class(Rational(15)));
}

TEST(SquareClass, CanonicalNonresidue) {
  EXPECT_EQ(FiniteField::get(7).canonical_nonresidue(), FiniteField::get(7).from_int(3));
  EXPECT_EQ(FiniteField::get(17).canonical_nonresidue(), FiniteField::get(17).from_int(3));
  EXPECT_EQ(FiniteField::get(41).canonical_nonresidue(), FiniteField::get(41).from_int(3));
  EXPECT_EQ(FiniteField::get(71).canonical_nonresidue(), FiniteField::get(71).from_int(7));
  const auto& f9 = FiniteField::of_order(9);
  EXPECT_TRUE(square_class(f9.canonical_nonresidue()).is_nonresidue());
  EXPECT_EQ(representative(SquareClass::finite(false), f9), f9.one());
}

TEST(Sqrt, Examples) {
  const auto& f = FiniteField::get(7);
  EXPECT_EQ(sqrt(f.from_int(2)), f.from_int(3));
  EXPECT_FALSE(sqrt(f.from_int(3)).has_value());
  EXPECT_EQ(sqrt(f.one()), f.one());
  EXPECT_EQ(sqrt(FiniteField::of_order(9).one()), FiniteField::of_order(9).one());
  EXPECT_EQ(sqrt(Rational(BigRational(9, 4))), Rational(BigRational(3, 2)));
  EXPECT_FALSE(sqrt(Rational(2)).has_value());
  EXPECT_FALSE(sqrt(Rational(-4)).has_value());
}

TEST(Sqrt, ChoosesSmallerIndexRoot) {
  for (uint64_t q : {5u, 7u, 9u, 13u, 25u}) {
    const auto& f = FiniteField::of_order(q);
    for (const Fq& r : enumerate_elements(f)) {
      const Fq a = r * r;
      const auto s = sqrt(a);
      ASSERT_TRUE(s.has_value());
      ASSERT_EQ(s->index(), std::min(r.index(), (-r).index()));
    }
  }
}

TEST(Rational, ExactArithmetic) {
  const Rational a(BigRational(1, 3)), b(BigRational(1, 6));
  EXPECT_EQ(a + b, Rational(BigRational(1, 2)));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ((a - a * Rational(3)).value(), BigRational(-2, 3));
  EXPECT_THROW(a / Rational(0), std::domain_error);
}

TEST(TextFormat, RoundTrip) {
  const auto& f9 = FiniteField::of_order(9);
  for (const Fq& a : enumerate_elements(f9)) EXPECT_EQ(parse_element(f9, to_string(a)), a);
  EXPECT_EQ(to_string(f9.from_coeffs({2, 1})), "[2,1]");
  EXPECT_EQ(to_string(FiniteField::get(7).from_int(-1)), "6");
  EXPECT_EQ(parse_element(FiniteField::get(7), "-2"), FiniteField::get(7).from_int(5));
  const Rational r(BigRational(-7, 12));
  EXPECT_EQ(to_string(r), "-7/12");
  EXPECT_EQ(parse_element(Rationals::instance(), "-7/12"), r);
  EXPECT_EQ(parse_element(Rationals::instance(), "14/-24"), r);
  EXPECT_THROW(parse_element(f9, "2"), std::invalid_argument);
  EXPECT_THROW(parse_element(Rationals::instance(), "1/0"), std::domain_error);
  EXPECT_THROW(parse_element(Rationals::instance(), "abc"), std::invalid_argument);
}
