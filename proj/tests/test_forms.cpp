#include "chevkit/forms.hpp"
#include "chevkit/generators.hpp"
#include "chevkit/spinor.hpp"

#include <gtest/gtest.h>

using namespace chevkit;

namespace {

Matrix<Fq> ints(const FiniteField& f, const std::vector<std::vector<long long>>& rows) {
  std::vector<Vec<Fq>> r;
  for (const auto& row : rows) {
    Vec<Fq> v;
    for (long long x : row) v.push_back(f.from_int(x));
    r.push_back(v);
  }
  return Matrix<Fq>::from_rows(f, r);
}

Vec<Fq> basis_vector(const FiniteField& f, size_t n, size_t i, const Fq& c) {
  Vec<Fq> v(n, f.zero());
  v[i] = c;
  return v;
}

}  // namespace

TEST(GroupKind, ParseTokensAndDimensions) {
  EXPECT_EQ(GroupKind::parse("gsp", 2).dim(), 4u);
  EXPECT_EQ(GroupKind::parse("go-odd", 3).dim(), 7u);
  EXPECT_EQ(GroupKind::parse("o-even", 2).dim(), 4u);
  EXPECT_EQ(GroupKind::parse("u", 3).dim(), 3u);
  EXPECT_EQ(GroupKind::parse("gl", 4).name(), "GL(4)");
  EXPECT_THROW(GroupKind::parse("spin", 2), std::invalid_argument);
  EXPECT_THROW(GroupKind::parse("gsp", 1), std::invalid_argument);
  EXPECT_THROW(GroupKind::parse("gl", 0), std::invalid_argument);
  for (const char* t : {"gl", "sl", "gsp", "sp", "go-even", "o-even", "go-odd", "o-odd", "u"})
    EXPECT_EQ(GroupKind::parse(t, 2).token(), t);
}

TEST(StandardForm, SymplecticGram) {
  const auto& f = FiniteField::get(7);
  EXPECT_EQ(standard_form(GroupKind::gsp(2), f),
            ints(f, {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}));
}

TEST(StandardForm, OddOrthogonalGram) {
  const auto& f = FiniteField::get(5);
  EXPECT_EQ(standard_form(GroupKind::go_odd(2), f),
            ints(f, {{2, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}));
}

TEST(StandardForm, UnitaryGramIsIdentity) {
  EXPECT_TRUE(standard_form(GroupKind::unitary(2), FiniteField::of_order(4)).is_identity());
  EXPECT_THROW(standard_form(GroupKind::unitary(2), FiniteField::get(5)), std::invalid_argument);
  EXPECT_THROW(standard_form(GroupKind::gl(2), FiniteField::get(5)), std::invalid_argument);
}

TEST(Similitude, Examples) {
  const auto& f = FiniteField::get(7);
  const auto kind = GroupKind::gsp(2);
  EXPECT_EQ(similitude(Matrix<Fq>::identity(f, 4), kind), f.one());
  EXPECT_EQ(similitude(Matrix<Fq>::identity(f, 4).scaled(f.from_int(3)), kind), f.from_int(2));
  const Fq c = f.from_int(5);
  EXPECT_EQ(similitude(Matrix<Fq>::diagonal(f, {f.one(), f.one(), c, c}), kind), c);
  EXPECT_FALSE(similitude(Matrix<Fq>::diagonal(f, {f.one(), f.one(), c, f.one()}), kind).has_value());
  EXPECT_FALSE(similitude(Matrix<Fq>::diagonal(f, {f.one(), f.one(), c, c}), GroupKind::sp(2)).has_value());
}

TEST(Similitude, UnitaryNeedsFixedFieldMultiplier) {
  const auto& f = FiniteField::of_order(9);
  const Fq x = f.from_coeffs({0, 1});
  // x·x̄ = x·2x = 2x² = 2·2 = 1, so diag(x, 1) is unitary.
  EXPECT_EQ(similitude(Matrix<Fq>::diagonal(f, {x, f.one()}), GroupKind::unitary(2)), f.one());
  EXPECT_FALSE(similitude(Matrix<Fq>::diagonal(f, {x + f.one(), f.one()}), GroupKind::unitary(2)).has_value());
}

TEST(Similitude, MultiplicativeOnRandomPairs) {
  SplitMix64 rng(21);
  for (uint64_t q : {3u, 5u, 7u, 9u})
    for (const GroupKind& kind : {GroupKind::gsp(2), GroupKind::go_even(2), GroupKind::go_odd(2)}) {
      const auto& f = FiniteField::of_order(q);
      for (int k = 0; k < 40; ++k) {
        const auto g = random_member(kind, f, rng), h = random_member(kind, f, rng);
        const auto mg = similitude(g, kind), mh = similitude(h, kind), mgh = similitude(g * h, kind);
        ASSERT_TRUE(mg && mh && mgh);
        ASSERT_EQ(*mgh, *mg * *mh);
      }
    }
}

TEST(Quadratic, Examples) {
  const auto& f = FiniteField::get(7);
  const auto kind = GroupKind::go_even(2);
  const auto beta = standard_form(kind, f);
  const IndexMap ix = kind.index_map();
  Vec<Fq> v(4, f.zero());
  EXPECT_TRUE(quadratic(v, beta).is_zero());
  v[ix(1)] = f.one();
  v[ix(-1)] = f.one();
  EXPECT_TRUE(quadratic(v, beta).is_one());
  for (long long lam = 1; lam < 7; ++lam) {
    v[ix(-1)] = f.from_int(lam);
    EXPECT_EQ(quadratic(v, beta), f.from_int(lam));
  }
}

TEST(WallGram, IdentityHasEmptyResidual) {
  const auto& f = FiniteField::get(5);
  const auto beta = standard_form(GroupKind::o_even(2), f);
  EXPECT_EQ(wall_gram(Matrix<Fq>::identity(f, 4), beta).rows(), 0u);
  EXPECT_TRUE(discriminant(wall_gram(Matrix<Fq>::identity(f, 4), beta)).cls.is_trivial());
}

TEST(WallGram, ReflectionGivesQOfVector) {
  for (uint64_t q : {3u, 5u, 7u, 9u}) {
    const auto& f = FiniteField::of_order(q);
    const auto kind = GroupKind::o_odd(2);
    const auto beta = standard_form(kind, f);
    const auto coeffs = enumerate_elements(f);
    for (int k = 0; k < 50; ++k) {
      Vec<Fq> u(5, f.zero());
      for (size_t i = 0; i < 5; ++i) u[i] = coeffs[(k * 7 + i * 3 + i * i * k) % coeffs.size()];
      if (quadratic(u, beta).is_zero()) continue;
      const auto s = reflection(u, beta);
      const auto gram = wall_gram(s, beta);
      ASSERT_EQ(gram.rows(), 1u);
      ASSERT_EQ(square_class(gram(0, 0)), square_class(quadratic(u, beta)));
    }
  }
}

TEST(WallGram, SymmetryRelation) {
  SplitMix64 rng(22);
  for (uint64_t q : {3u, 5u, 7u, 9u})
    for (const GroupKind& kind : {GroupKind::o_even(2), GroupKind::o_odd(2), GroupKind::o_even(3)}) {
      const auto& f = FiniteField::of_order(q);
      const auto beta = standard_form(kind, f);
      for (int k = 0; k < 20; ++k) {
        const auto g = random_member(kind, f, rng);
        const auto gram = wall_gram(g, beta);
        const auto basis = column_basis(Matrix<Fq>::identity(f, g.rows()) - g);
        for (size_t i = 0; i < basis.size(); ++i)
          for (size_t j = 0; j < basis.size(); ++j)
            ASSERT_EQ(gram(i, j) + gram(j, i), bilinear(basis[i], beta, basis[j]));
      }
    }
}

TEST(WallGram, MinusIdentity) {
  for (uint64_t q : {3u, 5u, 7u, 9u})
    for (const GroupKind& kind : {GroupKind::o_even(2), GroupKind::o_odd(2), GroupKind::o_odd(3)}) {
      const auto& f = FiniteField::of_order(q);
      const auto beta = standard_form(kind, f);
      const size_t n = kind.dim();
      const auto minus = Matrix<Fq>::identity(f, n).scaled(-f.one());
      const auto d = discriminant(wall_gram(minus, beta));
      ASSERT_FALSE(d.degenerate);
      ASSERT_EQ(d.cls, square_class(f.from_int(2).pow(n) * det(beta)));
    }
}

TEST(WallGram, RejectsNonIsometry) {
  const auto& f = FiniteField::get(5);
  const auto beta = standard_form(GroupKind::o_even(2), f);
  EXPECT_THROW(wall_gram(Matrix<Fq>::identity(f, 4).scaled(f.from_int(2)), beta), std::invalid_argument);
}

TEST(Discriminant, Examples) {
  const auto& f = FiniteField::get(7);
  EXPECT_TRUE(discriminant(Matrix<Fq>::identity(f, 3)).cls.is_trivial());
  EXPECT_TRUE(discriminant(Matrix<Fq>::diagonal(f, {f.from_int(3)})).cls.is_nonresidue());
  EXPECT_TRUE(discriminant(Matrix<Fq>(f, 2, 2)).degenerate);
}

TEST(Discriminant, InvariantUnderCongruence) {
  SplitMix64 rng(23);
  const auto& f = FiniteField::get(11);
  for (int k = 0; k < 100; ++k) {
    Matrix<Fq> m(f, 3, 3), p(f, 3, 3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) {
        m(i, j) = f.element(uint32_t(rng.uniform(11)));
        p(i, j) = f.element(uint32_t(rng.uniform(11)));
      }
    if (det(m).is_zero() || det(p).is_zero()) continue;
    ASSERT_EQ(discriminant(p.transpose() * m * p).cls, discriminant(m).cls);
  }
}

TEST(Forms, OrthogonalRejectsCharacteristicTwo) {
  EXPECT_THROW(standard_form(GroupKind::go_odd(2), FiniteField::of_order(4)), std::domain_error);
  EXPECT_THROW(quadratic(basis_vector(FiniteField::get(2), 2, 0, FiniteField::get(2).one()),
                         Matrix<Fq>::identity(FiniteField::get(2), 2)),
               std::domain_error);
}
