#include <gtest/gtest.h>

#include <random>

#include "idemfact/endomorphism.hpp"
#include "idemfact/error.hpp"
#include "idemfact/instances.hpp"
#include "support.hpp"

using namespace idemfact;
using idemfact::test::encode;

namespace {

  Algebra const T3  = Algebra::finite_set(3);
  Algebra const T4  = Algebra::finite_set(4);
  Algebra const V22 = Algebra::vector_space(2, 2);
  Algebra const V32 = Algebra::vector_space(3, 2);

  Endomorphism T(Algebra const& alg, std::vector<std::uint32_t> table) {
    return Endomorphism::from_table(alg, table);
  }
  Endomorphism M(Algebra const& alg, test::Mat rows) {
    return Endomorphism::from_matrix(alg, rows);
  }
  ElementId vec(std::uint32_t p, test::Vec const& coords) {
    return ElementId{encode(coords, p)};
  }

}  // namespace

TEST(Endomorphism, Compose) {
  EXPECT_EQ(compose(T(T4, {0, 0, 2, 2}), T(T4, {1, 1, 2, 1})),
            T(T4, {1, 1, 2, 2}));
  auto const a = T(T4, {3, 0, 0, 1});
  EXPECT_EQ(compose(Endomorphism::identity(T4), a), a);
  EXPECT_EQ(compose(a, Endomorphism::identity(T4)), a);
  EXPECT_EQ(compose(M(V22, {{1, 0}, {0, 0}}), M(V22, {{0, 1}, {0, 1}})),
            M(V22, {{0, 1}, {0, 0}}));
  EXPECT_THROW((void) compose(a, Endomorphism::identity(T3)), AlgebraMismatch);
}

TEST(Endomorphism, ComposeMatchesRowConventionMatrixProduct) {
  std::mt19937_64 rng(11);
  for (auto const& alg : {V22, V32, Algebra::vector_space(5, 3)}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto const a = test::random_endo(alg, rng);
      auto const b = test::random_endo(alg, rng);
      auto const expected
          = test::matmul(a.matrix(), b.matrix(), alg.modulus());
      EXPECT_EQ(compose(a, b).matrix(), expected);
      // x (ab) = (x a) b on every element
      for (std::uint32_t x = 0; x < alg.universe_size(); x += 3) {
        EXPECT_EQ(compose(a, b).apply(ElementId{x}),
                  b.apply(a.apply(ElementId{x})));
      }
    }
  }
}

TEST(Endomorphism, ComposeIsAssociativeWithIdentityNeutral) {
  std::mt19937_64 rng(12);
  for (auto const& alg :
       {T4, Algebra::finite_set(7), V22, V32, Algebra::vector_space(2, 4)}) {
    auto const id = Endomorphism::identity(alg);
    for (int trial = 0; trial < 200; ++trial) {
      auto const a = test::random_endo(alg, rng);
      auto const b = test::random_endo(alg, rng);
      auto const c = test::random_endo(alg, rng);
      EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
      EXPECT_EQ(compose(id, a), a);
      EXPECT_EQ(compose(a, id), a);
    }
  }
}

TEST(Endomorphism, IsIdempotent) {
  EXPECT_TRUE(is_idempotent(T(T4, {0, 0, 2, 0})));
  EXPECT_FALSE(is_idempotent(T(T3, {1, 2, 0})));
  auto const m = test::Mat{{0, 1}, {0, 1}};
  ASSERT_EQ(test::matmul(m, m, 2), m);
  EXPECT_TRUE(is_idempotent(M(V22, m)));
}

TEST(Endomorphism, IdempotentsFixTheirImageBasis) {
  for (auto const& alg : {T3, T4, V22, V32}) {
    for (auto const& e : enumerate_endomorphisms(alg, false)) {
      if (!is_idempotent(e)) {
        continue;
      }
      for (auto y : image_basis(e)) {
        EXPECT_EQ(e.apply(y), y);
      }
    }
  }
}

TEST(Endomorphism, RankAndImageBasis) {
  auto const a = T(T4, {1, 1, 2, 2});
  EXPECT_EQ(rank_endo(a), 2u);
  EXPECT_EQ(image_basis(a), (ElementSet{ElementId{1}, ElementId{2}}));
  EXPECT_EQ(image_basis(T(T4, {3, 0, 0, 1})),
            (ElementSet{ElementId{0}, ElementId{1}, ElementId{3}}));

  auto const b = M(V22, {{0, 1}, {0, 0}});
  EXPECT_EQ(rank_endo(b), 1u);
  EXPECT_EQ(image_basis(b), (ElementSet{vec(2, {0, 1})}));

  EXPECT_EQ(rank_endo(Endomorphism::identity(T3)), 3u);
  EXPECT_EQ(rank_endo(M(V22, {{0, 0}, {0, 0}})), 0u);
}

TEST(Endomorphism, RankMatchesBruteForceImageCount) {
  for (auto const& alg : {V22, Algebra::vector_space(2, 3), V32}) {
    for (auto const& a : enumerate_endomorphisms(alg, false)) {
      std::set<std::uint32_t> image;
      for (std::uint32_t x = 0; x < alg.universe_size(); ++x) {
        image.insert(a.apply(ElementId{x}).code);
      }
      std::size_t r = 0;
      for (auto size = image.size(); size > 1; size /= alg.modulus()) {
        ++r;
      }
      ASSERT_EQ(rank_endo(a), r);
    }
  }
}

TEST(PartialEndomorphism, ApplyPartial) {
  PartialEndomorphism const pe(
      T4,
      ElementSet{ElementId{0}, ElementId{1}, ElementId{2}},
      {ElementId{1}, ElementId{1}, ElementId{2}});
  EXPECT_EQ(apply_partial(pe, ElementId{0}), ElementId{1});
  EXPECT_EQ(apply_partial(pe, ElementId{2}), ElementId{2});
  EXPECT_THROW((void) apply_partial(pe, ElementId{3}), DomainError);

  PartialEndomorphism const lin(
      V32, ElementSet{vec(3, {1, 0})}, {vec(3, {0, 1})});
  EXPECT_EQ(apply_partial(lin, vec(3, {2, 0})), vec(3, {0, 2}));
  EXPECT_EQ(apply_partial(lin, vec(3, {0, 0})), vec(3, {0, 0}));
  EXPECT_THROW((void) apply_partial(lin, vec(3, {1, 1})), DomainError);
}

TEST(PartialEndomorphism, IdempotencyAndValidation) {
  PartialEndomorphism const idem(
      T4,
      ElementSet{ElementId{0}, ElementId{1}, ElementId{2}},
      {ElementId{1}, ElementId{1}, ElementId{2}});
  EXPECT_TRUE(idem.is_idempotent());
  for (auto y : idem.image_basis()) {
    EXPECT_EQ(idem.apply(y), y);
  }

  // Image leaves the domain.
  PartialEndomorphism const leaks(
      T4, ElementSet{ElementId{0}, ElementId{1}}, {ElementId{3}, ElementId{1}});
  EXPECT_FALSE(leaks.is_idempotent());

  EXPECT_THROW(PartialEndomorphism(V32,
                                   ElementSet{vec(3, {1, 0}), vec(3, {2, 0})},
                                   {vec(3, {1, 0}), vec(3, {1, 0})}),
               PreconditionViolation);
  EXPECT_THROW(PartialEndomorphism(T4, ElementSet{ElementId{0}}, {}),
               PreconditionViolation);
}
