#include "autfn/automorphism.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace autfn {
namespace {

Word W(int n, std::initializer_list<Letter> ls) { return Word(n, ls); }

FreeAutomorphism sp(int n, std::initializer_list<int> cycle) {
  return signed_permutation(Permutation::cycle(n, cycle));
}

TEST(NielsenTest, BasisAction) {
  const auto e12 = nielsen(gen(1), gen(2), 3);
  EXPECT_EQ(e12.apply(W(3, {gen(1)})), W(3, {gen(1), gen(2)}));
  EXPECT_EQ(e12.apply(W(3, {gen(3)})), W(3, {gen(3)}));
  // a1^- -> a1^- a2 forces a1 -> a2^- a1
  EXPECT_EQ(nielsen(bar(1), gen(2), 3).apply(W(3, {gen(1)})), W(3, {bar(2), gen(1)}));
}

TEST(NielsenTest, InvalidPairs) {
  EXPECT_THROW(nielsen(gen(1), gen(1), 3), std::invalid_argument);
  EXPECT_THROW(nielsen(gen(1), bar(1), 3), std::invalid_argument);
  EXPECT_THROW(nielsen(gen(1), gen(4), 3), std::domain_error);
}

TEST(NielsenTest, InverseIsSignFlip) {
  for (Letter a : {gen(1), bar(2), gen(3)})
    for (Letter b : {gen(1), bar(1), gen(2), bar(3)}) {
      if (a.index() == b.index()) continue;
      const auto e = nielsen(a, b, 3);
      EXPECT_TRUE(e.is_consistent());
      EXPECT_EQ(invert_aut(e), nielsen(a, b.inverse(), 3));
    }
}

TEST(ApplyTest, Examples) {
  const auto e12 = nielsen(gen(1), gen(2), 3);
  EXPECT_EQ(apply(e12, W(3, {gen(1), gen(3)})), W(3, {gen(1), gen(2), gen(3)}));
  Word w = W(3, {gen(2), bar(3), gen(1)});
  EXPECT_EQ(apply(FreeAutomorphism::identity(3), w), w);
  EXPECT_EQ(apply(e12, W(3, {bar(1)})), W(3, {bar(2), bar(1)}));
}

TEST(ApplyTest, RankMismatch) {
  EXPECT_THROW(apply(FreeAutomorphism::identity(3), W(4, {gen(1)})),
               std::invalid_argument);
  EXPECT_THROW(compose(FreeAutomorphism::identity(3), FreeAutomorphism::identity(4)),
               std::invalid_argument);
}

TEST(SignedPermutationTest, Identity) {
  EXPECT_TRUE(signed_permutation(Permutation(5)).is_identity());
}

TEST(SignedPermutationTest, TranspositionFlipsA1) {
  const auto t = sp(5, {2, 3});
  EXPECT_EQ(t.image(1), W(5, {bar(1)}));
  EXPECT_EQ(t.image(2), W(5, {gen(3)}));
  EXPECT_EQ(t.image(3), W(5, {gen(2)}));
  EXPECT_EQ(t.image(4), W(5, {gen(4)}));
  EXPECT_EQ(t.image(5), W(5, {gen(5)}));
}

TEST(SignedPermutationTest, FourCycle) {
  const auto c = sp(6, {2, 3, 4, 5});
  EXPECT_EQ(c.image(1), W(6, {bar(1)}));
  EXPECT_EQ(c.image(2), W(6, {gen(3)}));
  EXPECT_EQ(c.image(5), W(6, {gen(2)}));
  EXPECT_EQ(determinant(abelianize(c)), 1);
}

TEST(SignedPermutationTest, MustFixPointOne) {
  EXPECT_THROW(signed_permutation(Permutation::cycle(4, {1, 2})), std::invalid_argument);
}

TEST(ComposeTest, IdentityAndInverse) {
  const auto e12 = nielsen(gen(1), gen(2), 4);
  EXPECT_EQ(compose(e12, FreeAutomorphism::identity(4)), e12);
  EXPECT_TRUE(compose(e12, invert_aut(e12)).is_identity());
}

TEST(ComposeTest, LeftToRight) {
  // E_{a1a2} then E_{a2a3}: a1 -> a1 a2 -> a1 a2 a3
  const auto f = compose(nielsen(gen(1), gen(2), 3), nielsen(gen(2), gen(3), 3));
  EXPECT_EQ(f.image(1), W(3, {gen(1), gen(2), gen(3)}));
}

TEST(ComposeTest, WSquaredTimesWIsTransposition) {
  const auto w12 = w_map(gen(1), gen(2), 5);
  const auto w23 = w_map(gen(2), gen(3), 5);
  EXPECT_EQ(product({w12, w12, w23}), sp(5, {2, 3}));
}

TEST(InvertTest, Examples) {
  EXPECT_EQ(invert_aut(nielsen(gen(1), gen(2), 3)), nielsen(gen(1), bar(2), 3));
  EXPECT_TRUE(invert_aut(FreeAutomorphism::identity(3)).is_identity());
  const auto t = sp(4, {2, 3});
  EXPECT_EQ(invert_aut(t), t);
  EXPECT_TRUE(compose(t, t).is_identity());
}

TEST(EqualTest, Examples) {
  EXPECT_TRUE(equal(FreeAutomorphism::identity(3), FreeAutomorphism::identity(3)));
  EXPECT_FALSE(equal(nielsen(gen(1), gen(2), 3), nielsen(gen(1), gen(3), 3)));
  const auto chain = product({nielsen(gen(1), gen(2), 3), nielsen(gen(2), gen(3), 3),
                              nielsen(gen(1), bar(2), 3), nielsen(gen(2), bar(3), 3)});
  EXPECT_TRUE(equal(chain, nielsen(gen(1), gen(3), 3)));
}

TEST(CommutatorTest, Examples) {
  const auto e12 = nielsen(gen(1), gen(2), 4);
  EXPECT_TRUE(commutator(e12, FreeAutomorphism::identity(4)).is_identity());
  EXPECT_EQ(commutator(e12, nielsen(gen(2), gen(3), 4)), nielsen(gen(1), gen(3), 4));
  EXPECT_EQ(commutator(nielsen(gen(2), gen(1), 4), nielsen(gen(1), gen(3), 4)),
            commutator(nielsen(gen(2), bar(1), 4), nielsen(bar(1), gen(3), 4)));
}

TEST(ConjugateTest, Examples) {
  const int n = 6;
  const auto e12 = nielsen(gen(1), gen(2), n);
  EXPECT_EQ(conjugate(e12, FreeAutomorphism::identity(n)), e12);
  // Odd and even permutations fixing 2.
  EXPECT_EQ(conjugate(e12, sp(n, {3, 4})), nielsen(bar(1), gen(2), n));
  EXPECT_EQ(conjugate(e12, sp(n, {3, 4, 5})), e12);
  EXPECT_EQ(conjugate(e12, compose(sp(n, {3, 4}), sp(n, {5, 6}))), e12);
}

TEST(WMapTest, BasisAction) {
  const auto w = w_map(gen(1), gen(2), 4);
  EXPECT_EQ(w.image(1), W(4, {bar(2)}));
  EXPECT_EQ(w.image(2), W(4, {gen(1)}));
  EXPECT_EQ(w.image(3), W(4, {gen(3)}));
  EXPECT_EQ(w.image(4), W(4, {gen(4)}));
}

TEST(WMapProperty, OrderFourAndSignSymmetry) {
  const int n = 4;
  for (Letter a : {gen(1), bar(1), gen(2), bar(3), gen(4)})
    for (Letter b : {gen(1), bar(2), gen(3), bar(4)}) {
      if (a.index() == b.index()) continue;
      const auto w = w_map(a, b, n);
      EXPECT_TRUE(power(w, 4).is_identity());
      EXPECT_EQ(w, w_map(a.inverse(), b.inverse(), n));
    }
  EXPECT_THROW(w_map(gen(2), bar(2), n), std::invalid_argument);
}

TEST(InnerTest, Examples) {
  EXPECT_TRUE(inner(Word(4)).is_identity());
  EXPECT_EQ(inner(W(4, {gen(1)})).apply(W(4, {gen(2)})), W(4, {bar(1), gen(2), gen(1)}));
}

TEST(InnerTest, F1IsProductOfNielsenPairs) {
  for (int n = 3; n <= 7; ++n) {
    FreeAutomorphism p = FreeAutomorphism::identity(n);
    for (int k = 2; k <= n; ++k) {
      p = product({p, nielsen(gen(k), gen(1), n), nielsen(bar(k), gen(1), n)});
    }
    EXPECT_EQ(p, inner(Word(n, {gen(1)}))) << "n=" << n;
  }
}

TEST(IsInnerTest, Examples) {
  auto id = is_inner(FreeAutomorphism::identity(5));
  ASSERT_TRUE(id.has_value());
  EXPECT_TRUE(id->empty());

  auto g = is_inner(inner(W(5, {gen(3), gen(2)})));
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(inner(*g), inner(W(5, {gen(3), gen(2)})));

  EXPECT_FALSE(is_inner(nielsen(gen(1), gen(2), 5)).has_value());
  EXPECT_FALSE(is_inner(sp(5, {2, 3})).has_value());
}

TEST(IsInnerTest, ConjugatorsInvolvingA1) {
  for (Word g : {W(4, {gen(1)}), W(4, {bar(1), bar(1), gen(2)}),
                 W(4, {gen(2), gen(1), gen(1)}), W(4, {gen(1), gen(3), bar(1)})}) {
    auto h = is_inner(inner(g));
    ASSERT_TRUE(h.has_value()) << to_string(g);
    EXPECT_EQ(*h, g);
  }
}

TEST(IsInnerProperty, RoundTripAndAbelianization) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    Word g = testing::random_word(rng, 4, 14);
    auto h = is_inner(inner(g));
    ASSERT_TRUE(h.has_value());
    EXPECT_EQ(inner(*h), inner(g));
    EXPECT_EQ(abelianize(inner(g)), IntegerMatrix::identity(4));
  }
}

TEST(IsInnerTest, RankOne) {
  EXPECT_TRUE(is_inner(FreeAutomorphism::identity(1)).has_value());
}

TEST(AbelianizeTest, Examples) {
  EXPECT_EQ(abelianize(FreeAutomorphism::identity(3)), IntegerMatrix::identity(3));

  IntegerMatrix elem = IntegerMatrix::identity(3);
  elem(0, 1) = 1;
  EXPECT_EQ(abelianize(nielsen(gen(1), gen(2), 3)), elem);

  IntegerMatrix perm(4, 4);
  perm(0, 0) = -1;
  perm(1, 2) = 1;
  perm(2, 1) = 1;
  perm(3, 3) = 1;
  EXPECT_EQ(abelianize(sp(4, {2, 3})), perm);
}

TEST(DeterminantTest, Examples) {
  EXPECT_EQ(determinant(IntegerMatrix::identity(5)), 1);
  EXPECT_EQ(determinant(abelianize(nielsen(gen(1), gen(2), 3))), 1);
  EXPECT_EQ(determinant(abelianize(sp(4, {2, 3}))), 1);
}

TEST(DeterminantTest, NeedsPivotingAndMatchesCofactors) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    IntegerMatrix m(n, n);
    std::vector<std::vector<long long>> raw(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // zero diagonal now and then to force row swaps
        raw[i][j] = (trial % 3 == 0 && i == j) ? 0 : entry(rng);
        m(i, j) = raw[i][j];
      }
    EXPECT_EQ(determinant(m), testing::cofactor_det(raw));
  }
}

TEST(DeterminantTest, LargeEntriesStayExact) {
  IntegerMatrix m(2, 2);
  m(0, 0) = 4'000'000'000LL;
  m(0, 1) = 3'000'000'000LL;
  m(1, 0) = 3'000'000'001LL;
  m(1, 1) = 4'000'000'000LL;
  BigInt expect = BigInt(4'000'000'000LL) * 4'000'000'000LL -
                  BigInt(3'000'000'000LL) * 3'000'000'001LL;
  EXPECT_EQ(determinant(m), expect);
}

TEST(IsSpecialTest, Examples) {
  EXPECT_TRUE(is_special(nielsen(gen(1), gen(2), 3)));
  EXPECT_TRUE(is_special(sp(4, {2, 3})));
  std::vector<Word> flip{W(3, {bar(1)}), W(3, {gen(2)}), W(3, {gen(3)})};
  EXPECT_FALSE(is_special(FreeAutomorphism(flip, flip)));
}

TEST(AutomorphismProperty, MutualInverseAssociativityAndAbelianization) {
  std::mt19937_64 rng(31);
  const int n = 4;
  auto random_aut = [&] {
    FreeAutomorphism f = FreeAutomorphism::identity(n);
    for (int k = 0; k < 5; ++k) f = compose(f, testing::random_nielsen(rng, n));
    return f;
  };
  for (int trial = 0; trial < 100; ++trial) {
    FreeAutomorphism f = random_aut(), g = random_aut(), h = random_aut();
    EXPECT_TRUE(f.is_consistent());
    EXPECT_TRUE(compose(f, invert_aut(f)).is_identity());
    EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
    EXPECT_EQ(abelianize(compose(f, g)), abelianize(f) * abelianize(g));
    EXPECT_TRUE(is_special(f));

    // Substitution against the rescanning oracle.
    Word w = testing::random_word(rng, n, 10);
    EXPECT_EQ(testing::values(f.apply(w)), testing::naive_apply(f, testing::values(w)));
  }
}

TEST(AutomorphismTest, Rendering) {
  EXPECT_EQ(to_string(nielsen(gen(1), gen(2), 2)), "a1 -> a1 a2\na2 -> a2\n");
}

}  // namespace
}  // namespace autfn
