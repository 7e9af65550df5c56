#include <gtest/gtest.h>

#include <climits>
#include <utility>

#include "e7sym/algebra.hpp"
#include "e7sym/random.hpp"
#include "e7sym/rational.hpp"

using namespace e7sym;

namespace {

// Signed unit product from the doubling rule applied to units only:
//   (u,0)(v,0) = (uv,0)        (u,0)(0,v) = (0,vu)
//   (0,u)(v,0) = (0,u conj v)  (0,u)(0,v) = (-(conj v) u, 0)
// where conj of a unit is itself for the real unit and minus itself otherwise.
std::pair<int, int> unit_oracle(int level, int i, int j) {
  if (level == 0) return {1, 0};
  const int half = 1 << (level - 1);
  const bool hi = i >= half, hj = j >= half;
  const int u = i % half, v = j % half;
  auto conj_sign = [](int x) { return x == 0 ? 1 : -1; };
  if (!hi && !hj) return unit_oracle(level - 1, u, v);
  if (!hi && hj) {
    auto [s, k] = unit_oracle(level - 1, v, u);
    return {s, k + half};
  }
  if (hi && !hj) {
    auto [s, k] = unit_oracle(level - 1, u, v);
    return {s * conj_sign(v), k + half};
  }
  auto [s, k] = unit_oracle(level - 1, v, u);
  return {-s * conj_sign(v), k};
}

}  // namespace

TEST(Rational, NormalizesAndPrints) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(3).to_string(), "3/1");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
}

TEST(Rational, OverflowFallsBackToExactBigNumbers) {
  const Rational big(LLONG_MAX);
  const Rational sq = big * big;
  EXPECT_EQ(sq / big, big);
  EXPECT_EQ((sq - sq), Rational(0));
  EXPECT_EQ(sq.to_string(), "85070591730234615847396907784232501249/1");
  const Rational tiny(1, LLONG_MAX);
  EXPECT_EQ(tiny * tiny * sq, Rational(1));
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(2, 4) <=> Rational(1, 2), std::strong_ordering::equal);
}

TEST(Algebra, TagsAndLetters) {
  EXPECT_EQ(AlgebraTag::from_letter("O").dim(), 8);
  EXPECT_EQ(AlgebraTag::from_letter("H").dim(), 4);
  EXPECT_EQ(AlgebraTag::complex().letter(), 'C');
  EXPECT_THROW(AlgebraTag::from_letter("S"), std::invalid_argument);
}

TEST(Algebra, ImaginaryUnitSquaresToMinusOne) {
  for (const auto tag : kAllAlgebras) {
    for (int i = 1; i < tag.dim(); ++i) {
      EXPECT_EQ(AlgElem::unit(tag, i) * AlgElem::unit(tag, i), -AlgElem::one(tag));
    }
  }
}

TEST(Algebra, OneIsIdentity) {
  Sampler rng(11);
  for (const auto tag : kAllAlgebras) {
    for (int s = 0; s < 10; ++s) {
      const AlgElem x = rng.element(tag);
      EXPECT_EQ(AlgElem::one(tag) * x, x);
      EXPECT_EQ(x * AlgElem::one(tag), x);
    }
  }
}

TEST(Algebra, UnitTableMatchesRecursionOracle) {
  for (int level = 0; level <= 3; ++level) {
    const AlgebraTag tag(level);
    for (int i = 0; i < tag.dim(); ++i) {
      for (int j = 0; j < tag.dim(); ++j) {
        const auto [s, k] = unit_oracle(level, i, j);
        AlgElem want(tag);
        want[k] = s;
        EXPECT_EQ(AlgElem::unit(tag, i) * AlgElem::unit(tag, j), want)
            << "level " << level << " e" << i << " e" << j;
      }
    }
  }
}

TEST(Algebra, GeneralProductMatchesCayleyDicksonRule) {
  // (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)) checked one level down
  Sampler rng(12);
  for (int level = 1; level <= 3; ++level) {
    const AlgebraTag tag(level), sub(level - 1);
    const int half = sub.dim();
    for (int s = 0; s < 20; ++s) {
      const AlgElem x = rng.element(tag), y = rng.element(tag);
      auto split = [&](const AlgElem& z, int off) {
        AlgElem r(sub);
        for (int u = 0; u < half; ++u) r[u] = z[off + u];
        return r;
      };
      const AlgElem a = split(x, 0), b = split(x, half), c = split(y, 0), d = split(y, half);
      const AlgElem lo = a * c - conj(d) * b, hi = d * a + b * conj(c);
      const AlgElem z = x * y;
      EXPECT_EQ(split(z, 0), lo);
      EXPECT_EQ(split(z, half), hi);
    }
  }
}

TEST(Algebra, ConjugateAndNorm) {
  const AlgebraTag o = AlgebraTag::octonion();
  EXPECT_EQ(conj(AlgElem::one(o)), AlgElem::one(o));
  EXPECT_EQ(norm(AlgElem::unit(o, 3)), Rational(1));
  Sampler rng(13);
  for (int s = 0; s < 20; ++s) {
    const AlgElem x = rng.element(o);
    EXPECT_EQ(x * conj(x), AlgElem::scalar(o, norm(x)));
    EXPECT_EQ(AlgElem::scalar(o, re(x)) + im(x), x);
  }
}

TEST(Algebra, NormIsMultiplicativeOnHundredOctonionPairs) {
  Sampler rng(14);
  const AlgebraTag o = AlgebraTag::octonion();
  for (int s = 0; s < 100; ++s) {
    const AlgElem x = rng.element(o), y = rng.element(o);
    EXPECT_EQ(norm(x * y), norm(x) * norm(y));
  }
}

TEST(Algebra, AssociatorVanishesUpToQuaternions) {
  Sampler rng(15);
  for (int level = 0; level <= 2; ++level) {
    for (int s = 0; s < 20; ++s) {
      const AlgebraTag tag(level);
      EXPECT_TRUE(associator(rng.element(tag), rng.element(tag), rng.element(tag)).is_zero());
    }
  }
}

TEST(Algebra, OctonionsAreNonassociativeButAlternative) {
  const AlgebraTag o = AlgebraTag::octonion();
  EXPECT_FALSE(associator(AlgElem::unit(o, 1), AlgElem::unit(o, 2), AlgElem::unit(o, 4)).is_zero());
  Sampler rng(16);
  for (int s = 0; s < 50; ++s) {
    const AlgElem x = rng.element(o), y = rng.element(o);
    EXPECT_TRUE(associator(x, x, y).is_zero());
    EXPECT_TRUE(associator(y, x, x).is_zero());
    EXPECT_TRUE(associator(x, y, x).is_zero());
  }
}

TEST(Algebra, CommutatorOfElementWithItself) {
  Sampler rng(17);
  const AlgElem x = rng.element(AlgebraTag::octonion());
  EXPECT_TRUE(commutator(x, x).is_zero());
}

TEST(Algebra, MixingAlgebrasThrows) {
  EXPECT_THROW(AlgElem::one(AlgebraTag::real()) * AlgElem::one(AlgebraTag::complex()),
               AlgebraMismatch);
}

TEST(Algebra, EmbedKeepsProducts) {
  Sampler rng(18);
  const AlgebraTag h = AlgebraTag::quaternion();
  for (int s = 0; s < 10; ++s) {
    const AlgElem x = rng.element(h), y = rng.element(h);
    EXPECT_EQ((x * y).embed(), x.embed() * y.embed());
  }
}
