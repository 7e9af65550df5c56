#include <gtest/gtest.h>

#include "e7sym/conformal.hpp"
#include "e7sym/random.hpp"

using namespace e7sym;

namespace {

const std::array<std::size_t, 4> kE6Dims = {8, 16, 35, 78};
const std::array<std::size_t, 4> kE7Dims = {21, 35, 66, 133};

const E7Structure& structure(AlgebraTag tag) {
  static const std::array<E7Structure, 4> all = {
      E7Structure(AlgebraTag::real()), E7Structure(AlgebraTag::complex()),
      E7Structure(AlgebraTag::quaternion()), E7Structure(AlgebraTag::octonion())};
  return all[tag.level()];
}

template <typename Fn>
Rational first_order(Fn&& f) {
  return quartic_polynomial_coefficients(f)[1];
}

}  // namespace

TEST(E6, GeneratorCounts) {
  const auto o = e6_generator_basis(AlgebraTag::octonion());
  int boosts = 0, rotations = 0;
  for (const auto& g : o) {
    boosts += g.kind == E6Kind::boost;
    rotations += g.kind == E6Kind::rotation;
  }
  EXPECT_EQ(boosts, 26);
  EXPECT_EQ(rotations, 38);
  const auto r = e6_generator_basis(AlgebraTag::real());
  EXPECT_EQ(r.size(), 8u);
  EXPECT_EQ(e6_boost_count(AlgebraTag::real()), 5);
  EXPECT_EQ(e6_rotation_count(AlgebraTag::real()), 3);
}

TEST(E6, GeneratorsAreTracefree) {
  for (const auto tag : kAllAlgebras) {
    for (const auto& g : e6_generator_basis(tag)) {
      EXPECT_TRUE(g.act.trace().is_zero());
      EXPECT_TRUE(g.matrix->full_trace().is_zero());
    }
  }
}

TEST(E6, ClosureDimensions) {
  for (const auto tag : kAllAlgebras) {
    EXPECT_EQ(structure(tag).e6().dimension(), kE6Dims[tag.level()]) << tag.letter();
  }
  EXPECT_EQ(structure(AlgebraTag::octonion()).e6().derived_count(), 14u);
  EXPECT_EQ(structure(AlgebraTag::quaternion()).e6().derived_count(), 3u);
}

TEST(E6, SingleGeneratorClosure) {
  const auto g = e6_generator_basis(AlgebraTag::octonion());
  EXPECT_EQ(close_under_bracket(std::vector<QMatrix>{g[5].stacked()}).dimension(), 1u);
}

TEST(E6, DualIsMinusDaggerAndAdjoint) {
  Sampler rng(31);
  for (const auto tag : kAllAlgebras) {
    for (const auto& op : structure(tag).e6().basis) {
      EXPECT_EQ(op.dual, E6Op::dual_of(tag, op.act));
      if (op.has_matrix()) {
        EXPECT_EQ(op.dual, E6Op::from_matrix(-op.matrix->dagger()).act);
      }
      const HermMat x = rng.herm(tag), y = rng.herm(tag);
      EXPECT_EQ(trace_form(op.apply(x), y), -trace_form(x, op.apply_dual(y)));
    }
  }
}

TEST(E6, BoostsAndRotationsPreserveDeterminant) {
  // det is preserved to first order by every generator; boosts change the
  // trace, rotations keep it.
  Sampler rng(32);
  for (const auto tag : kAllAlgebras) {
    const HermMat x = rng.herm(tag);
    bool some_boost_moves_trace = false;
    for (const auto& g : e6_generator_basis(tag)) {
      const HermMat gx = g.apply(x);
      EXPECT_TRUE(first_order([&](const Rational& t) { return det(x + t * gx); }).is_zero());
      if (g.kind == E6Kind::rotation) {
        EXPECT_TRUE(trace(gx).is_zero());
      }
      if (g.kind == E6Kind::boost && !trace(gx).is_zero()) some_boost_moves_trace = true;
    }
    EXPECT_TRUE(some_boost_moves_trace);
  }
}

TEST(FreudVecTest, Dimensions) {
  EXPECT_EQ(FreudVec::real_dim(AlgebraTag::real()), 14);
  EXPECT_EQ(FreudVec::real_dim(AlgebraTag::complex()), 20);
  EXPECT_EQ(FreudVec::real_dim(AlgebraTag::quaternion()), 32);
  EXPECT_EQ(FreudVec::real_dim(AlgebraTag::octonion()), 56);
}

TEST(FreudenthalAction, Dilation) {
  Sampler rng(33);
  const Rational third(1, 3);
  for (const auto tag : kAllAlgebras) {
    const FreudVec p = rng.freudvec(tag);
    const Rational rho(5, 2);
    const FreudVec img = freudenthal_action(E7Elem::dilation(tag, rho), p);
    EXPECT_EQ(img, (FreudVec{(third * rho) * p.X, (-third * rho) * p.Y, -rho * p.p, rho * p.q}));
  }
}

TEST(FreudenthalAction, ZeroAndTranslationExamples) {
  Sampler rng(34);
  for (const auto tag : kAllAlgebras) {
    const FreudVec p = rng.freudvec(tag);
    EXPECT_EQ(freudenthal_action(E7Elem::zero(tag), p), FreudVec::zero(tag));
    const FreudVec q_only{HermMat(tag), HermMat(tag), 0, 1};
    const FreudVec img = freudenthal_action(E7Elem::translation(HermMat::identity(tag)), q_only);
    EXPECT_EQ(img, (FreudVec{HermMat::identity(tag), HermMat(tag), 0, 0}));
  }
}

TEST(Matrixize, AgreesWithAction) {
  Sampler rng(35);
  for (const auto tag : kAllAlgebras) {
    const auto& e7 = structure(tag);
    for (std::size_t i = 0; i < e7.dimension(); i += (tag.level() == 3 ? 7 : 1)) {
      const FreudVec p = rng.freudvec(tag);
      EXPECT_EQ(e7.matrices()[i].apply(p.coords()), freudenthal_action(e7.basis()[i], p).coords());
    }
  }
}

TEST(Matrixize, ZeroAdditiveAndSized) {
  Sampler rng(36);
  EXPECT_TRUE(matrixize(E7Elem::zero(AlgebraTag::octonion())).is_zero());
  const auto& e7 = structure(AlgebraTag::octonion());
  for (const auto& m : e7.matrices()) {
    EXPECT_EQ(m.rows(), 56u);
    EXPECT_EQ(m.cols(), 56u);
  }
  for (const auto tag : kAllAlgebras) {
    const auto& s = structure(tag);
    for (int k = 0; k < 5; ++k) {
      std::vector<Rational> a(s.dimension()), b(s.dimension()), ab(s.dimension());
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = rng.rational();
        b[i] = rng.rational();
        ab[i] = a[i] + b[i];
      }
      EXPECT_EQ(matrixize(s.element(ab)), matrixize(s.element(a)) + matrixize(s.element(b)));
    }
  }
}

TEST(E7, BasisSizes) {
  for (const auto tag : kAllAlgebras) EXPECT_EQ(structure(tag).dimension(), kE7Dims[tag.level()]);
}

TEST(E7, ClosureOfBasisDoesNotGrow) {
  for (const auto tag : {AlgebraTag::real(), AlgebraTag::complex(), AlgebraTag::quaternion()}) {
    EXPECT_EQ(close_under_bracket(structure(tag).matrices()).dimension(), kE7Dims[tag.level()]);
  }
}

TEST(E7, BracketOfElementWithItselfIsZero) {
  const auto& e7 = structure(AlgebraTag::octonion());
  for (std::size_t i = 0; i < e7.dimension(); i += 11) {
    EXPECT_TRUE(bracket(e7.matrices()[i], e7.matrices()[i]).is_zero());
  }
}

TEST(E7, DilationGradesTranslations) {
  for (const auto tag : kAllAlgebras) {
    const HermMat e = HermMat::basis_element(tag, 4);
    const QMatrix t = matrixize(E7Elem::translation(e));
    const QMatrix c = bracket(matrixize(E7Elem::dilation(tag)), t);
    EXPECT_EQ(c, t * Rational(-2, 3));
    const QMatrix tb = matrixize(E7Elem::conformal_translation(e));
    EXPECT_EQ(bracket(matrixize(E7Elem::dilation(tag)), tb), tb * Rational(2, 3));
  }
}

TEST(E7, CommutatorWithIdentityTranslationAsPrinted) {
  // [(0,0,I,0), (Q,0,0,0)] = (0,0,Q,0) for boost basis Q
  for (const auto tag : kAllAlgebras) {
    const QMatrix ti = matrixize(E7Elem::translation(HermMat::identity(tag)));
    for (const auto& g : e6_generator_basis(tag)) {
      if (g.kind != E6Kind::boost) continue;
      EXPECT_EQ(bracket(ti, matrixize(E7Elem::from_e6(g))),
                matrixize(E7Elem::translation(HermMat(*g.matrix))))
          << tag.letter();
    }
  }
}

TEST(E7, CommutatorWithIdentityTranslationObserved) {
  // what the action X -> phi X + X phi^dagger actually gives
  for (const auto tag : kAllAlgebras) {
    const QMatrix ti = matrixize(E7Elem::translation(HermMat::identity(tag)));
    for (const auto& g : e6_generator_basis(tag)) {
      if (g.kind != E6Kind::boost) continue;
      EXPECT_EQ(bracket(ti, matrixize(E7Elem::from_e6(g))),
                matrixize(E7Elem::translation(HermMat(*g.matrix))) * Rational(-2));
    }
  }
}

TEST(E7, StructureCoordinatesRoundTrip) {
  Sampler rng(37);
  const auto& e7 = structure(AlgebraTag::quaternion());
  std::vector<Rational> c(e7.dimension());
  for (auto& x : c) x = rng.rational();
  const auto back = e7.coordinates(matrixize(e7.element(c)));
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, c);
  QMatrix junk(32, 32);
  junk(0, 31) = 1;
  EXPECT_FALSE(e7.contains(junk));
}

TEST(SuperFreudenthal, Examples) {
  for (const auto tag : kAllAlgebras) {
    const E7Elem z = super_freudenthal(FreudVec::zero(tag));
    EXPECT_TRUE(matrixize(z).is_zero());
    const HermMat i = HermMat::identity(tag);
    const E7Elem t = super_freudenthal(FreudVec{i, i, 1, 1});
    EXPECT_TRUE(t.rho.is_zero());
    EXPECT_TRUE(t.A.is_zero());
    EXPECT_TRUE(t.B.is_zero());
    EXPECT_TRUE(t.phi.act.is_zero());
  }
}

TEST(SuperFreudenthal, LiesInE7) {
  Sampler rng(38);
  for (const auto tag : kAllAlgebras) {
    const int n = tag.level() == 3 ? 3 : 20;
    for (int s = 0; s < n; ++s) {
      EXPECT_TRUE(structure(tag).contains(matrixize(super_freudenthal(rng.freudvec(tag)))));
    }
  }
}

TEST(Quartic, Examples) {
  Sampler rng(39);
  for (const auto tag : kAllAlgebras) {
    const HermMat i = HermMat::identity(tag);
    EXPECT_EQ(quartic(FreudVec{i, i, 1, 1}), Rational(0));
    const Rational p = rng.rational(), q = rng.rational();
    EXPECT_EQ(quartic(FreudVec{HermMat(tag), HermMat(tag), p, q}), Rational(-1, 4) * p * p * q * q);
    EXPECT_EQ(quartic(FreudVec{rng.herm(tag), HermMat(tag), 0, 0}), Rational(0));
  }
}

TEST(Quartic, InterpolationRecoversPolynomial) {
  const auto c = quartic_polynomial_coefficients(
      [](const Rational& t) { return Rational(3) - Rational(1, 2) * t + t * t * t * t; });
  EXPECT_EQ(c, (std::vector<Rational>{3, Rational(-1, 2), 0, 0, 1}));
}

TEST(Quartic, InvariantUnderE7) {
  Sampler rng(40);
  for (const auto tag : kAllAlgebras) {
    const auto& e7 = structure(tag);
    for (std::size_t i = 0; i < e7.dimension(); ++i) {
      const FreudVec p = rng.freudvec(tag);
      EXPECT_TRUE(quartic_first_order_change(p, freudenthal_action(e7.basis()[i], p)).is_zero())
          << tag.letter() << " basis " << i;
    }
  }
}

TEST(Quartic, GenericMatrixIsNotInvariant) {
  Sampler rng(41);
  const AlgebraTag tag = AlgebraTag::real();
  const FreudVec p = rng.freudvec(tag);
  // X -> X, everything else fixed: scales the cubic terms unevenly
  FreudVec img{p.X, HermMat(tag), 0, 0};
  EXPECT_FALSE(quartic_first_order_change(p, img).is_zero());
}
