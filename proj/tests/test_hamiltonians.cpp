#include <gtest/gtest.h>

#include "printers.hpp"

#include "qes/hamiltonians.hpp"

using namespace qes;

namespace {
XPoly poly(std::vector<QuadExt> c) { return XPoly(std::move(c)); }
}  // namespace

TEST(PolyPot, PotentialMatchesHamiltonian) {
  // M6 with m = 3, p2 = 1, p1 = 0, eps = 0, kappa0 = 1/2, written in x = y^2:
  // scalar part 4x^3 - 22x, sigma3 part 8x, sigma1 part -8 m p2 kappa0 = -12
  PolyPotParams p;
  p.m = 3;
  p.kappa0 = frac(1, 2);
  PotentialMatrix V = polypot_potential(p);
  EXPECT_EQ(V.v11, RationalFunction(poly({0, -14, 0, 4})));
  EXPECT_EQ(V.v22, RationalFunction(poly({0, -30, 0, 4})));
  EXPECT_EQ(V.v12, RationalFunction(QuadExt(-12)));
}

TEST(PolyPot, EpsilonAddsCentrifugalTerm) {
  PolyPotParams p;
  p.epsilon = 2;
  PotentialMatrix V = polypot_potential(p);
  EXPECT_EQ(V.v11.monomial_denominator_power(), 1);
}

TEST(PolyPot, PipelineReproducesClosedForm) {
  for (int m : {2, 3, 4}) {
    PolyPotParams p;
    p.m = m;
    p.kappa0 = frac(1, 3);
    PipelineReport r = polypot_pipeline_check(p);
    EXPECT_TRUE(r.matches) << "m = " << m;
    EXPECT_EQ(r.reading, "kappa = kappa0");
  }
}

TEST(PolyPot, AlgebraicFormPreservesSpace) {
  PolyPotParams p;
  p.m = 3;
  p.p1 = frac(1, 2);
  p.epsilon = 1;
  p.kappa0 = 2;
  EXPECT_TRUE(check_invariance(build_polypot_algebraic(p), polypot_space(p.m)).invariant);
}

TEST(PolyPot, ValidationRejectsBadParameters) {
  PolyPotParams p;
  p.m = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p.m = 2;
  p.p2 = -1;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Lame, PotentialInSnSquared) {
  // A = 4m^2+6m+3-delta = 25/2, C = 27/2, 2 theta k = sqrt(65)/2 at m = 1
  LameParams p;
  p.m = 1;
  p.delta = frac(1, 2);
  p.k2 = frac(1, 3);
  EXPECT_EQ(p.A(), frac(25, 2));
  EXPECT_EQ(p.C(), frac(27, 2));
  PotentialMatrix V = lame_potential(p);
  EXPECT_EQ(V.v11, RationalFunction(poly({frac(1, 3), frac(25, 6)})));
  EXPECT_EQ(V.v22, RationalFunction(poly({frac(-1, 3), frac(9, 2)})));
  EXPECT_EQ(V.v12, RationalFunction(QuadExt::sqrt_of(65) * QuadExt(frac(1, 2))));
}

TEST(Lame, PullbackOfSnSquared) {
  // x = sn^2: (dx/dz)^2 = 4x(1-x)(1-k^2 x)
  DiffOperator P = lame_pullback(frac(1, 2));
  auto img = P.apply_to_monomial(2);  // on x^2
  // sigma = 4x - 6x^2 + 2x^3; sigma x^2'' + sigma'/2 (x^2)' = 2 sigma + (2 - 6x + 3x^2) 2x
  XPoly got;
  for (auto& [e, c] : img) got += XPoly::monomial(c.coeff(0), to_long(e.q));
  EXPECT_EQ(got, poly({0, 12, -24, 10}));
}

TEST(Lame, PipelineIsolatesSingleTerm) {
  LameParams p;
  p.m = 1;
  p.delta = frac(1, 2);
  p.k2 = frac(1, 3);
  PipelineReport r = lame_pipeline_check(p);
  EXPECT_FALSE(r.matches);
  EXPECT_TRUE(r.residual(0, 0).is_zero());
  EXPECT_TRUE(r.residual(0, 1).is_zero());
  EXPECT_TRUE(r.residual(1, 0).is_zero());
  // 2 (k^2 + 1) D
  EXPECT_EQ(r.residual(1, 1), QuadExt(frac(8, 3)) * DiffOperator::euler());
}

TEST(Lame, AlgebraicFormPreservesSpace) {
  for (int m = 0; m <= 3; ++m) {
    LameParams p;
    p.m = m;
    p.delta = frac(1, 2);
    p.k2 = frac(1, 3);
    EXPECT_TRUE(check_invariance(build_lame_algebraic(p), lame_space(m)).invariant) << m;
  }
}

TEST(BoseHubbard, Constants) {
  BoseHubbardParams b;  // alpha = 1, M = 3/2
  EXPECT_EQ(b.c(), Rational(2));
  EXPECT_EQ(b.Mtilde(), Rational(2));
  EXPECT_TRUE(b.quasi_exact());
  // E0 = M^2 + 1/alpha^2 + alpha^2 c (c - 2) / 4
  EXPECT_EQ(b.E0(), frac(13, 4));
  b.M = frac(7, 4);
  EXPECT_FALSE(b.quasi_exact());
}

TEST(BoseHubbard, PotentialAtOrigin) {
  BoseHubbardParams b;
  // (cosh 0 / alpha - M)^2 - E0 = 1/4 - 13/4
  EXPECT_DOUBLE_EQ(bosehubbard_potential_e1(b, 0), -3.0);
}

TEST(BoseHubbard, IndicialRoots) {
  BoseHubbardParams b;
  EXPECT_EQ(bosehubbard_indicial_roots(b), (std::vector<Rational>{0, frac(1, 2)}));
}

TEST(BoseHubbard, PeeledFormAtSZero) {
  BoseHubbardParams b;
  EXPECT_EQ(bosehubbard_peeled(b), build_bosehubbard_reduced(b));
  // the printed f-form differs in the first-order part
  EXPECT_NE(bosehubbard_printed_peeled(b), bosehubbard_peeled(b));
}

TEST(BoseHubbard, UFormPreservesEvenPolynomials) {
  BoseHubbardParams b;  // c = 2: u^0, u^2 span an invariant space
  Basis V{{0, GenExponent(0)}, {0, GenExponent(2)}};
  EXPECT_TRUE(check_invariance(bosehubbard_u_form(b), V).invariant);
}
