#include <gtest/gtest.h>

#include "printers.hpp"

#include "qes/catalog.hpp"
#include "qes/spaces.hpp"

using namespace qes;

namespace {
using Op = DiffOperator;
PolyInA c(const Rational& v) { return PolyInA(QuadExt(v)); }
}  // namespace

TEST(Spaces, MonomialBasisOrdering) {
  Basis b = MonomialSpace::specialized(1, 2, 2).basis();
  // 1, x | x^2, x^3, x^4
  ASSERT_EQ(b.size(), 5u);
  EXPECT_EQ(b[2].exponent, GenExponent(2));
  // overlapping sectors are de-duplicated
  EXPECT_EQ(MonomialSpace::specialized(2, 2, 1).basis().size(), 4u);
  EXPECT_EQ(MonomialSpace::formal(2, 1).basis().size(), 5u);
}

TEST(Spaces, InvarianceAndFailureReport) {
  Basis P3 = MonomialSpace::polynomials(3).basis();
  EXPECT_TRUE(check_invariance(j_plus(3), P3).invariant);
  InvarianceReport bad = check_invariance(j_plus(2), P3);
  ASSERT_FALSE(bad.invariant);
  EXPECT_EQ(bad.failures[0].source.exponent, GenExponent(3));
  EXPECT_EQ(bad.failures[0].image.exponent, GenExponent(4));
}

TEST(Spaces, RestrictionOfJPlusIsLowering) {
  // j+(n) x^k = (k - n) x^(k+1)
  QuadMatrix R = restrict(j_plus(3), MonomialSpace::polynomials(3).basis());
  for (int k = 0; k < 3; ++k) EXPECT_EQ(R(k + 1, k), QuadExt(k - 3));
  EXPECT_TRUE(R(3, 3).is_zero());
  EXPECT_EQ(matrix_csv(restrict(j_zero(2), MonomialSpace::polynomials(2).basis())), "-1,0,0\n0,0,0\n0,0,1\n");
}

TEST(Spaces, RestrictionIsHomomorphism) {
  Basis V = MonomialSpace::specialized(3, 2, frac(7, 3)).basis();
  GenExponent a(frac(7, 3));
  Op A = J_plus(3, 2, a), B = J_minus(a) + QuadExt(2) * J_zero(3, 2);
  EXPECT_EQ(restrict(A * B, V), restrict(A, V) * restrict(B, V));
}

TEST(Spaces, FormalRestrictionCarriesA) {
  Basis V = MonomialSpace::formal(1, 1).basis();
  Matrix<PolyInA> R = restrict_formal(J_zero(1, 1), V);
  // J0 x^a = (a - 3/2) x^a
  EXPECT_EQ(R(2, 2), PolyInA::var() - c(frac(3, 2)));
  EXPECT_THROW(restrict(J_zero(1, 1), V), std::domain_error);
}

TEST(Spaces, GaugeConjugationKeepsCharpoly) {
  // x^{-1/2} conjugation maps the invariant space to another one; the spectrum
  // of the restriction is unchanged
  Basis V = MonomialSpace::polynomials(4).basis();
  Op H = j_plus(4) * j_minus() + QuadExt(3) * j_zero(4) + j_minus() * j_minus();
  QuadMatrix R = restrict(H, V);
  Op G = conjugate_scalar(H, {RationalFunction(XPoly(QuadExt(frac(1, 2))), XPoly::var())});
  Basis W;
  for (auto e : V) W.push_back({0, e.exponent - GenExponent(frac(1, 2))});
  EXPECT_EQ(charpoly(restrict(G, W)), charpoly(R));
}

TEST(Spaces, ScalarToMatrixIdentity) {
  TwoComponentSpace V(2, 1, FCase::SqrtP2, -1);
  FRingOperator I = FRingOperator::plain(V.ring(), Op::identity());
  EXPECT_TRUE(scalar_to_matrix(I, V) == MatrixOperator::identity());
}

TEST(Spaces, ScalarToMatrixHomomorphism) {
  TwoComponentSpace V(3, 2, FCase::SqrtP2, -1);
  FRingOperator A = S_op(1, 3, -1), B = S_op(3, 3, -1);
  MatrixOperator MA = scalar_to_matrix(A, V), MB = scalar_to_matrix(B, V);
  EXPECT_TRUE(scalar_to_matrix(A * B, V) == MA * MB);
}

TEST(Spaces, DirectAndMatrixRestrictionAgree) {
  TwoComponentSpace V(2, 1, FCase::SqrtP2, -1);
  for (int i = 1; i <= 3; ++i) {
    FRingOperator S = S_op(i, 2, -1);
    EXPECT_EQ(restrict(S, V), restrict_scalar(S, V));
  }
}

TEST(Spaces, ScalarToMatrixRejectsNonInvariant) {
  TwoComponentSpace V(2, 1, FCase::SqrtP2, -1);
  FRingOperator X = FRingOperator::plain(V.ring(), Op::x_pow(1));
  EXPECT_THROW(scalar_to_matrix(X, V), std::domain_error);
}
