#include <gtest/gtest.h>

#include "printers.hpp"

#include "qes/fring.hpp"
#include "qes/transforms.hpp"
#include "qes/weylop.hpp"

using namespace qes;

namespace {

PolyInA c(long v) { return PolyInA(QuadExt(v)); }
PolyInA c(const Rational& v) { return PolyInA(QuadExt(v)); }
using Op = DiffOperator;

// Apply B then A term by term on a monomial, independent of operator*.
MonomialImage apply_twice(const Op& A, const Op& B, const GenExponent& s) {
  return merge_image(qes::apply(A, B.apply_to_monomial(s)));
}

}  // namespace

TEST(DiffOperator, CanonicalCommutator) {
  // [d, x] = 1
  EXPECT_EQ(commutator(Op::d(), Op::x_pow(1)), Op::identity());
  // [D, x^k] = k x^k
  EXPECT_EQ(commutator(Op::euler(), Op::x_pow(3)), QuadExt(3) * Op::x_pow(3));
}

TEST(DiffOperator, MonomialAction) {
  // d^2 x^s = s(s-1) x^(s-2) with formal s = a
  auto img = Op::d(2).apply_to_monomial(GenExponent(0, 1));
  ASSERT_EQ(img.size(), 1u);
  EXPECT_EQ(img[0].first, GenExponent(-2, 1));
  PolyInA a = PolyInA::var();
  EXPECT_EQ(img[0].second, a * (a - c(1)));
}

TEST(DiffOperator, CompositionAgreesWithSuccessiveAction) {
  Op A = Op::x_pow(2) * Op::d(2) + QuadExt(3) * Op::x_pow(GenExponent(0, 1)) * Op::d();
  Op B = Op::euler_shift(c(frac(5, 2))) * Op::x_pow(-1) + Op::d(3);
  for (auto s : {GenExponent(4), GenExponent(0, 1), GenExponent(frac(7, 3))})
    EXPECT_TRUE(merge_image((A * B).apply_to_monomial(s)) == apply_twice(A, B, s));
}

TEST(DiffOperator, ShiftDecompositionRoundTrip) {
  Op A = Op::x_pow(3) * Op::d(2) - Op::x_pow(1) * Op::d() + QuadExt(2) * Op::d(1);
  auto parts = shift_decomposition(A);
  EXPECT_EQ(parts.size(), 3u);  // shifts +1, 0, -1
  EXPECT_EQ(from_shift_decomposition(parts), A);
}

TEST(DiffOperator, EulerProduct) {
  // (D - 1)(D - 2) x^s = (s-1)(s-2) x^s; kills x and x^2
  Op P = euler_product({c(1), c(2)});
  EXPECT_TRUE(P.apply_to_monomial(1).empty());
  EXPECT_TRUE(P.apply_to_monomial(2).empty());
  auto img = P.apply_to_monomial(4);
  ASSERT_EQ(img.size(), 1u);
  EXPECT_EQ(img[0].second, c(6));
}

TEST(DiffOperator, SpecializeFormalA) {
  Op A = Op::x_pow(GenExponent(0, 1)) * Op::euler_shift(PolyInA::var());
  Op B = A.specialize_a(frac(7, 3));
  EXPECT_FALSE(B.has_formal_a());
  EXPECT_EQ(B, Op::x_pow(frac(7, 3)) * Op::euler_shift(c(frac(7, 3))));
}

TEST(DiffOperator, PowerIsRepeatedComposition) {
  Op j = Op::x_pow(1) * Op::euler_shift(c(3));
  EXPECT_EQ(power(j, 3), j * j * j);
  EXPECT_EQ(power(j, 0), Op::identity());
}

TEST(MatrixOperator, ProductAndCommutator) {
  MatrixOperator X(Op(), Op::d(), Op::x_pow(1), Op());
  MatrixOperator P = X * X;
  EXPECT_EQ(P(0, 0), Op::d() * Op::x_pow(1));
  EXPECT_EQ(P(1, 1), Op::x_pow(1) * Op::d());
  MatrixOperator C = commutator(X, X);
  EXPECT_TRUE(C.is_zero());
}

TEST(Transforms, PullbackOfSquareRootVariable) {
  // x = z^2: (dx/dz)^2 = 4x, d^2/dz^2 = 4x d^2 + 2 d
  Op P = pullback_second_derivative({XPoly(std::vector<QuadExt>{0, 4})});
  EXPECT_EQ(P, QuadExt(4) * Op::x_pow(1) * Op::d(2) + QuadExt(2) * Op::d());
}

TEST(Transforms, GaugeConjugation) {
  // e^{-x} d e^{x} = d + 1
  RatOperator d1 = RatOperator::d();
  RatOperator g = conjugate(d1, {RationalFunction(QuadExt(1))});
  EXPECT_EQ(g, RatOperator({RationalFunction(QuadExt(1)), RationalFunction(QuadExt(1))}));
  // x^{-s} D x^{s} = D + s
  Op h = conjugate_scalar(Op::euler(), {RationalFunction(XPoly(QuadExt(3)), XPoly::var())});
  EXPECT_EQ(h, Op::euler_shift(c(-3)));
}

TEST(Transforms, SubstituteVariable) {
  // z = u^2 turns d_z into (1/(2u)) d_u
  RatOperator r = substitute_variable(RatOperator::d(), XPoly(std::vector<QuadExt>{0, 0, 1}));
  EXPECT_EQ(r.coeff(1), RationalFunction(XPoly(QuadExt(frac(1, 2))), XPoly::var()));
  EXPECT_TRUE(r.coeff(0).is_zero());
}

TEST(Transforms, AffineSubstitution) {
  // y = 2x + 1: d_y = (1/2) d_x, y = 2x + 1
  Op A = Op::x_pow(1) * Op::d();
  Op B = affine_substitute(A, QuadExt(2), QuadExt(1));
  Op want = Op::x_pow(1) * Op::d() + QuadExt(frac(1, 2)) * Op::d();
  EXPECT_EQ(B, want);
}

TEST(Transforms, IndicialPolynomial) {
  // x d^2 + (1/2) d: s(s-1) + s/2 = s^2 - s/2, roots 0 and 1/2
  Op A = Op::x_pow(1) * Op::d(2) + QuadExt(frac(1, 2)) * Op::d();
  XPoly p = indicial_polynomial(A);
  EXPECT_TRUE(p(QuadExt(0)).is_zero());
  EXPECT_TRUE(p(QuadExt(frac(1, 2))).is_zero());
  EXPECT_EQ(p.degree(), 2);
}

TEST(FRing, SquareAndDerivative) {
  FRing R = FRing::sqrt_p2(-1);  // f^2 = 1 - x^2
  FRingElement f{RationalFunction(), RationalFunction(QuadExt(1))};
  FRingElement ff = mul(R, f, f);
  EXPECT_TRUE(ff.fpart.is_zero());
  EXPECT_EQ(ff.plain, R.F());
  // f' = f F'/(2F) = -x f / (1 - x^2)
  FRingElement df = derivative(R, f);
  EXPECT_TRUE(df.plain.is_zero());
  XPoly x = XPoly::var();
  EXPECT_EQ(df.fpart, RationalFunction(-x, XPoly(std::vector<QuadExt>{1, 0, -1})));
}

TEST(FRing, OperatorActionMatchesProductRule) {
  FRing R = FRing::sqrt_ratio(frac(1, 3));
  FRingOperator d = FRingOperator::plain(R, Op::d());
  FRingOperator fm = FRingOperator::f_mult(R);
  // [d, f] = f'
  FRingOperator comm = commutator(d, fm);
  FRingElement f{RationalFunction(), RationalFunction(QuadExt(1))};
  FRingElement one{RationalFunction(QuadExt(1)), RationalFunction()};
  EXPECT_EQ(comm.apply(one), derivative(R, f));
  EXPECT_EQ(comm.order(), 0);
  // f^{-1} f = 1
  FRingOperator id = FRingOperator::f_inv_mult(R) * fm;
  EXPECT_EQ(id.apply(one), one);
}
