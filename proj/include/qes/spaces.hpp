// Finite invariant spaces: bases, invariance checks, restriction matrices and
// the scalar-to-matrix correspondence for spaces p + f q.
#pragma once

#include <string>
#include <vector>

#include "qes/fring.hpp"
#include "qes/matrix.hpp"
#include "qes/weylop.hpp"

namespace qes {

struct BasisElement {
  int component = 0;
  GenExponent exponent;
  friend bool operator==(const BasisElement& x, const BasisElement& y) {
    return x.component == y.component && x.exponent == y.exponent;
  }
};
using Basis = std::vector<BasisElement>;

// span{x^0..x^n} + span{x^a..x^(a+m)}; m = -1 drops the second sector.
struct MonomialSpace {
  int n = 0;
  int m = -1;
  GenExponent a{0, 1};  // formal by default
  static MonomialSpace formal(int n, int m) { return {n, m, GenExponent(0, 1)}; }
  static MonomialSpace specialized(int n, int m, const Rational& a) { return {n, m, GenExponent(a, 0)}; }
  static MonomialSpace polynomials(int n) { return {n, -1, GenExponent(0, 1)}; }
  Basis basis() const;
};

enum class FCase { SqrtP2, SqrtRatio };

// Pairs (p, q), deg p <= n, deg q <= m, standing for p + f q.
struct TwoComponentSpace {
  int n = 0;
  int m = 0;
  FCase fcase = FCase::SqrtP2;
  Rational lambda = -1;
  TwoComponentSpace(int n_, int m_, FCase c, const Rational& l);
  FRing ring() const;
  Basis basis() const;
  int dimension() const { return n + 1 + m + 1; }
};

// Plain sector degrees 0..deg0 then second component 0..deg1.
Basis pair_basis(int deg0, int deg1);
// Exponents first, first+stride, ..., last on one component.
Basis strided_basis(const Rational& first, const Rational& stride, const Rational& last, int component = 0);
std::string basis_str(const BasisElement& b);

struct InvarianceFailure {
  BasisElement source;
  BasisElement image;  // offending term outside the span
  PolyInA coeff;
};

struct InvarianceReport {
  bool invariant = true;
  std::vector<InvarianceFailure> failures;
};

InvarianceReport check_invariance(const DiffOperator& A, const Basis& V);
InvarianceReport check_invariance(const MatrixOperator& A, const Basis& V);
InvarianceReport check_invariance(const FRingOperator& A, const TwoComponentSpace& V);
// Images of every source element lie in span(target).
InvarianceReport check_maps_into(const DiffOperator& A, const Basis& source, const Basis& target);

// Column j holds the image of V[j]; throws std::domain_error if not invariant.
Matrix<PolyInA> restrict_formal(const DiffOperator& A, const Basis& V);
Matrix<PolyInA> restrict_formal(const MatrixOperator& A, const Basis& V);
// Same, requiring coefficients free of the formal a.
QuadMatrix restrict(const DiffOperator& A, const Basis& V);
QuadMatrix restrict(const MatrixOperator& A, const Basis& V);
QuadMatrix restrict(const FRingOperator& A, const TwoComponentSpace& V);
// Same matrix read off from A(x^j) and A(f x^j) evaluated in the f-ring,
// without going through scalar_to_matrix.
QuadMatrix restrict_scalar(const FRingOperator& A, const TwoComponentSpace& V);

// M with A(p + f q) = M(p,q)_1 + f M(p,q)_2; throws if A does not preserve V.
MatrixOperator scalar_to_matrix(const FRingOperator& A, const TwoComponentSpace& V);
// Without the invariance requirement (entries may carry x^-k terms).
MatrixOperator scalar_to_matrix_unchecked(const FRingOperator& A);

std::string matrix_csv(const QuadMatrix& M);

}  // namespace qes
