#include "qes/spaces.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qes {

Basis MonomialSpace::basis() const {
  if (n < 0 || m < -1) throw std::invalid_argument("monomial space with negative degree");
  Basis b;
  for (int j = 0; j <= n; ++j) b.push_back({0, GenExponent(j)});
  for (int j = 0; j <= m; ++j) {
    BasisElement e{0, a + GenExponent(j)};
    if (std::find(b.begin(), b.end(), e) == b.end()) b.push_back(e);
  }
  return b;
}

TwoComponentSpace::TwoComponentSpace(int n_, int m_, FCase c, const Rational& l) : n(n_), m(m_), fcase(c), lambda(l) {
  if (n < 0 || m < 0) throw std::invalid_argument("two-component space with negative degree");
  if (fcase == FCase::SqrtP2 && m != n - 1) throw std::invalid_argument("f = sqrt(p2) requires m = n - 1");
  if (fcase == FCase::SqrtRatio && m != n) throw std::invalid_argument("f = sqrt((1-x)/(1-lambda x)) requires m = n");
}

FRing TwoComponentSpace::ring() const {
  return fcase == FCase::SqrtP2 ? FRing::sqrt_p2(lambda) : FRing::sqrt_ratio(lambda);
}

Basis TwoComponentSpace::basis() const { return pair_basis(n, m); }

Basis pair_basis(int deg0, int deg1) {
  Basis b;
  for (int j = 0; j <= deg0; ++j) b.push_back({0, GenExponent(j)});
  for (int j = 0; j <= deg1; ++j) b.push_back({1, GenExponent(j)});
  return b;
}

Basis strided_basis(const Rational& first, const Rational& stride, const Rational& last, int component) {
  if (sgn(stride) <= 0) throw std::invalid_argument("stride must be positive");
  Basis b;
  for (Rational e = first; e <= last; e += stride) b.push_back({component, GenExponent(e)});
  return b;
}

std::string basis_str(const BasisElement& b) {
  return (b.component == 0 ? std::string("") : std::string("f*")) + "x^(" + b.exponent.str() + ")";
}

namespace {

struct ImageTerm {
  BasisElement where;
  PolyInA coeff;
};

std::vector<ImageTerm> image(const MatrixOperator& A, const BasisElement& src) {
  std::vector<ImageTerm> out;
  for (int i = 0; i < 2; ++i)
    for (auto& [e, c] : A(i, src.component).apply_to_monomial(src.exponent)) out.push_back({{i, e}, c});
  return out;
}

std::vector<ImageTerm> image(const DiffOperator& A, const BasisElement& src) {
  if (src.component != 0) throw std::invalid_argument("scalar operator on a second component");
  std::vector<ImageTerm> out;
  for (auto& [e, c] : A.apply_to_monomial(src.exponent)) out.push_back({{0, e}, c});
  return out;
}

template <class Op>
InvarianceReport check_impl(const Op& A, const Basis& V, const Basis& W) {
  InvarianceReport rep;
  for (const auto& src : V)
    for (auto& t : image(A, src))
      if (std::find(W.begin(), W.end(), t.where) == W.end()) {
        rep.invariant = false;
        rep.failures.push_back({src, t.where, t.coeff});
      }
  return rep;
}

template <class Op>
Matrix<PolyInA> restrict_impl(const Op& A, const Basis& V) {
  int n = static_cast<int>(V.size());
  Matrix<PolyInA> M(n, n);
  for (int j = 0; j < n; ++j)
    for (auto& t : image(A, V[j])) {
      auto it = std::find(V.begin(), V.end(), t.where);
      if (it == V.end())
        throw std::domain_error("operator does not preserve the space: " + basis_str(V[j]) + " -> " +
                                basis_str(t.where));
      M(static_cast<int>(it - V.begin()), j) += t.coeff;
    }
  return M;
}

QuadMatrix constant_matrix(const Matrix<PolyInA>& M) {
  QuadMatrix R(M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) {
      if (M(i, j).degree() > 0) throw std::domain_error("restriction depends on the formal a; specialize first");
      R(i, j) = M(i, j).coeff(0);
    }
  return R;
}

}  // namespace

InvarianceReport check_invariance(const DiffOperator& A, const Basis& V) { return check_impl(A, V, V); }
InvarianceReport check_invariance(const MatrixOperator& A, const Basis& V) { return check_impl(A, V, V); }

InvarianceReport check_maps_into(const DiffOperator& A, const Basis& source, const Basis& target) {
  return check_impl(A, source, target);
}

InvarianceReport check_invariance(const FRingOperator& A, const TwoComponentSpace& V) {
  MatrixOperator M;
  try {
    M = scalar_to_matrix_unchecked(A);
  } catch (const std::domain_error&) {
    InvarianceReport rep;
    rep.invariant = false;
    return rep;
  }
  return check_invariance(M, V.basis());
}

Matrix<PolyInA> restrict_formal(const DiffOperator& A, const Basis& V) { return restrict_impl(A, V); }
Matrix<PolyInA> restrict_formal(const MatrixOperator& A, const Basis& V) { return restrict_impl(A, V); }
QuadMatrix restrict(const DiffOperator& A, const Basis& V) { return constant_matrix(restrict_impl(A, V)); }
QuadMatrix restrict(const MatrixOperator& A, const Basis& V) { return constant_matrix(restrict_impl(A, V)); }
QuadMatrix restrict(const FRingOperator& A, const TwoComponentSpace& V) {
  return restrict(scalar_to_matrix(A, V), V.basis());
}

QuadMatrix restrict_scalar(const FRingOperator& A, const TwoComponentSpace& V) {
  Basis B = V.basis();
  int dim = static_cast<int>(B.size());
  QuadMatrix R(dim, dim);
  for (int j = 0; j < dim; ++j) {
    XPoly mono = XPoly::monomial(QuadExt(1), to_long(B[j].exponent.q));
    FRingElement e = B[j].component == 0 ? FRingElement{mono, RationalFunction()}
                                         : FRingElement{RationalFunction(), mono};
    FRingElement img = A.apply(e);
    for (int comp = 0; comp < 2; ++comp) {
      const RationalFunction& part = comp == 0 ? img.plain : img.fpart;
      if (!part.is_polynomial()) throw std::domain_error("image leaves the polynomial sectors");
      const XPoly& p = part.num();
      for (int deg = 0; deg <= p.degree(); ++deg) {
        if (p.coeff(deg).is_zero()) continue;
        auto it = std::find(B.begin(), B.end(), BasisElement{comp, GenExponent(deg)});
        if (it == B.end()) throw std::domain_error("image leaves the space");
        R(static_cast<int>(it - B.begin()), j) = p.coeff(deg) * part.den().lead().inverse();
      }
    }
  }
  return R;
}

MatrixOperator scalar_to_matrix_unchecked(const FRingOperator& A) {
  const FRing& R = A.ring();
  FRingOperator Af = A * FRingOperator::f_mult(R);
  return MatrixOperator(A.plain_part().to_diff_operator(), Af.plain_part().to_diff_operator(),
                        A.f_part().to_diff_operator(), Af.f_part().to_diff_operator());
}

MatrixOperator scalar_to_matrix(const FRingOperator& A, const TwoComponentSpace& V) {
  MatrixOperator M = scalar_to_matrix_unchecked(A);
  InvarianceReport rep = check_invariance(M, V.basis());
  if (!rep.invariant)
    throw std::domain_error("operator does not preserve p + f q: " + basis_str(rep.failures[0].source) + " -> " +
                            basis_str(rep.failures[0].image));
  return M;
}

std::string matrix_csv(const QuadMatrix& M) {
  std::ostringstream os;
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) os << (j ? "," : "") << M(i, j).str();
    os << "\n";
  }
  return os.str();
}

}  // namespace qes
