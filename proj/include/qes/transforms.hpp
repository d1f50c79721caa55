// Gauge conjugations and polynomial changes of variable.
#pragma once

#include <string>
#include <vector>

#include "qes/exactnum.hpp"
#include "qes/weylop.hpp"

namespace qes {

// sum_k c_k(x) d^k with rational-function coefficients; no formal a.
class RatOperator {
 public:
  RatOperator() = default;
  explicit RatOperator(std::vector<RationalFunction> c);
  static RatOperator multiplication(const RationalFunction& f) { return RatOperator({f}); }
  static RatOperator d(int k = 1);
  static RatOperator from(const DiffOperator& op);  // requires no formal a, integer powers

  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  RationalFunction coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : RationalFunction(); }
  const std::vector<RationalFunction>& coeffs() const { return c_; }
  // Generalized-power form; throws std::domain_error when a denominator is
  // not a power of x.
  DiffOperator to_diff_operator() const;
  RationalFunction apply(const RationalFunction& f) const;
  std::string str() const;

  friend RatOperator operator+(const RatOperator& x, const RatOperator& y);
  friend RatOperator operator-(const RatOperator& x, const RatOperator& y);
  friend RatOperator operator*(const RatOperator& x, const RatOperator& y);
  friend bool operator==(const RatOperator& x, const RatOperator& y) { return x.c_ == y.c_; }

 private:
  void trim();
  std::vector<RationalFunction> c_;
};

// A gauge factor g known only through l = g'/g.
struct GaugeFactor {
  RationalFunction log_derivative;
};

// (dx/dz)^2 written in the new variable x.
struct VariableChange {
  XPoly sigma;
};

// Image of d^2/dz^2: sigma d^2 + sigma'/2 d.
DiffOperator pullback_second_derivative(const VariableChange& change);
// g^{-1} A g via d -> d + l.
RatOperator conjugate(const RatOperator& A, const GaugeFactor& g);
DiffOperator conjugate_scalar(const DiffOperator& A, const GaugeFactor& g);
MatrixOperator conjugate_scalar(const MatrixOperator& A, const GaugeFactor& g);
// Pinv A P; throws when P Pinv is not the identity.
MatrixOperator conjugate_matrix(const MatrixOperator& A, const MatrixOperator& P, const MatrixOperator& Pinv);

// Operator in z rewritten in u where z = h(u): coefficients composed with h
// and d_z = (1/h'(u)) d_u.
RatOperator substitute_variable(const RatOperator& A, const XPoly& h);
// y = alpha x + beta for an operator with integer nonnegative powers.
DiffOperator affine_substitute(const DiffOperator& A, const QuadExt& alpha, const QuadExt& beta);
// x = t^a: operator sum t^s f_s(D_t) becomes sum x^(a s) f_s(D_x / a).
DiffOperator power_substitute(const DiffOperator& A, const Rational& a);
// Leading behaviour at x = 0: sum over terms of minimal shift of c * s^(falling k).
XPoly indicial_polynomial(const DiffOperator& A);

}  // namespace qes
