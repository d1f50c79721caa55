// Normal-ordered differential operators sum c * x^(q+t*a) * d^k with c a
// polynomial in the formal exponent parameter a, and 2x2 matrices of them.
#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qes/exactnum.hpp"

namespace qes {

using PolyInA = XPoly;  // polynomial in the formal parameter a

struct GenExponent {
  Rational q;  // offset
  int t = 0;   // multiple of a
  GenExponent() = default;
  GenExponent(const Rational& q_, int t_ = 0) : q(q_), t(t_) {}  // NOLINT(implicit)
  GenExponent(long q_, int t_ = 0) : q(q_), t(t_) {}             // NOLINT(implicit)
  GenExponent(int q_, int t_ = 0) : q(q_), t(t_) {}              // NOLINT(implicit)
  PolyInA as_poly() const;
  GenExponent operator+(const GenExponent& o) const { return {q + o.q, t + o.t}; }
  GenExponent operator-(const GenExponent& o) const { return {q - o.q, t - o.t}; }
  std::string str() const;
  friend bool operator==(const GenExponent& x, const GenExponent& y) { return x.t == y.t && x.q == y.q; }
  friend bool operator!=(const GenExponent& x, const GenExponent& y) { return !(x == y); }
  friend bool operator<(const GenExponent& x, const GenExponent& y) {
    return x.t != y.t ? x.t < y.t : x.q < y.q;
  }
};

// s(s-1)...(s-k+1) as a polynomial in a.
PolyInA falling(const GenExponent& s, int k);
PolyInA falling(const PolyInA& s, int k);

struct OperatorTerm {
  PolyInA coeff;
  GenExponent power;
  int deriv = 0;
};

using MonomialImage = std::vector<std::pair<GenExponent, PolyInA>>;

class DiffOperator {
 public:
  DiffOperator() = default;
  static DiffOperator constant(const PolyInA& c);
  static DiffOperator constant(const QuadExt& c) { return constant(PolyInA(c)); }
  static DiffOperator term(const PolyInA& c, const GenExponent& power, int deriv);
  static DiffOperator x_pow(const GenExponent& power, const QuadExt& c = QuadExt(1));
  static DiffOperator d(int k = 1);
  static DiffOperator euler();                    // D = x d
  static DiffOperator euler_shift(const PolyInA& c);  // D - c
  static DiffOperator identity() { return constant(QuadExt(1)); }

  std::vector<OperatorTerm> terms() const;
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int order() const;
  bool has_formal_a() const;
  // Largest and smallest degree shift (power - deriv); requires integer shifts.
  std::pair<GenExponent, GenExponent> shift_range() const;

  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  DiffOperator operator-() const;
  friend DiffOperator operator+(DiffOperator x, const DiffOperator& y) { return x += y; }
  friend DiffOperator operator-(DiffOperator x, const DiffOperator& y) { return x -= y; }
  friend DiffOperator operator*(const DiffOperator& x, const DiffOperator& y);  // composition
  friend DiffOperator operator*(const PolyInA& c, const DiffOperator& x);
  friend DiffOperator operator*(const QuadExt& c, const DiffOperator& x) { return PolyInA(c) * x; }
  friend bool operator==(const DiffOperator& x, const DiffOperator& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const DiffOperator& x, const DiffOperator& y) { return !(x == y); }

  MonomialImage apply_to_monomial(const GenExponent& s) const;
  DiffOperator specialize_a(const Rational& value) const;
  // Evaluate a formal a at value inside the coefficients only.
  std::string str() const;

 private:
  struct Key {
    int deriv;
    GenExponent power;
    friend bool operator<(const Key& x, const Key& y) {
      return x.deriv != y.deriv ? x.deriv < y.deriv : x.power < y.power;
    }
    friend bool operator==(const Key& x, const Key& y) { return x.deriv == y.deriv && x.power == y.power; }
  };
  void add_term(const PolyInA& c, const GenExponent& p, int k);
  std::map<Key, PolyInA> terms_;
};

DiffOperator compose(const DiffOperator& x, const DiffOperator& y);
DiffOperator commutator(const DiffOperator& x, const DiffOperator& y);
DiffOperator anticommutator(const DiffOperator& x, const DiffOperator& y);
DiffOperator power(const DiffOperator& x, int e);
// prod_i (D - roots[i]), composed left to right.
DiffOperator euler_product(const std::vector<PolyInA>& roots);

// Polynomial in the Euler operator D with coefficients polynomial in a.
using DPoly = Poly<PolyInA>;
// x^shift * f(D) decomposition; x^q d^k = x^(q-k) D(D-1)...(D-k+1).
std::map<GenExponent, DPoly> shift_decomposition(const DiffOperator& x);
DiffOperator from_shift_decomposition(const std::map<GenExponent, DPoly>& parts);
DiffOperator d_polynomial(const DPoly& f);
// Substitute D -> D + c inside a D-polynomial.
DPoly shift_d_poly(const DPoly& f, const PolyInA& c);

// Image of a linear combination of generalized monomials.
MonomialImage apply(const DiffOperator& x, const MonomialImage& v);
MonomialImage merge_image(MonomialImage v);

class MatrixOperator {
 public:
  MatrixOperator() = default;
  MatrixOperator(DiffOperator a, DiffOperator b, DiffOperator c, DiffOperator d)
      : e_{{{std::move(a), std::move(b)}, {std::move(c), std::move(d)}}} {}
  static MatrixOperator identity();
  static MatrixOperator diag(const DiffOperator& a, const DiffOperator& b) { return {a, {}, {}, b}; }

  DiffOperator& operator()(int i, int j) { return e_[i][j]; }
  const DiffOperator& operator()(int i, int j) const { return e_[i][j]; }
  bool is_zero() const;
  MatrixOperator specialize_a(const Rational& value) const;
  std::string str() const;

  friend MatrixOperator operator+(const MatrixOperator& x, const MatrixOperator& y);
  friend MatrixOperator operator-(const MatrixOperator& x, const MatrixOperator& y);
  friend MatrixOperator operator*(const MatrixOperator& x, const MatrixOperator& y);
  friend MatrixOperator operator*(const QuadExt& c, const MatrixOperator& x);
  friend bool operator==(const MatrixOperator& x, const MatrixOperator& y) { return x.e_ == y.e_; }

 private:
  std::array<std::array<DiffOperator, 2>, 2> e_;
};

MatrixOperator commutator(const MatrixOperator& x, const MatrixOperator& y);

}  // namespace qes
