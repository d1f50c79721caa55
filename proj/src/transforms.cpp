#include "qes/transforms.hpp"

#include <sstream>
#include <stdexcept>

namespace qes {

RatOperator::RatOperator(std::vector<RationalFunction> c) : c_(std::move(c)) { trim(); }

void RatOperator::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatOperator RatOperator::d(int k) {
  std::vector<RationalFunction> c(k + 1);
  c[k] = RationalFunction(QuadExt(1));
  return RatOperator(std::move(c));
}

RatOperator RatOperator::from(const DiffOperator& op) {
  std::vector<RationalFunction> c(std::max(op.order() + 1, 0));
  for (const auto& t : op.terms()) {
    if (t.power.t != 0 || t.coeff.degree() > 0) throw std::domain_error("operator still depends on formal a");
    if (!is_integer(t.power.q)) throw std::domain_error("non-integer power in rational operator");
    long p = to_long(t.power.q);
    QuadExt v = t.coeff.coeff(0);
    RationalFunction f = p >= 0 ? RationalFunction(XPoly::monomial(v, static_cast<int>(p)))
                                : RationalFunction(XPoly(v), XPoly::monomial(QuadExt(1), static_cast<int>(-p)));
    c[t.deriv] += f;
  }
  return RatOperator(std::move(c));
}

DiffOperator RatOperator::to_diff_operator() const {
  DiffOperator r;
  for (int k = 0; k <= order(); ++k) {
    const RationalFunction& f = c_[k];
    if (f.is_zero()) continue;
    int dp = f.monomial_denominator_power();
    if (dp < 0)
      throw std::domain_error("coefficient of d^" + std::to_string(k) + " is not polynomial in x: " + f.str());
    const XPoly& n = f.num();
    for (int i = 0; i <= n.degree(); ++i)
      if (!n.coeff(i).is_zero()) r += DiffOperator::term(PolyInA(n.coeff(i)), GenExponent(i - dp), k);
  }
  return r;
}

RationalFunction RatOperator::apply(const RationalFunction& f) const {
  RationalFunction acc, der = f;
  for (int k = 0; k <= order(); ++k) {
    if (!c_[k].is_zero()) acc += c_[k] * der;
    der = der.derivative();
  }
  return acc;
}

std::string RatOperator::str() const {
  std::ostringstream os;
  for (int k = 0; k <= order(); ++k)
    if (!c_[k].is_zero()) os << "[" << c_[k].str() << "] d^" << k << "  ";
  return os.str().empty() ? "0" : os.str();
}

RatOperator operator+(const RatOperator& x, const RatOperator& y) {
  std::vector<RationalFunction> c(std::max(x.c_.size(), y.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = x.coeff(static_cast<int>(i)) + y.coeff(static_cast<int>(i));
  return RatOperator(std::move(c));
}

RatOperator operator-(const RatOperator& x, const RatOperator& y) {
  std::vector<RationalFunction> c(std::max(x.c_.size(), y.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = x.coeff(static_cast<int>(i)) - y.coeff(static_cast<int>(i));
  return RatOperator(std::move(c));
}

// a d^j o b d^k = sum_i C(j,i) a b^(i) d^(j+k-i)
RatOperator operator*(const RatOperator& x, const RatOperator& y) {
  if (x.is_zero() || y.is_zero()) return RatOperator();
  std::vector<RationalFunction> c(x.c_.size() + y.c_.size() - 1);
  for (int k = 0; k <= y.order(); ++k) {
    RationalFunction b = y.c_[k];
    for (int i = 0; i <= x.order(); ++i) {
      if (b.is_zero()) break;
      for (int j = i; j <= x.order(); ++j)
        if (!x.c_[j].is_zero()) c[j + k - i] += x.c_[j] * b * RationalFunction(QuadExt(binomial(j, i)));
      b = b.derivative();
    }
  }
  return RatOperator(std::move(c));
}

DiffOperator pullback_second_derivative(const VariableChange& change) {
  if (change.sigma.is_zero()) throw std::invalid_argument("zero sigma");
  RatOperator op({RationalFunction(), RationalFunction(change.sigma.derivative() * QuadExt(frac(1, 2))),
                  RationalFunction(change.sigma)});
  return op.to_diff_operator();
}

RatOperator conjugate(const RatOperator& A, const GaugeFactor& g) {
  RatOperator shifted({g.log_derivative, RationalFunction(QuadExt(1))});  // d + l
  RatOperator acc, pw = RatOperator::multiplication(RationalFunction(QuadExt(1)));
  for (int k = 0; k <= A.order(); ++k) {
    if (!A.coeff(k).is_zero()) acc = acc + RatOperator::multiplication(A.coeff(k)) * pw;
    pw = pw * shifted;
  }
  return acc;
}

DiffOperator conjugate_scalar(const DiffOperator& A, const GaugeFactor& g) {
  return conjugate(RatOperator::from(A), g).to_diff_operator();
}

MatrixOperator conjugate_scalar(const MatrixOperator& A, const GaugeFactor& g) {
  MatrixOperator r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = conjugate_scalar(A(i, j), g);
  return r;
}

MatrixOperator conjugate_matrix(const MatrixOperator& A, const MatrixOperator& P, const MatrixOperator& Pinv) {
  if (!(P * Pinv == MatrixOperator::identity()) || !(Pinv * P == MatrixOperator::identity()))
    throw std::domain_error("conjugate_matrix: Pinv is not the inverse of P");
  return Pinv * A * P;
}

RatOperator substitute_variable(const RatOperator& A, const XPoly& h) {
  RationalFunction inv_hp = RationalFunction(XPoly(QuadExt(1)), h.derivative());
  RatOperator dz({RationalFunction(), inv_hp});
  RatOperator acc, pw = RatOperator::multiplication(RationalFunction(QuadExt(1)));
  for (int k = 0; k <= A.order(); ++k) {
    if (!A.coeff(k).is_zero()) acc = acc + RatOperator::multiplication(A.coeff(k).compose(h)) * pw;
    pw = pw * dz;
  }
  return acc;
}

DiffOperator affine_substitute(const DiffOperator& A, const QuadExt& alpha, const QuadExt& beta) {
  if (alpha.is_zero()) throw std::invalid_argument("degenerate affine substitution");
  XPoly h(std::vector<QuadExt>{beta, alpha});
  return substitute_variable(RatOperator::from(A), h).to_diff_operator();
}

DiffOperator power_substitute(const DiffOperator& A, const Rational& a) {
  if (sgn(a) == 0) throw std::invalid_argument("power substitution with a = 0");
  std::map<GenExponent, DPoly> out;
  PolyInA inv_a(QuadExt(1 / a));
  for (const auto& [s, f] : shift_decomposition(A)) {
    if (s.t != 0) throw std::domain_error("power substitution needs specialized a");
    DPoly g = f.compose(DPoly(std::vector<PolyInA>{PolyInA(), inv_a}));
    out[GenExponent(s.q * a)] += g;
  }
  return from_shift_decomposition(out);
}

XPoly indicial_polynomial(const DiffOperator& A) {
  auto [lo, hi] = A.shift_range();
  (void)hi;
  XPoly s = XPoly::var(), acc;
  for (const auto& t : A.terms()) {
    if (t.power - GenExponent(t.deriv) != lo) continue;
    if (t.coeff.degree() > 0) throw std::domain_error("indicial polynomial needs specialized a");
    XPoly f(QuadExt(1));
    for (int i = 0; i < t.deriv; ++i) f = f * (s - XPoly(QuadExt(i)));
    acc += f * t.coeff.coeff(0);
  }
  return acc;
}

}  // namespace qes
