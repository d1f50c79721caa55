#include "qes/fring.hpp"

#include <stdexcept>

namespace qes {

namespace {
RationalFunction one() { return RationalFunction(QuadExt(1)); }
XPoly lin(const Rational& c0, const Rational& c1) { return XPoly(std::vector<QuadExt>{QuadExt(c0), QuadExt(c1)}); }
}  // namespace

FRing::FRing(RationalFunction F) : F_(std::move(F)) {
  if (F_.is_zero()) throw std::invalid_argument("f-ring with f = 0");
  half_log_ = F_.derivative() / (F_ * RationalFunction(QuadExt(2)));
}

FRing FRing::sqrt_p2(const Rational& lambda) { return FRing(RationalFunction(lin(1, -1) * lin(1, -lambda))); }

FRing FRing::sqrt_ratio(const Rational& lambda) { return FRing(RationalFunction(lin(1, -1), lin(1, -lambda))); }

FRingElement add(const FRingElement& a, const FRingElement& b) { return {a.plain + b.plain, a.fpart + b.fpart}; }
FRingElement sub(const FRingElement& a, const FRingElement& b) { return {a.plain - b.plain, a.fpart - b.fpart}; }

FRingElement mul(const FRing& R, const FRingElement& a, const FRingElement& b) {
  return {a.plain * b.plain + R.F() * a.fpart * b.fpart, a.plain * b.fpart + a.fpart * b.plain};
}

// (p + f q)' = p' + f (q' + q f'/f)
FRingElement derivative(const FRing& R, const FRingElement& a) {
  return {a.plain.derivative(), a.fpart.derivative() + a.fpart * R.half_log()};
}

FRingOperator::FRingOperator(FRing ring, std::vector<FRingElement> c) : ring_(std::move(ring)), c_(std::move(c)) {
  trim();
}

void FRingOperator::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FRingOperator FRingOperator::plain(const FRing& ring, const RatOperator& op) {
  std::vector<FRingElement> c;
  for (const auto& f : op.coeffs()) c.push_back({f, RationalFunction()});
  return FRingOperator(ring, std::move(c));
}

FRingOperator FRingOperator::f_mult(const FRing& ring) { return mult(ring, {RationalFunction(), one()}); }

FRingOperator FRingOperator::f_inv_mult(const FRing& ring) {
  return mult(ring, {RationalFunction(), one() / ring.F()});
}

FRingOperator FRingOperator::mult(const FRing& ring, const FRingElement& e) { return FRingOperator(ring, {e}); }

RatOperator FRingOperator::plain_part() const {
  std::vector<RationalFunction> c;
  for (const auto& e : c_) c.push_back(e.plain);
  return RatOperator(std::move(c));
}

RatOperator FRingOperator::f_part() const {
  std::vector<RationalFunction> c;
  for (const auto& e : c_) c.push_back(e.fpart);
  return RatOperator(std::move(c));
}

FRingElement FRingOperator::apply(const FRingElement& e) const {
  FRingElement acc, der = e;
  for (int k = 0; k <= order(); ++k) {
    if (!c_[k].is_zero()) acc = add(acc, mul(ring_, c_[k], der));
    der = derivative(ring_, der);
  }
  return acc;
}

FRingOperator operator+(const FRingOperator& x, const FRingOperator& y) {
  std::vector<FRingElement> c(std::max(x.c_.size(), y.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = add(x.coeff(static_cast<int>(i)), y.coeff(static_cast<int>(i)));
  return FRingOperator(x.ring_, std::move(c));
}

FRingOperator operator-(const FRingOperator& x, const FRingOperator& y) {
  std::vector<FRingElement> c(std::max(x.c_.size(), y.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = sub(x.coeff(static_cast<int>(i)), y.coeff(static_cast<int>(i)));
  return FRingOperator(x.ring_, std::move(c));
}

FRingOperator operator*(const FRingOperator& x, const FRingOperator& y) {
  if (x.is_zero() || y.is_zero()) return FRingOperator(x.ring_);
  std::vector<FRingElement> c(x.c_.size() + y.c_.size() - 1);
  for (int k = 0; k <= y.order(); ++k) {
    FRingElement b = y.c_[k];
    for (int i = 0; i <= x.order(); ++i) {
      if (b.is_zero()) break;
      for (int j = i; j <= x.order(); ++j) {
        if (x.c_[j].is_zero()) continue;
        FRingElement t = mul(x.ring_, x.c_[j], b);
        RationalFunction bin(QuadExt(binomial(j, i)));
        c[j + k - i] = add(c[j + k - i], {t.plain * bin, t.fpart * bin});
      }
      b = derivative(x.ring_, b);
    }
  }
  return FRingOperator(x.ring_, std::move(c));
}

FRingOperator commutator(const FRingOperator& x, const FRingOperator& y) { return x * y - y * x; }

FRingOperator conjugate(const FRingOperator& A, const GaugeFactor& g) {
  const FRing& R = A.ring();
  FRingOperator shifted(R, {{g.log_derivative, RationalFunction()}, {one(), RationalFunction()}});
  FRingOperator acc(R), pw = FRingOperator::mult(R, {one(), RationalFunction()});
  for (int k = 0; k <= A.order(); ++k) {
    if (!A.coeff(k).is_zero()) acc = acc + FRingOperator::mult(R, A.coeff(k)) * pw;
    pw = pw * shifted;
  }
  return acc;
}

}  // namespace qes
