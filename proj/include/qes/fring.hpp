// Functions p + f q with f^2 = F a fixed rational function, and differential
// operators with such coefficients.
#pragma once

#include <string>
#include <vector>

#include "qes/transforms.hpp"

namespace qes {

class FRing {
 public:
  explicit FRing(RationalFunction F);
  // F = (1 - x)(1 - lambda x)
  static FRing sqrt_p2(const Rational& lambda);
  // F = (1 - x)/(1 - lambda x)
  static FRing sqrt_ratio(const Rational& lambda);

  const RationalFunction& F() const { return F_; }
  // f'/f = F'/(2F)
  const RationalFunction& half_log() const { return half_log_; }

 private:
  RationalFunction F_, half_log_;
};

struct FRingElement {
  RationalFunction plain, fpart;  // plain + f * fpart
  bool is_zero() const { return plain.is_zero() && fpart.is_zero(); }
  friend bool operator==(const FRingElement& a, const FRingElement& b) {
    return a.plain == b.plain && a.fpart == b.fpart;
  }
};

FRingElement add(const FRingElement& a, const FRingElement& b);
FRingElement sub(const FRingElement& a, const FRingElement& b);
FRingElement mul(const FRing& R, const FRingElement& a, const FRingElement& b);
FRingElement derivative(const FRing& R, const FRingElement& a);

class FRingOperator {
 public:
  explicit FRingOperator(FRing ring) : ring_(std::move(ring)) {}
  FRingOperator(FRing ring, std::vector<FRingElement> c);
  static FRingOperator plain(const FRing& ring, const RatOperator& op);
  static FRingOperator plain(const FRing& ring, const DiffOperator& op) { return plain(ring, RatOperator::from(op)); }
  // multiplication by f
  static FRingOperator f_mult(const FRing& ring);
  // multiplication by 1/f = f/F
  static FRingOperator f_inv_mult(const FRing& ring);
  static FRingOperator mult(const FRing& ring, const FRingElement& e);

  const FRing& ring() const { return ring_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FRingElement coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : FRingElement{}; }
  // Split as P + f Q with P, Q rational operators.
  RatOperator plain_part() const;
  RatOperator f_part() const;
  FRingElement apply(const FRingElement& e) const;

  friend FRingOperator operator+(const FRingOperator& x, const FRingOperator& y);
  friend FRingOperator operator-(const FRingOperator& x, const FRingOperator& y);
  friend FRingOperator operator*(const FRingOperator& x, const FRingOperator& y);
  friend bool operator==(const FRingOperator& x, const FRingOperator& y) { return x.c_ == y.c_; }

 private:
  void trim();
  FRing ring_;
  std::vector<FRingElement> c_;
};

FRingOperator commutator(const FRingOperator& x, const FRingOperator& y);
// g^{-1} A g for a gauge g with rational log-derivative.
FRingOperator conjugate(const FRingOperator& A, const GaugeFactor& g);

}  // namespace qes
