// Exact arithmetic: GMP rationals, Q(sqrt r), dense polynomials, rational functions.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qes {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q", "-p/q". Decimal strings are rejected.
// p/q in canonical form (mpq_class(p, q) does not canonicalize).
Rational frac(long p, long q);
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);
Rational rational_pow(const Rational& base, long e);
bool is_integer(const Rational& q);
long to_long(const Rational& q);
// sqrt of a perfect-square rational; throws otherwise.
Rational exact_sqrt(const Rational& q);
bool is_perfect_square(const Rational& q);
Rational binomial(long n, long k);

// a + b*sqrt(r). One radicand per computation; mixing two inequivalent
// radicands throws std::domain_error.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT(implicit)
  QuadExt(long a) : a_(a) {}             // NOLINT(implicit)
  QuadExt(int a) : a_(a) {}              // NOLINT(implicit)
  QuadExt(const Rational& a, const Rational& b, const Rational& radicand);
  static QuadExt sqrt_of(const Rational& radicand) { return QuadExt(0, 1, radicand); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  const Rational& radicand() const { return r_; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  int sign() const;
  double to_double() const;
  Rational to_rational() const;  // throws if irrational
  QuadExt conjugate() const { return QuadExt(a_, -b_, r_); }
  Rational norm() const { return a_ * a_ - b_ * b_ * r_; }
  QuadExt inverse() const;
  std::string str() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }
  QuadExt operator-() const { return QuadExt(-a_, -b_, r_); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (sgn(x.b_) == 0 || x.r_ == y.r_);
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
  friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }

 private:
  void normalize();
  // Rescale o's surd onto this radicand; returns o's surd coefficient.
  Rational aligned_surd(const QuadExt& o);

  Rational a_, b_, r_;
};

inline bool is_zero_value(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero_value(const QuadExt& q) { return q.is_zero(); }
inline std::string value_str(const Rational& q) { return to_string(q); }
inline std::string value_str(const QuadExt& q) { return q.str(); }

// Dense univariate polynomial, c[i] is the coefficient of t^i. The zero
// polynomial has degree -1.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(const T& c) : c_{c} { trim(); }
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  static Poly var() { return Poly(std::vector<T>{T(0), T(1)}); }
  static Poly monomial(const T& c, int deg) {
    std::vector<T> v(deg + 1, T(0));
    v[deg] = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0); }
  const std::vector<T>& coeffs() const { return c_; }
  T lead() const { return c_.empty() ? T(0) : c_.back(); }

  template <class U>
  U eval(const U& t) const {
    U acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * t + U(c_[i]);
    return acc;
  }
  T operator()(const T& t) const { return eval<T>(t); }

  Poly derivative() const {
    std::vector<T> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * T(i));
    return Poly(std::move(d));
  }
  // p(q(t))
  Poly compose(const Poly& q) const {
    Poly acc;
    for (int i = degree(); i >= 0; --i) acc = acc * q + Poly(c_[i]);
    return acc;
  }
  Poly monic() const {
    if (is_zero()) return *this;
    T inv = T(1) / lead();
    return *this * inv;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_value(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(Poly a, const T& s) {
    for (auto& x : a.c_) x = x * s;
    a.trim();
    return a;
  }
  friend Poly operator*(const T& s, Poly a) { return std::move(a) * s; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (is_zero_value(c_[i])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + value_str(c_[i]) + ")";
      if (i > 0) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class U>
inline bool is_zero_value(const Poly<U>& p) { return p.is_zero(); }
template <class U>
inline std::string value_str(const Poly<U>& p) { return p.str("a"); }

using QPoly = Poly<Rational>;
using XPoly = Poly<QuadExt>;

// Quotient and remainder over a field; deg(rem) < deg(b).
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<T> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly<T>(), a};
  std::vector<T> q(a.degree() - db + 1, T(0));
  T inv = T(1) / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero_value(r[i])) continue;
    T f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
  }
  r.resize(db);
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Exact quotient when divisible, throws otherwise.
template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division not exact");
  return q;
}

// a == s*b for some nonzero scalar s.
template <class T>
bool proportional(const Poly<T>& a, const Poly<T>& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree()) return false;
  T s = a.lead() / b.lead();
  return a == b * s;
}

QPoly to_rational_poly(const XPoly& p);  // throws if a coefficient is irrational
XPoly to_quad_poly(const QPoly& p);

// Reduced quotient num/den of polynomials over Q(sqrt r); den monic.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(QuadExt(1)) {}
  RationalFunction(const XPoly& num) : num_(num), den_(QuadExt(1)) {}  // NOLINT(implicit)
  RationalFunction(const QuadExt& c) : num_(c), den_(QuadExt(1)) {}    // NOLINT(implicit)
  RationalFunction(const XPoly& num, const XPoly& den);

  const XPoly& num() const { return num_; }
  const XPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // den == t^k: returns k, otherwise -1.
  int monomial_denominator_power() const;
  RationalFunction derivative() const;
  RationalFunction compose(const XPoly& inner) const;
  std::string str(const std::string& var = "x") const;

  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  XPoly num_, den_;
};

inline bool is_zero_value(const RationalFunction& f) { return f.is_zero(); }

struct RootInterval {
  Rational lo, hi;  // lo == hi when the root is exactly rational and was hit
  double mid() const { return (lo.get_d() + hi.get_d()) / 2; }
};

// Number of distinct real roots in (lo, hi] from the Sturm sequence.
int sturm_count(const QPoly& p, const Rational& lo, const Rational& hi);
// Disjoint isolating intervals (ascending) of width <= precision, one per
// distinct real root.
std::vector<RootInterval> real_roots(const QPoly& p, const Rational& precision);
std::vector<RootInterval> real_roots(const XPoly& p, const Rational& precision);

}  // namespace qes
