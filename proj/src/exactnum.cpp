#include "qes/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace qes {

Rational frac(long p, long q) {
  if (q == 0) throw std::domain_error("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty rational");
  size_t slash = t.find('/');
  auto valid_int = [](const std::string& u, bool allow_sign) {
    if (u.empty()) return false;
    size_t i = 0;
    if (allow_sign && (u[0] == '-' || u[0] == '+')) i = 1;
    if (i == u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("not an exact rational: '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  Integer d(den);
  if (sgn(d) == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& base, long e) {
  Rational r(1), b = e < 0 ? Rational(1 / base) : base;
  for (long i = 0; i < std::labs(e); ++i) r *= b;
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("not an integer: " + to_string(q));
  return q.get_num().get_si();
}

bool is_perfect_square(const Rational& q) {
  return sgn(q) >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) &&
         mpz_perfect_square_p(q.get_den_mpz_t());
}

Rational exact_sqrt(const Rational& q) {
  if (!is_perfect_square(q)) throw std::domain_error("not a perfect square: " + to_string(q));
  Integer n = sqrt(q.get_num()), d = sqrt(q.get_den());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

// ---------------------------------------------------------------- QuadExt

QuadExt::QuadExt(const Rational& a, const Rational& b, const Rational& radicand)
    : a_(a), b_(b), r_(radicand) {
  if (sgn(r_) < 0) throw std::domain_error("negative radicand");
  normalize();
}

void QuadExt::normalize() {
  if (sgn(b_) == 0 || sgn(r_) == 0) {
    b_ = 0;
    r_ = 0;
    return;
  }
  // sqrt(p/q) = sqrt(p*q)/q keeps the radicand integral.
  if (r_.get_den() != 1) {
    Integer den = r_.get_den();
    r_ = Rational(r_.get_num() * den);
    b_ /= Rational(den);
  }
  if (is_perfect_square(r_)) {
    a_ += b_ * exact_sqrt(r_);
    b_ = 0;
    r_ = 0;
    return;
  }
  // pull small square factors out so equal values share one representation
  Integer n = r_.get_num();
  for (unsigned long p = 2; p < 100000 && p * p <= n; ++p) {
    Integer pp = p * p;
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
      n /= pp;
      b_ *= p;
    }
  }
  r_ = Rational(n);
}

Rational QuadExt::aligned_surd(const QuadExt& o) {
  if (o.is_rational()) return 0;
  if (is_rational()) {
    r_ = o.r_;
    return o.b_;
  }
  if (r_ == o.r_) return o.b_;
  Rational ratio = o.r_ / r_;
  if (!is_perfect_square(ratio))
    throw std::domain_error("mixed radicands " + to_string(r_) + " and " + to_string(o.r_));
  return o.b_ * exact_sqrt(ratio);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  Rational ob = aligned_surd(o);
  a_ += o.a_;
  b_ += ob;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  Rational ob = aligned_surd(o);
  a_ -= o.a_;
  b_ -= ob;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Rational ob = aligned_surd(o);
  Rational na = a_ * o.a_ + b_ * ob * r_;
  Rational nb = a_ * ob + b_ * o.a_;
  a_ = na;
  b_ = nb;
  normalize();
  return *this;
}

QuadExt QuadExt::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero in Q(sqrt r)");
  return QuadExt(a_ / n, -b_ / n, r_);
}

int QuadExt::sign() const {
  if (sgn(b_) == 0) return sgn(a_);
  int sa = sgn(a_), sb = sgn(b_);
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 r
  int c = cmp(a_ * a_, b_ * b_ * r_);
  return c > 0 ? sa : sb;
}

double QuadExt::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(r_.get_d()); }

Rational QuadExt::to_rational() const {
  if (!is_rational()) throw std::domain_error("value is irrational: " + str());
  return a_;
}

std::string QuadExt::str() const {
  if (is_rational()) return to_string(a_);
  std::string s;
  if (sgn(a_) != 0) s = to_string(a_) + (sgn(b_) > 0 ? "+" : "");
  return s + to_string(b_) + "*sqrt(" + to_string(r_) + ")";
}

QPoly to_rational_poly(const XPoly& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) c.push_back(x.to_rational());
  return QPoly(std::move(c));
}

XPoly to_quad_poly(const QPoly& p) {
  std::vector<QuadExt> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return XPoly(std::move(c));
}

// ------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const XPoly& num, const XPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = XPoly();
    den_ = XPoly(QuadExt(1));
    return;
  }
  XPoly g = gcd(num, den);
  num_ = exact_div(num, g);
  den_ = exact_div(den, g);
  QuadExt l = den_.lead();
  num_ = num_ * l.inverse();
  den_ = den_.monic();
}

int RationalFunction::monomial_denominator_power() const {
  int k = den_.degree();
  for (int i = 0; i < k; ++i)
    if (!den_.coeff(i).is_zero()) return -1;
  return k;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::compose(const XPoly& inner) const {
  return RationalFunction(num_.compose(inner), den_.compose(inner));
}

std::string RationalFunction::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

// ---------------------------------------------------------------- Sturm

namespace {

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> s{p, p.derivative()};
  while (!s.back().is_zero()) {
    QPoly r = divmod(s[s.size() - 2], s.back()).second;
    if (r.is_zero()) break;
    s.push_back(-r);
  }
  return s;
}

int sign_changes(const std::vector<QPoly>& chain, const Rational& t) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    int sg = sgn(q.eval<Rational>(t));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

Rational cauchy_bound(const QPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational v = abs(p.coeff(i) / p.lead());
    if (v > m) m = v;
  }
  return m + 1;
}

QPoly squarefree(const QPoly& p) {
  QPoly g = gcd(p, p.derivative());
  return g.degree() > 0 ? exact_div(p, g) : p;
}

}  // namespace

int sturm_count(const QPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::domain_error("Sturm count of zero polynomial");
  auto chain = sturm_chain(squarefree(p));
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

std::vector<RootInterval> real_roots(const QPoly& p, const Rational& precision) {
  if (p.is_zero()) throw std::domain_error("real_roots of zero polynomial");
  if (sgn(precision) <= 0) throw std::invalid_argument("precision must be positive");
  QPoly sf = squarefree(p);
  std::vector<RootInterval> out;
  if (sf.degree() < 1) return out;
  auto chain = sturm_chain(sf);
  Rational B = cauchy_bound(sf);
  // Work on half-open intervals (lo, hi]; roots counted by Sturm.
  struct Job { Rational lo, hi; int count; };
  std::vector<Job> stack{{-B, B, sign_changes(chain, -B) - sign_changes(chain, B)}};
  std::vector<RootInterval> isolated;
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    if (j.count == 0) continue;
    if (j.count == 1) {
      isolated.push_back({j.lo, j.hi});
      continue;
    }
    Rational mid = (j.lo + j.hi) / 2;
    int left = sign_changes(chain, j.lo) - sign_changes(chain, mid);
    stack.push_back({mid, j.hi, j.count - left});
    stack.push_back({j.lo, mid, left});
  }
  for (auto iv : isolated) {
    // refine by bisection on sign of sf
    if (sgn(sf.eval<Rational>(iv.hi)) == 0) {
      out.push_back({iv.hi, iv.hi});
      continue;
    }
    while (iv.hi - iv.lo > precision) {
      Rational mid = (iv.lo + iv.hi) / 2;
      int sm = sgn(sf.eval<Rational>(mid));
      if (sm == 0) {
        iv.lo = iv.hi = mid;
        break;
      }
      if (sign_changes(chain, iv.lo) - sign_changes(chain, mid) == 1)
        iv.hi = mid;
      else
        iv.lo = mid;
    }
    out.push_back(iv);
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

std::vector<RootInterval> real_roots(const XPoly& p, const Rational& precision) {
  return real_roots(to_rational_poly(p), precision);
}

}  // namespace qes
