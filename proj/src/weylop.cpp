#include "qes/weylop.hpp"

#include <sstream>
#include <stdexcept>

namespace qes {

PolyInA GenExponent::as_poly() const { return PolyInA(std::vector<QuadExt>{QuadExt(q), QuadExt(t)}); }

std::string GenExponent::str() const {
  if (t == 0) return to_string(q);
  std::string s = sgn(q) != 0 ? to_string(q) + (t > 0 ? "+" : "") : "";
  if (t == 1) return s + "a";
  if (t == -1) return s + "-a";
  return s + std::to_string(t) + "*a";
}

PolyInA falling(const PolyInA& s, int k) {
  PolyInA r(QuadExt(1));
  for (int i = 0; i < k; ++i) r = r * (s - PolyInA(QuadExt(i)));
  return r;
}

PolyInA falling(const GenExponent& s, int k) {
  if (s.t == 0) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= s.q - i;
    return PolyInA(QuadExt(r));
  }
  return falling(s.as_poly(), k);
}

// -------------------------------------------------------------- DiffOperator

void DiffOperator::add_term(const PolyInA& c, const GenExponent& p, int k) {
  if (c.is_zero()) return;
  Key key{k, p};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffOperator DiffOperator::constant(const PolyInA& c) { return term(c, GenExponent(0), 0); }

DiffOperator DiffOperator::term(const PolyInA& c, const GenExponent& power, int deriv) {
  if (deriv < 0) throw std::invalid_argument("negative derivative order");
  DiffOperator r;
  r.add_term(c, power, deriv);
  return r;
}

DiffOperator DiffOperator::x_pow(const GenExponent& power, const QuadExt& c) { return term(PolyInA(c), power, 0); }
DiffOperator DiffOperator::d(int k) { return term(PolyInA(QuadExt(1)), GenExponent(0), k); }
DiffOperator DiffOperator::euler() { return term(PolyInA(QuadExt(1)), GenExponent(1), 1); }
DiffOperator DiffOperator::euler_shift(const PolyInA& c) { return euler() - constant(c); }

std::vector<OperatorTerm> DiffOperator::terms() const {
  std::vector<OperatorTerm> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back({c, k.power, k.deriv});
  return out;
}

int DiffOperator::order() const {
  int o = -1;
  for (const auto& [k, c] : terms_) o = std::max(o, k.deriv);
  return o;
}

bool DiffOperator::has_formal_a() const {
  for (const auto& [k, c] : terms_)
    if (k.power.t != 0 || c.degree() > 0) return true;
  return false;
}

std::pair<GenExponent, GenExponent> DiffOperator::shift_range() const {
  if (terms_.empty()) throw std::domain_error("shift range of zero operator");
  bool first = true;
  GenExponent lo, hi;
  for (const auto& [k, c] : terms_) {
    GenExponent s = k.power - GenExponent(k.deriv);
    if (first) {
      lo = hi = s;
      first = false;
    }
    if (s < lo) lo = s;
    if (hi < s) hi = s;
  }
  return {lo, hi};
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  for (const auto& [k, c] : o.terms_) add_term(c, k.power, k.deriv);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  for (const auto& [k, c] : o.terms_) add_term(-c, k.power, k.deriv);
  return *this;
}

DiffOperator DiffOperator::operator-() const {
  DiffOperator r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

DiffOperator operator*(const PolyInA& c, const DiffOperator& x) {
  DiffOperator r;
  for (const auto& [k, v] : x.terms_) r.add_term(c * v, k.power, k.deriv);
  return r;
}

// d^k o x^s = sum_i C(k,i) s^(falling i) x^(s-i) d^(k-i)
DiffOperator operator*(const DiffOperator& x, const DiffOperator& y) {
  DiffOperator r;
  for (const auto& [kx, cx] : x.terms_)
    for (const auto& [ky, cy] : y.terms_) {
      PolyInA c = cx * cy;
      for (int i = 0; i <= kx.deriv; ++i) {
        PolyInA f = falling(ky.power, i);
        if (f.is_zero()) break;
        r.add_term(c * f * QuadExt(binomial(kx.deriv, i)), kx.power + ky.power - GenExponent(i),
                   kx.deriv + ky.deriv - i);
      }
    }
  return r;
}

MonomialImage DiffOperator::apply_to_monomial(const GenExponent& s) const {
  MonomialImage out;
  for (const auto& [k, c] : terms_) {
    PolyInA f = falling(s, k.deriv);
    if (f.is_zero()) continue;
    out.emplace_back(s + k.power - GenExponent(k.deriv), c * f);
  }
  return merge_image(std::move(out));
}

DiffOperator DiffOperator::specialize_a(const Rational& value) const {
  DiffOperator r;
  QuadExt v(value);
  for (const auto& [k, c] : terms_) {
    GenExponent p(k.power.q + value * k.power.t, 0);
    r.add_term(PolyInA(c.eval<QuadExt>(v)), p, k.deriv);
  }
  return r;
}

std::string DiffOperator::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str("a") << ") * x^(" << k.power.str() << ") * d^" << k.deriv;
  }
  return os.str();
}

DiffOperator compose(const DiffOperator& x, const DiffOperator& y) { return x * y; }
DiffOperator commutator(const DiffOperator& x, const DiffOperator& y) { return x * y - y * x; }
DiffOperator anticommutator(const DiffOperator& x, const DiffOperator& y) { return x * y + y * x; }

DiffOperator power(const DiffOperator& x, int e) {
  if (e < 0) throw std::invalid_argument("negative operator power");
  DiffOperator r = DiffOperator::identity();
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

DiffOperator euler_product(const std::vector<PolyInA>& roots) {
  DiffOperator r = DiffOperator::identity();
  for (const auto& c : roots) r = r * DiffOperator::euler_shift(c);
  return r;
}

std::map<GenExponent, DPoly> shift_decomposition(const DiffOperator& x) {
  std::map<GenExponent, DPoly> out;
  // falling factorial of D as a DPoly
  for (const auto& t : x.terms()) {
    DPoly f(t.coeff);
    for (int i = 0; i < t.deriv; ++i)
      f = f * DPoly(std::vector<PolyInA>{PolyInA(QuadExt(-i)), PolyInA(QuadExt(1))});
    out[t.power - GenExponent(t.deriv)] += f;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

DiffOperator d_polynomial(const DPoly& f) {
  DiffOperator r;
  DiffOperator Dk = DiffOperator::identity();
  for (int i = 0; i <= f.degree(); ++i) {
    if (!f.coeff(i).is_zero()) r += f.coeff(i) * Dk;
    Dk = Dk * DiffOperator::euler();
  }
  return r;
}

DiffOperator from_shift_decomposition(const std::map<GenExponent, DPoly>& parts) {
  DiffOperator r;
  for (const auto& [s, f] : parts) r += DiffOperator::x_pow(s) * d_polynomial(f);
  return r;
}

DPoly shift_d_poly(const DPoly& f, const PolyInA& c) {
  return f.compose(DPoly(std::vector<PolyInA>{c, PolyInA(QuadExt(1))}));
}

MonomialImage merge_image(MonomialImage v) {
  std::map<GenExponent, PolyInA> acc;
  for (auto& [e, c] : v) acc[e] += c;
  MonomialImage out;
  for (auto& [e, c] : acc)
    if (!c.is_zero()) out.emplace_back(e, c);
  return out;
}

MonomialImage apply(const DiffOperator& x, const MonomialImage& v) {
  MonomialImage out;
  for (const auto& [e, c] : v)
    for (auto& [e2, c2] : x.apply_to_monomial(e)) out.emplace_back(e2, c * c2);
  return merge_image(std::move(out));
}

// ------------------------------------------------------------ MatrixOperator

MatrixOperator MatrixOperator::identity() {
  return diag(DiffOperator::identity(), DiffOperator::identity());
}

bool MatrixOperator::is_zero() const {
  for (const auto& row : e_)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

MatrixOperator MatrixOperator::specialize_a(const Rational& value) const {
  MatrixOperator r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e_[i][j] = e_[i][j].specialize_a(value);
  return r;
}

std::string MatrixOperator::str() const {
  std::ostringstream os;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) os << "[" << i + 1 << "," << j + 1 << "]: " << e_[i][j].str() << "\n";
  return os.str();
}

MatrixOperator operator+(const MatrixOperator& x, const MatrixOperator& y) {
  MatrixOperator r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e_[i][j] = x.e_[i][j] + y.e_[i][j];
  return r;
}

MatrixOperator operator-(const MatrixOperator& x, const MatrixOperator& y) {
  MatrixOperator r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e_[i][j] = x.e_[i][j] - y.e_[i][j];
  return r;
}

MatrixOperator operator*(const MatrixOperator& x, const MatrixOperator& y) {
  MatrixOperator r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        if (!x.e_[i][k].is_zero() && !y.e_[k][j].is_zero()) r.e_[i][j] += x.e_[i][k] * y.e_[k][j];
  return r;
}

MatrixOperator operator*(const QuadExt& c, const MatrixOperator& x) {
  MatrixOperator r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e_[i][j] = c * x.e_[i][j];
  return r;
}

MatrixOperator commutator(const MatrixOperator& x, const MatrixOperator& y) { return x * y - y * x; }

}  // namespace qes
