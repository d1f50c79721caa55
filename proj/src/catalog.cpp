#include "qes/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace qes {

namespace {

using Op = DiffOperator;

PolyInA cst(const Rational& c) { return PolyInA(QuadExt(c)); }
PolyInA a_plus(const GenExponent& a, const Rational& c) { return a.as_poly() + cst(c); }
Op x_pow(const GenExponent& e) { return Op::x_pow(e); }
Op D_minus(const PolyInA& c) { return Op::euler_shift(c); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

const std::map<std::string, Family>& family_table() {
  static const std::map<std::string, Family> t{
      {"j", Family::j},         {"k_a", Family::k_a},       {"J", Family::J},
      {"K", Family::K},         {"Kprime", Family::Kprime}, {"q_low", Family::q_low},
      {"q_bar", Family::q_bar}, {"Q", Family::Q},           {"Qbar", Family::Qbar},
      {"Wplus", Family::Wplus}, {"Wminus", Family::Wminus}, {"S", Family::S},
      {"Stilde", Family::Stilde}};
  return t;
}

}  // namespace

Family parse_family(const std::string& s) {
  auto it = family_table().find(s);
  if (it == family_table().end()) throw std::invalid_argument("unknown family: " + s);
  return it->second;
}

std::string family_name(Family f) {
  for (const auto& [k, v] : family_table())
    if (v == f) return k;
  return "?";
}

std::vector<std::string> family_names() {
  return {"j", "k_a", "J", "K", "Kprime", "q_low", "q_bar", "Q", "Qbar", "Wplus", "Wminus", "S", "Stilde"};
}

// ------------------------------------------------------------ generators

Op j_plus(const Rational& n) { return x_pow(1) * D_minus(cst(n)); }
Op j_zero(const Rational& n) { return D_minus(cst(n / 2)); }
Op j_minus() { return Op::d(); }

Op k_op(int sign, const Rational& n, const GenExponent& a) {
  Op j = sign > 0 ? j_plus(n) : sign == 0 ? j_zero(n) : j_minus();
  return x_pow(a) * j * x_pow(GenExponent(0) - a);
}

Op J_plus(int n, int m, const GenExponent& a) {
  return x_pow(1) * D_minus(cst(n)) * D_minus(a_plus(a, m));
}
Op J_zero(int n, int m) { return D_minus(cst(frac(m + n + 1, 2))); }
Op J_minus(const GenExponent& a) { return D_minus(a.as_poly() - cst(1)) * Op::d(); }

Op K_op(int n) {
  std::vector<PolyInA> r;
  for (int j = 0; j <= n; ++j) r.push_back(cst(j));
  return euler_product(r);
}

Op Kprime_op(int m, const GenExponent& a) {
  std::vector<PolyInA> r;
  for (int j = 0; j <= m; ++j) r.push_back(a_plus(a, j));
  return euler_product(r);
}

Op q_low(int alpha) {
  require(alpha >= 0, "q_alpha needs alpha >= 0");
  return x_pow(alpha);
}

Op q_bar(int alpha, int n, int m) {
  int Delta = std::abs(m - n), p = std::max(m, n);
  require(alpha >= 0 && alpha <= Delta, "q_bar needs 0 <= alpha <= |m-n|");
  std::vector<PolyInA> r;
  for (int j = 0; j < alpha; ++j) r.push_back(cst(p + 1 - Delta + j));
  return euler_product(r) * Op::d(Delta - alpha);
}

// The printed assignment maps V into V when n >= m; for n < m the roles of
// q and q_bar are exchanged.
Op Q_op(int alpha, int n, int m, const GenExponent& a) {
  Op q = n >= m ? q_low(alpha) : q_bar(alpha, n, m);
  require(alpha <= std::abs(m - n), "Q_alpha needs alpha <= |m-n|");
  return q * x_pow(GenExponent(0) - a) * K_op(n);
}

Op Qbar_op(int alpha, int n, int m, const GenExponent& a) {
  Op q = n >= m ? q_bar(alpha, n, m) : q_low(alpha);
  require(alpha <= std::abs(m - n), "Qbar_alpha needs alpha <= |m-n|");
  return x_pow(a) * q * Kprime_op(m, a);
}

Op kernel_composition(const GenExponent& shift, const std::vector<Rational>& roots) {
  std::vector<PolyInA> r;
  for (const auto& q : roots) r.push_back(cst(q));
  return x_pow(shift) * euler_product(r);
}

Op W_plus(int k, int n, int m) {
  require(k >= 1 && n <= k && m - k >= n, "W+ needs integer a = k with n <= k and m - k >= n");
  std::vector<Rational> r;
  for (int j = 0; j < k; ++j) r.push_back(k + m - j);
  return kernel_composition(k, r);
}

Op W_minus(int k, int n, int m) {
  require(k >= 1 && n <= k && m - k >= n, "W- needs integer a = k with n <= k and m - k >= n");
  std::vector<Rational> r;
  for (int j = 0; j <= n; ++j) r.push_back(j);
  for (int i = 1; i <= k - n - 1; ++i) r.push_back(k + n + i);
  return kernel_composition(-k, r);
}

std::vector<WActionRow> w_action_table(int k, int n, int m) {
  std::vector<WActionRow> out;
  for (bool plus : {true, false}) {
    Op W = plus ? W_plus(k, n, m) : W_minus(k, n, m);
    for (int sector = 0; sector < 2; ++sector)
      for (int j = 0; j <= (sector ? m : n); ++j) {
        WActionRow r;
        r.plus = plus;
        r.sector = sector;
        r.degree = sector ? k + j : j;
        MonomialImage img = merge_image(W.apply_to_monomial(GenExponent(r.degree)));
        if (img.size() > 1) throw std::logic_error("W image is not a monomial");
        if (!img.empty()) {
          r.image = to_long(img[0].first.q);
          r.coeff = img[0].second.coeff(0);
          if (r.image >= 0 && r.image <= n) r.image_sector = 0;
          if (r.image >= k && r.image <= k + m) r.image_sector = r.image_sector == 0 ? 2 : 1;
        }
        out.push_back(r);
      }
  }
  return out;
}

namespace {

// The stated rule for one monomial read as a member of one sector.
bool w_rule(const WActionRow& r, int sector, int k, int n, int m) {
  int j = sector ? r.degree - k : r.degree;
  if (r.plus && sector == 0) return r.image == k + j && r.image_sector >= 1;
  if (r.plus) return j > m - k ? r.image < 0 : (r.image == r.degree + k && r.image_sector >= 1);
  if (sector == 0) return r.image < 0;
  if (j <= n) return r.image == j && r.image_sector != 1;
  // W- on the rest of the x^k sector: annihilated or kept inside the space
  return r.image < 0 || r.image_sector >= 0;
}

}  // namespace

bool w_action_matches(const std::vector<WActionRow>& table, int k, int n, int m) {
  for (const auto& r : table) {
    // at k = n the monomial x^n sits in both sectors and the two rules conflict;
    // either reading is accepted there
    bool shared = r.degree <= n && r.degree >= k;
    bool ok = shared ? (w_rule(r, 0, k, n, m) || w_rule(r, 1, k, n, m)) : w_rule(r, r.sector, k, n, m);
    if (!ok) return false;
  }
  return true;
}

// ------------------------------------------------------------ S family

namespace {

XPoly ypoly(std::vector<Rational> c) {
  std::vector<QuadExt> q;
  for (auto& v : c) q.emplace_back(v);
  return XPoly(std::move(q));
}

struct AffineY {
  XPoly h;  // y = h(x)
};

AffineY affine_for(const Rational& lambda) {
  require(lambda != 0 && lambda != 1, "S operators need lambda not in {0, 1}");
  Rational alpha = 2 * lambda / (lambda - 1), beta = -(lambda + 1) / (lambda - 1);
  return {ypoly({beta, alpha})};
}

// S_a = P + f Q in the canonical variable y.
std::pair<RatOperator, RatOperator> S_parts(int index, const Rational& N, bool printed2) {
  RationalFunction none;
  switch (index) {
    case 1:
      return {RatOperator({RationalFunction(ypoly({0, N})), RationalFunction(ypoly({1, 0, -1}))}), RatOperator()};
    case 2:
      if (printed2)
        return {RatOperator(), RatOperator({RationalFunction(ypoly({0, N})), RationalFunction(ypoly({0, -1}))})};
      return {RatOperator(), RatOperator({RationalFunction(ypoly({N})), RationalFunction(ypoly({0, -1}))})};
    case 3:
      return {RatOperator(), RatOperator({none, RationalFunction(QuadExt(1))})};
    default:
      throw std::invalid_argument("S index must be 1, 2 or 3");
  }
}

FRingOperator assemble(const FRing& R, const RatOperator& P, const RatOperator& Q, const RationalFunction& fscale) {
  FRingOperator op = FRingOperator::plain(R, P);
  if (!Q.is_zero())
    op = op + FRingOperator::f_mult(R) * FRingOperator::mult(R, {fscale, RationalFunction()}) *
                  FRingOperator::plain(R, Q);
  return op;
}

}  // namespace

FRingOperator S_op(int index, const Rational& spin, const Rational& lambda) {
  AffineY y = affine_for(lambda);
  auto [P, Q] = S_parts(index, spin, false);
  FRing R = FRing::sqrt_p2(lambda);
  return assemble(R, substitute_variable(P, y.h), substitute_variable(Q, y.h), RationalFunction(QuadExt(1)));
}

FRingOperator S2_printed(const Rational& spin) {
  auto [P, Q] = S_parts(2, spin, true);
  return assemble(FRing::sqrt_p2(-1), P, Q, RationalFunction(QuadExt(1)));
}

FRingOperator Stilde_op(int index, const Rational& spin, const Rational& lambda) {
  AffineY y = affine_for(lambda);
  auto [P, Q] = S_parts(index, spin, false);
  FRing R = FRing::sqrt_ratio(lambda);
  XPoly g = ypoly({1, -lambda});  // sqrt(p2) = (1 - lambda x) * f
  FRingOperator op = assemble(R, substitute_variable(P, y.h), substitute_variable(Q, y.h), RationalFunction(g));
  GaugeFactor half{RationalFunction(XPoly(QuadExt(-lambda / 2)), g)};
  return conjugate(op, half);
}

MatrixOperator printed_matrix_form(int index, int n) {
  Op d = j_minus();
  switch (index) {
    case 1:
      return MatrixOperator::diag(d - j_plus(n), d - j_plus(n - 1));
    case 2: {
      Op J0 = j_zero(frac(n, 2));
      return MatrixOperator(Op(), -J0 - x_pow(2) * j_plus(n - 1), -J0, Op());
    }
    case 3:
      return MatrixOperator(Op(), d - x_pow(1) * D_minus(cst(-1)), d, Op());
    default:
      throw std::invalid_argument("S index must be 1, 2 or 3");
  }
}

// ------------------------------------------------------------ build

BuiltOperator build(const CatalogSpec& s) {
  BuiltOperator b;
  require(s.n >= 0, "n must be nonnegative");
  switch (s.family) {
    case Family::j:
      require(s.sign >= -1 && s.sign <= 1, "sign must be -1, 0, +1");
      b.scalar = s.sign > 0 ? j_plus(s.n) : s.sign == 0 ? j_zero(s.n) : j_minus();
      break;
    case Family::k_a:
      b.scalar = k_op(s.sign, s.n, s.a);
      break;
    case Family::J:
      require(s.m >= 0, "m must be nonnegative");
      b.scalar = s.sign > 0 ? J_plus(s.n, s.m, s.a) : s.sign == 0 ? J_zero(s.n, s.m) : J_minus(s.a);
      break;
    case Family::K:
      b.scalar = K_op(s.n);
      break;
    case Family::Kprime:
      require(s.m >= 0, "m must be nonnegative");
      b.scalar = Kprime_op(s.m, s.a);
      break;
    case Family::q_low:
      require(s.alpha <= std::abs(s.m - s.n), "q_alpha needs alpha <= |m-n|");
      b.scalar = q_low(s.alpha);
      break;
    case Family::q_bar:
      b.scalar = q_bar(s.alpha, s.n, s.m);
      break;
    case Family::Q:
      b.scalar = Q_op(s.alpha, s.n, s.m, s.a);
      break;
    case Family::Qbar:
      b.scalar = Qbar_op(s.alpha, s.n, s.m, s.a);
      break;
    case Family::Wplus:
      b.scalar = W_plus(s.k, s.n, s.m);
      break;
    case Family::Wminus:
      b.scalar = W_minus(s.k, s.n, s.m);
      break;
    case Family::S:
      require(s.m == s.n - 1 && s.n >= 1, "S family requires m = n - 1");
      b.is_fring = true;
      b.fring = S_op(s.index, declared_spin(s), s.lambda);
      break;
    case Family::Stilde:
      require(s.m == s.n, "Stilde family requires m = n");
      b.is_fring = true;
      b.fring = Stilde_op(s.index, declared_spin(s), s.lambda);
      break;
  }
  return b;
}

Rational declared_spin(const CatalogSpec& s) {
  return s.family == Family::Stilde ? frac(2 * s.n + 1, 2) : Rational(s.n);
}

Basis declared_space(const CatalogSpec& s) {
  switch (s.family) {
    case Family::j:
      return MonomialSpace::polynomials(s.n).basis();
    case Family::k_a: {
      Basis b;
      for (int j = 0; j <= s.n; ++j) b.push_back({0, s.a + GenExponent(j)});
      return b;
    }
    case Family::q_low:
    case Family::q_bar:
      return MonomialSpace::polynomials(s.family == Family::q_low ? std::min(s.n, s.m) : std::max(s.n, s.m)).basis();
    case Family::Wplus:
    case Family::Wminus:
      return MonomialSpace::specialized(s.n, s.m, s.k).basis();
    case Family::S:
    case Family::Stilde:
      return declared_fspace(s).basis();
    default:
      return MonomialSpace{s.n, s.m, s.a}.basis();
  }
}

Basis declared_target(const CatalogSpec& s) {
  if (s.family == Family::q_low) return MonomialSpace::polynomials(std::max(s.n, s.m)).basis();
  if (s.family == Family::q_bar) return MonomialSpace::polynomials(std::min(s.n, s.m)).basis();
  return declared_space(s);
}

InvarianceReport check_declared(const CatalogSpec& s) {
  BuiltOperator b = build(s);
  if (b.is_fring) return check_invariance(b.fring, declared_fspace(s));
  return check_maps_into(b.scalar, declared_space(s), declared_target(s));
}

TwoComponentSpace declared_fspace(const CatalogSpec& s) {
  if (s.family == Family::S) return TwoComponentSpace(s.n, s.n - 1, FCase::SqrtP2, s.lambda);
  if (s.family == Family::Stilde) return TwoComponentSpace(s.n, s.n, FCase::SqrtRatio, s.lambda);
  throw std::invalid_argument("family has no two-component space");
}

// ------------------------------------------------------------ relations

bool fit_j0_polynomial(const Op& diag, const PolyInA& shift, DPoly& out) {
  auto parts = shift_decomposition(diag);
  if (parts.empty()) {
    out = DPoly();
    return true;
  }
  if (parts.size() != 1 || parts.begin()->first != GenExponent(0)) return false;
  out = shift_d_poly(parts.begin()->second, shift);
  return true;
}

Op j0_polynomial_operator(const DPoly& g, const Op& J0) {
  Op acc;
  for (int i = g.degree(); i >= 0; --i) acc = acc * J0 + Op::constant(g.coeff(i));
  return acc;
}

AlgebraFitResult fit_casimir_polynomial(int n, int m) {
  AlgebraFitResult r;
  GenExponent a(0, 1);
  Op J0 = J_zero(n, m);
  Op c = commutator(J_plus(n, m, a), J_minus(a));
  DPoly g;
  if (!fit_j0_polynomial(c, cst(frac(m + n + 1, 2)), g) || g.degree() > 3) return r;
  r.coefficients = {g.coeff(3), g.coeff(2), g.coeff(1), g.coeff(0)};
  r.exact = (c - j0_polynomial_operator(g, J0)).is_zero();
  return r;
}

std::vector<std::string> relation_names() {
  return {"J0_J+",   "J0_J-",   "nlalgebra", "QQ_nilpotent", "QbQb_nilpotent", "Q_J-",   "Q_J+",
          "Qb_J-",   "Qb_J+",   "Q_D",       "Qb_D",         "QQb_anticomm",   "W+_J+", "W+_J-",
          "W+_power", "W-_power"};
}

namespace {

RelationReport finish(const std::string& name, const Op& residual, const Basis& V, std::string note = "") {
  RelationReport r;
  r.name = name;
  r.residual = residual;
  r.note = std::move(note);
  r.operator_identity = residual.is_zero();
  if (r.operator_identity) {
    r.holds = true;
    return r;
  }
  try {
    r.holds = restrict_formal(residual, V).is_zero();
  } catch (const std::domain_error&) {
    r.holds = false;
  }
  return r;
}

}  // namespace

RelationReport verify_relation(const std::string& name, int n, int m, const GenExponent& a) {
  require(n >= 0 && m >= 0, "n, m must be nonnegative");
  Basis V = MonomialSpace{n, m, a}.basis();
  Op Jp = J_plus(n, m, a), J0 = J_zero(n, m), Jm = J_minus(a);
  if (name == "J0_J+") return finish(name, commutator(J0, Jp) - Jp, V);
  if (name == "J0_J-") return finish(name, commutator(J0, Jm) + Jm, V);
  if (name == "nlalgebra") {
    require(a == GenExponent(0, 1), "nlalgebra is fitted with formal a");
    AlgebraFitResult fit = fit_casimir_polynomial(n, m);
    if (fit.coefficients.empty()) return finish(name, commutator(Jp, Jm), V, "no cubic in J0 matches");
    DPoly g(std::vector<PolyInA>{fit.coefficients[3], fit.coefficients[2], fit.coefficients[1], fit.coefficients[0]});
    return finish(name, commutator(Jp, Jm) - j0_polynomial_operator(g, J0), V);
  }
  int Delta = std::abs(m - n);
  if (name == "QQ_nilpotent" || name == "QbQb_nilpotent") {
    bool bar = name[1] == 'b';
    for (int x = 0; x <= Delta; ++x)
      for (int y = 0; y <= Delta; ++y) {
        Op prod = bar ? Qbar_op(x, n, m, a) * Qbar_op(y, n, m, a) : Q_op(x, n, m, a) * Q_op(y, n, m, a);
        RelationReport r = finish(name, prod, V);
        if (!r.holds) return r;
      }
    return finish(name, Op(), V);
  }
  if (name == "W+_J+" || name == "W+_J-") {
    require(n == 0, "the printed W commutators are for k = 2, n = 0");
    GenExponent k2(2);
    Op Wp = W_plus(2, 0, m);
    Basis Vk = MonomialSpace::specialized(0, m, 2).basis();
    if (name == "W+_J+") {
      Op rhs = QuadExt(-2) * kernel_composition(3, {Rational(m + 2), Rational(m + 1), Rational(m)});
      return finish(name, commutator(Wp, J_plus(0, m, k2)) - rhs, Vk);
    }
    Op rhs = QuadExt(-6) * kernel_composition(1, {Rational(0), Rational(m + 2), frac(2 * (m + 2), 3)});
    return finish(name, commutator(Wp, J_minus(k2)) - rhs, Vk);
  }
  if (name == "W+_power" || name == "W-_power") {
    int k = n + 1;
    Basis Vk = MonomialSpace::specialized(n, m, k).basis();
    if (name == "W+_power") return finish(name, W_plus(k, n, m) - power(j_plus(m + n + 1), n + 1), Vk);
    return finish(name, W_minus(k, n, m) - power(j_minus(), n + 1), Vk);
  }
  // fermionic relations: n = m
  require(n == m, "relation assumes n = m");
  Op Q = Q_op(0, n, m, a), Qb = Qbar_op(0, n, m, a);
  PolyInA two_a = a.as_poly() * QuadExt(2);
  PolyInA c_minus = two_a - cst(n + 1), c_plus = two_a + cst(n + 1);
  if (name == "Q_J-") return finish(name, commutator(Q, Jm) - c_minus * (j_minus() * Q), V);
  if (name == "Q_J+") return finish(name, commutator(Q, Jp) - c_plus * (j_plus(n) * Q), V);
  if (name == "Qb_J-") return finish(name, commutator(Qb, Jm) + c_plus * (k_op(-1, n, a) * Qb), V);
  if (name == "Qb_J+") return finish(name, commutator(Qb, Jp) + c_minus * (k_op(+1, n, a) * Qb), V);
  if (name == "Q_D")
    return finish(name, commutator(Q, Op::euler()) - a.as_poly() * Q, V, "the printed right side (D+a)Q does not hold");
  if (name == "Qb_D")
    return finish(name, commutator(Qb, Op::euler()) + a.as_poly() * Qb, V,
                  "the printed right side (D-a)Qbar does not hold");
  if (name == "QQb_anticomm") {
    Op ac = anticommutator(Q, Qb);
    DPoly g;
    if (!fit_j0_polynomial(ac, cst(frac(m + n + 1, 2)), g)) return finish(name, ac, V, "not diagonal in D");
    return finish(name, ac - j0_polynomial_operator(g, J0), V,
                  "polynomial in J0 of degree " + std::to_string(g.degree()));
  }
  throw std::invalid_argument("unknown relation: " + name);
}

// ------------------------------------------------------------ so(3)

So3Report so3_closure(const Rational& spin, const Rational& lambda, bool tilde) {
  std::vector<FRingOperator> S;
  for (int i = 1; i <= 3; ++i) S.push_back(tilde ? Stilde_op(i, spin, lambda) : S_op(i, spin, lambda));
  So3Report rep;
  rep.closes = true;
  const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& c : cyc) {
    FRingOperator C = commutator(S[c[0]], S[c[1]]);
    const FRingOperator& T = S[c[2]];
    // ratio from the first nonzero coefficient of T
    QuadExt ratio(0);
    bool found = false;
    for (int k = 0; k <= T.order() && !found; ++k) {
      FRingElement t = T.coeff(k), u = C.coeff(k);
      for (auto [tp, up] : {std::pair{t.plain, u.plain}, std::pair{t.fpart, u.fpart}}) {
        if (tp.is_zero()) continue;
        RationalFunction r = up / tp;
        if (r.num().degree() > 0 || r.den().degree() > 0) break;
        ratio = r.num().coeff(0);
        found = true;
        break;
      }
    }
    FRingOperator scaled = FRingOperator::mult(T.ring(), {RationalFunction(ratio), RationalFunction()}) * T;
    bool ok = found && C == scaled;
    rep.closes = rep.closes && ok;
    rep.constants.push_back(ratio);
  }
  return rep;
}

TwoComponentSpace lame_halfinteger_solution(int n, const Rational& k2) {
  require(n >= 1, "n >= 1");
  require(k2 > 0 && k2 < 1, "0 < k^2 < 1");
  return TwoComponentSpace(n, n - 1, FCase::SqrtP2, k2);
}

bool power_reduction_check(int n, int m, int a, bool shifted) {
  int p = shifted ? a - 1 : a;
  require(p >= 1, "power substitution exponent must be >= 1");
  Rational b = frac(1, p);
  GenExponent ga(b);
  Basis V;
  for (int j = 0; j <= n; ++j) V.push_back({0, GenExponent(p * j)});
  for (int j = 0; j <= m; ++j) {
    BasisElement e{0, GenExponent(1 + p * j)};
    if (std::find(V.begin(), V.end(), e) == V.end()) V.push_back(e);
  }
  for (const Op& J : {J_plus(n, m, ga), J_zero(n, m), J_minus(ga)})
    if (!check_invariance(power_substitute(J, p), V).invariant) return false;
  return true;
}

}  // namespace qes
