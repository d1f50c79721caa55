#include "qes/hamiltonians.hpp"

#include <cmath>
#include <stdexcept>

namespace qes {

namespace {

using Op = DiffOperator;

XPoly xp(std::vector<Rational> c) {
  std::vector<QuadExt> q;
  for (auto& v : c) q.emplace_back(v);
  return XPoly(std::move(q));
}

RationalFunction rf(std::vector<Rational> c) { return RationalFunction(xp(std::move(c))); }

Op as_op(const RationalFunction& f) { return RatOperator::multiplication(f).to_diff_operator(); }

// -d^2 + v as a DiffOperator after the change of variable with (dx/dz)^2 = sigma.
Op schrodinger(const XPoly& sigma, const RationalFunction& v) {
  return as_op(v) - pullback_second_derivative({sigma});
}

MatrixOperator sigma_plus(const Op& a) { return MatrixOperator(Op(), a, Op(), Op()); }
MatrixOperator sigma_minus(const Op& a) { return MatrixOperator(Op(), Op(), a, Op()); }

Op plain_or_throw(const FRingOperator& A) {
  if (!A.f_part().is_zero()) throw std::domain_error("gauge by f leaves an f-dependent entry");
  return A.plain_part().to_diff_operator();
}

}  // namespace

void PolyPotParams::validate() const {
  if (m < 2) throw std::invalid_argument("polypot requires m >= 2");
  if (sgn(p2) <= 0) throw std::invalid_argument("polypot requires p2 > 0");
}

void LameParams::validate() const {
  if (m < 0) throw std::invalid_argument("lame requires m >= 0");
  if (sgn(k2) <= 0 || k2 >= 1) throw std::invalid_argument("lame requires 0 < k2 < 1");
  Rational t = 4 * m + 3;
  if (t * t <= delta * delta) throw std::invalid_argument("lame requires (4m+3)^2 > delta^2");
}

double LameParams::theta() const {
  double t = 4.0 * m + 3.0, d = delta.get_d();
  return 0.5 * std::sqrt(t * t - d * d);
}

void BoseHubbardParams::validate() const {
  if (sgn(alpha) <= 0) throw std::invalid_argument("bose-hubbard requires alpha > 0");
  if (2 * s * s != s) throw std::invalid_argument("bose-hubbard requires 2 s^2 = s");
}

Rational BoseHubbardParams::E0() const {
  Rational n = c();
  return M * M + 1 / (alpha * alpha) + alpha * alpha * n * (n - 2) / 4;
}

// ------------------------------------------------------------ polypot

PotentialMatrix polypot_potential(const PolyPotParams& p) {
  const Rational &p2 = p.p2, &p1 = p.p1, &e = p.epsilon;
  RationalFunction V0 = rf({0, 4 * p1 * p1 - 8 * p.m * p2 + 2 * (1 - 2 * e) * p2, 8 * p1 * p2, 4 * p2 * p2});
  if (sgn(e * (e - 1)) != 0) V0 = V0 + RationalFunction(XPoly(QuadExt(e * (e - 1))), XPoly::var());
  RationalFunction s3 = rf({4 * p1, 8 * p2});
  return {V0 + s3, rf({-8 * p.m * p2 * p.kappa0}), V0 - s3};
}

MatrixOperator polypot_physical_x(const PolyPotParams& p) {
  p.validate();
  PotentialMatrix V = polypot_potential(p);
  XPoly sigma = xp({0, 4});  // (dx/dy)^2 = 4y^2 = 4x
  return MatrixOperator(schrodinger(sigma, V.v11), as_op(V.v12), as_op(V.v12), schrodinger(sigma, V.v22));
}

RationalFunction polypot_gauge(const PolyPotParams& p) {
  RationalFunction l = rf({-p.p1, -p.p2});
  if (sgn(p.epsilon) != 0) l = l + RationalFunction(XPoly(QuadExt(p.epsilon / 2)), XPoly::var());
  return l;
}

MatrixOperator polypot_P(const PolyPotParams& p) {
  return MatrixOperator(Op::identity(), QuadExt(p.kappa0) * Op::d(), Op(), Op::identity());
}

MatrixOperator polypot_Pinv(const PolyPotParams& p) {
  return MatrixOperator(Op::identity(), QuadExt(-p.kappa0) * Op::d(), Op(), Op::identity());
}

MatrixOperator build_polypot_algebraic(const PolyPotParams& p) {
  MatrixOperator H = conjugate_scalar(polypot_physical_x(p), GaugeFactor{polypot_gauge(p)});
  return conjugate_matrix(H, polypot_P(p), polypot_Pinv(p));
}

Basis polypot_space(int m) { return pair_basis(m - 2, m); }

MatrixOperator polypot_printed(const PolyPotParams& p, const Rational& kappa) {
  const Rational& k0 = p.kappa0;
  Rational pp = p.p2;
  int m = p.m;
  Op kin = -pullback_second_derivative({xp({0, 4})});
  MatrixOperator out = MatrixOperator::diag(kin, kin);
  out = out + MatrixOperator::diag(QuadExt(8 * pp * m * k0 * k0) * Op::d(), QuadExt(-8 * pp * m * k0 * k0) * Op::d());
  out = out + QuadExt(8 * pp) * MatrixOperator::diag(j_plus(m - 2), j_plus(m));
  out = out + sigma_plus(QuadExt(4 * k0 * (1 + 2 * m * pp * kappa * kappa)) * Op::d(2));
  out = out + sigma_minus(Op::constant(QuadExt(-8 * m * pp * k0)));
  return out;
}

PipelineReport polypot_pipeline_check(const PolyPotParams& p) {
  PipelineReport best;
  MatrixOperator derived = build_polypot_algebraic(p);
  bool first = true;
  size_t best_size = 0;
  for (auto [name, kappa] : {std::pair<std::string, Rational>{"kappa = kappa0", p.kappa0}, {"kappa = 1", Rational(1)}}) {
    MatrixOperator printed = polypot_printed(p, kappa);
    MatrixOperator res = derived - printed;
    size_t size = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) size += res(i, j).size();
    if (first || size < best_size) {
      best = {derived, printed, res, res.is_zero(), name};
      best_size = size;
      first = false;
    }
  }
  return best;
}

// ------------------------------------------------------------ Lame

PotentialMatrix lame_potential(const LameParams& p) {
  const Rational& k2 = p.k2;
  Rational h = p.delta * (1 + k2) / 2;
  // v12 is the coefficient of f = cn dn = sqrt((1-x)(1-k^2 x))
  return {rf({h, p.A() * k2}), RationalFunction(p.coupling()), rf({-h, p.C() * k2})};
}

DiffOperator lame_pullback(const Rational& k2) {
  XPoly p2 = xp({1, -1}) * xp({1, -k2});
  return pullback_second_derivative({xp({0, 4}) * p2});
}

MatrixOperator build_lame_algebraic(const LameParams& p) {
  p.validate();
  FRing R = FRing::sqrt_p2(p.k2);
  PotentialMatrix V = lame_potential(p);
  Op L = lame_pullback(p.k2);
  FRingOperator H11 = FRingOperator::plain(R, as_op(V.v11) - L);
  FRingOperator H22 = FRingOperator::plain(R, as_op(V.v22) - L);
  FRingOperator H12 = FRingOperator::mult(R, {RationalFunction(), V.v12});
  FRingOperator f = FRingOperator::f_mult(R), finv = FRingOperator::f_inv_mult(R);
  // psi_2 = f v
  MatrixOperator G(plain_or_throw(H11), plain_or_throw(H12 * f), plain_or_throw(finv * H12),
                   plain_or_throw(finv * H22 * f));
  QuadExt kappa = p.kappa();
  MatrixOperator T(Op::identity(), Op::x_pow(1, kappa), Op(), Op::identity());
  MatrixOperator Tinv(Op::identity(), Op::x_pow(1, -kappa), Op(), Op::identity());
  return conjugate_matrix(G, T, Tinv);
}

Basis lame_space(int m) { return pair_basis(m, m); }

MatrixOperator lame_printed(const LameParams& p) {
  const Rational& k2 = p.k2;
  const Rational& dl = p.delta;
  int m = p.m;
  QuadExt kappa = p.kappa();
  Op D = Op::euler(), d = Op::d();
  Op low = -QuadExt(2) * ((Op::identity() + QuadExt(2) * D) * d);
  auto raising = [&](const Rational& shift) {
    return QuadExt(-4 * k2) * (Op::x_pow(1) * Op::euler_shift(PolyInA(QuadExt(-m - shift))) *
                               Op::euler_shift(PolyInA(QuadExt(m))));
  };
  Op H11 = raising(frac(1, 2)) + QuadExt(k2 + 1) * (QuadExt(4) * D * D + Op::constant(QuadExt(dl / 2))) + low;
  Op H12 = QuadExt(4 * (k2 + 1)) * kappa * (Op::x_pow(1) * Op::euler_shift(PolyInA(QuadExt(m)))) +
           kappa * (QuadExt(-8) * D + Op::constant(QuadExt(dl + 4 * m + 1)));
  Op H21 = Op::constant(kappa * QuadExt(dl + 4 * m + 3));
  Op H22 = raising(frac(5, 2)) +
           QuadExt(k2 + 1) * (QuadExt(4) * D * D + QuadExt(2) * D + Op::constant(QuadExt(1 - dl / 2))) + low;
  return MatrixOperator(H11, H12, H21, H22);
}

PipelineReport lame_pipeline_check(const LameParams& p) {
  MatrixOperator derived = build_lame_algebraic(p), printed = lame_printed(p);
  MatrixOperator res = derived - printed;
  return {derived, printed, res, res.is_zero(), "printed entries"};
}

// ------------------------------------------------------------ Bose-Hubbard

DiffOperator build_bosehubbard_reduced(const BoseHubbardParams& p) {
  p.validate();
  const Rational& a = p.alpha;
  Rational a2 = a * a, c = p.c();
  XPoly z = XPoly::var();
  XPoly zz2 = z * xp({2, 1});
  XPoly c2 = zz2 * QuadExt(a2), c1 = xp({a2, a2}) - zz2 * QuadExt(2), c0 = xp({-1 / a2 - p.M * p.M + c, c});
  RatOperator H({RationalFunction(-c0), RationalFunction(-c1), RationalFunction(-c2)});
  return H.to_diff_operator();
}

DiffOperator bosehubbard_peeled(const BoseHubbardParams& p) {
  GaugeFactor g{RationalFunction(XPoly(QuadExt(p.s)), XPoly::var())};
  return conjugate_scalar(build_bosehubbard_reduced(p), g);
}

DiffOperator bosehubbard_printed_peeled(const BoseHubbardParams& p) {
  p.validate();
  const Rational &a = p.alpha, &s = p.s, &M = p.M;
  Rational a2 = a * a;
  XPoly w = xp({2, 1});
  XPoly c2 = (w * w - w * QuadExt(2)) * QuadExt(a2);
  XPoly c1 = -(w * w) + w * QuadExt(a2 * (2 * s + 1) + 2) - XPoly(QuadExt(a2));
  XPoly c0 = XPoly(QuadExt(-M * M + a2 * s * s - 2 * M / a)) + w * QuadExt(2 * M / a - 1 / a2);
  RatOperator H({RationalFunction(-c0), RationalFunction(-c1), RationalFunction(-c2)});
  return H.to_diff_operator();
}

DiffOperator bosehubbard_u_form(const BoseHubbardParams& p) {
  return substitute_variable(RatOperator::from(bosehubbard_peeled(p)), xp({-2, 0, 2})).to_diff_operator();
}

double bosehubbard_potential_e1(const BoseHubbardParams& p, double x) {
  double a = p.alpha.get_d(), w = std::cosh(a * x) / a - p.M.get_d();
  return w * w - p.E0().get_d();
}

std::vector<Rational> bosehubbard_indicial_roots(const BoseHubbardParams& p) {
  XPoly ind = indicial_polynomial(build_bosehubbard_reduced(p));
  if (ind.degree() != 2) throw std::domain_error("indicial polynomial is not quadratic");
  Rational A = ind.coeff(2).to_rational(), B = ind.coeff(1).to_rational(), C = ind.coeff(0).to_rational();
  Rational r = exact_sqrt(B * B - 4 * A * C);
  Rational x1 = (-B - r) / (2 * A), x2 = (-B + r) / (2 * A);
  if (x1 > x2) std::swap(x1, x2);
  return {x1, x2};
}

}  // namespace qes
