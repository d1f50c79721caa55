// The three physical systems in physical and algebraic form: the 2x2 sextic
// polynomial potential, the coupled Lame system and the Bose-Hubbard reduction.
#pragma once

#include <string>
#include <vector>

#include "qes/catalog.hpp"
#include "qes/spaces.hpp"
#include "qes/transforms.hpp"

namespace qes {

struct PolyPotParams {
  int m = 2;
  Rational p2 = 1;
  Rational p1 = 0;
  Rational kappa0 = 0;
  Rational epsilon = 0;
  void validate() const;
};

struct LameParams {
  int m = 0;
  Rational delta = 0;
  Rational k2 = frac(1, 2);
  void validate() const;
  Rational A() const { return 4 * m * m + 6 * m + 3 - delta; }
  Rational C() const { return 4 * m * m + 6 * m + 3 + delta; }
  Rational R() const { return (4 * m + 3 - delta) / (4 * m + 3 + delta); }
  QuadExt kappa() const { return QuadExt::sqrt_of(k2 * R()); }
  // 2 theta k = kappa (4m + 3 + delta)
  QuadExt coupling() const { return kappa() * QuadExt(4 * m + 3 + delta); }
  double theta() const;
};

struct BoseHubbardParams {
  Rational alpha = 1;
  Rational M = frac(3, 2);
  Rational s = 0;
  void validate() const;
  // coefficient of cosh in the reduced equation; QES when a nonnegative integer
  Rational c() const { return 2 * M / alpha - 1; }
  Rational Mtilde() const { return (2 * alpha * M - 1) / (alpha * alpha); }
  bool quasi_exact() const { return is_integer(c()) && sgn(c()) >= 0; }
  // E = E1 + E0 with n = c
  Rational E0() const;
};

// 2x2 matrix of functions of x.
struct PotentialMatrix {
  RationalFunction v11, v12, v22;
};

// --- polynomial potential, x = y^2
// V(y) written in x = y^2, including eps(eps-1)/x.
PotentialMatrix polypot_potential(const PolyPotParams& p);
// -(4x d^2 + 2d) I + V in the variable x.
MatrixOperator polypot_physical_x(const PolyPotParams& p);
// log-derivative of the gauge factor in x
RationalFunction polypot_gauge(const PolyPotParams& p);
MatrixOperator polypot_P(const PolyPotParams& p);
MatrixOperator polypot_Pinv(const PolyPotParams& p);
MatrixOperator build_polypot_algebraic(const PolyPotParams& p);
Basis polypot_space(int m);
// The printed closed form; kappa is the reading of the unsubscripted symbol.
MatrixOperator polypot_printed(const PolyPotParams& p, const Rational& kappa);

struct PipelineReport {
  MatrixOperator derived, printed, residual;
  bool matches = false;
  std::string reading;  // which candidate reading was used
};
// Tries kappa = kappa0 and kappa = 1; keeps the one with the smaller residual.
PipelineReport polypot_pipeline_check(const PolyPotParams& p);

// --- Lame, x = sn^2
PotentialMatrix lame_potential(const LameParams& p);
// image of d^2/dz^2
DiffOperator lame_pullback(const Rational& k2);
MatrixOperator build_lame_algebraic(const LameParams& p);
Basis lame_space(int m);
MatrixOperator lame_printed(const LameParams& p);
PipelineReport lame_pipeline_check(const LameParams& p);

// --- Bose-Hubbard, z = cosh(alpha x) - 1
// H_z with H_z phi = E phi.
DiffOperator build_bosehubbard_reduced(const BoseHubbardParams& p);
// z^-s H_z z^s
DiffOperator bosehubbard_peeled(const BoseHubbardParams& p);
// The printed f-form (sign flipped to H f = E f).
DiffOperator bosehubbard_printed_peeled(const BoseHubbardParams& p);
// peeled operator in u with z = 2u^2 - 2
DiffOperator bosehubbard_u_form(const BoseHubbardParams& p);
// V(x) of the E1 form
double bosehubbard_potential_e1(const BoseHubbardParams& p, double x);
// roots of the indicial polynomial of H_z at z = 0
std::vector<Rational> bosehubbard_indicial_roots(const BoseHubbardParams& p);

}  // namespace qes
