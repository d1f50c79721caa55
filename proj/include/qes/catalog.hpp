// Named operator families preserving P_n + f P_m and their relations.
#pragma once

#include <string>
#include <vector>

#include "qes/fring.hpp"
#include "qes/spaces.hpp"
#include "qes/weylop.hpp"

namespace qes {

enum class Family { j, k_a, J, K, Kprime, q_low, q_bar, Q, Qbar, Wplus, Wminus, S, Stilde };

struct CatalogSpec {
  Family family = Family::J;
  int sign = 0;       // +1, 0, -1 for j, k_a, J
  int n = 0;
  int m = 0;
  GenExponent a{0, 1};  // formal by default
  int alpha = 0;      // index of q_alpha, Q_alpha
  int k = 0;          // integer a for W+-
  int index = 1;      // 1..3 for S, Stilde
  Rational lambda = -1;
};

Family parse_family(const std::string& s);
std::string family_name(Family f);
std::vector<std::string> family_names();

// sl(2) generators on P_n
DiffOperator j_plus(const Rational& n);
DiffOperator j_zero(const Rational& n);
DiffOperator j_minus();
// x^a j x^-a
DiffOperator k_op(int sign, const Rational& n, const GenExponent& a);
// generators preserving span{1..x^n} + x^a span{1..x^m}
DiffOperator J_plus(int n, int m, const GenExponent& a);
DiffOperator J_zero(int n, int m);
DiffOperator J_minus(const GenExponent& a);
DiffOperator K_op(int n);
DiffOperator Kprime_op(int m, const GenExponent& a);
DiffOperator q_low(int alpha);
DiffOperator q_bar(int alpha, int n, int m);
DiffOperator Q_op(int alpha, int n, int m, const GenExponent& a);
DiffOperator Qbar_op(int alpha, int n, int m, const GenExponent& a);
// x^shift prod (D - r_i)
DiffOperator kernel_composition(const GenExponent& shift, const std::vector<Rational>& roots);
DiffOperator W_plus(int k, int n, int m);
DiffOperator W_minus(int k, int n, int m);

// One row of the W action on span{x^0..x^n} + span{x^k..x^(k+m)}.
struct WActionRow {
  bool plus = true;
  int sector = 0;   // 0: plain, 1: x^k sector
  int degree = 0;   // source exponent
  int image = -1;   // image exponent, -1 when annihilated
  int image_sector = -1;
  QuadExt coeff;
};
std::vector<WActionRow> w_action_table(int k, int n, int m);
// W+ sends the plain sector onto the first n+1 monomials of the x^k sector and
// kills the top k of it; W- kills the plain sector and sends the lowest n+1
// monomials of the x^k sector onto the plain sector.
bool w_action_matches(const std::vector<WActionRow>& table, int k, int n, int m);

// S_1 = N y + (1-y^2) d, S_2 = f (N - y d), S_3 = f d with f = sqrt(1-y^2);
// for lambda != -1 the affine y(x) maps 1-y^2 onto a multiple of p2(x).
FRingOperator S_op(int index, const Rational& spin, const Rational& lambda);
// S_2 exactly as printed, f (N x - x d), at lambda = -1.
FRingOperator S2_printed(const Rational& spin);
// (1 - lambda x)^(-1/2) S_a (1 - lambda x)^(1/2) on p + sqrt((1-x)/(1-lambda x)) q.
FRingOperator Stilde_op(int index, const Rational& spin, const Rational& lambda);
// The printed matrix forms of S_1..S_3 for m = n - 1.
MatrixOperator printed_matrix_form(int index, int n);

struct BuiltOperator {
  bool is_fring = false;
  DiffOperator scalar;
  FRingOperator fring{FRing::sqrt_p2(-1)};
};

// Throws std::invalid_argument on domain violations.
BuiltOperator build(const CatalogSpec& spec);
// Source space of a scalar family; equals the target except for q_low, q_bar.
Basis declared_space(const CatalogSpec& spec);
Basis declared_target(const CatalogSpec& spec);
TwoComponentSpace declared_fspace(const CatalogSpec& spec);    // S, Stilde
// Spin parameter used for S (n) and Stilde (n + 1/2).
Rational declared_spin(const CatalogSpec& spec);
// Builds the operator and checks it against its declared space(s).
InvarianceReport check_declared(const CatalogSpec& spec);

struct RelationReport {
  std::string name;
  bool holds = false;
  bool operator_identity = false;  // zero as an operator, not only on V
  DiffOperator residual;
  std::string note;
};

std::vector<std::string> relation_names();
// n = m enforced for the fermionic relations.
RelationReport verify_relation(const std::string& name, int n, int m, const GenExponent& a = GenExponent(0, 1));

// [J+, J-] = alpha J0^3 + beta J0^2 + gamma J0 + delta with coefficients in a.
struct AlgebraFitResult {
  std::vector<PolyInA> coefficients;  // alpha, beta, gamma, delta
  bool exact = false;
};
AlgebraFitResult fit_casimir_polynomial(int n, int m);
// Writes a D-diagonal operator as a polynomial in J0 = D - shift.
bool fit_j0_polynomial(const DiffOperator& diag, const PolyInA& shift, DPoly& out);
DiffOperator j0_polynomial_operator(const DPoly& g, const DiffOperator& J0);

// Structure constants c with [S_i, S_j] = c S_k for (i,j,k) cyclic.
struct So3Report {
  bool closes = false;
  std::vector<QuadExt> constants;  // c_123, c_231, c_312
};
So3Report so3_closure(const Rational& spin, const Rational& lambda, bool tilde);

TwoComponentSpace lame_halfinteger_solution(int n, const Rational& k2);

// V^(a-1)(x) and V^(a)(x) as images of V^(1) under t = x^(a-1), t = x^a; checks
// the substituted J operators preserve the substituted basis at integer a.
bool power_reduction_check(int n, int m, int a, bool shifted);

}  // namespace qes
