// Three-term (vector) recurrences read off from the banded action of an
// operator on a graded monomial basis, exact generation in E, truncation and
// factorization.
#pragma once

#include <string>
#include <vector>

#include "qes/hamiltonians.hpp"
#include "qes/matrix.hpp"
#include "qes/spaces.hpp"

namespace qes {

// Component c at level n is x^(offsets[c] + stride n).
struct Grading {
  std::vector<Rational> offsets;
  Rational stride = 1;
  GenExponent exponent(int c, long n) const { return GenExponent(offsets[c] + stride * n); }
};

// C(n) P_{n+1} = (E + A(n)) P_n + B(n) P_{n-1}, the coefficients of (H - E) psi = 0
// at level n.
struct RecurrenceBlocks {
  QuadMatrix C, A, B;
};

class RecurrenceSystem {
 public:
  RecurrenceSystem(MatrixOperator H, int dim, Grading g);
  int dimension() const { return dim_; }
  const Grading& grading() const { return grading_; }
  const MatrixOperator& op() const { return H_; }
  RecurrenceBlocks blocks(long n) const;
  // The lowest level holding a nonnegative exponent.
  long first_level() const;
  // C(n) = c I
  bool scalar_leading(long n) const;
  // Monic normal form P_{n+1} = (E + A') P_n + B' P_{n-1} after rescaling by
  // g(n) = prod_{k<n} c(k); requires scalar_leading on the range used.
  RecurrenceBlocks normal_form(long n) const;
  // g(n) relative to first_level()
  QuadExt normalization(long n) const;

 private:
  MatrixOperator H_;
  int dim_;
  Grading grading_;
};

// Throws std::domain_error when the operator leaves the lattice or couples
// levels further than one apart.
RecurrenceSystem derive_recurrence(const MatrixOperator& H, const Grading& g);
RecurrenceSystem derive_recurrence(const DiffOperator& H, const Grading& g);

using EPoly = XPoly;  // polynomial in E
// Linear form in the free parameters, one EPoly per parameter.
using LinearForm = std::vector<EPoly>;

struct Generation {
  long first_level = 0;
  int parameters = 0;
  std::vector<std::string> parameter_names;  // which coefficient each parameter is
  // values[L - first_level][c]
  std::vector<std::vector<LinearForm>> values;
  std::vector<LinearForm> constraints;  // nontrivial ones only
  const std::vector<LinearForm>& level(long L) const { return values.at(L - first_level); }
  // Component c at level L with the parameters set to given values.
  EPoly evaluate(long L, int c, const std::vector<EPoly>& params) const;
};

// Levels first_level .. upto.
Generation generate(const RecurrenceSystem& sys, long upto);

struct TruncationResult {
  EPoly determinant;
  Matrix<EPoly> conditions;         // rows: conditions, cols: parameters
  std::vector<long> boundary;       // first level outside the space, per component
  Generation generation;
};

// The space is given by its last level per component (component c lives on
// levels first..last[c]); conditions are the vanishing of the next level of
// each component plus the nontrivial constraints met on the way.
TruncationResult truncation_polynomial(const RecurrenceSystem& sys, const std::vector<long>& last);
// Last levels of a monomial basis in the grading.
std::vector<long> last_levels(const RecurrenceSystem& sys, const Basis& V);

struct FactorizationReport {
  bool holds = false;
  EPoly divisor;
  std::vector<bool> divisible;  // per level checked
  std::string note;
};

// Scalar: P_{N+j} mod P_N for j = 1..J, with the single parameter set to 1.
FactorizationReport factorization_check(const RecurrenceSystem& sys, long N, int J);
// Vector: parameters set to an adjugate column of the conditions, so the boundary
// levels are multiples of the determinant; the J levels beyond must be too.
FactorizationReport factorization_check(const RecurrenceSystem& sys, const std::vector<long>& last, int J);

// --- the three cases

// Lame: one level per degree, components (u, v).
RecurrenceSystem lame_recurrence(const LameParams& p);
// Printed A(n), B(n) and the printed P1 multiplier.
QuadMatrix lame_printed_A(const LameParams& p, long n);
QuadMatrix lame_printed_B(const LameParams& p, long n);
Matrix<EPoly> lame_printed_P1(const LameParams& p);

// Polypot: p_n and q_{n+1} on the same level.
RecurrenceSystem polypot_recurrence(const PolyPotParams& p);
QuadMatrix polypot_printed_B(const PolyPotParams& p, long n);

// Bose-Hubbard chain in u = sqrt((z+2)/2) of parity o: levels are u^(o + 2j).
RecurrenceSystem bosehubbard_recurrence(const BoseHubbardParams& p, int parity);
// Truncation index of the chain (the level whose vanishing truncates), or -1.
long bosehubbard_truncation_level(const BoseHubbardParams& p, int parity);
// Printed recursion coefficients, (alpha^2/4) R_{n+2} = R_n (E + a_n) + R_{n-2} b_n.
std::pair<Rational, Rational> bosehubbard_printed_r1(const BoseHubbardParams& p, long n);
// Same coefficients derived from the operator.
std::pair<Rational, Rational> bosehubbard_derived_r1(const BoseHubbardParams& p, long n);
// Printed P (parity 0) / Q (parity 1) monic recursions, j >= 1:
// P_j = (E + a_j) P_{j-1} + b_j P_{j-2}.
std::pair<Rational, Rational> bosehubbard_printed_pq(const BoseHubbardParams& p, int parity, long j);

}  // namespace qes
