// Floating-point cross-checks: Jacobi elliptic functions, finite-difference
// Schroedinger spectra (scalar, coupled, periodic) and level matching.
#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "qes/hamiltonians.hpp"
#include "qes/recurrence.hpp"

namespace qes {

struct JacobiValues {
  double sn = 0, cn = 1, dn = 1;
};
// modulus k in [0, 1]
JacobiValues jacobi(double z, double k);
// complete elliptic integral of the first kind, modulus k in [0, 1)
double elliptic_K(double k);

// Symmetric band matrix, lower band of width kd.
class BandMatrix {
 public:
  BandMatrix(int n, int kd) : n_(n), kd_(kd), v_(static_cast<size_t>(n) * (kd + 1), 0.0) {}
  int size() const { return n_; }
  int bandwidth() const { return kd_; }
  // i >= j, i - j <= kd
  double& at(int i, int j);
  double get(int i, int j) const;
  // eigenvalues strictly below sigma (Sylvester inertia of the LDL^T factor)
  int count_below(double sigma) const;
  std::pair<double, double> gershgorin() const;

 private:
  int n_, kd_;
  std::vector<double> v_;
};

// Lowest `count` eigenvalues by bisection on count_below.
std::vector<double> band_lowest(const BandMatrix& A, int count, double tol = 1e-13);
// All eigenvalues of a dense symmetric matrix (row-major), ascending; Householder
// tridiagonalization and implicit QL.
std::vector<double> dense_eigenvalues(std::vector<double> a, int n);

enum class Boundary { Dirichlet, Periodic };

struct GridProblem {
  double a = 0, b = 1;
  int N = 1000;
  int channels = 1;
  Boundary bc = Boundary::Dirichlet;
  // {V11, V12, V22}; scalar problems read V11
  std::function<std::array<double, 3>(double)> V;
};

// Dirichlet: N interior points; periodic: N points on [a, b).
std::vector<double> grid_points(const GridProblem& p);
double grid_step(const GridProblem& p);
// Periodic grids are laid out in folded order 0, N-1, 1, N-2, ... so the
// wrap-around stays inside the band; channels are interleaved per point.
BandMatrix assemble(const GridProblem& p);
std::vector<double> solve_levels(const GridProblem& p, int count);
// The same problem with the step halved.
GridProblem refined(const GridProblem& p);

struct SpectrumResult {
  std::vector<double> values;  // Richardson extrapolated
  std::vector<double> coarse, fine, error;
  int n_coarse = 0, n_fine = 0;
};
SpectrumResult solve_spectrum(const GridProblem& p, int count);
// log2 of successive difference ratios over grids N, 2N, 4N, per level.
std::vector<double> convergence_order(const GridProblem& p, int count);

struct CompareReport {
  std::vector<double> algebraic, numeric;
  std::vector<int> match;  // numeric index per algebraic level, -1 if none
  std::vector<double> residuals;  // relative
  std::vector<int> unmatched;
  double shift = 0, tolerance = 1e-6;
  bool all_matched = false;
};
// Matches algebraic - shift against numeric, greedily by distance; relative
// residual |num - alg| / max(1, |alg|).
CompareReport compare(const std::vector<double>& algebraic, const std::vector<double>& numeric, double shift,
                      double tol);

GridProblem harmonic_problem(int N);
GridProblem bosehubbard_problem(const BoseHubbardParams& p, double emax, int N);
GridProblem polypot_problem(const PolyPotParams& p, double emax, int N);
GridProblem lame_problem(const LameParams& p, int N);

// Algebraic levels from the truncation polynomials, ascending.
std::vector<double> bosehubbard_algebraic_levels(const BoseHubbardParams& p);
std::vector<double> polypot_algebraic_levels(const PolyPotParams& p);
std::vector<double> lame_algebraic_levels(const LameParams& p);
std::vector<double> polynomial_real_roots(const EPoly& p);

// Channel values of a wavefunction.
using Wavefunction = std::function<std::array<double, 2>(double)>;
// <psi, H psi> / <psi, psi> with the finite-difference Hamiltonian of p on its grid.
double rayleigh_quotient(const GridProblem& p, const Wavefunction& psi);
// Richardson extrapolation over p and refined(p).
double rayleigh_extrapolated(const GridProblem& p, const Wavefunction& psi);

// An algebraic level and the physical eigenfunction rebuilt from the truncated
// series at that level (gauge factors and similarity transforms undone).
struct SeriesEigenfunction {
  double level = 0;
  Wavefunction psi;
};
std::vector<SeriesEigenfunction> bosehubbard_eigenfunctions(const BoseHubbardParams& p);
std::vector<SeriesEigenfunction> polypot_eigenfunctions(const PolyPotParams& p);
std::vector<SeriesEigenfunction> lame_eigenfunctions(const LameParams& p);

struct CaseCheck {
  std::string name;
  std::vector<double> algebraic;
  SpectrumResult numeric;
  CompareReport report;
  // extrapolated Rayleigh quotient of each rebuilt eigenfunction, on the
  // numeric scale (algebraic - shift), and its relative deviation
  std::vector<double> rayleigh, rayleigh_residuals;
  bool rayleigh_ok = false;
};
CaseCheck verify_bosehubbard(const BoseHubbardParams& p, int N, double tol = 1e-6);
CaseCheck verify_polypot(const PolyPotParams& p, int N, double tol = 1e-6);
CaseCheck verify_lame(const LameParams& p, int N, double tol = 1e-6);

}  // namespace qes
