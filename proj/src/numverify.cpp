#include "qes/numverify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/SVD>
#include <stdexcept>

namespace qes {

// ------------------------------------------------------------ elliptic

JacobiValues jacobi(double z, double k) {
  if (k < 0 || k > 1) throw std::invalid_argument("modulus must lie in [0, 1]");
  if (k == 0) return {std::sin(z), std::cos(z), 1.0};
  if (k == 1) {
    double s = 1 / std::cosh(z);
    return {std::tanh(z), s, s};
  }
  // descending Landen transformation driven by the AGM
  constexpr int kMax = 16;
  double a[kMax + 1], c[kMax + 1];
  a[0] = 1;
  c[0] = k;
  double b = std::sqrt(1 - k * k);
  int n = 0;
  while (std::abs(c[n]) > std::numeric_limits<double>::epsilon() * a[n] && n < kMax) {
    a[n + 1] = (a[n] + b) / 2;
    c[n + 1] = (a[n] - b) / 2;
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * z, n);
  for (int i = n; i > 0; --i) phi = (phi + std::asin(c[i] / a[i] * std::sin(phi))) / 2;
  double sn = std::sin(phi), cn = std::cos(phi);
  // cn / cos(phi_1 - phi) is 0/0 at odd multiples of K; dn > 0 on the real line
  double dn = std::sqrt(1 - k * k * sn * sn);
  return {sn, cn, dn};
}

double elliptic_K(double k) {
  if (k < 0 || k >= 1) throw std::invalid_argument("K needs 0 <= k < 1");
  double a = 1, b = std::sqrt(1 - k * k);
  for (int i = 0; i < 64 && std::abs(a - b) > 4 * std::numeric_limits<double>::epsilon() * a; ++i) {
    double t = (a + b) / 2;
    b = std::sqrt(a * b);
    a = t;
  }
  return M_PI / (2 * a);
}

// ------------------------------------------------------------ eigensolvers

double& BandMatrix::at(int i, int j) {
  if (i < j) std::swap(i, j);
  if (i - j > kd_) throw std::out_of_range("outside the band");
  return v_[static_cast<size_t>(j) * (kd_ + 1) + (i - j)];
}

double BandMatrix::get(int i, int j) const {
  if (i < j) std::swap(i, j);
  if (i - j > kd_) return 0.0;
  return v_[static_cast<size_t>(j) * (kd_ + 1) + (i - j)];
}

int BandMatrix::count_below(double sigma) const {
  // LDL^T of A - sigma I restricted to the band; L stored column-wise like v_.
  std::vector<double> L(v_.size(), 0.0), d(n_);
  auto l = [&](int i, int j) -> double& { return L[static_cast<size_t>(j) * (kd_ + 1) + (i - j)]; };
  int neg = 0;
  const double tiny = std::numeric_limits<double>::epsilon() * std::numeric_limits<double>::epsilon();
  for (int j = 0; j < n_; ++j) {
    double dj = get(j, j) - sigma;
    for (int k = std::max(0, j - kd_); k < j; ++k) dj -= l(j, k) * l(j, k) * d[k];
    if (dj == 0) dj = tiny;
    d[j] = dj;
    if (dj < 0) ++neg;
    for (int i = j + 1; i <= std::min(n_ - 1, j + kd_); ++i) {
      double s = get(i, j);
      for (int k = std::max(0, i - kd_); k < j; ++k) s -= l(i, k) * l(j, k) * d[k];
      l(i, j) = s / dj;
    }
  }
  return neg;
}

std::pair<double, double> BandMatrix::gershgorin() const {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int i = 0; i < n_; ++i) {
    double r = 0;
    for (int j = std::max(0, i - kd_); j <= std::min(n_ - 1, i + kd_); ++j)
      if (j != i) r += std::abs(get(i, j));
    lo = std::min(lo, get(i, i) - r);
    hi = std::max(hi, get(i, i) + r);
  }
  return {lo, hi};
}

std::vector<double> band_lowest(const BandMatrix& A, int count, double tol) {
  if (count > A.size()) throw std::invalid_argument("more eigenvalues requested than the matrix size");
  auto [glo, ghi] = A.gershgorin();
  std::vector<double> out;
  double lo = glo;
  for (int k = 0; k < count; ++k) {
    double l = lo, h = ghi;
    while (h - l > tol * std::max(1.0, std::abs(l) + std::abs(h))) {
      double mid = 0.5 * (l + h);
      if (A.count_below(mid) > k)
        h = mid;
      else
        l = mid;
    }
    out.push_back(0.5 * (l + h));
    lo = l;
  }
  return out;
}

namespace {

void householder_tridiagonal(std::vector<double>& a, int n, std::vector<double>& d, std::vector<double>& e) {
  auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
  for (int i = n - 1; i > 0; --i) {
    int l = i - 1;
    double h = 0, scale = 0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::abs(A(i, k));
      if (scale == 0) {
        e[i] = A(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          A(i, k) /= scale;
          h += A(i, k) * A(i, k);
        }
        double f = A(i, l), g = f >= 0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        A(i, l) = f - g;
        f = 0;
        for (int j = 0; j <= l; ++j) {
          g = 0;
          for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
          for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
          e[j] = g / h;
          f += e[j] * A(i, j);
        }
        double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = A(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) A(j, k) -= (f * e[k] + g * A(i, k));
        }
      }
    } else {
      e[i] = A(i, l);
    }
    d[i] = h;
  }
  e[0] = 0;
  for (int i = 0; i < n; ++i) d[i] = A(i, i);
}

void implicit_ql(std::vector<double>& d, std::vector<double>& e, int n) {
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0;
  for (int l = 0; l < n; ++l) {
    int iter = 0, m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw std::runtime_error("QL iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1, c = 1, p = 0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i], b = c * e[i];
          e[i + 1] = (r = std::hypot(f, g));
          if (r == 0) {
            d[i + 1] -= p;
            e[m] = 0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2 * c * b;
          d[i + 1] = g + (p = s * r);
          g = c * r - b;
        }
        if (r == 0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<double> dense_eigenvalues(std::vector<double> a, int n) {
  if (static_cast<int>(a.size()) != n * n) throw std::invalid_argument("matrix size mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (a[static_cast<size_t>(i) * n + j] != a[static_cast<size_t>(j) * n + i])
        throw std::invalid_argument("matrix is not symmetric");
  if (n == 0) return {};
  std::vector<double> d(n), e(n);
  householder_tridiagonal(a, n, d, e);
  implicit_ql(d, e, n);
  std::sort(d.begin(), d.end());
  return d;
}

// ------------------------------------------------------------ grids

double grid_step(const GridProblem& p) {
  return p.bc == Boundary::Dirichlet ? (p.b - p.a) / (p.N + 1) : (p.b - p.a) / p.N;
}

std::vector<double> grid_points(const GridProblem& p) {
  double h = grid_step(p);
  std::vector<double> x(p.N);
  for (int i = 0; i < p.N; ++i) x[i] = p.a + (p.bc == Boundary::Dirichlet ? i + 1 : i) * h;
  return x;
}

BandMatrix assemble(const GridProblem& p) {
  if (p.N < 3) throw std::invalid_argument("grid too small");
  if (p.channels != 1 && p.channels != 2) throw std::invalid_argument("one or two channels");
  const int ch = p.channels, N = p.N;
  const bool per = p.bc == Boundary::Periodic;
  std::vector<int> pos(N);
  for (int k = 0; k < N; ++k) {
    int i = per ? (k % 2 == 0 ? k / 2 : N - 1 - (k - 1) / 2) : k;
    pos[i] = k;
  }
  BandMatrix H(N * ch, ch * (per ? 2 : 1));
  double h = grid_step(p), w = 1 / (h * h);
  std::vector<double> x = grid_points(p);
  for (int i = 0; i < N; ++i) {
    std::array<double, 3> v = p.V(x[i]);
    int base = pos[i] * ch;
    H.at(base, base) = 2 * w + v[0];
    if (ch == 2) {
      H.at(base + 1, base + 1) = 2 * w + v[2];
      H.at(base + 1, base) = v[1];
    }
    int next = i + 1;
    if (next == N) {
      if (!per) continue;
      next = 0;
    }
    for (int c = 0; c < ch; ++c) H.at(pos[next] * ch + c, base + c) -= w;
  }
  return H;
}

std::vector<double> solve_levels(const GridProblem& p, int count) { return band_lowest(assemble(p), count); }

GridProblem refined(const GridProblem& p) {
  GridProblem q = p;
  q.N = p.bc == Boundary::Dirichlet ? 2 * p.N + 1 : 2 * p.N;
  return q;
}

SpectrumResult solve_spectrum(const GridProblem& p, int count) {
  if (p.N < 200) throw std::invalid_argument("grid needs N >= 200");
  SpectrumResult r;
  GridProblem q = refined(p);
  r.n_coarse = p.N;
  r.n_fine = q.N;
  r.coarse = solve_levels(p, count);
  r.fine = solve_levels(q, count);
  for (int i = 0; i < count; ++i) {
    double v = (4 * r.fine[i] - r.coarse[i]) / 3;
    r.values.push_back(v);
    r.error.push_back(std::abs(v - r.fine[i]));
  }
  return r;
}

std::vector<double> convergence_order(const GridProblem& p, int count) {
  GridProblem q = refined(p), s = refined(q);
  auto e1 = solve_levels(p, count), e2 = solve_levels(q, count), e4 = solve_levels(s, count);
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(std::log2(std::abs(e1[i] - e2[i]) / std::abs(e2[i] - e4[i])));
  return out;
}

CompareReport compare(const std::vector<double>& algebraic, const std::vector<double>& numeric, double shift,
                      double tol) {
  CompareReport r;
  r.algebraic = algebraic;
  r.numeric = numeric;
  r.shift = shift;
  r.tolerance = tol;
  const size_t na = algebraic.size(), nn = numeric.size();
  r.match.assign(na, -1);
  r.residuals.assign(na, std::numeric_limits<double>::infinity());
  auto rel = [&](size_t i, size_t j) {
    double t = algebraic[i] - shift;
    return std::abs(numeric[j] - t) / std::max(1.0, std::abs(t));
  };
  std::vector<std::tuple<double, size_t, size_t>> pairs;
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < nn; ++j) pairs.emplace_back(rel(i, j), i, j);
  std::sort(pairs.begin(), pairs.end());
  std::vector<bool> used(nn, false);
  for (auto& [d, i, j] : pairs) {
    if (r.match[i] >= 0 || used[j]) continue;
    r.residuals[i] = d;
    if (d <= tol) {
      r.match[i] = static_cast<int>(j);
      used[j] = true;
    } else {
      r.match[i] = -2;  // closest candidate too far; settled
    }
  }
  for (size_t i = 0; i < na; ++i)
    if (r.match[i] < 0) {
      r.match[i] = -1;
      r.unmatched.push_back(static_cast<int>(i));
    }
  r.all_matched = r.unmatched.empty();
  return r;
}

// ------------------------------------------------------------ cases

namespace {

double eval_poly(const XPoly& p, double x) {
  double acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i).to_double();
  return acc;
}

double eval_rf(const RationalFunction& f, double x) { return eval_poly(f.num(), x) / eval_poly(f.den(), x); }

// smallest L with ok(L), growing geometrically
double reach(const std::function<bool(double)>& ok) {
  double L = 1;
  while (!ok(L)) {
    L *= 1.05;
    if (L > 1e4) throw std::runtime_error("no suitable box size");
  }
  return L;
}

int count_levels_below(const GridProblem& p, double e) { return assemble(p).count_below(e); }

CaseCheck finish(std::string name, std::vector<SeriesEigenfunction> funcs, const GridProblem& g, double shift,
                 double tol) {
  std::sort(funcs.begin(), funcs.end(), [](const auto& x, const auto& y) { return x.level < y.level; });
  CaseCheck c;
  c.name = std::move(name);
  for (const auto& f : funcs) c.algebraic.push_back(f.level);
  double top = c.algebraic.empty() ? 0 : c.algebraic.back() - shift;
  int count = std::min(g.N * g.channels, count_levels_below(g, top + 1.0) + 1);
  c.numeric = solve_spectrum(g, count);
  c.report = compare(c.algebraic, c.numeric.values, shift, tol);
  c.rayleigh_ok = true;
  for (const auto& f : funcs) {
    double want = f.level - shift, q = rayleigh_extrapolated(g, f.psi);
    double res = std::abs(q - want) / std::max(1.0, std::abs(want));
    c.rayleigh.push_back(q);
    c.rayleigh_residuals.push_back(res);
    c.rayleigh_ok = c.rayleigh_ok && res <= tol;
  }
  return c;
}

// Truncated series sum_L c_L x^(e_L) per component at one root of the
// truncation polynomial.
struct Series {
  std::vector<std::vector<std::pair<double, double>>> terms;  // (exponent, coeff)
  double value(int c, double x) const {
    double acc = 0;
    for (auto [e, k] : terms[c]) acc += k * std::pow(x, e);
    return acc;
  }
  double derivative(int c, double x) const {
    double acc = 0;
    for (auto [e, k] : terms[c])
      if (e != 0) acc += k * e * std::pow(x, e - 1);
    return acc;
  }
};

// Unit vector spanning (approximately) the kernel of the conditions at E.
std::vector<double> null_vector(const Matrix<EPoly>& C, double E) {
  Eigen::MatrixXd M(C.rows(), C.cols());
  for (int i = 0; i < C.rows(); ++i)
    for (int j = 0; j < C.cols(); ++j) M(i, j) = eval_poly(C(i, j), E);
  if (C.cols() == 1) return {1.0};
  for (int i = 0; i < M.rows(); ++i)
    if (double n = M.row(i).norm(); n > 0) M.row(i) /= n;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  Eigen::VectorXd v = svd.matrixV().col(C.cols() - 1);
  return {v.data(), v.data() + v.size()};
}

// One Series per real root of the truncation polynomial of sys on its space.
std::vector<std::pair<double, Series>> truncated_series(const RecurrenceSystem& sys, const std::vector<long>& last) {
  TruncationResult t = truncation_polynomial(sys, last);
  const Generation& gen = t.generation;
  std::vector<std::pair<double, Series>> out;
  for (double E : polynomial_real_roots(t.determinant)) {
    std::vector<double> nv = null_vector(t.conditions, E);
    Series s;
    s.terms.resize(sys.dimension());
    for (int c = 0; c < sys.dimension(); ++c)
      for (long L = gen.first_level; L <= last[c]; ++L) {
        const LinearForm& f = gen.level(L)[c];
        double k = 0;
        for (size_t q = 0; q < f.size() && q < nv.size(); ++q) k += eval_poly(f[q], E) * nv[q];
        // levels below the space carry exact zeros at negative exponents
        if (k != 0) s.terms[c].emplace_back(sys.grading().exponent(c, L).q.get_d(), k);
      }
    out.emplace_back(E, std::move(s));
  }
  return out;
}

}  // namespace

GridProblem harmonic_problem(int N) {
  GridProblem g;
  g.a = -12;
  g.b = 12;
  g.N = N;
  g.V = [](double x) { return std::array<double, 3>{x * x, 0, 0}; };
  return g;
}

GridProblem bosehubbard_problem(const BoseHubbardParams& p, double emax, int N) {
  GridProblem g;
  BoseHubbardParams q = p;
  double L = reach([&](double x) { return bosehubbard_potential_e1(q, x) >= emax + 1e3; });
  g.a = -L;
  g.b = L;
  g.N = N;
  g.V = [q](double x) { return std::array<double, 3>{bosehubbard_potential_e1(q, x), 0, 0}; };
  return g;
}

GridProblem polypot_problem(const PolyPotParams& p, double emax, int N) {
  if (sgn(p.epsilon) != 0) throw std::invalid_argument("numerical polypot check supports epsilon = 0 only");
  PotentialMatrix V = polypot_potential(p);
  auto f = [V](double y) {
    double x = y * y;
    return std::array<double, 3>{eval_rf(V.v11, x), eval_rf(V.v12, x), eval_rf(V.v22, x)};
  };
  double L = reach([&](double y) {
    auto v = f(y);
    return std::min(v[0], v[2]) - std::abs(v[1]) >= emax + 1e3;
  });
  GridProblem g;
  g.a = -L;
  g.b = L;
  g.N = N;
  g.channels = 2;
  g.V = f;
  return g;
}

GridProblem lame_problem(const LameParams& p, int N) {
  p.validate();
  double k2 = p.k2.get_d(), k = std::sqrt(k2);
  double A = p.A().get_d(), C = p.C().get_d(), dl = p.delta.get_d(), th = p.theta();
  GridProblem g;
  g.a = 0;
  g.b = 4 * elliptic_K(k);
  g.N = N;
  g.channels = 2;
  g.bc = Boundary::Periodic;
  g.V = [=](double z) {
    JacobiValues j = jacobi(z, k);
    double s2 = j.sn * j.sn;
    return std::array<double, 3>{A * k2 * s2 + dl * (1 + k2) / 2, 2 * th * k * j.cn * j.dn,
                                 C * k2 * s2 - dl * (1 + k2) / 2};
  };
  return g;
}

std::vector<double> polynomial_real_roots(const EPoly& p) {
  std::vector<double> out;
  if (p.degree() < 1) return out;
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, 15);
  for (const auto& r : real_roots(p, Rational(1) / Rational(den))) out.push_back(r.mid());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> bosehubbard_algebraic_levels(const BoseHubbardParams& p) {
  std::vector<double> out;
  for (Rational s : {Rational(0), frac(1, 2)}) {
    BoseHubbardParams q = p;
    q.s = s;
    for (int o : {0, 1}) {
      long N = bosehubbard_truncation_level(q, o);
      if (N < 1) continue;
      Generation g = generate(bosehubbard_recurrence(q, o), N);
      for (double r : polynomial_real_roots(g.evaluate(N, 0, {EPoly(QuadExt(1))}))) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> polypot_algebraic_levels(const PolyPotParams& p) {
  RecurrenceSystem sys = polypot_recurrence(p);
  return polynomial_real_roots(truncation_polynomial(sys, last_levels(sys, polypot_space(p.m))).determinant);
}

std::vector<double> lame_algebraic_levels(const LameParams& p) {
  RecurrenceSystem sys = lame_recurrence(p);
  return polynomial_real_roots(truncation_polynomial(sys, last_levels(sys, lame_space(p.m))).determinant);
}

// ------------------------------------------------------------ eigenfunctions

double rayleigh_quotient(const GridProblem& p, const Wavefunction& psi) {
  std::vector<double> x = grid_points(p);
  const int N = p.N, ch = p.channels;
  const bool per = p.bc == Boundary::Periodic;
  double h = grid_step(p), w = 1 / (h * h);
  std::vector<std::array<double, 2>> f(N);
  for (int i = 0; i < N; ++i) f[i] = psi(x[i]);
  double num = 0, den = 0;
  for (int i = 0; i < N; ++i) {
    std::array<double, 3> v = p.V(x[i]);
    for (int c = 0; c < ch; ++c) {
      double left = i > 0 ? f[i - 1][c] : (per ? f[N - 1][c] : 0.0);
      double right = i + 1 < N ? f[i + 1][c] : (per ? f[0][c] : 0.0);
      num += f[i][c] * (2 * f[i][c] - left - right) * w;
      den += f[i][c] * f[i][c];
    }
    num += v[0] * f[i][0] * f[i][0];
    if (ch == 2) num += 2 * v[1] * f[i][0] * f[i][1] + v[2] * f[i][1] * f[i][1];
  }
  if (den == 0) throw std::domain_error("wavefunction vanishes on the grid");
  return num / den;
}

double rayleigh_extrapolated(const GridProblem& p, const Wavefunction& psi) {
  double coarse = rayleigh_quotient(p, psi), fine = rayleigh_quotient(refined(p), psi);
  return (4 * fine - coarse) / 3;
}

std::vector<SeriesEigenfunction> bosehubbard_eigenfunctions(const BoseHubbardParams& p) {
  std::vector<SeriesEigenfunction> out;
  double a = p.alpha.get_d();
  for (Rational s : {Rational(0), frac(1, 2)}) {
    BoseHubbardParams q = p;
    q.s = s;
    for (int o : {0, 1}) {
      long N = bosehubbard_truncation_level(q, o);
      if (N < 1) continue;
      for (auto& [E, ser] : truncated_series(bosehubbard_recurrence(q, o), {N - 1})) {
        bool odd = sgn(s) != 0;
        // z = cosh(ax) - 1, u = cosh(ax/2), z^(1/2) continued as sqrt(2) sinh(ax/2)
        Wavefunction psi = [a, odd, ser = ser](double x) {
          double u = std::cosh(a * x / 2);
          double peel = odd ? std::sqrt(2.0) * std::sinh(a * x / 2) : 1.0;
          return std::array<double, 2>{std::exp(-std::cosh(a * x) / (a * a)) * peel * ser.value(0, u), 0.0};
        };
        out.push_back({E, psi});
      }
    }
  }
  return out;
}

std::vector<SeriesEigenfunction> polypot_eigenfunctions(const PolyPotParams& p) {
  if (sgn(p.epsilon) != 0) throw std::invalid_argument("polypot eigenfunctions need epsilon = 0");
  RecurrenceSystem sys = polypot_recurrence(p);
  double p1 = p.p1.get_d(), p2 = p.p2.get_d(), k0 = p.kappa0.get_d();
  std::vector<SeriesEigenfunction> out;
  for (auto& [E, ser] : truncated_series(sys, last_levels(sys, polypot_space(p.m)))) {
    // psi = g P w in x = y^2, g = exp(-p1 x - p2 x^2 / 2), P = [[1, k0 d], [0, 1]]
    Wavefunction psi = [=, ser = ser](double y) {
      double x = y * y, g = std::exp(-p1 * x - p2 * x * x / 2);
      return std::array<double, 2>{g * (ser.value(0, x) + k0 * ser.derivative(1, x)), g * ser.value(1, x)};
    };
    out.push_back({E, psi});
  }
  return out;
}

std::vector<SeriesEigenfunction> lame_eigenfunctions(const LameParams& p) {
  RecurrenceSystem sys = lame_recurrence(p);
  double k = std::sqrt(p.k2.get_d()), kappa = p.kappa().to_double();
  std::vector<SeriesEigenfunction> out;
  for (auto& [E, ser] : truncated_series(sys, last_levels(sys, lame_space(p.m)))) {
    // (u, v) = T w with T = [[1, kappa x], [0, 1]]; psi = (u, cn dn v) at x = sn^2
    Wavefunction psi = [=, ser = ser](double z) {
      JacobiValues j = jacobi(z, k);
      double x = j.sn * j.sn, v = ser.value(1, x);
      return std::array<double, 2>{ser.value(0, x) + kappa * x * v, j.cn * j.dn * v};
    };
    out.push_back({E, psi});
  }
  return out;
}

CaseCheck verify_bosehubbard(const BoseHubbardParams& p, int N, double tol) {
  if (!p.quasi_exact()) throw std::invalid_argument("bose-hubbard check needs 2M/alpha - 1 a nonnegative integer");
  std::vector<SeriesEigenfunction> funcs = bosehubbard_eigenfunctions(p);
  double shift = p.E0().get_d(), top = -shift;
  for (const auto& f : funcs) top = std::max(top, f.level - shift);
  return finish("bosehubbard", std::move(funcs), bosehubbard_problem(p, top, N), shift, tol);
}

CaseCheck verify_polypot(const PolyPotParams& p, int N, double tol) {
  std::vector<SeriesEigenfunction> funcs = polypot_eigenfunctions(p);
  double top = 0;
  for (const auto& f : funcs) top = std::max(top, f.level);
  return finish("polypot", std::move(funcs), polypot_problem(p, top, N), 0.0, tol);
}

CaseCheck verify_lame(const LameParams& p, int N, double tol) {
  return finish("lame", lame_eigenfunctions(p), lame_problem(p, N), 0.0, tol);
}

}  // namespace qes
