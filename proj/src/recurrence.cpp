#include "qes/recurrence.hpp"

#include <algorithm>
#include <stdexcept>

namespace qes {

namespace {

long ceil_div(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r.get_si();
}

QuadExt coefficient_at(const DiffOperator& A, const GenExponent& src, const GenExponent& dst) {
  QuadExt acc(0);
  for (const auto& [e, c] : A.apply_to_monomial(src))
    if (e == dst) acc += c.coeff(0);
  return acc;
}

// --- linear forms

void pad(LinearForm& f, size_t n) {
  if (f.size() < n) f.resize(n);
}

LinearForm axpy(const LinearForm& x, const QuadExt& a, const LinearForm& y) {
  LinearForm r = x;
  pad(r, y.size());
  for (size_t i = 0; i < y.size(); ++i) r[i] += y[i] * a;
  return r;
}

LinearForm times_E(const LinearForm& x) {
  LinearForm r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] * XPoly::var();
  return r;
}

bool is_zero_form(const LinearForm& f) {
  return std::all_of(f.begin(), f.end(), [](const EPoly& p) { return p.is_zero(); });
}

}  // namespace

RecurrenceSystem::RecurrenceSystem(MatrixOperator H, int dim, Grading g)
    : H_(std::move(H)), dim_(dim), grading_(std::move(g)) {
  if (dim_ < 1 || dim_ > 2) throw std::invalid_argument("recurrence dimension must be 1 or 2");
  if (static_cast<int>(grading_.offsets.size()) != dim_) throw std::invalid_argument("one offset per component");
  if (sgn(grading_.stride) <= 0) throw std::invalid_argument("stride must be positive");
}

RecurrenceBlocks RecurrenceSystem::blocks(long n) const {
  RecurrenceBlocks b{QuadMatrix(dim_, dim_), QuadMatrix(dim_, dim_), QuadMatrix(dim_, dim_)};
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      GenExponent dst = grading_.exponent(r, n);
      b.C(r, c) = coefficient_at(H_(r, c), grading_.exponent(c, n + 1), dst);
      b.A(r, c) = -coefficient_at(H_(r, c), grading_.exponent(c, n), dst);
      b.B(r, c) = -coefficient_at(H_(r, c), grading_.exponent(c, n - 1), dst);
    }
  return b;
}

long RecurrenceSystem::first_level() const {
  long f = 0;
  for (int c = 0; c < dim_; ++c) {
    long l = ceil_div(-grading_.offsets[c] / grading_.stride);
    f = c == 0 ? l : std::min(f, l);
  }
  return f;
}

bool RecurrenceSystem::scalar_leading(long n) const {
  QuadMatrix C = blocks(n).C;
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      if (r == c ? C(r, c) != C(0, 0) : !C(r, c).is_zero()) return false;
  return !C(0, 0).is_zero();
}

QuadExt RecurrenceSystem::normalization(long n) const {
  QuadExt g(1);
  for (long k = first_level(); k < n; ++k) {
    if (!scalar_leading(k)) throw std::domain_error("leading block is not a nonzero multiple of the identity");
    g *= blocks(k).C(0, 0);
  }
  return g;
}

RecurrenceBlocks RecurrenceSystem::normal_form(long n) const {
  RecurrenceBlocks b = blocks(n);
  if (!scalar_leading(n)) throw std::domain_error("leading block is not a nonzero multiple of the identity");
  QuadExt prev = n - 1 >= first_level() ? blocks(n - 1).C(0, 0) : QuadExt(1);
  b.B = b.B * prev;
  b.C = QuadMatrix::identity(dim_);
  return b;
}

namespace {

void check_banded(const MatrixOperator& H, int dim, const Grading& g) {
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      for (const auto& t : H(r, c).terms()) {
        GenExponent shift = t.power - GenExponent(t.deriv);
        if (shift.t != 0) throw std::domain_error("recurrence needs a specialized a");
        Rational lv = (g.offsets[c] + shift.q - g.offsets[r]) / g.stride;
        if (!is_integer(lv)) throw std::domain_error("operator leaves the graded lattice");
        if (abs(lv) > 1) throw std::domain_error("not three-term in this grading (level shift " + to_string(lv) + ")");
      }
}

}  // namespace

RecurrenceSystem derive_recurrence(const MatrixOperator& H, const Grading& g) {
  int dim = static_cast<int>(g.offsets.size());
  if (dim == 1 && !(H(0, 1).is_zero() && H(1, 0).is_zero() && H(1, 1).is_zero()))
    throw std::invalid_argument("one offset given for a matrix operator");
  check_banded(H, dim, g);
  return RecurrenceSystem(H, dim, g);
}

RecurrenceSystem derive_recurrence(const DiffOperator& H, const Grading& g) {
  if (g.offsets.size() != 1) throw std::invalid_argument("scalar operator takes one offset");
  return derive_recurrence(MatrixOperator(H, DiffOperator(), DiffOperator(), DiffOperator()), g);
}

EPoly Generation::evaluate(long L, int c, const std::vector<EPoly>& params) const {
  const LinearForm& f = level(L).at(c);
  EPoly acc;
  for (size_t i = 0; i < f.size() && i < params.size(); ++i) acc += f[i] * params[i];
  return acc;
}

Generation generate(const RecurrenceSystem& sys, long upto) {
  Generation g;
  const int d = sys.dimension();
  const Grading& gr = sys.grading();
  g.first_level = sys.first_level();
  if (upto < g.first_level) throw std::invalid_argument("nothing to generate");
  auto value = [&](long L, int c) -> LinearForm {
    if (L < g.first_level) return {};
    return g.values[L - g.first_level][c];
  };
  for (long L = g.first_level - 1; L < upto; ++L) {
    RecurrenceBlocks b = sys.blocks(L);
    // right-hand side (E + A) v_L + B v_{L-1}
    std::vector<LinearForm> rhs(d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        LinearForm vL = value(L, c), vP = value(L - 1, c);
        if (r == c) rhs[r] = axpy(rhs[r], QuadExt(1), times_E(vL));
        rhs[r] = axpy(rhs[r], b.A(r, c), vL);
        rhs[r] = axpy(rhs[r], b.B(r, c), vP);
      }
    }
    // unknowns at level L+1 with nonnegative exponent
    std::vector<int> cols;
    for (int c = 0; c < d; ++c)
      if (sgn(gr.exponent(c, L + 1).q) >= 0) cols.push_back(c);
    // row reduce [C | rhs]
    std::vector<std::vector<QuadExt>> M(d, std::vector<QuadExt>(cols.size()));
    for (int r = 0; r < d; ++r)
      for (size_t j = 0; j < cols.size(); ++j) M[r][j] = b.C(r, cols[j]);
    std::vector<int> pivot_col(d, -1);
    int row = 0;
    for (size_t j = 0; j < cols.size() && row < d; ++j) {
      int p = -1;
      for (int r = row; r < d; ++r)
        if (!M[r][j].is_zero()) {
          p = r;
          break;
        }
      if (p < 0) continue;
      std::swap(M[p], M[row]);
      std::swap(rhs[p], rhs[row]);
      QuadExt inv = M[row][j].inverse();
      for (auto& x : M[row]) x *= inv;
      rhs[row] = axpy(LinearForm{}, inv, rhs[row]);
      for (int r = 0; r < d; ++r) {
        if (r == row || M[r][j].is_zero()) continue;
        QuadExt f = -M[r][j];
        for (size_t k = 0; k < cols.size(); ++k) M[r][k] += f * M[row][k];
        rhs[r] = axpy(rhs[r], f, rhs[row]);
      }
      pivot_col[row] = static_cast<int>(j);
      ++row;
    }
    std::vector<LinearForm> next(d);
    std::vector<bool> is_pivot(cols.size(), false);
    for (int r = 0; r < row; ++r) is_pivot[pivot_col[r]] = true;
    for (size_t j = 0; j < cols.size(); ++j) {
      if (is_pivot[j]) continue;
      LinearForm f(g.parameters + 1);
      f[g.parameters] = EPoly(QuadExt(1));
      next[cols[j]] = f;
      g.parameter_names.push_back("component " + std::to_string(cols[j]) + " x^(" +
                                  gr.exponent(cols[j], L + 1).str() + ")");
      ++g.parameters;
    }
    for (int r = 0; r < row; ++r) {
      LinearForm f = rhs[r];
      for (size_t j = 0; j < cols.size(); ++j)
        if (!is_pivot[j] && !M[r][j].is_zero()) f = axpy(f, -M[r][j], next[cols[j]]);
      next[cols[pivot_col[r]]] = f;
    }
    for (int r = row; r < d; ++r)
      if (!is_zero_form(rhs[r])) g.constraints.push_back(rhs[r]);
    for (auto& f : next) pad(f, g.parameters);
    g.values.push_back(next);
  }
  for (auto& lv : g.values)
    for (auto& f : lv) pad(f, g.parameters);
  for (auto& f : g.constraints) pad(f, g.parameters);
  return g;
}

std::vector<long> last_levels(const RecurrenceSystem& sys, const Basis& V) {
  std::vector<long> last;
  const Grading& gr = sys.grading();
  for (int c = 0; c < sys.dimension(); ++c) {
    long L = ceil_div(-gr.offsets[c] / gr.stride);
    while (std::find(V.begin(), V.end(), BasisElement{c, gr.exponent(c, L)}) != V.end()) ++L;
    last.push_back(L - 1);
  }
  long count = 0;
  for (int c = 0; c < sys.dimension(); ++c)
    count += last[c] - ceil_div(-gr.offsets[c] / gr.stride) + 1;
  if (count != static_cast<long>(V.size())) throw std::domain_error("space is not a union of graded intervals");
  return last;
}

TruncationResult truncation_polynomial(const RecurrenceSystem& sys, const std::vector<long>& last) {
  TruncationResult t;
  const int d = sys.dimension();
  if (static_cast<int>(last.size()) != d) throw std::invalid_argument("one last level per component");
  long top = 0;
  for (int c = 0; c < d; ++c) {
    t.boundary.push_back(last[c] + 1);
    top = c == 0 ? last[c] + 1 : std::max(top, last[c] + 1);
  }
  t.generation = generate(sys, top);
  const Generation& g = t.generation;
  std::vector<LinearForm> rows;
  for (int c = 0; c < d; ++c) rows.push_back(g.level(t.boundary[c])[c]);
  for (const auto& f : g.constraints) rows.push_back(f);
  if (static_cast<int>(rows.size()) != g.parameters)
    throw std::domain_error("truncation conditions (" + std::to_string(rows.size()) + ") do not match free parameters (" +
                            std::to_string(g.parameters) + ")");
  int n = g.parameters;
  t.conditions = Matrix<EPoly>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.conditions(i, j) = rows[i][j];
  t.determinant = det_bareiss(t.conditions);
  return t;
}

FactorizationReport factorization_check(const RecurrenceSystem& sys, long N, int J) {
  FactorizationReport rep;
  if (sys.dimension() != 1) throw std::invalid_argument("scalar factorization needs a scalar recurrence");
  Generation g = generate(sys, N + J);
  if (g.parameters != 1) throw std::domain_error("scalar factorization needs exactly one free parameter");
  std::vector<EPoly> one{EPoly(QuadExt(1))};
  rep.divisor = g.evaluate(N, 0, one);
  if (rep.divisor.degree() < 1) {
    rep.note = "P_N is constant";
    return rep;
  }
  rep.holds = true;
  for (int j = 1; j <= J; ++j) {
    bool ok = divmod(g.evaluate(N + j, 0, one), rep.divisor).second.is_zero();
    rep.divisible.push_back(ok);
    rep.holds = rep.holds && ok;
  }
  return rep;
}

FactorizationReport factorization_check(const RecurrenceSystem& sys, const std::vector<long>& last, int J) {
  FactorizationReport rep;
  TruncationResult t = truncation_polynomial(sys, last);
  rep.divisor = t.determinant;
  if (rep.divisor.degree() < 1) {
    rep.note = "truncation determinant is constant";
    return rep;
  }
  int n = t.conditions.rows();
  std::vector<EPoly> params;
  for (int j = 0; j < n && params.empty(); ++j) {
    auto col = adjugate_column(t.conditions, j);
    if (std::any_of(col.begin(), col.end(), [](const EPoly& p) { return !p.is_zero(); })) params = col;
  }
  if (params.empty()) {
    rep.note = "adjugate vanishes";
    return rep;
  }
  long lo = *std::min_element(t.boundary.begin(), t.boundary.end());
  long hi = *std::max_element(t.boundary.begin(), t.boundary.end()) + J;
  Generation g = generate(sys, hi);
  rep.holds = true;
  for (long L = lo; L <= hi; ++L)
    for (int c = 0; c < sys.dimension(); ++c) {
      if (L < t.boundary[c]) continue;
      bool ok = divmod(g.evaluate(L, c, params), rep.divisor).second.is_zero();
      rep.divisible.push_back(ok);
      rep.holds = rep.holds && ok;
    }
  return rep;
}

// ------------------------------------------------------------ cases

RecurrenceSystem lame_recurrence(const LameParams& p) {
  return derive_recurrence(build_lame_algebraic(p), Grading{{0, 0}, 1});
}

QuadMatrix lame_printed_A(const LameParams& p, long n) {
  QuadMatrix A(2, 2);
  QuadExt k = p.kappa();
  Rational s = p.k2 + 1, dl = p.delta;
  A(0, 0) = QuadExt(-s * (4 * n * n + dl / 2));
  A(0, 1) = -k * QuadExt(-8 * n + dl + 4 * p.m + 1);
  A(1, 0) = -k * QuadExt(dl + 4 * p.m + 3);
  A(1, 1) = QuadExt(-s * (4 * n * n + 2 * n + 1 - dl / 2));
  return A;
}

QuadMatrix lame_printed_B(const LameParams& p, long n) {
  QuadMatrix B(2, 2);
  Rational base = 4 * p.k2 * (n - p.m - 1);
  B(0, 0) = QuadExt(base * (n + p.m - frac(1, 2)));
  B(1, 1) = QuadExt(base * (n + p.m + frac(3, 2)));
  return B;
}

Matrix<EPoly> lame_printed_P1(const LameParams& p) {
  Matrix<EPoly> P(2, 2);
  QuadExt k = p.kappa();
  Rational s = p.k2 + 1, dl = p.delta;
  EPoly E = EPoly::var();
  P(0, 0) = E - EPoly(QuadExt(dl / 2 * s));
  P(0, 1) = EPoly(-k * QuadExt(dl + 4 * p.m + 1));
  P(1, 0) = EPoly(-k * QuadExt(dl + 4 * p.m + 3));
  P(1, 1) = E - EPoly(QuadExt(4 * s * (1 - dl / 2)));
  return P;
}

RecurrenceSystem polypot_recurrence(const PolyPotParams& p) {
  return derive_recurrence(build_polypot_algebraic(p), Grading{{0, 1}, 1});
}

QuadMatrix polypot_printed_B(const PolyPotParams& p, long n) {
  QuadMatrix B(2, 2);
  B(0, 0) = QuadExt(8 * p.p2 * (n - p.m - 1));
  B(1, 1) = QuadExt(8 * p.p2 * (n - p.m));
  return B;
}

RecurrenceSystem bosehubbard_recurrence(const BoseHubbardParams& p, int parity) {
  if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
  return derive_recurrence(bosehubbard_u_form(p), Grading{{Rational(parity)}, 2});
}

long bosehubbard_truncation_level(const BoseHubbardParams& p, int parity) {
  if (!p.quasi_exact()) return -1;
  Rational nstar = p.c() - 2 * p.s + 2;
  long n = to_long(nstar);
  if ((n - parity) % 2 != 0) return -1;
  long N = (n - parity) / 2;
  return N >= 1 ? N : -1;
}

std::pair<Rational, Rational> bosehubbard_printed_r1(const BoseHubbardParams& p, long n) {
  const Rational &a = p.alpha, &s = p.s, &M = p.M;
  Rational an = n * n * a * a / 4 + s * n * a * a + n + s * s - M * M - 2 * M / a;
  Rational bn = Rational(n * (n - 1)) * (2 * M / a - 1 / (a * a) - n - 2);
  return {an, bn};
}

std::pair<Rational, Rational> bosehubbard_derived_r1(const BoseHubbardParams& p, long n) {
  int parity = static_cast<int>(n % 2);
  RecurrenceSystem sys = bosehubbard_recurrence(p, parity);
  long j = (n - parity) / 2;
  RecurrenceBlocks b = sys.blocks(j);
  // C v_{j+1} = (E + A) v_j + B v_{j-1} with v = R/n!
  Rational lambda = p.alpha * p.alpha / 4 * (n + 2) * (n + 1) / b.C(0, 0).to_rational();
  if (lambda != 1) throw std::domain_error("u-chain leading coefficient is not (alpha^2/4)(n+1)(n+2)");
  return {b.A(0, 0).to_rational(), Rational(n * (n - 1)) * b.B(0, 0).to_rational()};
}

std::pair<Rational, Rational> bosehubbard_printed_pq(const BoseHubbardParams& p, int parity, long j) {
  const Rational &a = p.alpha, &s = p.s, &M = p.M;
  Rational a2 = a * a, cp = 2 * M / a - 1 / a2, tail = s * s - M * M - 2 * M / a;
  Rational aj, bj;
  if (parity == 0) {
    aj = a2 * (j * j - 2 * j + 1 + 2 * j * s - 2 * s) + 2 * j - 2 + tail;
    bj = Rational(2 * (j - 1) * (2 * j - 3)) * (cp - 2 * j);
  } else {
    aj = a2 * (j * j - j + frac(1, 4) + 2 * j * s - 2 * s) + 2 * j - 1 + tail;
    bj = Rational(2 * (j - 1) * (2 * j - 1)) * (cp - 2 * j - 1);
  }
  return {aj, a2 / 4 * bj};
}

}  // namespace qes
