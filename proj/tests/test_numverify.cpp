#include <gtest/gtest.h>

#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/jacobi_elliptic.hpp>
#include <cmath>

#include "qes/numverify.hpp"

using namespace qes;

TEST(Elliptic, AgreesWithBoost) {
  for (double k2 : {0.1, 0.5, 0.9, 0.999}) {
    double k = std::sqrt(k2);
    EXPECT_NEAR(elliptic_K(k), boost::math::ellint_1(k), 1e-13);
    for (double z = -3.0; z <= 7.0; z += 0.37) {
      JacobiValues j = jacobi(z, k);
      EXPECT_NEAR(j.sn, boost::math::jacobi_sn(k, z), 1e-12) << k2 << " " << z;
      EXPECT_NEAR(j.cn, boost::math::jacobi_cn(k, z), 1e-12) << k2 << " " << z;
      EXPECT_NEAR(j.dn, boost::math::jacobi_dn(k, z), 1e-12) << k2 << " " << z;
    }
  }
}

TEST(Elliptic, Degenerations) {
  JacobiValues z0 = jacobi(0, 0.6);
  EXPECT_EQ(z0.sn, 0.0);
  EXPECT_DOUBLE_EQ(z0.cn, 1.0);
  EXPECT_DOUBLE_EQ(z0.dn, 1.0);
  JacobiValues t = jacobi(0.8, 0);
  EXPECT_DOUBLE_EQ(t.sn, std::sin(0.8));
  JacobiValues h = jacobi(0.8, 1);
  EXPECT_DOUBLE_EQ(h.sn, std::tanh(0.8));
  EXPECT_NEAR(elliptic_K(0), M_PI / 2, 1e-15);
  EXPECT_THROW(elliptic_K(1), std::invalid_argument);
}

TEST(Elliptic, QuarterPeriodValues) {
  for (double k2 : {0.1, 0.9}) {
    double k = std::sqrt(k2), K = elliptic_K(k);
    JacobiValues j = jacobi(K, k);
    EXPECT_NEAR(j.sn, 1, 1e-14);
    EXPECT_NEAR(j.dn, std::sqrt(1 - k2), 1e-14);
    EXPECT_NEAR(jacobi(3 * K, k).dn, std::sqrt(1 - k2), 1e-13);
  }
}

TEST(Elliptic, Periodicity) {
  double k = std::sqrt(0.5), K = elliptic_K(k);
  for (double z : {0.1, 0.9, 2.3}) {
    EXPECT_NEAR(jacobi(z + 4 * K, k).sn, jacobi(z, k).sn, 1e-12);
    EXPECT_NEAR(jacobi(z + 4 * K, k).cn, jacobi(z, k).cn, 1e-12);
    EXPECT_NEAR(jacobi(z + 2 * K, k).dn, jacobi(z, k).dn, 1e-12);
    EXPECT_NEAR(jacobi(z + 2 * K, k).sn, -jacobi(z, k).sn, 1e-12);
  }
}

TEST(Band, CountBelowMatchesDense) {
  // random-ish symmetric pentadiagonal matrix against the dense solver
  const int n = 40, kd = 2;
  BandMatrix B(n, kd);
  std::vector<double> dense(n * n, 0.0);
  unsigned s = 12345;
  auto rnd = [&] {
    s = s * 1103515245u + 12345u;
    return ((s >> 8) % 2001) / 1000.0 - 1.0;
  };
  for (int j = 0; j < n; ++j)
    for (int i = j; i <= std::min(n - 1, j + kd); ++i) {
      double v = i == j ? 4 * rnd() : rnd();
      B.at(i, j) = v;
      dense[i * n + j] = dense[j * n + i] = v;
    }
  std::vector<double> ev = dense_eigenvalues(dense, n);
  std::vector<double> low = band_lowest(B, 10);
  for (int i = 0; i < 10; ++i) EXPECT_NEAR(low[i], ev[i], 1e-11);
  EXPECT_EQ(B.count_below(ev[5] + 1e-8), 6);
}

TEST(Dense, KnownSpectrum) {
  // tridiag(-1, 2, -1) of size n: 2 - 2 cos(j pi / (n + 1))
  const int n = 12;
  std::vector<double> a(n * n, 0.0);
  for (int i = 0; i < n; ++i) {
    a[i * n + i] = 2;
    if (i + 1 < n) a[i * n + i + 1] = a[(i + 1) * n + i] = -1;
  }
  auto ev = dense_eigenvalues(a, n);
  for (int j = 1; j <= n; ++j) EXPECT_NEAR(ev[j - 1], 2 - 2 * std::cos(j * M_PI / (n + 1)), 1e-13);
  a[1] = 5;
  EXPECT_THROW(dense_eigenvalues(a, n), std::invalid_argument);
}

TEST(Grid, PeriodicAssemblyKeepsBand) {
  // free particle on a ring of length 2 pi: levels 0, 1, 1, 4, 4
  GridProblem g;
  g.a = 0;
  g.b = 2 * M_PI;
  g.N = 400;
  g.bc = Boundary::Periodic;
  g.V = [](double) { return std::array<double, 3>{0, 0, 0}; };
  BandMatrix H = assemble(g);
  EXPECT_EQ(H.bandwidth(), 2);
  SpectrumResult r = solve_spectrum(g, 5);
  std::vector<double> want{0, 1, 1, 4, 4};
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(r.values[i], want[i], 1e-7);
}

TEST(Grid, HarmonicOscillator) {
  SpectrumResult r = solve_spectrum(harmonic_problem(4000), 3);
  EXPECT_NEAR(r.values[0], 1, 1e-6);
  EXPECT_NEAR(r.values[1], 3, 1e-6);
  EXPECT_NEAR(r.values[2], 5, 1e-6);
  EXPECT_THROW(solve_spectrum(harmonic_problem(100), 3), std::invalid_argument);
}

TEST(Grid, SecondOrderConvergence) {
  for (double order : convergence_order(harmonic_problem(400), 3)) EXPECT_NEAR(order, 2.0, 0.05);
}

TEST(Grid, RayleighQuotientOfExactEigenfunction) {
  // first excited state x exp(-x^2/2) of -d^2 + x^2
  GridProblem g = harmonic_problem(400);
  Wavefunction psi = [](double x) { return std::array<double, 2>{x * std::exp(-x * x / 2), 0}; };
  // second-order error: halving h divides it by four
  double e1 = 3 - rayleigh_quotient(g, psi), e2 = 3 - rayleigh_quotient(refined(g), psi);
  EXPECT_NEAR(e1 / e2, 4, 0.05);
  EXPECT_NEAR(rayleigh_extrapolated(g, psi), 3, 1e-6);
}

TEST(Compare, IdenticalListsHaveZeroResiduals) {
  CompareReport r = compare({1, 2, 3}, {1, 2, 3}, 0, 1e-9);
  EXPECT_TRUE(r.all_matched);
  for (double x : r.residuals) EXPECT_EQ(x, 0.0);
}

TEST(Compare, SubsetAndShift) {
  CompareReport r = compare({5, 7}, {0, 2, 3, 4, 6}, 3, 1e-9);
  EXPECT_TRUE(r.all_matched);
  EXPECT_EQ(r.match, (std::vector<int>{1, 3}));
  CompareReport bad = compare({5, 100}, {2}, 3, 1e-9);
  EXPECT_FALSE(bad.all_matched);
  EXPECT_EQ(bad.unmatched, std::vector<int>{1});
}

TEST(Cases, BoseHubbardLevels) {
  BoseHubbardParams b;
  CaseCheck c = verify_bosehubbard(b, 800);
  ASSERT_EQ(c.algebraic.size(), 3u);  // c + 1 levels
  EXPECT_TRUE(c.report.all_matched);
  EXPECT_NEAR(c.algebraic[1], 2.25, 1e-12);
  EXPECT_TRUE(c.rayleigh_ok);
}

TEST(Cases, PolypotLevels) {
  PolyPotParams p;
  p.kappa0 = frac(1, 2);
  CaseCheck c = verify_polypot(p, 800);
  EXPECT_EQ(c.algebraic.size(), 4u);
  EXPECT_TRUE(c.report.all_matched);
  EXPECT_TRUE(c.rayleigh_ok);
}

TEST(Cases, PolypotEigenfunctionsWithLinearTerm) {
  // p1 != 0 is outside the printed closed form but inside the pipeline
  PolyPotParams p;
  p.m = 3;
  p.p1 = frac(1, 3);
  p.kappa0 = frac(1, 2);
  CaseCheck c = verify_polypot(p, 800);
  EXPECT_EQ(c.algebraic.size(), 6u);
  EXPECT_TRUE(c.report.all_matched);
  EXPECT_TRUE(c.rayleigh_ok);
}

TEST(Cases, LameLevels) {
  LameParams p;
  p.m = 1;
  p.delta = frac(1, 2);
  p.k2 = frac(1, 3);
  CaseCheck c = verify_lame(p, 800);
  EXPECT_EQ(c.algebraic.size(), 4u);
  EXPECT_TRUE(c.report.all_matched);
  EXPECT_TRUE(c.rayleigh_ok);
  for (size_t i = 0; i < c.algebraic.size(); ++i) EXPECT_NEAR(c.rayleigh[i], c.algebraic[i], 1e-6);
}
