// Small dense matrices over exact rings.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qes/exactnum.hpp"

namespace qes {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, T(0)) {}
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!is_zero_value(x)) return false;
    return true;
  }
  T trace() const {
    T t(0);
    for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    check_same(x, y);
    Matrix r = x;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    check_same(x, y);
    Matrix r = x;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(x.r_, y.c_);
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k) {
        if (is_zero_value(x(i, k))) continue;
        for (int j = 0; j < y.c_; ++j) r(i, j) += x(i, k) * y(k, j);
      }
    return r;
  }
  friend Matrix operator*(Matrix x, const T& s) {
    for (auto& v : x.a_) v = v * s;
    return x;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }

 private:
  static void check_same(const Matrix& x, const Matrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw std::invalid_argument("matrix shape mismatch");
  }
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using QuadMatrix = Matrix<QuadExt>;

// Monic characteristic polynomial det(t I - A), Faddeev-LeVerrier.
template <class T>
Poly<T> charpoly(const Matrix<T>& A) {
  int n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("charpoly of non-square matrix");
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> M(n, n);
  for (int k = 1; k <= n; ++k) {
    Matrix<T> AM = A * M;
    for (int i = 0; i < n; ++i) AM(i, i) += c[n - k + 1];
    M = AM;
    c[n - k] = -((A * M).trace()) / T(k);
  }
  return Poly<T>(std::move(c));
}

// Fraction-free determinant for matrices of polynomials (exact divisions).
template <class T>
Poly<T> det_bareiss(Matrix<Poly<T>> M) {
  int n = M.rows();
  if (M.cols() != n) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return Poly<T>(T(1));
  Poly<T> prev(T(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (M(k, k).is_zero()) {
      int p = k + 1;
      while (p < n && M(p, k).is_zero()) ++p;
      if (p == n) return Poly<T>();
      for (int j = 0; j < n; ++j) std::swap(M(k, j), M(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        M(i, j) = exact_div(M(i, j) * M(k, k) - M(i, k) * M(k, j), prev);
    prev = M(k, k);
  }
  return sign > 0 ? M(n - 1, n - 1) : -M(n - 1, n - 1);
}

// Adjugate column j of a polynomial matrix via cofactors.
template <class T>
std::vector<Poly<T>> adjugate_column(const Matrix<Poly<T>>& M, int j) {
  int n = M.rows();
  std::vector<Poly<T>> col(n);
  if (n == 1) {
    col[0] = Poly<T>(T(1));
    return col;
  }
  for (int i = 0; i < n; ++i) {
    // adj(M)(i, j) = (-1)^{i+j} det(M without row j, column i)
    Matrix<Poly<T>> minor(n - 1, n - 1);
    for (int r = 0, rr = 0; r < n; ++r) {
      if (r == j) continue;
      for (int c = 0, cc = 0; c < n; ++c) {
        if (c == i) continue;
        minor(rr, cc++) = M(r, c);
      }
      ++rr;
    }
    Poly<T> d = det_bareiss(minor);
    col[i] = ((i + j) % 2 == 0) ? d : -d;
  }
  return col;
}

}  // namespace qes
