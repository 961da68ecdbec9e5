#pragma once

// Dense square matrices over an arbitrary scalar (complex of any real type,
// exact rationals). Desk scale: sizes stay small, Gaussian elimination with
// partial pivoting is plenty.

#include <cstddef>
#include <optional>
#include <vector>

#include "ringcalc/cplx.hpp"
#include "ringcalc/rational.hpp"

namespace ringcalc {

namespace scalar_ops {

template <typename Real>
inline double magnitude(const Cplx<Real>& x) { return (double)x.abs(); }
inline double magnitude(const Rational& x) { return std::fabs(x.to_double()); }

template <typename Real>
inline bool is_zero(const Cplx<Real>& x) { return x.re == 0 && x.im == 0; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

}  // namespace scalar_ops

template <typename T>
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t dim() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix r(x.n_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    Matrix r(x.n_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& x) {
    Matrix r(x.n_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = -x.a_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const T& xik = x(i, k);
        if (scalar_ops::is_zero(xik)) continue;
        for (std::size_t j = 0; j < x.n_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  Matrix scaled(const T& s) const {
    Matrix r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
  }

  // max absolute row sum
  double row_sum_norm() const {
    double best = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      double s = 0;
      for (std::size_t j = 0; j < n_; ++j) s += scalar_ops::magnitude((*this)(i, j));
      if (s > best) best = s;
    }
    return best;
  }

  // Gauss-Jordan with partial pivoting; nullopt on a (numerically) singular pivot
  std::optional<Matrix> try_invert() const {
    std::size_t n = n_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      double best = scalar_ops::magnitude(a(col, col));
      for (std::size_t i = col + 1; i < n; ++i) {
        double m = scalar_ops::magnitude(a(i, col));
        if (m > best) {
          best = m;
          piv = i;
        }
      }
      if (scalar_ops::is_zero(a(piv, col))) return std::nullopt;
      if (piv != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(piv, j), a(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      }
      T d = a(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) = a(col, j) / d;
        inv(col, j) = inv(col, j) / d;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || scalar_ops::is_zero(a(i, col))) continue;
        T f = a(i, col);
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) = a(i, j) - f * a(col, j);
          inv(i, j) = inv(i, j) - f * inv(col, j);
        }
      }
    }
    return inv;
  }

  const std::vector<T>& data() const { return a_; }
  std::vector<T>& data() { return a_; }

private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

}  // namespace ringcalc
