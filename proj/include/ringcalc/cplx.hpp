#pragma once

// Minimal complex template over a selectable real type. double and long
// double route through <cmath>; __float128 gets local sqrt (Newton from a
// long double seed) and sin/cos/atan (Taylor with Machin pi), so no
// libquadmath link is needed. Quadrature at 113-bit precision keeps the
// rounding floor far below the geometric aliasing error of the circle rule.

#include <cmath>
#include <cstdint>

namespace ringcalc {

using qfloat = __float128;

namespace realmath {

inline double r_sqrt(double x) { return std::sqrt(x); }
inline long double r_sqrt(long double x) { return std::sqrt(x); }
inline qfloat r_sqrt(qfloat x) {
  if (x <= 0) return 0;
  qfloat y = (qfloat)std::sqrt((long double)x);
  for (int i = 0; i < 3; ++i) y = (y + x / y) / 2;
  return y;
}

inline double r_abs(double x) { return std::fabs(x); }
inline long double r_abs(long double x) { return std::fabs(x); }
inline qfloat r_abs(qfloat x) { return x < 0 ? -x : x; }

// atan via Taylor; callers keep |x| <= 1/5 so convergence is fast
template <typename R>
inline R atan_taylor(R x) {
  R x2 = x * x, term = x, acc = x;
  for (int k = 1; k < 60; ++k) {
    term *= x2;
    R add = term / (R)(2 * k + 1);
    acc += (k % 2) ? -add : add;
    if (r_abs(add) < r_abs(acc) * (R)1e-40) break;
  }
  return acc;
}

template <typename R>
inline R pi_value() {
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
  static const R pi = (R)16 * atan_taylor((R)1 / (R)5) - (R)4 * atan_taylor((R)1 / (R)239);
  return pi;
}

template <typename R>
inline void sincos_taylor(R x, R& s, R& c) {
  // range-reduce to |x| <= pi/4 using quadrant index
  const R pi = pi_value<R>();
  const R half_pi = pi / 2;
  long long q = (long long)((double)(x / half_pi) + ((x >= 0) ? 0.5 : -0.5));
  R r = x - (R)q * half_pi;
  R r2 = r * r;
  R sr = r, term = r;
  for (int k = 1; k < 40; ++k) {
    term *= -r2 / (R)((2 * k) * (2 * k + 1));
    sr += term;
    if (r_abs(term) < (R)1e-40) break;
  }
  R cr = 1, cterm = 1;
  for (int k = 1; k < 40; ++k) {
    cterm *= -r2 / (R)((2 * k - 1) * (2 * k));
    cr += cterm;
    if (r_abs(cterm) < (R)1e-40) break;
  }
  switch (((q % 4) + 4) % 4) {
    case 0: s = sr; c = cr; break;
    case 1: s = cr; c = -sr; break;
    case 2: s = -sr; c = -cr; break;
    default: s = -cr; c = sr; break;
  }
}

inline void r_sincos(double x, double& s, double& c) { s = std::sin(x); c = std::cos(x); }
inline void r_sincos(long double x, long double& s, long double& c) { s = std::sin(x); c = std::cos(x); }
inline void r_sincos(qfloat x, qfloat& s, qfloat& c) { sincos_taylor(x, s, c); }

}  // namespace realmath

template <typename Real>
struct Cplx {
  Real re = 0;
  Real im = 0;

  Cplx() = default;
  Cplx(Real r) : re(r), im(0) {}
  Cplx(Real r, Real i) : re(r), im(i) {}

  friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
  friend Cplx operator*(const Cplx& a, const Cplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cplx operator/(const Cplx& a, const Cplx& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Cplx& operator+=(const Cplx& o) { return *this = *this + o; }
  Cplx& operator-=(const Cplx& o) { return *this = *this - o; }
  Cplx& operator*=(const Cplx& o) { return *this = *this * o; }

  Cplx conj() const { return {re, -im}; }
  Real abs2() const { return re * re + im * im; }
  Real abs() const { return realmath::r_sqrt(abs2()); }
};

// principal branch, cut along the negative real axis
template <typename Real>
inline Cplx<Real> cplx_sqrt(const Cplx<Real>& z) {
  Real m = z.abs();
  if (m == 0) return {};
  Real u = realmath::r_sqrt((m + realmath::r_abs(z.re)) / 2);
  Real v = z.im / (2 * u);
  if (z.re >= 0) return {u, v};
  Real s = (z.im >= 0) ? (Real)1 : (Real)-1;
  return {realmath::r_abs(v), s * u};
}

template <typename Real>
inline Cplx<Real> unit_circle_node(int j, int n) {
  using namespace realmath;
  Real theta = (Real)2 * pi_value<Real>() * (Real)j / (Real)n;
  Real s, c;
  r_sincos(theta, s, c);
  return {c, s};
}

template <typename Real>
inline double to_double(Real x) { return (double)x; }

}  // namespace ringcalc
