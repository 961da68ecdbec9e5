#pragma once

// Deterministic test-matrix construction: A = V D V^{-1} with a unit
// upper-triangular integer V (entries in [-3,3]) whose inverse is exact, so
// conjugation oracles need no eigensolver. Spectrum samplers keep the
// eigenvalues off the relevant excluded set by a stated margin and bound the
// geometric decay rate of the circle-rule integrand so quadrature error is
// predictable.

#include "ringcalc/spectral.hpp"

namespace ringcalc {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return (double)(next() >> 11) * 0x1.0p-53; }
  // inclusive integer range
  int range(int lo, int hi) { return lo + (int)(next() % (std::uint64_t)(hi - lo + 1)); }
};

template <typename Real>
struct Fixture {
  Matrix<Cplx<Real>> a;
  Matrix<Cplx<Real>> v;
  Matrix<Cplx<Real>> v_inv;
  std::vector<Cplx<Real>> eigs;
};

// unit upper-triangular integer V; V^{-1} by the finite nilpotent series
template <typename Real>
Matrix<Cplx<Real>> random_unit_upper(std::size_t n, SplitMix64& rng) {
  auto v = Matrix<Cplx<Real>>::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) v(i, j) = Cplx<Real>((Real)rng.range(-3, 3));
  return v;
}

template <typename Real>
Matrix<Cplx<Real>> unit_upper_inverse(const Matrix<Cplx<Real>>& v) {
  std::size_t n = v.dim();
  auto nmat = v - Matrix<Cplx<Real>>::identity(n);
  auto acc = Matrix<Cplx<Real>>::identity(n);
  auto pw = Matrix<Cplx<Real>>::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    pw = pw * nmat;
    acc = (k % 2) ? acc - pw : acc + pw;
  }
  return acc;
}

template <typename Real>
Fixture<Real> make_fixture(std::size_t n, const std::vector<Cplx<Real>>& eigs,
                           std::uint64_t seed) {
  if (eigs.size() != n) throw std::invalid_argument("fixture needs n eigenvalues");
  SplitMix64 rng(seed);
  Fixture<Real> f;
  f.v = random_unit_upper<Real>(n, rng);
  f.v_inv = unit_upper_inverse(f.v);
  f.eigs = eigs;
  Matrix<Cplx<Real>> d(n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = eigs[i];
  f.a = f.v * d * f.v_inv;
  return f;
}

template <typename Real>
OracleData<ComplexMatrixRing<Real>> fixture_oracle(const Fixture<Real>& f) {
  return {f.v, f.v_inv, f.eigs};
}

// exact expected value V f(D) V^{-1}
template <typename Real>
Matrix<Cplx<Real>> fixture_expected(const Fixture<Real>& f, SpectralFn fn) {
  std::size_t n = f.a.dim();
  Matrix<Cplx<Real>> d(n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = scalar_spectral_fn(fn, f.eigs[i]);
  return f.v * d * f.v_inv;
}

// decay rate of the circle-rule coefficients for one eigenvalue
template <typename Real>
double integrand_decay_rate(SpectralFn fn, const Cplx<Real>& lam) {
  auto mag = [](const Cplx<Real>& c) { return (double)c.abs(); };
  const Cplx<Real> one((Real)1);
  switch (fn) {
    case SpectralFn::Sgn: {
      double w = mag((one - lam) / (one + lam));
      return std::min(w, 1.0 / w);
    }
    case SpectralFn::Sqrt: {
      auto mu = cplx_sqrt(lam);
      return mag((mu - one) / (mu + one));
    }
    case SpectralFn::Idem: {
      double w = mag(lam / (one - lam));
      return std::min(w, 1.0 / w);
    }
    default: {
      auto x = scalar_spectral_fn(SpectralFn::Fsqrt, lam);
      double w = mag(x / (one - x));
      return std::min(w, 1.0 / w);
    }
  }
}

// Eigenvalues off the excluded set of fn by at least `margin`, with the
// circle-rule decay rate capped at `max_rate` (rejection sampling).
template <typename Real>
std::vector<Cplx<Real>> sample_spectrum(SpectralFn fn, std::size_t n, double margin,
                                        double max_rate, SplitMix64& rng) {
  std::vector<Cplx<Real>> out;
  while (out.size() < n) {
    double re = 0, im = 0;
    switch (fn) {
      case SpectralFn::Sgn: {
        double side = rng.uniform() < 0.5 ? -1.0 : 1.0;
        re = side * (margin + 0.1 + 1.6 * rng.uniform());
        im = -1.0 + 2.0 * rng.uniform();
        break;
      }
      case SpectralFn::Sqrt:
        re = margin + 0.1 + 2.0 * rng.uniform();
        im = -0.9 + 1.8 * rng.uniform();
        break;
      case SpectralFn::Idem: {
        double side = rng.uniform() < 0.5 ? -1.0 : 1.0;
        re = 0.5 + side * (margin + 0.05 + 1.2 * rng.uniform());
        im = -0.7 + 1.4 * rng.uniform();
        break;
      }
      default:
        re = 0.25 - (margin + 0.05 + 1.4 * rng.uniform());
        im = -0.7 + 1.4 * rng.uniform();
        break;
    }
    Cplx<Real> lam((Real)re, (Real)im);
    if (scalar_class_margin(fn, lam) < margin) continue;
    if (integrand_decay_rate(fn, lam) > max_rate) continue;
    out.push_back(lam);
  }
  return out;
}

}  // namespace ringcalc
