#pragma once

// Named transformation kernels: truncated power series in t whose
// coefficients are Laurent data in z, stored as exact coefficient rules
// (t-degree, z-exponent) -> rational. The closed-form rational functions
// appear only in documentation strings; computation always goes through the
// rules so that everything stays exact and half-usage is explicit.
//
//   Poisson              P(t,z)  = (1-t^2)/((1-tz)(1-tz^{-1}))        = sum t^{|s|} z^s
//   HilbertPoisson       H(t,z)  = t(z-z^{-1})/((1-tz)(1-tz^{-1}))    = sum sgn(s) t^{|s|} z^s
//   ShiftedOddPoisson    L(t,z)  = (1-t)(1+z)/((1-tz)(1-tz^{-1}))     = sum t^s z^{-s} + sum t^s z^{s+1}
//   VariantRegularization R~(t,z) = (1+t)t(1-z)(1-z^{-1})/(2(1-tz)(1-tz^{-1}))
//   VariantHilbertPoisson H~(t,z) = (1+t)/2 * H(t,z)
//   OrdinaryRegularization R(t,z) = t(1-z)(1-z^{-1})/((1-tz)(1-tz^{-1}))
//   HilbertTwoVar        [ (z+w)/(z-w) ] = sum sgn(s) w^s z^{-s}

#include <map>
#include <utility>

#include "ringcalc/laurent.hpp"

namespace ringcalc {

enum class KernelKind {
  Poisson,
  HilbertPoisson,
  ShiftedOddPoisson,
  VariantRegularization,
  VariantHilbertPoisson,
  OrdinaryRegularization,
  HilbertTwoVar,
};

inline const char* kernel_name(KernelKind k) {
  switch (k) {
    case KernelKind::Poisson: return "poisson";
    case KernelKind::HilbertPoisson: return "hilbert_poisson";
    case KernelKind::ShiftedOddPoisson: return "shifted_odd_poisson";
    case KernelKind::VariantRegularization: return "variant_regularization";
    case KernelKind::VariantHilbertPoisson: return "variant_hilbert_poisson";
    case KernelKind::OrdinaryRegularization: return "ordinary_regularization";
    default: return "hilbert_two_var";
  }
}

struct TransformationKernel {
  KernelKind kind = KernelKind::Poisson;
  int t_order = 24;  // T_max
  int z_window = 24;

  bool needs_half() const {
    return kind == KernelKind::VariantRegularization || kind == KernelKind::VariantHilbertPoisson;
  }
  // the ordinary regularization kernel lives in the wrong ring reading for
  // the t -> 1 limit; kept for comparison only
  bool algebraically_awkward() const { return kind == KernelKind::OrdinaryRegularization; }
};

namespace detail {
inline int sgn_int(int s) { return s > 0 ? 1 : (s < 0 ? -1 : 0); }
inline int abs_int(int s) { return s < 0 ? -s : s; }
}  // namespace detail

// exact coefficient of t^d z^s (HilbertTwoVar: coefficient of w^d z^s)
inline Rational kernel_coeff(KernelKind kind, int d, int s) {
  using detail::abs_int;
  using detail::sgn_int;
  switch (kind) {
    case KernelKind::Poisson:
      return (d >= 0 && d == abs_int(s)) ? Rational(1) : Rational(0);
    case KernelKind::HilbertPoisson:
      return (d >= 0 && d == abs_int(s)) ? Rational(sgn_int(s)) : Rational(0);
    case KernelKind::VariantHilbertPoisson: {
      if (d == abs_int(s) || d == abs_int(s) + 1) return Rational(sgn_int(s), 2);
      return Rational(0);
    }
    case KernelKind::ShiftedOddPoisson: {
      if (s <= 0 && d == -s) return Rational(1);
      if (s >= 1 && d == s - 1) return Rational(1);
      return Rational(0);
    }
    case KernelKind::VariantRegularization: {
      if (s == 0) return d == 1 ? Rational(1) : Rational(0);
      if (d == abs_int(s) + 1) return Rational(1, 2);
      if (d == abs_int(s)) return Rational(-1, 2);
      return Rational(0);
    }
    case KernelKind::OrdinaryRegularization: {
      // t(2-z-z^{-1}) P(t,z)/(1-t^2), expanded in powers of t
      auto A = [](int deg, int sigma) {
        int a = detail::abs_int(sigma);
        return (deg >= a + 1 && (deg - a - 1) % 2 == 0) ? 1 : 0;
      };
      if (d < 0) return Rational(0);
      return Rational(2 * A(d, s) - A(d, s - 1) - A(d, s + 1));
    }
    default:  // HilbertTwoVar: sum_s sgn(s) w^s z^{-s}
      return (s == -d) ? Rational(sgn_int(d)) : Rational(0);
  }
}

// dense rule table over the truncation grid (w-degree grid for HilbertTwoVar)
inline std::map<std::pair<int, int>, Rational> kernel_coefficients(const TransformationKernel& k) {
  std::map<std::pair<int, int>, Rational> out;
  int dlo = (k.kind == KernelKind::HilbertTwoVar) ? -k.z_window : 0;
  int dhi = (k.kind == KernelKind::HilbertTwoVar) ? k.z_window : k.t_order;
  for (int d = dlo; d <= dhi; ++d)
    for (int s = -k.z_window; s <= k.z_window; ++s) {
      Rational c = kernel_coeff(k.kind, d, s);
      if (!c.is_zero()) out[{d, s}] = c;
    }
  return out;
}

// Applies the kernel to a finite-window series: z-convolution followed by
// z^0 extraction per t-degree, giving sum_d t^d (sum_s k_{d,s} b_{-s}).
// Variant kernels require the half capability.
template <RingOf R>
LaurentSeries<R> apply_kernel(const R& r, const TransformationKernel& k,
                              const LaurentSeries<R>& b) {
  if (k.needs_half() && !r.half())
    throw half_missing_error(std::string(kernel_name(k.kind)) + " needs a ring with half");
  LaurentSeries<R> out;
  int dlo = (k.kind == KernelKind::HilbertTwoVar) ? -k.z_window : 0;
  int dhi = (k.kind == KernelKind::HilbertTwoVar) ? k.z_window : k.t_order;
  out.lo = dlo;
  out.c.assign(dhi - dlo + 1, r.zero());
  for (int d = dlo; d <= dhi; ++d) {
    auto acc = r.zero();
    for (int s = b.empty() ? 1 : -b.hi(); s <= (b.empty() ? 0 : -b.lo); ++s) {
      Rational kc = kernel_coeff(k.kind, d, s);
      if (kc.is_zero()) continue;
      acc = r.add(acc, r.mul(from_rational(r, kc), series_coeff(r, b, -s)));
    }
    out.c[d - dlo] = acc;
  }
  out.cls = GrowthClass::RapidRing;
  out.one_sided = dlo >= 0;
  return series_trim(r, out);
}

// t -> 1 limit: sums each z-column over t-degrees at the truncation.
inline LaurentSeries<RationalRing> kernel_limit_t1(const TransformationKernel& k,
                                                   int z_window) {
  RationalRing Q;
  LaurentSeries<RationalRing> out;
  out.lo = -z_window;
  out.c.assign(2 * z_window + 1, Rational(0));
  for (int s = -z_window; s <= z_window; ++s) {
    Rational col(0);
    for (int d = 0; d <= k.t_order; ++d) col += kernel_coeff(k.kind, d, s);
    out.c[s + z_window] = col;
  }
  out.cls = GrowthClass::SummableRing;
  return series_trim(Q, out);
}

// the kernel as a z-series with one-sided t-polynomial coefficients
template <RingOf B>
LaurentSeries<LaurentRing<B>> kernel_series(const LaurentRing<B>& tring,
                                            const TransformationKernel& k) {
  const B& base = tring.base();
  LaurentSeries<LaurentRing<B>> out;
  out.lo = -k.z_window;
  out.c.assign(2 * k.z_window + 1, tring.zero());
  for (int s = -k.z_window; s <= k.z_window; ++s) {
    LaurentSeries<B> col;
    col.lo = 0;
    col.c.assign(k.t_order + 1, base.zero());
    col.one_sided = true;
    col.cls = GrowthClass::RapidRing;
    for (int d = 0; d <= k.t_order; ++d) {
      Rational kc = kernel_coeff(k.kind, d, s);
      if (!kc.is_zero()) col.c[d] = from_rational(base, kc);
    }
    out.c[s + k.z_window] = series_trim(base, col);
  }
  out.cls = GrowthClass::SummableRing;
  return series_trim(tring, out);
}

// double integral with the kernel in the cross variable:
//   iint K(t, w z^{-1}) u(z) v(w) -> sum_d t^d sum_s K_{d,s} u_s v_{-s}
// (the z-integral picks u_s against z^{-s}, the w-integral picks v_{-s})
template <RingOf B>
LaurentSeries<B> kernel_cross_double_integral(const B& base, const TransformationKernel& k,
                                              const LaurentSeries<B>& u,
                                              const LaurentSeries<B>& v) {
  if (k.needs_half() && !base.half())
    throw half_missing_error(std::string(kernel_name(k.kind)) + " needs a ring with half");
  LaurentSeries<B> out;
  out.lo = 0;
  out.c.assign(k.t_order + 1, base.zero());
  out.one_sided = true;
  out.cls = GrowthClass::RapidRing;
  for (int d = 0; d <= k.t_order; ++d) {
    auto acc = base.zero();
    for (int s = -k.z_window; s <= k.z_window; ++s) {
      Rational kc = kernel_coeff(k.kind, d, s);
      if (kc.is_zero()) continue;
      auto prod = base.mul(series_coeff(base, u, s), series_coeff(base, v, -s));
      acc = base.add(acc, base.mul(from_rational(base, kc), prod));
    }
    out.c[d] = acc;
  }
  return series_trim(base, out);
}

// ---------------------------------------------------------------------------
// scalar rational pencil helpers used by the kernel-level proof pipeline

// (1+q)/2 + (1-q)/2 z over an exact scalar ring
inline LaurentSeries<RationalRing> lambda_pencil_scalar(const RationalRing& Q, const Rational& q) {
  LaurentSeries<RationalRing> s;
  s.lo = 0;
  s.c = {(Rational(1) + q) * Rational(1, 2), (Rational(1) - q) * Rational(1, 2)};
  s.one_sided = true;
  return series_trim(Q, s);
}

// truncated two-sided inverse of the pencil for a scalar rational off the
// imaginary axis: one-sided geometric expansion on the side the scalar lives
inline LaurentSeries<RationalRing> lambda_pencil_inverse_scalar(const RationalRing& Q,
                                                                const Rational& q, int order) {
  if (q.is_zero()) throw spectral_class_error("pencil of 0 is singular on the circle");
  if (q > Rational(0)) {
    // (1+zW)^{-1} 2/(1+q), W = (1-q)/(1+q)
    Rational w = (Rational(1) - q) / (Rational(1) + q);
    auto inv = invert_unit_pencil(Q, w, order);
    return series_scale(Q, Rational(2) / (Rational(1) + q), inv);
  }
  // reflection: pencil(z, q) = z * pencil(z^{-1}, -q)
  auto refl = lambda_pencil_inverse_scalar(Q, -q, order);
  return series_shift(transform_variable(Q, refl, TransformRule::InvertZ), -1);
}

// Lambda(-z, q) / Lambda(z, q) as a truncated series
inline LaurentSeries<RationalRing> lambda_ratio_scalar(const RationalRing& Q, const Rational& q,
                                                       int order) {
  auto num = transform_variable(Q, lambda_pencil_scalar(Q, q), TransformRule::NegateZ);
  return series_mul(Q, num, lambda_pencil_inverse_scalar(Q, q, order));
}

struct ResolventPipelineReport {
  // iint R~(t, wz^{-1}) (1 - ratio(z) ratio(w)), as a t-polynomial
  LaurentSeries<RationalRing> direct;
  // the two reduced terms iint H~(t, wz^{-1}) g(z) and iint H~(t, wz^{-1}) g(w)
  LaurentSeries<RationalRing> reduced_z;
  LaurentSeries<RationalRing> reduced_w;
  bool vanishes = false;
};

// The involution argument at kernel level, for a scalar rational q: the
// regularized double integral of 1 - ratio(z) ratio(w) reduces to two
// Hilbert-type applications against odd data and every t-degree vanishes.
inline ResolventPipelineReport resolvent_analytic_pipeline(const Rational& q, int t_order,
                                                           int z_window) {
  RationalRing Q;
  TransformationKernel reg{KernelKind::VariantRegularization, t_order, z_window};
  TransformationKernel hil{KernelKind::VariantHilbertPoisson, t_order, z_window};

  auto ratio = lambda_ratio_scalar(Q, q, z_window);
  auto one = series_const(Q, Rational(1));

  ResolventPipelineReport rep;
  auto direct_one = kernel_cross_double_integral(Q, reg, one, one);
  auto direct_rr = kernel_cross_double_integral(Q, reg, ratio, ratio);
  rep.direct = series_add(Q, direct_one, series_neg(Q, direct_rr));

  // g(z) = (z-1)(1-q^2) / (2 Lambda(z,q))
  auto zm1 = series_add(Q, series_monomial(Q, Rational(1), 1), series_const(Q, Rational(-1)));
  auto g = series_scale(Q, (Rational(1) - q * q) * Rational(1, 2),
                        series_mul(Q, zm1, lambda_pencil_inverse_scalar(Q, q, z_window)));
  rep.reduced_z = kernel_cross_double_integral(Q, hil, g, one);
  rep.reduced_w = kernel_cross_double_integral(Q, hil, one, g);

  rep.vanishes = rep.direct.empty() && rep.reduced_z.empty() && rep.reduced_w.empty();
  return rep;
}

}  // namespace ringcalc
