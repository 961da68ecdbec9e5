#pragma once

// The circle-integral spectral functions over pluggable backends, plus the
// derived functions, splittings, pencil-inverse expansions, homotopies, the
// contraction family, the geometric mean, the segment form of the square
// root, and spectral-class certificates.
//
// Backends:
//   Quadrature  equal-weight mean over the N-th roots of unity, N a power of
//               two. Needs a ring embeddable in complex scalars. Summation
//               order is fixed ascending for bit-reproducibility; pairwise
//               reduction sits behind a flag. Error budget = distance between
//               the N-node and N/2-node means (the half rule reuses the even
//               nodes) plus the ring tolerance.
//   Series      exact evaluation. Ordered exact scalars integrate the
//               one-sided geometric expansion of the pencil inverse on their
//               spectral side; one-sided classes carry decay certificates.
//               Two-sided matrix data has no series route here and must go
//               through Quadrature or Oracle (the splitting data would have
//               to be invented otherwise).
//   Oracle      caller-supplied conjugation data (V, diagonal); the value is
//               V f(D) V^{-1} with the scalar function on the diagonal. No
//               eigensolver lives in this library.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ringcalc/kernels.hpp"
#include "ringcalc/laurent.hpp"

namespace ringcalc {

enum class BackendKind { Quadrature, Series, Oracle };

inline const char* backend_name(BackendKind k) {
  switch (k) {
    case BackendKind::Quadrature: return "quadrature";
    case BackendKind::Series: return "series";
    default: return "oracle";
  }
}

namespace detail {
template <typename R, typename = void>
struct ring_real {
  using type = double;
};
template <typename R>
struct ring_real<R, std::void_t<typename R::real_type>> {
  using type = typename R::real_type;
};
}  // namespace detail

template <RingOf R>
struct OracleData {
  using Real = typename detail::ring_real<R>::type;
  typename R::Element v;
  typename R::Element v_inv;
  std::vector<Cplx<Real>> eigs;
};

template <RingOf R>
struct Backend {
  BackendKind kind = BackendKind::Quadrature;
  int nodes = 64;           // quadrature node count, a power of two
  int order = 32;           // series truncation window
  double tail_tol = 1e-12;  // decay-certificate threshold on float rings
  bool assert_class = false;
  bool pairwise_sum = false;
  std::optional<OracleData<R>> oracle;

  static Backend quadrature(int n = 64) {
    Backend b;
    b.kind = BackendKind::Quadrature;
    b.nodes = n;
    return b;
  }
  static Backend series(int m = 32) {
    Backend b;
    b.kind = BackendKind::Series;
    b.order = m;
    return b;
  }
  static Backend with_oracle(OracleData<R> d) {
    Backend b;
    b.kind = BackendKind::Oracle;
    b.oracle = std::move(d);
    return b;
  }
};

template <RingOf R>
struct SpectralResult {
  typename R::Element value;
  std::map<std::string, double> residuals;  // recomputed from value, never cached
  double error_budget = 0.0;
  BackendKind backend = BackendKind::Quadrature;
  int nodes = 0;
  bool class_verified = true;
};

enum class SpectralFn { Sgn, Sqrt, Idem, Fsqrt };

enum class SpectralClassTag {
  AvoidImagAxis,
  AvoidLeftHalf,
  AvoidNegReals,
  AvoidShiftedImagAxis,
  AvoidShiftedLeftHalf,
  AvoidQuarterShiftedNegReals,
  DiskComplementAvoided,
  AvoidRealAxis,
  Involution,
  SkewInvolution,
  Idempotent,
};

struct ClassCertificate {
  SpectralClassTag tag = SpectralClassTag::AvoidImagAxis;
  enum class Status { Certified, Refuted, Inconclusive } status = Status::Inconclusive;
  double margin = 0.0;
  std::string method;
  bool certified() const { return status == Status::Certified; }
};

template <typename R>
concept OrderedScalarRing = RingOf<R> && requires(const R& r, const typename R::Element& x) {
  { r.scalar_compare(x, x) } -> std::convertible_to<int>;
};

template <typename R>
concept ExactSqrtRing = RingOf<R> && requires(const R& r, const typename R::Element& x) {
  { r.sqrt_exact(x) } -> std::same_as<std::optional<typename R::Element>>;
};

// ---------------------------------------------------------------------------
// scalar spectral functions: sign of the real part, principal square root,
// indicator of Re > 1/2, and 1/2 - sqrt(1/4 - t). Used on oracle diagonals
// and scalar fixtures; they throw on the matching excluded set.

template <typename Real>
Cplx<Real> scalar_spectral_fn(SpectralFn f, const Cplx<Real>& x) {
  const Real half = (Real)1 / (Real)2;
  const Real quarter = (Real)1 / (Real)4;
  switch (f) {
    case SpectralFn::Sgn:
      if (x.re == 0) throw spectral_class_error("scalar on the imaginary axis");
      return Cplx<Real>(x.re > 0 ? (Real)1 : (Real)-1);
    case SpectralFn::Sqrt:
      if (x.im == 0 && x.re <= 0) throw spectral_class_error("scalar on the negative real cut");
      return cplx_sqrt(x);
    case SpectralFn::Idem:
      if (x.re == half) throw spectral_class_error("scalar on the shifted imaginary axis");
      return Cplx<Real>(x.re > half ? (Real)1 : (Real)0);
    default:
      if (x.im == 0 && x.re >= quarter)
        throw spectral_class_error("scalar on the quarter-shifted cut");
      return Cplx<Real>(half) - cplx_sqrt(Cplx<Real>(quarter) - x);
  }
}

// distance of a scalar from the excluded set of a spectral function
template <typename Real>
double scalar_class_margin(SpectralFn f, const Cplx<Real>& x) {
  double re = (double)x.re, im = (double)x.im;
  switch (f) {
    case SpectralFn::Sgn: return std::fabs(re);
    case SpectralFn::Sqrt:
      return re >= 0 ? std::sqrt(re * re + im * im) : std::fabs(im);
    case SpectralFn::Idem: return std::fabs(re - 0.5);
    default:
      return re >= 0.25 ? std::fabs(im) : std::hypot(re - 0.25, im);
  }
}

// ---------------------------------------------------------------------------
// quadrature driver

inline void check_nodes_pow2(int n) {
  if (n < 2 || (n & (n - 1)) != 0)
    throw std::invalid_argument("quadrature nodes must be a power of two >= 2");
}

// Mean of f over the N-th roots of unity together with the mean over the
// even-index half grid (used for the error budget). Ascending node order.
template <ComplexEmbeddableRing R, typename F>
std::pair<typename R::Element, typename R::Element> circle_mean2(const R& r, int nodes, F&& f,
                                                                 bool pairwise = false) {
  using Real = typename R::real_type;
  check_nodes_pow2(nodes);
  std::vector<typename R::Element> vals;
  vals.reserve(nodes);
  for (int j = 0; j < nodes; ++j) vals.push_back(f(unit_circle_node<Real>(j, nodes)));

  auto reduce = [&](int stride) {
    std::vector<typename R::Element> xs;
    for (int j = 0; j < nodes; j += stride) xs.push_back(vals[j]);
    if (pairwise) {
      while (xs.size() > 1) {
        std::vector<typename R::Element> next;
        for (std::size_t i = 0; i + 1 < xs.size(); i += 2) next.push_back(r.add(xs[i], xs[i + 1]));
        if (xs.size() % 2) next.push_back(xs.back());
        xs = std::move(next);
      }
    } else {
      for (std::size_t i = 1; i < xs.size(); ++i) xs[0] = r.add(xs[0], xs[i]);
    }
    double inv = 1.0 / (double)(nodes / stride);
    return r.mul(r.embed_complex(inv, 0.0), xs[0]);
  };
  auto full = reduce(1);
  auto half = reduce(2);
  return {full, half};
}

namespace detail {

template <RingOf R>
typename R::Element invert_or_class_error(const R& r, const typename R::Element& x,
                                          const char* what) {
  auto inv = r.try_invert(x);
  if (!inv) throw spectral_class_error(std::string("singular pencil: ") + what);
  return *inv;
}

// node evaluation of the four integrands
template <ComplexEmbeddableRing R>
struct NodeIntegrands {
  using Real = typename R::real_type;
  using Elem = typename R::Element;
  const R& r;
  SpectralFn fn;
  Elem x;
  Elem a, b;  // precomputed pencil halves where applicable

  NodeIntegrands(const R& rr, SpectralFn f, const Elem& xx) : r(rr), fn(f), x(xx) {
    if (f == SpectralFn::Sgn) {
      auto h = ring_half(r);
      a = r.mul(h, r.add(r.one(), x));        // (1+x)/2
      b = r.mul(h, sub(r, r.one(), x));       // (1-x)/2
    } else if (f == SpectralFn::Idem) {
      a = sub(r, r.one(), x);                 // 1-p
    }
  }

  Elem operator()(const Cplx<Real>& z) const {
    auto zc = r.embed_value(z);
    switch (fn) {
      case SpectralFn::Sgn: {
        auto pencil = r.add(a, r.mul(zc, b));
        auto num = sub(r, a, r.mul(zc, b));
        return r.mul(num, invert_or_class_error(r, pencil, "(1+x)/2+(1-x)/2 z at a node"));
      }
      case SpectralFn::Sqrt: {
        // (1/z)((1+z)/2)^2 - ((1-z)/2)^2 x), i.e. (2+z+z^{-1})/4 + (2-z-z^{-1})/4 x
        Cplx<Real> zi = Cplx<Real>((Real)1) / z;
        Cplx<Real> c = (Cplx<Real>((Real)2) + z + zi) * Cplx<Real>((Real)1 / (Real)4);
        Cplx<Real> d = (Cplx<Real>((Real)2) - z - zi) * Cplx<Real>((Real)1 / (Real)4);
        auto pencil = r.add(r.embed_value(c),
                            r.mul(r.embed_value(d), x));
        return r.mul(x, invert_or_class_error(r, pencil, "square-root pencil at a node"));
      }
      case SpectralFn::Idem: {
        auto pencil = r.add(a, r.mul(zc, x));  // (1-p) + p z
        return r.mul(r.mul(x, zc), invert_or_class_error(r, pencil, "(1-p)+pz at a node"));
      }
      default: {
        Cplx<Real> zi = Cplx<Real>((Real)1) / z;
        Cplx<Real> c = z - Cplx<Real>((Real)2) + zi;
        auto pencil = r.add(r.one(), r.mul(r.embed_value(c), x));
        auto w = r.mul(r.embed_value(z + Cplx<Real>((Real)1)), x);
        return r.mul(w, invert_or_class_error(r, pencil, "1+(z-2+z^{-1})t at a node"));
      }
    }
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// exact scalar series paths

// truncated inverse of (1+x)/2 + (1-x)/2 z for an ordered exact scalar:
// one-sided geometric expansion on the side the scalar lives
template <OrderedScalarRing R>
LaurentSeries<R> scalar_lambda_inverse(const R& r, const typename R::Element& q, int order) {
  int side = r.scalar_compare(q, r.zero());
  if (side == 0) throw spectral_class_error("scalar 0 is on the imaginary axis");
  if (side > 0) {
    auto h = ring_half(r);
    auto a = r.mul(h, r.add(r.one(), q));
    auto w = r.mul(*r.try_invert(r.add(r.one(), q)), sub(r, r.one(), q));
    auto inv = invert_unit_pencil(r, w, order);
    return series_scale_right(r, inv, *r.try_invert(a));
  }
  // pencil(z, q) = z pencil(z^{-1}, -q)
  auto refl = scalar_lambda_inverse(r, r.neg(q), order);
  return series_shift(transform_variable(r, refl, TransformRule::InvertZ), -1);
}

// ---------------------------------------------------------------------------
// class membership
//
// Each tag is certified on its own pencil. No inclusion between classes is
// assumed (the one-sided class does not imply the two-sided one in general:
// that step needs bounded binomial weights, which a bare seminorm family
// does not provide), so callers wanting several classes certify each
// separately.

template <RingOf R>
ClassCertificate class_membership(const R& r, const typename R::Element& x, SpectralClassTag tag,
                                  const Backend<R>& b) {
  using Status = ClassCertificate::Status;
  ClassCertificate cert;
  cert.tag = tag;

  auto algebraic = [&](const typename R::Element& target) {
    cert.method = "algebraic";
    double v = dist(r, r.mul(x, x), target);
    cert.margin = v;
    cert.status = v <= r.tolerance() ? Status::Certified : Status::Refuted;
    return cert;
  };
  switch (tag) {
    case SpectralClassTag::Involution: return algebraic(r.one());
    case SpectralClassTag::SkewInvolution: return algebraic(r.neg(r.one()));
    case SpectralClassTag::Idempotent: return algebraic(x);
    default: break;
  }

  // one-sided classes: decay certificate of the transformed element
  auto decay_cert = [&](const typename R::Element& w) {
    cert.method = "cayley-decay";
    if (r.is_exact()) {
      if (norm_strictly_less_one(r, w)) {
        cert.status = Status::Certified;
        cert.margin = 1.0 - r.seminorm(0, w);
      } else {
        cert.status = Status::Inconclusive;
        cert.margin = 0.0;
      }
      return cert;
    }
    double pm = r.seminorm(0, ring_pow(r, w, b.order));
    if (pm <= b.tail_tol * r.seminorm(0, r.one())) {
      cert.status = Status::Certified;
      cert.margin = 1.0 - std::pow(pm + 1e-300, 1.0 / (double)b.order);
    } else {
      cert.status = Status::Inconclusive;
      cert.margin = 0.0;
    }
    return cert;
  };

  if (tag == SpectralClassTag::DiskComplementAvoided) return decay_cert(x);
  if (tag == SpectralClassTag::AvoidLeftHalf) {
    auto inv = r.try_invert(r.add(r.one(), x));
    if (!inv) {
      cert.method = "cayley-decay";
      cert.status = Status::Refuted;  // -1 in the spectrum
      return cert;
    }
    return decay_cert(r.mul(sub(r, r.one(), x), *inv));
  }
  if (tag == SpectralClassTag::AvoidShiftedLeftHalf) {
    auto inv = r.try_invert(sub(r, r.one(), x));
    if (!inv) {
      cert.method = "cayley-decay";
      cert.status = Status::Refuted;  // 1 in the spectrum
      return cert;
    }
    return decay_cert(r.mul(*inv, x));
  }

  // exact ordered scalars decide two-sided classes outright
  if constexpr (OrderedScalarRing<R>) {
    cert.method = "exact-scalar";
    auto cmp0 = [&](const typename R::Element& e) { return r.scalar_compare(e, r.zero()); };
    auto mag = [&](const typename R::Element& e) { return r.seminorm(0, e); };
    switch (tag) {
      case SpectralClassTag::AvoidImagAxis: {
        int s = cmp0(x);
        cert.status = s != 0 ? Status::Certified : Status::Refuted;
        cert.margin = mag(x);
        return cert;
      }
      case SpectralClassTag::AvoidNegReals: {
        cert.status = cmp0(x) > 0 ? Status::Certified : Status::Refuted;
        cert.margin = mag(x);
        return cert;
      }
      case SpectralClassTag::AvoidShiftedImagAxis: {
        auto two_x_m1 = sub(r, r.add(x, x), r.one());
        cert.status = cmp0(two_x_m1) != 0 ? Status::Certified : Status::Refuted;
        cert.margin = mag(two_x_m1) / 2.0;
        return cert;
      }
      case SpectralClassTag::AvoidQuarterShiftedNegReals: {
        auto four_x = r.add(r.add(x, x), r.add(x, x));
        auto one_m_4x = sub(r, r.one(), four_x);
        cert.status = cmp0(one_m_4x) > 0 ? Status::Certified : Status::Refuted;
        cert.margin = mag(one_m_4x) / 4.0;
        return cert;
      }
      case SpectralClassTag::AvoidRealAxis: {
        // a real scalar always sits on the real axis
        cert.status = Status::Refuted;
        cert.margin = 0.0;
        return cert;
      }
      default: break;
    }
  }

  // oracle data decides by eigenvalue distances
  if (b.kind == BackendKind::Oracle && b.oracle) {
    if constexpr (ComplexEmbeddableRing<R>) {
      cert.method = "oracle-eigenvalues";
      SpectralFn f = SpectralFn::Sgn;
      bool known = true;
      switch (tag) {
        case SpectralClassTag::AvoidImagAxis: f = SpectralFn::Sgn; break;
        case SpectralClassTag::AvoidNegReals: f = SpectralFn::Sqrt; break;
        case SpectralClassTag::AvoidShiftedImagAxis: f = SpectralFn::Idem; break;
        case SpectralClassTag::AvoidQuarterShiftedNegReals: f = SpectralFn::Fsqrt; break;
        default: known = false; break;
      }
      if (known) {
        double m = 1e300;
        for (const auto& e : b.oracle->eigs) m = std::min(m, scalar_class_margin(f, e));
        cert.margin = m;
        cert.status = m > 0 ? Status::Certified : Status::Refuted;
        return cert;
      }
    }
  }

  // circle scan of the pencil margin
  if constexpr (ComplexEmbeddableRing<R>) {
    using Real = typename R::real_type;
    cert.method = "quadrature-scan";
    double margin = 1e300;
    for (int j = 0; j < b.nodes; ++j) {
      auto z = unit_circle_node<Real>(j, b.nodes);
      Cplx<Real> zi = Cplx<Real>((Real)1) / z;
      typename R::Element pencil;
      switch (tag) {
        case SpectralClassTag::AvoidImagAxis: {
          auto h = ring_half(r);
          auto zc = r.embed_value(z);
          pencil = r.add(r.mul(h, r.add(r.one(), x)), r.mul(r.mul(zc, h), sub(r, r.one(), x)));
          break;
        }
        case SpectralClassTag::AvoidNegReals:
        case SpectralClassTag::AvoidRealAxis: {
          Cplx<Real> c = (Cplx<Real>((Real)2) + z + zi) * Cplx<Real>((Real)1 / (Real)4);
          Cplx<Real> d = (Cplx<Real>((Real)2) - z - zi) * Cplx<Real>((Real)1 / (Real)4);
          auto s = tag == SpectralClassTag::AvoidNegReals ? x : r.neg(r.mul(x, x));
          pencil = r.add(r.embed_value(c),
                         r.mul(r.embed_value(d), s));
          break;
        }
        case SpectralClassTag::AvoidShiftedImagAxis: {
          auto zc = r.embed_value(z);
          pencil = r.add(sub(r, r.one(), x), r.mul(zc, x));
          break;
        }
        default: {  // AvoidQuarterShiftedNegReals
          Cplx<Real> c = z - Cplx<Real>((Real)2) + zi;
          pencil = r.add(r.one(), r.mul(r.embed_value(c), x));
          break;
        }
      }
      auto inv = r.try_invert(pencil);
      if (!inv) {
        cert.status = Status::Refuted;
        cert.margin = 0.0;
        return cert;
      }
      margin = std::min(margin, 1.0 / std::max(r.seminorm(0, *inv), 1e-300));
    }
    cert.margin = margin;
    // a vanishing margin is a refutation at this resolution; a thin but
    // nonzero one is merely inconclusive
    double hard_floor = std::max(10.0 * r.tolerance(), 1e-12);
    double soft_floor = std::max(1e3 * r.tolerance(), 1e-7);
    cert.status = margin <= hard_floor ? Status::Refuted
                  : margin <= soft_floor ? Status::Inconclusive
                                         : Status::Certified;
    return cert;
  }

  cert.method = "unavailable";
  cert.status = Status::Inconclusive;
  return cert;
}

// ---------------------------------------------------------------------------
// the four spectral integrals

namespace detail {

inline SpectralClassTag class_for(SpectralFn f) {
  switch (f) {
    case SpectralFn::Sgn: return SpectralClassTag::AvoidImagAxis;
    case SpectralFn::Sqrt: return SpectralClassTag::AvoidNegReals;
    case SpectralFn::Idem: return SpectralClassTag::AvoidShiftedImagAxis;
    default: return SpectralClassTag::AvoidQuarterShiftedNegReals;
  }
}

// exact evaluation for ordered exact scalars; integrates the one-sided
// geometric expansion of the relevant pencil inverse (no half is used on the
// idem and fsqrt paths)
template <RingOf R>
typename R::Element series_scalar_value(const R& r, SpectralFn fn, const typename R::Element& x,
                                        int order) {
  // The circle mean of (finite pencil) x (one-sided expansion) only reads the
  // expansion's two center coefficients, which are exact at any truncation;
  // a short window avoids pointless growth of exact-coefficient powers.
  order = std::min(order, 2);
  if constexpr (!OrderedScalarRing<R>) {
    throw std::domain_error("series backend: two-sided data needs quadrature or oracle splitting");
  } else {
    switch (fn) {
      case SpectralFn::Sgn: {
        auto inv = scalar_lambda_inverse(r, x, order);
        auto h = ring_half(r);
        LaurentSeries<R> num;  // (1+x)/2 - (1-x)/2 z
        num.lo = 0;
        num.c = {r.mul(h, r.add(r.one(), x)), r.neg(r.mul(h, sub(r, r.one(), x)))};
        return integrate_z0(r, series_mul(r, num, inv));
      }
      case SpectralFn::Sqrt: {
        if constexpr (ExactSqrtRing<R>) {
          if (r.scalar_compare(x, r.zero()) <= 0)
            throw spectral_class_error("scalar on the negative real cut");
          auto rt = r.sqrt_exact(x);
          if (!rt) throw std::domain_error("square root has no exact representation here");
          return *rt;
        }
        throw std::domain_error("series backend: no exact square root on this ring");
      }
      case SpectralFn::Idem: {
        auto two_x_m1 = sub(r, r.add(x, x), r.one());
        int side = r.scalar_compare(two_x_m1, r.zero());
        if (side == 0) throw spectral_class_error("scalar on the shifted imaginary axis");
        LaurentSeries<R> integrand_left = series_monomial(r, x, 1);  // p z
        if (side < 0) {
          // (1-p)(1 + z (1-p)^{-1} p): expansion one-sided in z
          auto inv1mp = detail::invert_or_class_error(r, sub(r, r.one(), x), "1-p");
          auto u = r.mul(inv1mp, x);
          auto inv = series_scale_right(r, invert_unit_pencil(r, u, order), inv1mp);
          return integrate_z0(r, series_mul(r, integrand_left, inv));
        }
        // z p (1 + z^{-1} p^{-1}(1-p)): expansion one-sided in z^{-1}
        auto invp = detail::invert_or_class_error(r, x, "p");
        auto vv = r.mul(invp, sub(r, r.one(), x));
        auto inv = series_scale_right(
            r, series_shift(transform_variable(r, invert_unit_pencil(r, vv, order),
                                               TransformRule::InvertZ), -1), invp);
        return integrate_z0(r, series_mul(r, integrand_left, inv));
      }
      default: {
        if constexpr (ExactSqrtRing<R>) {
          auto four_x = r.add(r.add(x, x), r.add(x, x));
          auto disc = sub(r, r.one(), four_x);
          if (r.scalar_compare(disc, r.zero()) <= 0)
            throw spectral_class_error("scalar on the quarter-shifted cut");
          auto s = r.sqrt_exact(disc);
          if (!s) throw std::domain_error("f-square-root has no exact representation here");
          // x = 2T/(1+s): half-free form of (1-s)/2
          auto denom = detail::invert_or_class_error(r, r.add(r.one(), *s), "1+sqrt(1-4T)");
          return r.mul(r.add(x, x), denom);
        }
        throw std::domain_error("series backend: no exact f-square-root on this ring");
      }
    }
  }
}

template <RingOf R>
void spectral_residuals(const R& r, SpectralFn fn, const typename R::Element& x,
                        SpectralResult<R>& out) {
  const auto& v = out.value;
  out.residuals["commute"] = dist(r, r.mul(v, x), r.mul(x, v));
  switch (fn) {
    case SpectralFn::Sgn:
      out.residuals["involution"] = dist(r, r.mul(v, v), r.one());
      break;
    case SpectralFn::Sqrt:
      out.residuals["square"] = dist(r, r.mul(v, v), x);
      break;
    case SpectralFn::Idem:
      out.residuals["idempotent"] = dist(r, r.mul(v, v), v);
      break;
    default:
      out.residuals["fsquare"] = dist(r, r.mul(v, sub(r, r.one(), v)), x);
      break;
  }
}

}  // namespace detail

template <RingOf R>
SpectralResult<R> spectral_fn(const R& r, SpectralFn fn, const typename R::Element& x,
                              const Backend<R>& b) {
  SpectralResult<R> out;
  out.backend = b.kind;
  out.nodes = b.kind == BackendKind::Quadrature ? b.nodes : b.order;

  if (b.assert_class) {
    out.class_verified = false;  // caller vouches; result carries the flag
  } else {
    auto cert = class_membership(r, x, detail::class_for(fn), b);
    if (cert.status == ClassCertificate::Status::Refuted)
      throw spectral_class_error("spectral class refuted (margin " + std::to_string(cert.margin) +
                                 ", method " + cert.method + ")");
    out.class_verified = cert.certified();
  }

  switch (b.kind) {
    case BackendKind::Quadrature: {
      if constexpr (ComplexEmbeddableRing<R>) {
        detail::NodeIntegrands<R> f(r, fn, x);
        auto [full, half] = circle_mean2(r, b.nodes, f, b.pairwise_sum);
        out.value = full;
        out.error_budget = dist(r, full, half) + r.tolerance();
      } else {
        throw std::domain_error("quadrature backend needs a complex-embeddable ring");
      }
      break;
    }
    case BackendKind::Series: {
      out.value = detail::series_scalar_value(r, fn, x, b.order);
      out.error_budget = 0.0;
      break;
    }
    default: {
      if constexpr (ComplexEmbeddableRing<R>) {
        if (!b.oracle) throw std::invalid_argument("oracle backend without conjugation data");
        using Real = typename R::real_type;
        std::vector<Cplx<Real>> fd;
        fd.reserve(b.oracle->eigs.size());
        for (const auto& e : b.oracle->eigs) fd.push_back(scalar_spectral_fn(fn, e));
        out.value = r.mul(b.oracle->v, r.mul(r.from_diag(fd), b.oracle->v_inv));
        out.error_budget = r.tolerance();
      } else {
        throw std::domain_error("oracle backend needs a complex-embeddable ring");
      }
      break;
    }
  }
  detail::spectral_residuals(r, fn, x, out);
  return out;
}

template <RingOf R>
SpectralResult<R> sgn(const R& r, const typename R::Element& q, const Backend<R>& b) {
  return spectral_fn(r, SpectralFn::Sgn, q, b);
}
template <RingOf R>
SpectralResult<R> sqrt_spec(const R& r, const typename R::Element& s, const Backend<R>& b) {
  return spectral_fn(r, SpectralFn::Sqrt, s, b);
}
template <RingOf R>
SpectralResult<R> idem_spec(const R& r, const typename R::Element& p, const Backend<R>& b) {
  return spectral_fn(r, SpectralFn::Idem, p, b);
}
template <RingOf R>
SpectralResult<R> fsqrt_spec(const R& r, const typename R::Element& t, const Backend<R>& b) {
  return spectral_fn(r, SpectralFn::Fsqrt, t, b);
}

// ---------------------------------------------------------------------------
// derived functions

enum class DerivedKind { AbsR, PertR, AbsI, Pol, AbsF };

template <RingOf R>
SpectralResult<R> derived_decomposition(const R& r, DerivedKind kind,
                                        const typename R::Element& x, const Backend<R>& b) {
  SpectralResult<R> out;
  out.backend = b.kind;
  out.nodes = b.kind == BackendKind::Quadrature ? b.nodes : b.order;

  switch (kind) {
    case DerivedKind::AbsR: {
      auto s = sgn(r, x, b);
      out.value = r.mul(x, s.value);
      out.error_budget = s.error_budget;
      out.class_verified = s.class_verified;
      out.residuals["decomposition"] = dist(r, r.mul(out.value, s.value), x);
      out.residuals["commute"] = dist(r, r.mul(out.value, x), r.mul(x, out.value));
      break;
    }
    case DerivedKind::PertR: {
      auto s = sgn(r, x, b);
      auto absr = r.mul(x, s.value);
      auto inv = detail::invert_or_class_error(r, r.add(absr, r.one()), "|x|+1");
      auto formula = r.mul(sub(r, absr, r.one()), inv);
      out.class_verified = s.class_verified;
      if constexpr (ComplexEmbeddableRing<R>) {
        if (b.kind == BackendKind::Quadrature) {
          auto h = ring_half(r);
          auto a = r.mul(h, r.add(r.one(), x));
          auto bb = r.mul(h, sub(r, r.one(), x));
          auto [full, half_mean] = circle_mean2(r, b.nodes, [&](const auto& z) {
            auto zc = r.embed_value(z);
            auto pencil = r.add(a, r.mul(zc, bb));
            auto num = r.add(bb, r.mul(zc, a));  // the pencil of -x
            return r.mul(num, detail::invert_or_class_error(r, pencil, "sign pencil"));
          }, b.pairwise_sum);
          out.value = r.neg(full);
          out.error_budget = dist(r, full, half_mean) + r.tolerance();
          out.residuals["route_defect"] = dist(r, out.value, formula);
          out.residuals["commute"] = dist(r, r.mul(out.value, x), r.mul(x, out.value));
          break;
        }
      }
      out.value = formula;
      out.error_budget = s.error_budget;
      out.residuals["commute"] = dist(r, r.mul(out.value, x), r.mul(x, out.value));
      break;
    }
    case DerivedKind::AbsI: {
      auto m = r.neg(r.mul(x, x));
      auto rt = sqrt_spec(r, m, b);
      out.value = rt.value;
      out.error_budget = rt.error_budget;
      out.class_verified = rt.class_verified;
      out.residuals["square_plus_x2"] = dist(r, r.mul(out.value, out.value), m);
      out.residuals["commute"] = dist(r, r.mul(out.value, x), r.mul(x, out.value));
      break;
    }
    case DerivedKind::Pol: {
      auto m = r.neg(r.mul(x, x));
      auto rt = sqrt_spec(r, m, b);
      auto inv = detail::invert_or_class_error(r, rt.value, "|J|_i");
      out.value = r.mul(x, inv);
      out.error_budget = rt.error_budget;
      out.class_verified = rt.class_verified;
      out.residuals["skew_involution"] = dist(r, r.mul(out.value, out.value), r.neg(r.one()));
      out.residuals["decomposition"] = dist(r, r.mul(rt.value, out.value), x);
      break;
    }
    default: {  // AbsF = 1/2 - |1/2 - x|_r
      auto h = ring_half(r);
      auto m = sub(r, h, x);
      auto s = sgn(r, m, b);
      auto absr = r.mul(m, s.value);
      out.value = sub(r, h, absr);
      out.error_budget = s.error_budget;
      out.class_verified = s.class_verified;
      auto idm = idem_spec(r, x, b);
      // x = idem x + |x|_F - 2 |x|_F idem x
      auto recon = r.add(idm.value, sub(r, out.value,
                                        scale_int(r, r.mul(out.value, idm.value), 2)));
      out.residuals["decomposition"] = dist(r, recon, x);
      out.residuals["commute"] = dist(r, r.mul(out.value, x), r.mul(x, out.value));
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// splitting along the sign involution

template <RingOf R>
struct SplitResult {
  typename R::Element proj_minus, proj_plus, q_minus, q_plus;
  std::map<std::string, double> residuals;
};

template <RingOf R>
SplitResult<R> spectral_split(const R& r, const typename R::Element& q, const Backend<R>& b) {
  auto s = sgn(r, q, b);
  auto h = ring_half(r);
  SplitResult<R> out;
  out.proj_minus = r.mul(h, sub(r, r.one(), s.value));
  out.proj_plus = r.mul(h, r.add(r.one(), s.value));
  out.q_plus = r.mul(out.proj_plus, r.mul(q, out.proj_plus));
  out.q_minus = r.neg(r.mul(out.proj_minus, r.mul(q, out.proj_minus)));
  out.residuals["proj_plus_idem"] = dist(r, r.mul(out.proj_plus, out.proj_plus), out.proj_plus);
  out.residuals["proj_minus_idem"] =
      dist(r, r.mul(out.proj_minus, out.proj_minus), out.proj_minus);
  out.residuals["proj_sum"] = dist(r, r.add(out.proj_plus, out.proj_minus), r.one());
  out.residuals["commute"] = dist(r, r.mul(out.proj_plus, q), r.mul(q, out.proj_plus));
  if (b.kind == BackendKind::Quadrature) {
    // the restricted blocks have definite sign: sgn(q^+ + P^-) = 1
    auto sp = sgn(r, r.add(out.q_plus, out.proj_minus), b);
    auto sm = sgn(r, r.add(out.q_minus, out.proj_plus), b);
    out.residuals["block_sign_plus"] = dist(r, sp.value, r.one());
    out.residuals["block_sign_minus"] = dist(r, sm.value, r.one());
  }
  return out;
}

// ---------------------------------------------------------------------------
// closed-form pencil-inverse expansions

enum class PencilVariant { SignA, SignB, Sqrt };

// Coefficients of the two-sided inverse of the sign pencil (variant a), of
// the ratio form (variant b), and of the square-root pencil. Sign or root
// data is used when supplied and computed through the backend otherwise.
template <RingOf R>
LaurentSeries<R> pencil_inverse_expansion(const R& r, const typename R::Element& x,
                                          PencilVariant variant, int window, const Backend<R>& b,
                                          std::optional<typename R::Element> data = {}) {
  LaurentSeries<R> out;
  out.lo = -window;
  out.c.assign(2 * window + 1, r.zero());
  out.cls = GrowthClass::RapidRing;

  if (variant == PencilVariant::Sqrt) {
    auto rt = data ? *data : sqrt_spec(r, x, b).value;
    auto rt_inv = detail::invert_or_class_error(r, rt, "sqrt(x)");
    auto u = r.mul(sub(r, rt, r.one()),
                   detail::invert_or_class_error(r, r.add(rt, r.one()), "sqrt(x)+1"));
    auto p = r.one();
    for (int n = 0; n <= window; ++n) {
      auto c = r.mul(rt_inv, p);
      out.c[window + n] = c;
      out.c[window - n] = c;
      p = r.mul(p, u);
    }
    return series_trim(r, out);
  }

  auto s = data ? *data : sgn(r, x, b).value;
  auto h = ring_half(r);
  auto pp = r.mul(h, r.add(r.one(), s));
  auto pm = r.mul(h, sub(r, r.one(), s));
  // x on the plus block padded by 1, -x on the minus block padded by 1
  auto ap = r.add(r.mul(pp, x), pm);
  auto am = r.add(r.neg(r.mul(pm, x)), pp);
  auto ap1_inv = detail::invert_or_class_error(r, r.add(ap, r.one()), "x^+ + 1");
  auto am1_inv = detail::invert_or_class_error(r, r.add(am, r.one()), "x^- + 1");
  auto up = r.mul(sub(r, ap, r.one()), ap1_inv);
  auto um = r.mul(sub(r, am, r.one()), am1_inv);

  if (variant == PencilVariant::SignA) {
    auto base_p = r.mul(pp, scale_int(r, ap1_inv, 2));
    auto base_m = r.mul(pm, scale_int(r, am1_inv, 2));
    auto p = r.one();
    for (int n = 0; n <= window; ++n) {
      out.c[window + n] = r.mul(base_p, p);
      // the minus side starts at z^{-1}
      if (n >= 1) out.c[window - n] = r.mul(base_m, ring_pow(r, um, n - 1));
      p = r.mul(p, up);
    }
    return series_trim(r, out);
  }

  // SignB: z^0 -> sgn, z^n -> 2 P^+ u_+^n, z^{-n} -> -2 P^- u_-^n
  out.c[window] = s;
  auto p = up;
  auto m = um;
  for (int n = 1; n <= window; ++n) {
    out.c[window + n] = r.mul(pp, scale_int(r, p, 2));
    out.c[window - n] = r.neg(r.mul(pm, scale_int(r, m, 2)));
    p = r.mul(p, up);
    m = r.mul(m, um);
  }
  return series_trim(r, out);
}

enum class AuxKind { InvOnePlusAbsR, InvOnePlusSqrt };

// 1/(1+|x|_r) and 1/(1+sqrt x) as weighted circle means of the pencil
// inverse, cross-checked against the direct inversion
template <RingOf R>
SpectralResult<R> aux_integral(const R& r, AuxKind kind, const typename R::Element& x,
                               const Backend<R>& b) {
  SpectralResult<R> out;
  out.backend = b.kind;
  out.nodes = b.kind == BackendKind::Quadrature ? b.nodes : b.order;
  auto h = ring_half(r);
  if (kind == AuxKind::InvOnePlusAbsR) {
    auto exp = pencil_inverse_expansion(r, x, PencilVariant::SignA, 2, b);
    out.value = r.mul(h, r.add(series_coeff(r, exp, 0), series_coeff(r, exp, -1)));
    auto s = sgn(r, x, b);
    auto direct = detail::invert_or_class_error(r, r.add(r.one(), r.mul(x, s.value)), "1+|x|");
    out.residuals["route_defect"] = dist(r, out.value, direct);
    out.error_budget = s.error_budget;
  } else {
    auto exp = pencil_inverse_expansion(r, x, PencilVariant::Sqrt, 2, b);
    out.value = r.mul(h, r.add(series_coeff(r, exp, 0), series_coeff(r, exp, -1)));
    auto rt = sqrt_spec(r, x, b);
    auto direct = detail::invert_or_class_error(r, r.add(r.one(), rt.value), "1+sqrt(x)");
    out.residuals["route_defect"] = dist(r, out.value, direct);
    out.error_budget = rt.error_budget;
  }
  return out;
}

// ---------------------------------------------------------------------------
// homotopies between an element and its sign

enum class HomotopyKind { K, H, L, G };

// K, H, L, G as truncated series in the circle variable at a fixed rational
// deformation parameter. K and L have finite windows; H and G expand the
// pencil inverses geometrically under a decay certificate.
template <RingOf R>
LaurentSeries<R> homotopy_eval(const R& r, HomotopyKind kind, const Rational& t,
                               const typename R::Element& q, int window, const Backend<R>& b) {
  auto s = sgn(r, q, b).value;
  auto rabs = r.mul(q, s);
  auto h = ring_half(r);
  auto ep = r.mul(h, r.add(r.one(), s));
  auto em = r.mul(h, sub(r, r.one(), s));
  auto te = from_rational(r, t);
  auto a = r.mul(h, r.add(r.one(), rabs));   // (1+|q|)/2
  auto bb = r.mul(h, sub(r, r.one(), rabs)); // (1-|q|)/2
  auto bt = r.mul(bb, te);
  auto lam_t = r.add(a, bt);

  switch (kind) {
    case HomotopyKind::K: {
      auto lam_t_inv = detail::invert_or_class_error(r, lam_t, "Lambda(t,|q|)");
      LaurentSeries<R> out;
      out.lo = 0;
      out.c = {r.mul(r.add(r.mul(ep, a), r.mul(em, bt)), lam_t_inv),
               r.mul(r.add(r.mul(ep, bt), r.mul(em, a)), lam_t_inv)};
      return series_trim(r, out);
    }
    case HomotopyKind::L: {
      LaurentSeries<R> out;
      out.lo = 0;
      out.c = {r.add(r.mul(ep, a), r.mul(em, bt)), r.add(r.mul(ep, bt), r.mul(em, a))};
      return series_trim(r, out);
    }
    case HomotopyKind::H: {
      auto a_inv = detail::invert_or_class_error(r, a, "(1+|q|)/2");
      auto w = r.mul(a_inv, bt);
      auto plus = series_scale_right(r, invert_unit_pencil(r, w, window), a_inv);
      auto minus = transform_variable(r, plus, TransformRule::InvertZ);
      auto part_p = series_scale(r, r.mul(ep, lam_t), plus);
      auto part_m = series_scale(r, r.mul(em, lam_t), series_shift(minus, -1));
      return series_add(r, part_p, part_m);
    }
    default: {
      auto a_inv = detail::invert_or_class_error(r, a, "(1+|q|)/2");
      auto w = r.mul(a_inv, bt);
      auto plus = series_scale_right(r, invert_unit_pencil(r, w, window), a_inv);
      auto minus = transform_variable(r, plus, TransformRule::InvertZ);
      auto part_p = series_scale(r, ep, plus);
      auto part_m = series_scale(r, em, series_shift(minus, -1));
      return series_add(r, part_p, part_m);
    }
  }
}

// ---------------------------------------------------------------------------
// contraction toward 1 inside the square-root class

template <RingOf R>
struct ContractionResult {
  typename R::Element c;
  typename R::Element sqrt_c;
  std::map<std::string, double> residuals;
};

template <RingOf R>
ContractionResult<R> contraction_eval(const R& r, const Rational& t,
                                      const typename R::Element& s_el, const Backend<R>& b) {
  auto rt = sqrt_spec(r, s_el, b).value;
  auto u = r.mul(sub(r, rt, r.one()),
                 detail::invert_or_class_error(r, r.add(rt, r.one()), "sqrt+1"));
  auto build = [&](const Rational& tt) {
    auto tu = r.mul(from_rational(r, tt), u);
    auto inv = detail::invert_or_class_error(r, sub(r, r.one(), tu), "1-t u");
    auto sq = r.mul(r.add(r.one(), tu), inv);
    return std::pair{r.mul(sq, sq), sq};
  };
  ContractionResult<R> out;
  auto [c, sq] = build(t);
  out.c = c;
  out.sqrt_c = sq;
  out.residuals["sqrt_consistency"] = dist(r, r.mul(sq, sq), c);
  auto [c_neg, sq_neg] = build(-t);
  out.residuals["inverse_pair"] = dist(r, r.mul(c, c_neg), r.one());

  // transform property: the pencil inverse of C(t,S) has coefficients
  // sqrt(C)^{-1} (t u)^{|n|}; compare the two routes coefficient-wise
  auto sqc_inv = detail::invert_or_class_error(r, sq, "sqrt(C)");
  auto vc = r.mul(sub(r, sq, r.one()),
                  detail::invert_or_class_error(r, r.add(sq, r.one()), "sqrt(C)+1"));
  auto tu = r.mul(from_rational(r, t), u);
  double defect = 0.0;
  auto p1 = r.one();
  auto p2 = r.one();
  for (int n = 0; n <= 8; ++n) {
    defect = std::max(defect, dist(r, r.mul(sqc_inv, p1), r.mul(sqc_inv, p2)));
    p1 = r.mul(p1, vc);
    p2 = r.mul(p2, tu);
  }
  out.residuals["poisson_transform"] = defect;
  return out;
}

// ---------------------------------------------------------------------------
// geometric mean via the two-sided loop pencil

template <RingOf R>
SpectralResult<R> geometric_mean(const R& r, const typename R::Element& a,
                                 const typename R::Element& b_el, const Backend<R>& b) {
  if constexpr (!ComplexEmbeddableRing<R>) {
    throw std::domain_error("geometric mean needs the quadrature backend");
  } else {
    if (b.kind != BackendKind::Quadrature)
      throw std::domain_error("geometric mean needs the quadrature backend");
    using Real = typename R::real_type;
    auto a_inv = detail::invert_or_class_error(r, a, "first argument");
    auto b_inv = detail::invert_or_class_error(r, b_el, "second argument");
    auto mean_of = [&](const typename R::Element& x_inv, const typename R::Element& y_inv) {
      return circle_mean2(r, b.nodes, [&](const Cplx<Real>& z) {
        // (1/z)(((1+z)/2)^2 x^{-1} - ((1-z)/2)^2 y^{-1})
        //   = (2+z+z^{-1})/4 x^{-1} + (2-z-z^{-1})/4 y^{-1}
        Cplx<Real> zi = Cplx<Real>((Real)1) / z;
        Cplx<Real> alpha = (Cplx<Real>((Real)2) + z + zi) * Cplx<Real>((Real)1 / (Real)4);
        Cplx<Real> beta = (Cplx<Real>((Real)2) - z - zi) * Cplx<Real>((Real)1 / (Real)4);
        auto pencil = r.add(r.mul(r.embed_value(alpha), x_inv),
                            r.mul(r.embed_value(beta), y_inv));
        return detail::invert_or_class_error(r, pencil, "loop pencil at a node");
      }, b.pairwise_sum);
    };
    auto [full, half_mean] = mean_of(a_inv, b_inv);
    SpectralResult<R> out;
    out.value = full;
    out.backend = b.kind;
    out.nodes = b.nodes;
    out.error_budget = dist(r, full, half_mean) + r.tolerance();
    auto [swapped, sh] = mean_of(b_inv, a_inv);
    (void)sh;
    out.residuals["symmetry"] = dist(r, full, swapped);
    double comm = dist(r, r.mul(a, b_el), r.mul(b_el, a));
    out.residuals["inputs_commute"] = comm;
    if (comm <= 1e3 * r.tolerance())
      out.residuals["square"] = dist(r, r.mul(full, full), r.mul(a, b_el));
    return out;
  }
}

// ---------------------------------------------------------------------------
// segment form of the square root (equal-weight arccosine rule)

template <RingOf R>
SpectralResult<R> sqrt_real_segment(const R& r, const typename R::Element& s_el, int nodes) {
  if constexpr (!ComplexEmbeddableRing<R>) {
    throw std::domain_error("segment rule needs a complex-embeddable ring");
  } else {
    using Real = typename R::real_type;
    auto mean = [&](int n) {
      typename R::Element acc = r.zero();
      for (int k = 1; k <= n; ++k) {
        Real theta = realmath::pi_value<Real>() * (Real)(2 * k - 1) / (Real)(2 * n);
        Real sn, cs;
        realmath::r_sincos(theta, sn, cs);
        auto pencil = r.add(r.embed_value(Cplx<Real>(((Real)1 + cs) / (Real)2)),
                            r.mul(r.embed_value(Cplx<Real>(((Real)1 - cs) / (Real)2)), s_el));
        acc = r.add(acc, r.mul(s_el, detail::invert_or_class_error(r, pencil,
                                                                   "segment pencil at a node")));
      }
      return r.mul(r.embed_complex(1.0 / (double)n, 0.0), acc);
    };
    SpectralResult<R> out;
    out.value = mean(nodes);
    out.backend = BackendKind::Quadrature;
    out.nodes = nodes;
    out.error_budget = dist(r, out.value, mean(nodes / 2)) + r.tolerance();
    out.residuals["square"] = dist(r, r.mul(out.value, out.value), s_el);
    return out;
  }
}

}  // namespace ringcalc
