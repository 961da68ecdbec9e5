#pragma once

// Truncated two-sided Laurent series over an arbitrary ring, with growth
// class discipline, weighted seminorms, the z^0-coefficient integral, the
// z->1 limit, variable transforms, unit-pencil inversion with decay
// certificates, and the ordered multi-argument pencil combinator.
//
// Growth classes mirror the chain of six coefficient regimes
//   finite -> rapid -> summable -> bounded -> polynomial -> formal
// ordered by inclusion. The first three are rings; the last three are only
// modules over them (for one-sided power series the two largest are rings
// again). Multiplication of two module-class series is rejected.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "ringcalc/rings.hpp"

namespace ringcalc {

enum class GrowthClass {
  FiniteRing = 0,
  RapidRing = 1,
  SummableRing = 2,
  BoundedModule = 3,
  PolyModule = 4,
  FormalModule = 5,
};

inline const char* growth_class_name(GrowthClass g) {
  switch (g) {
    case GrowthClass::FiniteRing: return "finite_ring";
    case GrowthClass::RapidRing: return "rapid_ring";
    case GrowthClass::SummableRing: return "summable_ring";
    case GrowthClass::BoundedModule: return "bounded_module";
    case GrowthClass::PolyModule: return "poly_module";
    default: return "formal_module";
  }
}

inline bool is_ring_class(GrowthClass g, bool one_sided = false) {
  if ((int)g <= (int)GrowthClass::SummableRing) return true;
  return one_sided && (int)g >= (int)GrowthClass::PolyModule;
}

// join along the inclusion chain; anything unknown errs larger by construction
inline GrowthClass class_join(GrowthClass a, GrowthClass b) {
  return (int)a >= (int)b ? a : b;
}

class growth_class_error : public std::domain_error {
public:
  explicit growth_class_error(const std::string& what) : std::domain_error(what) {}
};

// weight rule alpha : Z -> [0, inf) for the weighted seminorms p_alpha
struct Weight {
  enum class Kind { Ones, Polynomial, Geometric, FiniteSupport };
  Kind kind = Kind::Ones;
  int degree = 0;
  double ratio = 1.0;
  std::set<int> support;

  static Weight ones() { return {}; }
  static Weight polynomial(int d) {
    Weight w;
    w.kind = Kind::Polynomial;
    w.degree = d;
    return w;
  }
  static Weight geometric(double r) {
    Weight w;
    w.kind = Kind::Geometric;
    w.ratio = r;
    return w;
  }
  static Weight finite_support(std::set<int> s) {
    Weight w;
    w.kind = Kind::FiniteSupport;
    w.support = std::move(s);
    return w;
  }

  double operator()(int n) const {
    switch (kind) {
      case Kind::Ones: return 1.0;
      case Kind::Polynomial: {
        double b = 1.0 + (n < 0 ? -n : n), acc = 1.0;
        for (int i = 0; i < degree; ++i) acc *= b;
        return acc;
      }
      case Kind::Geometric: {
        double acc = 1.0;
        for (int i = 0, m = (n < 0 ? -n : n); i < m; ++i) acc *= ratio;
        return acc;
      }
      default: return support.count(n) ? 1.0 : 0.0;
    }
  }
};

// Companion weight for the product seminorm bound on two-sided series:
// alpha~(n) = 1 v max_{-n <= m <= n} alpha(m). Recorded for class-preservation
// bookkeeping; nothing here computes through it. (One-sided power series
// would take the square-root-of-max rule instead.)
inline double companion_weight(const Weight& alpha, int n) {
  double best = 1.0;
  for (int m = -(n < 0 ? -n : n); m <= (n < 0 ? -n : n); ++m)
    best = std::max(best, alpha(m));
  return best;
}

template <RingOf R>
struct LaurentSeries {
  using Elem = typename R::Element;

  int lo = 0;
  std::vector<Elem> c;  // exponents lo .. lo + c.size() - 1; empty means 0
  GrowthClass cls = GrowthClass::FiniteRing;
  bool one_sided = false;  // power series: support in n >= 0
  std::optional<double> tail_bound;

  int hi() const { return lo + (int)c.size() - 1; }
  bool empty() const { return c.empty(); }
};

template <typename>
struct is_laurent_ring : std::false_type {};

// ---------------------------------------------------------------------------
// constructors and access

template <RingOf R>
LaurentSeries<R> series_zero(const R&) {
  return {};
}

template <RingOf R>
LaurentSeries<R> series_monomial(const R& r, const typename R::Element& x, int n,
                                 GrowthClass cls = GrowthClass::FiniteRing) {
  LaurentSeries<R> s;
  s.lo = n;
  s.c = {x};
  s.cls = cls;
  s.one_sided = n >= 0;
  (void)r;
  return s;
}

template <RingOf R>
LaurentSeries<R> series_const(const R& r, const typename R::Element& x,
                              GrowthClass cls = GrowthClass::FiniteRing) {
  return series_monomial(r, x, 0, cls);
}

template <RingOf R>
LaurentSeries<R> series_z(const R& r) {
  return series_monomial(r, r.one(), 1);
}

template <RingOf R>
typename R::Element series_coeff(const R& r, const LaurentSeries<R>& a, int n) {
  if (a.empty() || n < a.lo || n > a.hi()) return r.zero();
  return a.c[n - a.lo];
}

template <RingOf R>
LaurentSeries<R> series_trim(const R& r, LaurentSeries<R> a) {
  auto zero_at = [&](std::size_t i) { return r.seminorm(0, a.c[i]) == 0.0; };
  while (!a.c.empty() && zero_at(a.c.size() - 1)) a.c.pop_back();
  std::size_t front = 0;
  while (front < a.c.size() && zero_at(front)) ++front;
  if (front > 0) {
    a.c.erase(a.c.begin(), a.c.begin() + front);
    a.lo += (int)front;
  }
  if (a.c.empty()) a.lo = 0;
  return a;
}

// ---------------------------------------------------------------------------
// arithmetic

template <RingOf R>
LaurentSeries<R> series_add(const R& r, const LaurentSeries<R>& a, const LaurentSeries<R>& b) {
  if (a.empty()) {
    auto out = b;
    out.cls = class_join(a.cls, b.cls);
    return out;
  }
  if (b.empty()) {
    auto out = a;
    out.cls = class_join(a.cls, b.cls);
    return out;
  }
  LaurentSeries<R> out;
  out.lo = std::min(a.lo, b.lo);
  int hi = std::max(a.hi(), b.hi());
  out.c.assign(hi - out.lo + 1, r.zero());
  for (int n = out.lo; n <= hi; ++n)
    out.c[n - out.lo] = r.add(series_coeff(r, a, n), series_coeff(r, b, n));
  out.cls = class_join(a.cls, b.cls);
  out.one_sided = a.one_sided && b.one_sided;
  return series_trim(r, out);
}

template <RingOf R>
LaurentSeries<R> series_neg(const R& r, LaurentSeries<R> a) {
  for (auto& x : a.c) x = r.neg(x);
  return a;
}

// Exact convolution over the truncated windows. At least one factor must
// carry a ring-flag class; module x module has no defined pairing.
template <RingOf R>
LaurentSeries<R> series_mul(const R& r, const LaurentSeries<R>& a, const LaurentSeries<R>& b) {
  if (!is_ring_class(a.cls, a.one_sided) && !is_ring_class(b.cls, b.one_sided))
    throw pairing_error("module-class times module-class multiplication is undefined");
  if (a.empty() || b.empty()) {
    LaurentSeries<R> out;
    out.cls = class_join(a.cls, b.cls);
    return out;
  }
  LaurentSeries<R> out;
  out.lo = a.lo + b.lo;
  out.c.assign(a.c.size() + b.c.size() - 1, r.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (r.seminorm(0, a.c[i]) == 0.0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = r.add(out.c[i + j], r.mul(a.c[i], b.c[j]));
  }
  out.cls = class_join(a.cls, b.cls);
  out.one_sided = a.one_sided && b.one_sided;
  return series_trim(r, out);
}

template <RingOf R>
LaurentSeries<R> series_scale(const R& r, const typename R::Element& s, LaurentSeries<R> a) {
  for (auto& x : a.c) x = r.mul(s, x);
  return series_trim(r, a);
}

template <RingOf R>
LaurentSeries<R> series_scale_right(const R& r, LaurentSeries<R> a, const typename R::Element& s) {
  for (auto& x : a.c) x = r.mul(x, s);
  return series_trim(r, a);
}

template <RingOf R>
bool series_eq(const R& r, const LaurentSeries<R>& a, const LaurentSeries<R>& b) {
  int lo = std::min(a.empty() ? 0 : a.lo, b.empty() ? 0 : b.lo);
  int hi = std::max(a.empty() ? 0 : a.hi(), b.empty() ? 0 : b.hi());
  for (int n = lo; n <= hi; ++n)
    if (!r.eq(series_coeff(r, a, n), series_coeff(r, b, n))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// integration, limit, transforms, seminorms

// the circle mean: coefficient of z^0
template <RingOf R>
typename R::Element integrate_z0(const R& r, const LaurentSeries<R>& a) {
  return series_coeff(r, a, 0);
}

// sum of all coefficients; defined for summable-or-smaller classes
template <RingOf R>
typename R::Element limit_at_one(const R& r, const LaurentSeries<R>& a) {
  if ((int)a.cls > (int)GrowthClass::SummableRing)
    throw growth_class_error("limit at 1 requires a summable-or-smaller class");
  auto acc = r.zero();
  for (const auto& x : a.c) acc = r.add(acc, x);
  return acc;
}

enum class TransformRule { NegateZ, InvertZ, ScaleByT };

template <RingOf R>
LaurentSeries<R> series_shift(LaurentSeries<R> a, int d) {
  a.lo += d;
  a.one_sided = a.one_sided && a.lo >= 0;
  return a;
}

template <RingOf R>
LaurentSeries<R> transform_variable(const R& r, const LaurentSeries<R>& a, TransformRule rule,
                                    int t_power = 1) {
  LaurentSeries<R> out = a;
  switch (rule) {
    case TransformRule::NegateZ:
      for (int n = a.lo; n <= a.hi(); ++n)
        if (((n % 2) + 2) % 2 == 1) out.c[n - a.lo] = r.neg(out.c[n - a.lo]);
      return out;
    case TransformRule::InvertZ: {
      LaurentSeries<R> rev;
      rev.cls = a.cls;
      if (!a.empty()) {
        rev.lo = -a.hi();
        rev.c.assign(a.c.rbegin(), a.c.rend());
      }
      rev.one_sided = rev.empty() || rev.lo >= 0;
      return rev;
    }
    default:
      // multiply the n-th coefficient by t^{k n}; needs t-graded coefficients
      if constexpr (is_laurent_ring<R>::value) {
        for (int n = a.lo; n <= a.hi(); ++n)
          out.c[n - a.lo] = series_shift(out.c[n - a.lo], t_power * n);
        return out;
      } else {
        throw std::domain_error("scale_by_t needs t-graded (nested series) coefficients");
      }
  }
}

template <RingOf R>
double weighted_seminorm(const R& r, const LaurentSeries<R>& a, std::size_t p_index,
                         const Weight& alpha) {
  double acc = 0;
  for (int n = a.lo; n <= a.hi() && !a.empty(); ++n)
    acc += alpha(n) * r.seminorm(p_index, a.c[n - a.lo]);
  return acc;
}

// ---------------------------------------------------------------------------
// unit-pencil inversion: (1 + z w)^{-1} = sum (-w)^n z^n, truncated at M,
// admitted only under a decay certificate on the powers of w.

template <RingOf R>
LaurentSeries<R> invert_unit_pencil(const R& r, const typename R::Element& w, int order) {
  double pw = r.seminorm(0, w);
  if (r.is_exact()) {
    if (!norm_strictly_less_one(r, w))
      throw decay_error("powers of w do not decay (need p(w) < 1 on an exact ring)");
  } else {
    double pm = r.seminorm(0, ring_pow(r, w, order));
    if (pm > 1e-12 * r.seminorm(0, r.one()))
      throw decay_error("decay certificate failed: p(w^M) above threshold");
  }
  LaurentSeries<R> out;
  out.lo = 0;
  out.c.reserve(order + 1);
  auto p = r.one();
  for (int n = 0; n <= order; ++n) {
    out.c.push_back(p);
    p = r.neg(r.mul(w, p));
  }
  out.cls = GrowthClass::RapidRing;
  out.one_sided = true;
  if (pw < 1.0) {
    double t = 1.0;
    for (int i = 0; i <= order; ++i) t *= pw;
    out.tail_bound = t / (1.0 - pw);
  }
  return out;
}

// ---------------------------------------------------------------------------
// ordered multi-argument pencil combinator:
//   2^{-ceil(n/2)} sum_{e in {0,1}^n} (prod_{j<n} (-1)^{e_j e_{j+1}}) prod_k c_k^{e_k}
// with factors multiplied in argument order.

template <RingOf R>
typename R::Element lambda_combinator(const R& r, const std::vector<typename R::Element>& args) {
  const std::size_t n = args.size();
  if (n == 0) return r.one();
  if (n > 16) throw std::invalid_argument("lambda_combinator: too many arguments");
  auto acc = r.zero();
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    int sign = 1;
    for (std::size_t j = 0; j + 1 < n; ++j)
      if ((mask >> j & 1) && (mask >> (j + 1) & 1)) sign = -sign;
    auto term = r.one();
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1) term = r.mul(term, args[k]);
    acc = sign > 0 ? r.add(acc, term) : sub(r, acc, term);
  }
  auto h = ring_half(r);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) acc = r.mul(h, acc);
  return acc;
}

// ---------------------------------------------------------------------------
// series ring adapter: makes truncated Laurent series usable as coefficients
// of further series (two-variable data) and as combinator arguments. Products
// clamp to the configured window, which is the truncation policy.

template <RingOf Base>
class LaurentRing {
public:
  using Element = LaurentSeries<Base>;

  explicit LaurentRing(Base base, int max_window = 32)
      : base_(std::move(base)), window_(max_window) {}

  const Base& base() const { return base_; }
  int max_window() const { return window_; }

  // the formal variable of this series ring
  Element var() const { return series_monomial(base_, base_.one(), 1); }
  Element var_inv() const { return series_monomial(base_, base_.one(), -1); }

  Element zero() const { return {}; }
  Element one() const { return series_const(base_, base_.one()); }
  Element add(const Element& a, const Element& b) const { return series_add(base_, a, b); }
  Element neg(const Element& a) const { return series_neg(base_, a); }
  Element mul(const Element& a, const Element& b) const {
    return clamp(series_mul(base_, a, b));
  }
  bool eq(const Element& a, const Element& b) const { return series_eq(base_, a, b); }
  Element from_int(std::int64_t k) const { return series_const(base_, base_.from_int(k)); }
  std::optional<Element> half() const {
    auto h = base_.half();
    if (!h) return std::nullopt;
    return series_const(base_, *h);
  }
  std::optional<Element> try_invert(const Element& a) const {
    // only z^0-supported series invert exactly; pencils go through
    // invert_unit_pencil with an explicit decay certificate
    if (a.empty() || a.lo != 0 || a.c.size() != 1) return std::nullopt;
    auto inv = base_.try_invert(a.c[0]);
    if (!inv) return std::nullopt;
    return series_const(base_, *inv);
  }
  std::size_t seminorm_count() const { return base_.seminorm_count(); }
  double seminorm(std::size_t i, const Element& a) const {
    return weighted_seminorm(base_, a, i, Weight::ones());
  }
  std::size_t companion(std::size_t i) const { return base_.companion(i); }
  bool is_exact() const { return base_.is_exact(); }
  double tolerance() const { return base_.tolerance(); }

  Element clamp(Element a) const {
    if (a.empty()) return a;
    while (!a.c.empty() && a.hi() > window_) a.c.pop_back();
    while (!a.c.empty() && a.lo < -window_) {
      a.c.erase(a.c.begin());
      ++a.lo;
    }
    if (a.c.empty()) a.lo = 0;
    return a;
  }

private:
  Base base_;
  int window_;
};

template <typename B>
struct is_laurent_ring<LaurentRing<B>> : std::true_type {};

}  // namespace ringcalc
