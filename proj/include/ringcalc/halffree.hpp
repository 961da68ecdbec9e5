#pragma once

// The calculus over rings without a multiplicative half: symmetrized series
// spaces, both normal-ordering operators, the formal Hilbert-kernel products
// with their integrality guarantees, and idem / f-square-root together with
// their pencil expansions, none of which ever exercises the half capability.
//
// Symmetrized bases. Single variable:
//   angle space    1, (z^k + z^{-k})/2, (z^k - z^{-k})/2
//   bracket space  1,  z^k + z^{-k},     z^k - z^{-k}
// keyed by k > 0 (plus family), k < 0 (minus family, index |k|), k = 0.
// The bracket space acts on the angle space with integer structure
// constants, so no half ever materializes.
//
// Two-variable antisymmetric input for the double-colon Hilbert product uses
// the c-basis
//   c_{n,0} = (z^n - z^{-n})/2 - (w^n - w^{-n})/2
//   c_{n,m} = (z^n - z^{-n})(w^m + w^{-m})/2 - (w^n - w^{-n})(z^m + z^{-m})/2
// and produces integer combinations of d^n_m = ::z^n w^m:: (n >= m >= 0).
// Antisymmetric elements of the doubled angle space are rejected: their
// monomial weights are quarters and the product coefficients fail to be
// integral.

#include <map>
#include <mutex>
#include <utility>

#include "ringcalc/spectral.hpp"

namespace ringcalc {

// ---------------------------------------------------------------------------
// plain two-variable Laurent data

template <RingOf R>
struct BiLaurent {
  std::map<std::pair<int, int>, typename R::Element> c;

  typename R::Element coeff(const R& r, int n, int m) const {
    auto it = c.find({n, m});
    return it == c.end() ? r.zero() : it->second;
  }
};

template <RingOf R>
void bi_add_term(const R& r, BiLaurent<R>& a, int n, int m, const typename R::Element& x) {
  auto key = std::make_pair(n, m);
  auto it = a.c.find(key);
  if (it == a.c.end()) {
    if (!(r.is_exact() && r.eq(x, r.zero()))) a.c[key] = x;
    return;
  }
  it->second = r.add(it->second, x);
  if (r.is_exact() && r.eq(it->second, r.zero())) a.c.erase(it);
}

template <RingOf R>
BiLaurent<R> bi_mul(const R& r, const BiLaurent<R>& a, const BiLaurent<R>& b) {
  BiLaurent<R> out;
  for (const auto& [ka, va] : a.c)
    for (const auto& [kb, vb] : b.c)
      bi_add_term(r, out, ka.first + kb.first, ka.second + kb.second, r.mul(va, vb));
  return out;
}

template <RingOf R>
typename R::Element bi_integral(const R& r, const BiLaurent<R>& a) {
  return a.coeff(r, 0, 0);
}

// single-colon normal ordering  :z^n w^m: = z^{max(n,m)} w^{min(n,m)}
template <RingOf R>
BiLaurent<R> normal_order_single(const R& r, const BiLaurent<R>& a) {
  BiLaurent<R> out;
  for (const auto& [k, x] : a.c)
    bi_add_term(r, out, std::max(k.first, k.second), std::min(k.first, k.second), x);
  return out;
}

template <RingOf R>
bool bi_is_antisymmetric(const R& r, const BiLaurent<R>& a) {
  for (const auto& [k, x] : a.c) {
    if (k.first == k.second && !r.eq(x, r.zero())) return false;
    if (!r.eq(a.coeff(r, k.second, k.first), r.neg(x))) return false;
  }
  return true;
}

// single-colon Hilbert product on antisymmetric data with zero diagonal:
// linear extension of
//   :(1/2)[(z+w)/(z-w)](z^n w^m - z^m w^n): =
//       z^n w^m + 2 sum_{0<k<(n-m)/2} z^{n-k} w^{m+k}
//       + [ (n+m)/2 integral ] z^{(n+m)/2} w^{(n+m)/2}        (n > m)
// All output coefficients are integer multiples of the inputs.
template <RingOf R>
BiLaurent<R> hilbert_product_single(const R& r, const BiLaurent<R>& a) {
  if (!bi_is_antisymmetric(r, a))
    throw std::domain_error("hilbert product needs antisymmetric data with zero diagonal");
  BiLaurent<R> out;
  for (const auto& [k, x] : a.c) {
    int n = k.first, m = k.second;
    if (n <= m) continue;  // each antisymmetric pair is handled from its n > m member
    bi_add_term(r, out, n, m, x);
    for (int kk = 1; 2 * kk < n - m; ++kk)
      bi_add_term(r, out, n - kk, m + kk, scale_int(r, x, 2));
    if ((n + m) % 2 == 0) bi_add_term(r, out, (n + m) / 2, (n + m) / 2, x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// the doubly symmetrized d-basis  d^n_m = ::z^n w^m::  with n >= m >= 0

template <RingOf R>
struct DSeries {
  std::map<std::pair<int, int>, typename R::Element> c;

  typename R::Element coeff(const R& r, int n, int m) const {
    auto it = c.find({n, m});
    return it == c.end() ? r.zero() : it->second;
  }
};

template <RingOf R>
void d_add_term(const R& r, DSeries<R>& d, int n, int m, const typename R::Element& x) {
  auto key = std::make_pair(n, m);
  auto it = d.c.find(key);
  if (it == d.c.end()) {
    d.c[key] = x;
    return;
  }
  it->second = r.add(it->second, x);
  if (r.is_exact() && r.eq(it->second, r.zero())) d.c.erase(it);
}

// double integral of a d-basis combination: only d^0_0 = 1 survives
template <RingOf R>
typename R::Element d_integral(const R& r, const DSeries<R>& d) {
  return d.coeff(r, 0, 0);
}

// double-colon normal ordering of plain data:
//   ::z^n w^m:: = d^{max(|n|,|m|)}_{min(|n|,|m|)}
template <RingOf R>
DSeries<R> normal_order_double(const R& r, const BiLaurent<R>& a) {
  DSeries<R> out;
  for (const auto& [k, x] : a.c) {
    int n = std::abs(k.first), m = std::abs(k.second);
    d_add_term(r, out, std::max(n, m), std::min(n, m), x);
  }
  return out;
}

// Double-colon ordering of one graded basis element of the doubled angle
// space, (z^n +- z^{-n})/2 (w^m +- w^{-m})/2 (n, m >= 1), or the single
// factors when n or m is 0. Only the (+,+) sector survives and it lands on a
// single d with coefficient 1; every other grading cancels to 0.
template <RingOf R>
DSeries<R> normal_order_double_graded(const R& r, bool z_plus, bool w_plus, int n, int m,
                                      const typename R::Element& coeff) {
  std::map<std::pair<int, int>, Rational> monos;
  auto put = [&](int a, int b, const Rational& q) { monos[{a, b}] += q; };
  Rational hz = n == 0 ? Rational(1) : Rational(1, 2);
  Rational hw = m == 0 ? Rational(1) : Rational(1, 2);
  for (int sz = 0; sz < (n == 0 ? 1 : 2); ++sz)
    for (int sw = 0; sw < (m == 0 ? 1 : 2); ++sw) {
      Rational q = hz * hw;
      if (sz == 1 && !z_plus) q = -q;
      if (sw == 1 && !w_plus) q = -q;
      put(sz == 0 ? n : -n, sw == 0 ? m : -m, q);
    }
  std::map<std::pair<int, int>, Rational> dacc;
  for (const auto& [k, q] : monos) {
    int a = std::abs(k.first), b = std::abs(k.second);
    dacc[{std::max(a, b), std::min(a, b)}] += q;
  }
  DSeries<R> out;
  for (const auto& [k, q] : dacc) {
    if (q.is_zero()) continue;
    if (!q.is_integer())
      throw std::domain_error("graded normal ordering produced a non-integer multiple");
    d_add_term(r, out, k.first, k.second, scale_int(r, coeff, (std::int64_t)q.num));
  }
  return out;
}

// ---------------------------------------------------------------------------
// the double-colon Hilbert product on the antisymmetric c-basis

namespace detail {

// scalar engine: :: (1/2)[(z+w)/(z-w)] f ::  for antisymmetric monomial
// weights f with zero diagonal. The product along each anti-diagonal
// a+b = D has coefficient (1/2) sum_a f(a, D-a) sgn(a - c) at position
// (c, D-c); antisymmetry makes the per-diagonal weight sum vanish, which cuts
// the support to a finite strip (asserted).
inline std::map<std::pair<int, int>, Rational> halved_kernel_normal_ordered(
    const std::map<std::pair<int, int>, Rational>& monos) {
  std::map<int, std::map<int, Rational>> by_diag;  // D -> (a -> weight)
  for (const auto& [k, q] : monos) {
    if (q.is_zero()) continue;
    by_diag[k.first + k.second][k.first] += q;
  }
  std::map<std::pair<int, int>, Rational> dacc;
  for (const auto& [D, row] : by_diag) {
    Rational total(0);
    int alo = row.begin()->first, ahi = row.rbegin()->first;
    for (const auto& [a, q] : row) total += q;
    if (!total.is_zero())
      throw std::domain_error("kernel product diverges: anti-diagonal weights do not cancel");
    for (int c = alo - 1; c <= ahi + 1; ++c) {
      Rational acc(0);
      for (const auto& [a, q] : row) {
        int s = a - c;
        acc += q * Rational(s > 0 ? 1 : (s < 0 ? -1 : 0));
      }
      acc *= Rational(1, 2);
      if (acc.is_zero()) continue;
      if (c == alo - 1 || c == ahi + 1)
        throw std::domain_error("kernel product support did not close");
      int d = D - c;
      int hi = std::max(std::abs(c), std::abs(d)), lo = std::min(std::abs(c), std::abs(d));
      dacc[{hi, lo}] += acc;
    }
  }
  for (auto it = dacc.begin(); it != dacc.end();)
    it = it->second.is_zero() ? dacc.erase(it) : std::next(it);
  return dacc;
}

// integer d-coefficients of ::(1/2)[(z+w)/(z-w)] c_{n,m}::, cached
inline const std::map<std::pair<int, int>, std::int64_t>& hilbert_double_basis(int n, int m) {
  static std::map<std::pair<int, int>, std::map<std::pair<int, int>, std::int64_t>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, m);
  auto found = cache.find(key);
  if (found != cache.end()) return found->second;

  std::map<std::pair<int, int>, Rational> monos;
  auto put = [&](int a, int b, const Rational& q) { monos[{a, b}] += q; };
  const Rational h(1, 2);
  if (m == 0) {
    // (z^n - z^{-n})/2 - (w^n - w^{-n})/2
    put(n, 0, h);
    put(-n, 0, -h);
    put(0, n, -h);
    put(0, -n, h);
  } else {
    // (z^n - z^{-n})(w^m + w^{-m})/2 - (w^n - w^{-n})(z^m + z^{-m})/2
    put(n, m, h);
    put(n, -m, h);
    put(-n, m, -h);
    put(-n, -m, -h);
    put(m, n, -h);
    put(-m, n, -h);
    put(m, -n, h);
    put(-m, -n, h);
  }
  auto dacc = halved_kernel_normal_ordered(monos);
  std::map<std::pair<int, int>, std::int64_t> ints;
  for (const auto& [k, q] : dacc) {
    if (!q.is_integer())
      throw std::domain_error("hilbert product coefficient failed to be integral");
    ints[k] = (std::int64_t)q.num;
  }
  return cache[key] = std::move(ints);
}

}  // namespace detail

// antisymmetric element of the mixed two-variable space, written in the
// c-basis: key (n, 0) for c_{n,0} and (n, m) with n, m >= 1 for c_{n,m}
template <RingOf R>
struct CSeries {
  std::map<std::pair<int, int>, typename R::Element> c;
};

template <RingOf R>
DSeries<R> hilbert_product_double(const R& r, const CSeries<R>& cs) {
  DSeries<R> out;
  for (const auto& [k, x] : cs.c) {
    if (k.first < 1 || k.second < 0)
      throw std::domain_error("c-basis keys are (n,0) or (n,m) with n,m >= 1");
    for (const auto& [dk, mult] : detail::hilbert_double_basis(k.first, k.second))
      d_add_term(r, out, dk.first, dk.second, scale_int(r, x, mult));
  }
  return out;
}

// The doubled-angle antisymmetric sector is rejected: its quarter-weight
// monomials make the kernel-product coefficients non-integral. Exposed so the
// failure mode is testable.
inline std::map<std::pair<int, int>, Rational> hilbert_product_double_angle_raw(int n, int m) {
  std::map<std::pair<int, int>, Rational> monos;
  const Rational q(1, 4);
  // (z^n + z^{-n})/2 (w^m - w^{-m})/2 - (z^m - z^{-m})/2 (w^n + w^{-n})/2
  monos[{n, m}] += q;
  monos[{-n, m}] += q;
  monos[{n, -m}] += -q;
  monos[{-n, -m}] += -q;
  monos[{m, n}] += -q;
  monos[{m, -n}] += -q;
  monos[{-m, n}] += q;
  monos[{-m, -n}] += q;
  return detail::halved_kernel_normal_ordered(monos);
}

// ---------------------------------------------------------------------------
// single-variable symmetrized spaces

enum class SymSpace { Angle, Bracket };

template <RingOf R>
struct SymSeries {
  SymSpace space = SymSpace::Angle;
  // k > 0 plus family, k < 0 minus family (index |k|), k = 0 constant
  std::map<int, typename R::Element> c;

  typename R::Element coeff(const R& r, int k) const {
    auto it = c.find(k);
    return it == c.end() ? r.zero() : it->second;
  }
};

template <RingOf R>
void sym_add_term(const R& r, SymSeries<R>& s, int k, const typename R::Element& x) {
  auto it = s.c.find(k);
  if (it == s.c.end()) {
    s.c[k] = x;
    return;
  }
  it->second = r.add(it->second, x);
  if (r.is_exact() && r.eq(it->second, r.zero())) s.c.erase(it);
}

// integration pairing: sum of coefficient products over shared basis indices
template <RingOf R>
typename R::Element integral_pairing(const R& r, const SymSeries<R>& a, const SymSeries<R>& b) {
  if (a.space != SymSpace::Angle || b.space != SymSpace::Bracket)
    throw pairing_error("integral pairing takes an angle-space and a bracket-space series");
  auto acc = r.zero();
  for (const auto& [k, x] : a.c) {
    auto it = b.c.find(k);
    if (it != b.c.end()) acc = r.add(acc, r.mul(x, it->second));
  }
  return acc;
}

// multiplication by 1: doubles every k != 0 coefficient of a bracket series
template <RingOf R>
SymSeries<R> embed_bracket(const R& r, const SymSeries<R>& b) {
  if (b.space != SymSpace::Bracket) throw pairing_error("embed_bracket takes a bracket series");
  SymSeries<R> out;
  out.space = SymSpace::Angle;
  for (const auto& [k, x] : b.c) out.c[k] = k == 0 ? x : scale_int(r, x, 2);
  return out;
}

// graded module action of the bracket space on the angle space; all structure
// constants are integers
template <RingOf R>
SymSeries<R> sym_module_mul(const R& r, const SymSeries<R>& b, const SymSeries<R>& a) {
  if (b.space != SymSpace::Bracket || a.space != SymSpace::Angle)
    throw pairing_error("module action takes bracket x angle");
  SymSeries<R> out;
  out.space = SymSpace::Angle;
  for (const auto& [kb, xb] : b.c) {
    for (const auto& [ka, xa] : a.c) {
      auto prod = r.mul(xb, xa);
      if (kb == 0) {
        sym_add_term(r, out, ka, prod);
        continue;
      }
      int j = std::abs(kb), k = std::abs(ka);
      bool b_plus = kb > 0, a_plus = ka >= 0;
      if (ka == 0) {
        // e_j . 1 or o_j . 1 lands on the matching half-basis doubled
        sym_add_term(r, out, b_plus ? j : -j, scale_int(r, prod, 2));
        continue;
      }
      if (b_plus && a_plus) {
        sym_add_term(r, out, j + k, prod);
        sym_add_term(r, out, std::abs(j - k), prod);  // key 0 when j == k
      } else if (b_plus && !a_plus) {
        sym_add_term(r, out, -(j + k), prod);
        if (k != j) sym_add_term(r, out, k > j ? -(k - j) : -(j - k), k > j ? prod : r.neg(prod));
      } else if (!b_plus && a_plus) {
        sym_add_term(r, out, -(j + k), prod);
        if (j != k) sym_add_term(r, out, j > k ? -(j - k) : -(k - j), j > k ? prod : r.neg(prod));
      } else {
        sym_add_term(r, out, j + k, prod);
        sym_add_term(r, out, std::abs(j - k), r.neg(prod));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// idem and the f-square-root without half

namespace detail {

template <RingOf R>
typename R::Element divide_in_ring(const R& r, const typename R::Element& a,
                                   const typename R::Element& b, const char* what) {
  if constexpr (requires { r.try_divide_exact(a, b); }) {
    auto q = r.try_divide_exact(a, b);
    if (q) return *q;
  } else {
    auto inv = r.try_invert(b);
    if (inv) return r.mul(*inv, a);
  }
  throw std::domain_error(std::string("division failed: ") + what);
}

}  // namespace detail

// idem through the shifted pencil, computed without the half capability:
// algebraically idempotent inputs collapse exactly; exact rings use the
// one-sided geometric expansion on whichever side carries a decay
// certificate; complex rings integrate by quadrature.
template <RingOf R>
SpectralResult<R> idem_nohalf(const R& r, const typename R::Element& p, int order = 32) {
  SpectralResult<R> out;
  out.backend = BackendKind::Series;
  out.nodes = order;
  // the circle mean of (p z) x (one-sided expansion) only reads the
  // expansion's center coefficients, exact at any truncation
  order = std::min(order, 2);

  auto one_m_p = sub(r, r.one(), p);
  if (r.eq(r.mul(p, p), p)) {
    // (1-p+pz)^{-1} = (1-p) + p z^{-1}; the z^0 coefficient of pz (1-p+pz)^{-1}
    // is then p.p
    out.value = r.mul(p, p);
  } else if (r.is_exact()) {
    bool done = false;
    if (auto inv1mp = r.try_invert(one_m_p)) {
      auto u = r.mul(*inv1mp, p);
      if (norm_strictly_less_one(r, u)) {
        auto inv = series_scale_right(r, invert_unit_pencil(r, u, order), *inv1mp);
        out.value = integrate_z0(r, series_mul(r, series_monomial(r, p, 1), inv));
        done = true;
      }
    }
    if (!done) {
      if (auto invp = r.try_invert(p)) {
        auto v = r.mul(*invp, one_m_p);
        if (norm_strictly_less_one(r, v)) {
          auto inv = series_scale_right(
              r,
              series_shift(transform_variable(r, invert_unit_pencil(r, v, order),
                                              TransformRule::InvertZ), -1),
              *invp);
          out.value = integrate_z0(r, series_mul(r, series_monomial(r, p, 1), inv));
          done = true;
        }
      }
    }
    if (!done)
      throw decay_error("no one-sided decay certificate; two-sided exact data needs "
                        "quadrature or supplied splitting");
  } else if constexpr (ComplexEmbeddableRing<R>) {
    using Real = typename R::real_type;
    out.backend = BackendKind::Quadrature;
    int nodes = 64;
    out.nodes = nodes;
    auto [full, half_mean] = circle_mean2(r, nodes, [&](const Cplx<Real>& z) {
      auto zc = r.embed_value(z);
      auto pencil = r.add(one_m_p, r.mul(zc, p));
      return r.mul(r.mul(p, zc), detail::invert_or_class_error(r, pencil, "(1-p)+pz at a node"));
    });
    out.value = full;
    out.error_budget = dist(r, full, half_mean) + r.tolerance();
  } else {
    throw std::domain_error("no half-free route for this ring");
  }
  out.residuals["idempotent"] = dist(r, r.mul(out.value, out.value), out.value);
  out.residuals["commute"] = dist(r, r.mul(out.value, p), r.mul(p, out.value));
  return out;
}

// f-square-root through the pencil 1 + (z - 2 + z^{-1}) t without half:
// exact rings take the rational-root route x = 2t / (1 + sqrt(1-4t)) (all
// divisions are exact ring divisions); complex rings integrate by quadrature.
template <RingOf R>
SpectralResult<R> fsqrt_nohalf(const R& r, const typename R::Element& t, int order = 32) {
  SpectralResult<R> out;
  out.backend = BackendKind::Series;
  out.nodes = order;

  if (r.eq(t, r.zero())) {
    out.value = r.zero();
  } else if constexpr (OrderedScalarRing<R> && ExactSqrtRing<R>) {
    auto four_t = r.add(r.add(t, t), r.add(t, t));
    auto disc = sub(r, r.one(), four_t);
    if (r.scalar_compare(disc, r.zero()) <= 0)
      throw spectral_class_error("pencil 1+(z-2+z^{-1})t not invertible: 1-4t <= 0");
    auto s = r.sqrt_exact(disc);
    if (!s) throw std::domain_error("f-square-root not exactly representable here");
    out.value = detail::divide_in_ring(r, r.add(t, t), r.add(r.one(), *s), "2t / (1+sqrt(1-4t))");
  } else if constexpr (ComplexEmbeddableRing<R>) {
    using Real = typename R::real_type;
    out.backend = BackendKind::Quadrature;
    int nodes = 64;
    out.nodes = nodes;
    auto [full, half_mean] = circle_mean2(r, nodes, [&](const Cplx<Real>& z) {
      Cplx<Real> zi = Cplx<Real>((Real)1) / z;
      Cplx<Real> c = z - Cplx<Real>((Real)2) + zi;
      auto pencil = r.add(r.one(), r.mul(r.embed_value(c), t));
      auto w = r.mul(r.embed_value(z + Cplx<Real>((Real)1)), t);
      return r.mul(w, detail::invert_or_class_error(r, pencil, "f-square-root pencil"));
    });
    out.value = full;
    out.error_budget = dist(r, full, half_mean) + r.tolerance();
  } else {
    throw std::domain_error("no half-free route for this ring");
  }
  auto x = out.value;
  out.residuals["fsquare"] = dist(r, r.mul(x, sub(r, r.one(), x)), t);
  auto one_m_2x = sub(r, r.one(), r.add(x, x));
  auto one_m_4t = sub(r, r.one(), r.add(r.add(t, t), r.add(t, t)));
  out.residuals["shifted_square"] = dist(r, r.mul(one_m_2x, one_m_2x), one_m_4t);
  return out;
}

// coefficients of (1 + (z-2+z^{-1}) t)^{-1}: (1-2x)^{-1} (-x (1-x)^{-1})^{|n|}
// with x the f-square-root; the (1+z)-weighted integral recovers (1-x)^{-1}
template <RingOf R>
LaurentSeries<R> fsqrt_pencil_expansion(const R& r, const typename R::Element& t, int window,
                                        std::optional<typename R::Element> fsqrt_data = {},
                                        int order = 32) {
  auto x = fsqrt_data ? *fsqrt_data : fsqrt_nohalf(r, t, order).value;
  auto one_m_2x = sub(r, r.one(), r.add(x, x));
  auto center = detail::invert_or_class_error(r, one_m_2x, "1-2x");
  auto ratio = r.neg(detail::divide_in_ring(r, x, sub(r, r.one(), x), "x/(1-x)"));
  LaurentSeries<R> out;
  out.lo = -window;
  out.c.assign(2 * window + 1, r.zero());
  out.cls = GrowthClass::RapidRing;
  auto p = r.one();
  for (int n = 0; n <= window; ++n) {
    auto cn = r.mul(center, p);
    out.c[window + n] = cn;
    out.c[window - n] = cn;
    p = r.mul(p, ratio);
  }
  return series_trim(r, out);
}

// idem recovered from the f-square-root of p(1-p):
//   idem p = (fsqrt(p(1-p)) - p) / (1-2p)
template <RingOf R>
SpectralResult<R> idem_from_fsqrt(const R& r, const typename R::Element& p, int order = 32) {
  auto pp = r.mul(p, sub(r, r.one(), p));
  auto y = fsqrt_nohalf(r, pp, order);
  auto one_m_2p = sub(r, r.one(), r.add(p, p));
  SpectralResult<R> out;
  out.backend = y.backend;
  out.nodes = y.nodes;
  out.error_budget = y.error_budget;
  out.value = detail::divide_in_ring(r, sub(r, y.value, p), one_m_2p, "(fsqrt - p)/(1-2p)");
  out.residuals["idempotent"] = dist(r, r.mul(out.value, out.value), out.value);
  // fsqrt(p(1-p)) = p + idem p - 2 p idem p
  auto recon = r.add(p, sub(r, out.value, scale_int(r, r.mul(p, out.value), 2)));
  out.residuals["decomposition"] = dist(r, y.value, recon);
  return out;
}

}  // namespace ringcalc
