#pragma once

// Ring contract and concrete instances. A ring object carries the element
// operations, an indexed seminorm family with companion indices (p(XY) <=
// p~(X) p~(Y)), an optional multiplicative half and optional inversion.
// Everything is value-semantic and immutable; all operations are pure.
//
// Every shipped seminorm is submultiplicative on its own, so the companion
// map is the identity here. A genuinely infinite family with distinct
// companions would extend the companion() table; nothing else assumes
// p~ = p.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringcalc/cplx.hpp"
#include "ringcalc/matrix.hpp"
#include "ringcalc/rational.hpp"

namespace ringcalc {

class spectral_class_error : public std::runtime_error {
public:
  explicit spectral_class_error(const std::string& what) : std::runtime_error(what) {}
};

class decay_error : public std::runtime_error {
public:
  explicit decay_error(const std::string& what) : std::runtime_error(what) {}
};

class pairing_error : public std::domain_error {
public:
  explicit pairing_error(const std::string& what) : std::domain_error(what) {}
};

class half_missing_error : public std::runtime_error {
public:
  explicit half_missing_error(const std::string& what) : std::runtime_error(what) {}
};

// thrown by TrappingHalfRing when the half capability is exercised
class half_trap_error : public std::logic_error {
public:
  half_trap_error() : std::logic_error("half requested on a trapping ring") {}
};

template <typename R>
concept RingOf = requires(const R& r, const typename R::Element& x) {
  typename R::Element;
  { r.zero() } -> std::same_as<typename R::Element>;
  { r.one() } -> std::same_as<typename R::Element>;
  { r.add(x, x) } -> std::same_as<typename R::Element>;
  { r.neg(x) } -> std::same_as<typename R::Element>;
  { r.mul(x, x) } -> std::same_as<typename R::Element>;
  { r.eq(x, x) } -> std::convertible_to<bool>;
  { r.from_int(std::int64_t{}) } -> std::same_as<typename R::Element>;
  { r.half() } -> std::same_as<std::optional<typename R::Element>>;
  { r.try_invert(x) } -> std::same_as<std::optional<typename R::Element>>;
  { r.seminorm_count() } -> std::convertible_to<std::size_t>;
  { r.seminorm(std::size_t{}, x) } -> std::convertible_to<double>;
  { r.companion(std::size_t{}) } -> std::convertible_to<std::size_t>;
  { r.is_exact() } -> std::convertible_to<bool>;
  { r.tolerance() } -> std::convertible_to<double>;
};

template <RingOf R>
typename R::Element sub(const R& r, const typename R::Element& a, const typename R::Element& b) {
  return r.add(a, r.neg(b));
}

template <RingOf R>
typename R::Element ring_pow(const R& r, typename R::Element base, std::int64_t e) {
  if (e < 0) {
    auto inv = r.try_invert(base);
    if (!inv) throw std::domain_error("ring_pow: negative power of non-invertible element");
    return ring_pow(r, *inv, -e);
  }
  auto acc = r.one();
  while (e > 0) {
    if (e & 1) acc = r.mul(acc, base);
    base = r.mul(base, base);
    e >>= 1;
  }
  return acc;
}

template <RingOf R>
typename R::Element scale_int(const R& r, const typename R::Element& x, std::int64_t k) {
  return r.mul(r.from_int(k), x);
}

// num * den^{-1}; throws if the denominator is not invertible in the ring
template <RingOf R>
typename R::Element from_rational(const R& r, const Rational& q) {
  auto n = r.from_int((std::int64_t)q.num);
  if (q.den == 1) return n;
  auto dinv = r.try_invert(r.from_int((std::int64_t)q.den));
  if (!dinv) throw std::domain_error("ring does not invert denominator " + q.str());
  return r.mul(n, *dinv);
}

template <RingOf R>
typename R::Element ring_half(const R& r) {
  auto h = r.half();
  if (!h) throw half_missing_error("ring has no multiplicative half");
  return *h;
}

template <RingOf R>
double dist(const R& r, const typename R::Element& a, const typename R::Element& b) {
  return r.seminorm(0, sub(r, a, b));
}

// Exact strict-contraction test where the ring provides one; otherwise the
// double-valued seminorm decides.
template <RingOf R>
bool norm_strictly_less_one(const R& r, const typename R::Element& x) {
  if constexpr (requires { r.norm_lt_one(x); }) {
    return r.norm_lt_one(x);
  } else {
    return r.seminorm(0, x) < 1.0;
  }
}

template <typename R>
concept ComplexEmbeddableRing = RingOf<R> && requires(const R& r) {
  typename R::real_type;
  { r.embed_complex(0.0, 0.0) } -> std::same_as<typename R::Element>;
};

// ---------------------------------------------------------------------------
// concrete rings

template <typename Real = double>
class ComplexRing {
public:
  using Element = Cplx<Real>;
  using real_type = Real;

  explicit ComplexRing(double tol = 1e-10) : tol_(tol) {}

  Element zero() const { return {}; }
  Element one() const { return Element((Real)1); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool eq(const Element& a, const Element& b) const { return (double)(a - b).abs() <= tol_; }
  Element from_int(std::int64_t k) const { return Element((Real)k); }
  std::optional<Element> half() const { return Element((Real)1 / (Real)2); }
  std::optional<Element> try_invert(const Element& x) const {
    if (x.abs2() == 0) return std::nullopt;
    return one() / x;
  }
  std::size_t seminorm_count() const { return 1; }
  double seminorm(std::size_t, const Element& x) const { return (double)x.abs(); }
  std::size_t companion(std::size_t i) const { return i; }
  bool is_exact() const { return false; }
  double tolerance() const { return tol_; }

  Element embed_complex(double re, double im) const { return {(Real)re, (Real)im}; }
  Element embed_value(const Cplx<Real>& z) const { return z; }
  Element from_diag(const std::vector<Cplx<Real>>& d) const {
    if (d.size() != 1) throw std::invalid_argument("scalar ring: diagonal must have one entry");
    return d[0];
  }

private:
  double tol_;
};

template <typename Real = double>
class ComplexMatrixRing {
public:
  using Element = Matrix<Cplx<Real>>;
  using real_type = Real;

  explicit ComplexMatrixRing(std::size_t n, double tol = 1e-10) : n_(n), tol_(tol) {}

  std::size_t dim() const { return n_; }
  Element zero() const { return Element(n_); }
  Element one() const { return Element::identity(n_); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool eq(const Element& a, const Element& b) const { return (a - b).row_sum_norm() <= tol_; }
  Element from_int(std::int64_t k) const { return one().scaled(Cplx<Real>((Real)k)); }
  std::optional<Element> half() const { return one().scaled(Cplx<Real>((Real)1 / (Real)2)); }
  std::optional<Element> try_invert(const Element& x) const { return x.try_invert(); }
  // max absolute row sum; submultiplicative, so the companion is itself
  std::size_t seminorm_count() const { return 1; }
  double seminorm(std::size_t, const Element& x) const { return x.row_sum_norm(); }
  std::size_t companion(std::size_t i) const { return i; }
  bool is_exact() const { return false; }
  double tolerance() const { return tol_; }

  Element embed_complex(double re, double im) const {
    return one().scaled(Cplx<Real>((Real)re, (Real)im));
  }
  Element embed_value(const Cplx<Real>& z) const { return one().scaled(z); }
  Element from_diag(const std::vector<Cplx<Real>>& d) const {
    if (d.size() != n_) throw std::invalid_argument("diagonal length does not match dimension");
    Element m(n_);
    for (std::size_t i = 0; i < n_; ++i) m(i, i) = d[i];
    return m;
  }

private:
  std::size_t n_;
  double tol_;
};

class RationalRing {
public:
  using Element = Rational;

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool eq(const Element& a, const Element& b) const { return a == b; }
  Element from_int(std::int64_t k) const { return Rational(k); }
  std::optional<Element> half() const { return Rational(1, 2); }
  std::optional<Element> try_invert(const Element& x) const {
    if (x.is_zero()) return std::nullopt;
    return Rational::raw(x.den, x.num);
  }
  std::size_t seminorm_count() const { return 1; }
  double seminorm(std::size_t, const Element& x) const { return std::fabs(x.to_double()); }
  std::size_t companion(std::size_t i) const { return i; }
  bool is_exact() const { return true; }
  double tolerance() const { return 0.0; }

  bool norm_lt_one(const Element& x) const { return detail::i128_abs(x.num) < x.den; }
  std::optional<Element> sqrt_exact(const Element& x) const { return rational_sqrt_exact(x); }
  // sign of a - b; the scalars are real, so spectral sides are decidable
  int scalar_compare(const Element& a, const Element& b) const {
    return a < b ? -1 : (a == b ? 0 : 1);
  }
  std::optional<Element> try_divide_exact(const Element& a, const Element& b) const {
    if (b.is_zero()) return std::nullopt;
    return a / b;
  }
};

class RationalMatrixRing {
public:
  using Element = Matrix<Rational>;

  explicit RationalMatrixRing(std::size_t n) : n_(n) {}

  std::size_t dim() const { return n_; }
  Element zero() const { return Element(n_); }
  Element one() const { return Element::identity(n_); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool eq(const Element& a, const Element& b) const {
    for (std::size_t i = 0; i < a.data().size(); ++i)
      if (a.data()[i] != b.data()[i]) return false;
    return true;
  }
  Element from_int(std::int64_t k) const { return one().scaled(Rational(k)); }
  std::optional<Element> half() const { return one().scaled(Rational(1, 2)); }
  std::optional<Element> try_invert(const Element& x) const { return x.try_invert(); }
  std::size_t seminorm_count() const { return 1; }
  double seminorm(std::size_t, const Element& x) const { return x.row_sum_norm(); }
  std::size_t companion(std::size_t i) const { return i; }
  bool is_exact() const { return true; }
  double tolerance() const { return 0.0; }

  bool norm_lt_one(const Element& x) const {
    for (std::size_t i = 0; i < n_; ++i) {
      Rational s(0);
      for (std::size_t j = 0; j < n_; ++j) s += x(i, j).abs();
      if (!(s < Rational(1))) return false;
    }
    return true;
  }

private:
  std::size_t n_;
};

// plain integers: no half, units are +-1
class IntRing {
public:
  using Element = std::int64_t;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(Element a, Element b) const { return a + b; }
  Element neg(Element a) const { return -a; }
  Element mul(Element a, Element b) const { return a * b; }
  bool eq(Element a, Element b) const { return a == b; }
  Element from_int(std::int64_t k) const { return k; }
  std::optional<Element> half() const { return std::nullopt; }
  std::optional<Element> try_invert(Element x) const {
    if (x == 1 || x == -1) return x;
    return std::nullopt;
  }
  std::size_t seminorm_count() const { return 1; }
  double seminorm(std::size_t, Element x) const { return (double)(x < 0 ? -x : x); }
  std::size_t companion(std::size_t i) const { return i; }
  bool is_exact() const { return true; }
  double tolerance() const { return 0.0; }

  bool norm_lt_one(Element x) const { return x == 0; }
  std::optional<Element> sqrt_exact(Element x) const {
    if (x < 0) return std::nullopt;
    auto r = (Element)detail::i128_isqrt(x);
    return r * r == x ? std::optional<Element>(r) : std::nullopt;
  }
  int scalar_compare(Element a, Element b) const { return a < b ? -1 : (a == b ? 0 : 1); }
  // exact quotient when it exists in the ring; division stays inside Z
  std::optional<Element> try_divide_exact(Element a, Element b) const {
    if (b == 0 || a % b != 0) return std::nullopt;
    return a / b;
  }
};

// Delegating wrapper whose half() throws. Used to certify that a computation
// path never exercises the half capability.
template <RingOf Base>
class TrappingHalfRing {
public:
  using Element = typename Base::Element;

  explicit TrappingHalfRing(Base base) : base_(std::move(base)) {}

  Element zero() const { return base_.zero(); }
  Element one() const { return base_.one(); }
  Element add(const Element& a, const Element& b) const { return base_.add(a, b); }
  Element neg(const Element& a) const { return base_.neg(a); }
  Element mul(const Element& a, const Element& b) const { return base_.mul(a, b); }
  bool eq(const Element& a, const Element& b) const { return base_.eq(a, b); }
  Element from_int(std::int64_t k) const { return base_.from_int(k); }
  std::optional<Element> half() const {
    ++trap_count_;
    throw half_trap_error();
  }
  std::optional<Element> try_invert(const Element& x) const { return base_.try_invert(x); }
  std::size_t seminorm_count() const { return base_.seminorm_count(); }
  double seminorm(std::size_t i, const Element& x) const { return base_.seminorm(i, x); }
  std::size_t companion(std::size_t i) const { return base_.companion(i); }
  bool is_exact() const { return base_.is_exact(); }
  double tolerance() const { return base_.tolerance(); }
  bool norm_lt_one(const Element& x) const { return norm_strictly_less_one(base_, x); }
  std::optional<Element> sqrt_exact(const Element& x) const
    requires requires(const Base& b, const Element& e) { b.sqrt_exact(e); }
  {
    return base_.sqrt_exact(x);
  }
  int scalar_compare(const Element& a, const Element& b) const
    requires requires(const Base& bb, const Element& e) { bb.scalar_compare(e, e); }
  {
    return base_.scalar_compare(a, b);
  }
  std::optional<Element> try_divide_exact(const Element& a, const Element& b) const
    requires requires(const Base& bb, const Element& e) { bb.try_divide_exact(e, e); }
  {
    return base_.try_divide_exact(a, b);
  }

  std::size_t half_requests() const { return trap_count_; }

private:
  Base base_;
  mutable std::size_t trap_count_ = 0;
};

// ---------------------------------------------------------------------------
// Cayley correspondence: q -> (1-q)(1+q)^{-1}. The map is an involution, so
// the inverse direction is the same formula.

template <RingOf R>
typename R::Element cayley(const R& r, const typename R::Element& q) {
  auto inv = r.try_invert(r.add(r.one(), q));
  if (!inv) throw spectral_class_error("1+q not invertible: pencil 1+zW singular at z=-1");
  return r.mul(sub(r, r.one(), q), *inv);
}

template <RingOf R>
typename R::Element cayley_inv(const R& r, const typename R::Element& w) {
  return cayley(r, w);
}

// ---------------------------------------------------------------------------
// axiom checking

struct AxiomResult {
  std::string name;
  bool pass = true;
  double worst = 0.0;
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

namespace detail {

inline void record(AxiomReport& rep, const std::string& name, double violation, double tol) {
  for (auto& r : rep.results) {
    if (r.name == name) {
      if (violation > r.worst) r.worst = violation;
      if (violation > tol) r.pass = false;
      return;
    }
  }
  rep.results.push_back({name, violation <= tol, violation});
}

}  // namespace detail

// Ring and seminorm axioms on sampled elements (associativity, distributivity,
// unit laws, half + half = one, inverse validity, seminorm triangle and
// submultiplicativity against the companion index).
template <RingOf R>
AxiomReport axiom_check(const R& r, const std::vector<typename R::Element>& samples) {
  if (samples.size() < 3) throw std::invalid_argument("axiom_check needs at least 3 samples");
  AxiomReport rep;
  const double tol = r.is_exact() ? 0.0 : r.tolerance();
  auto d = [&](const typename R::Element& a, const typename R::Element& b) { return dist(r, a, b); };

  const auto& s = samples;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      for (std::size_t k = 0; k < s.size(); ++k) {
        detail::record(rep, "add_associative", d(r.add(r.add(s[i], s[j]), s[k]), r.add(s[i], r.add(s[j], s[k]))), tol);
        detail::record(rep, "mul_associative", d(r.mul(r.mul(s[i], s[j]), s[k]), r.mul(s[i], r.mul(s[j], s[k]))), tol);
        detail::record(rep, "left_distributive", d(r.mul(s[i], r.add(s[j], s[k])), r.add(r.mul(s[i], s[j]), r.mul(s[i], s[k]))), tol);
        detail::record(rep, "right_distributive", d(r.mul(r.add(s[i], s[j]), s[k]), r.add(r.mul(s[i], s[k]), r.mul(s[j], s[k]))), tol);
      }
      detail::record(rep, "add_commutative", d(r.add(s[i], s[j]), r.add(s[j], s[i])), tol);
      double pij = r.seminorm(0, r.add(s[i], s[j]));
      double tri = pij - r.seminorm(0, s[i]) - r.seminorm(0, s[j]);
      detail::record(rep, "seminorm_triangle", tri > 0 ? tri : 0.0, tol + 1e-13);
      for (std::size_t p = 0; p < r.seminorm_count(); ++p) {
        std::size_t pc = r.companion(p);
        double sm = r.seminorm(p, r.mul(s[i], s[j])) - r.seminorm(pc, s[i]) * r.seminorm(pc, s[j]);
        detail::record(rep, "seminorm_submultiplicative", sm > 0 ? sm : 0.0, tol + 1e-13);
      }
    }
    detail::record(rep, "unit_left", d(r.mul(r.one(), s[i]), s[i]), tol);
    detail::record(rep, "unit_right", d(r.mul(s[i], r.one()), s[i]), tol);
    detail::record(rep, "zero_add", d(r.add(s[i], r.zero()), s[i]), tol);
    detail::record(rep, "negation", d(r.add(s[i], r.neg(s[i])), r.zero()), tol);
    detail::record(rep, "seminorm_even", std::fabs(r.seminorm(0, s[i]) - r.seminorm(0, r.neg(s[i]))), tol + 1e-13);
    if (auto inv = r.try_invert(s[i])) {
      double v = std::max(d(r.mul(s[i], *inv), r.one()), d(r.mul(*inv, s[i]), r.one()));
      detail::record(rep, "inverse_valid", v, tol + 1e-12);
    }
  }
  detail::record(rep, "seminorm_zero", r.seminorm(0, r.zero()), tol);
  if (auto h = r.half()) detail::record(rep, "half_plus_half", d(r.add(*h, *h), r.one()), tol);
  return rep;
}

// Axioms of a caller-supplied seminorm-like map on its own (p(0)=0, evenness,
// triangle). Lets tests demonstrate how a broken candidate is reported.
template <RingOf R>
AxiomReport seminorm_axiom_check(const R& r,
                                 const std::function<double(const typename R::Element&)>& p,
                                 const std::vector<typename R::Element>& samples) {
  AxiomReport rep;
  const double tol = r.is_exact() ? 0.0 : r.tolerance();
  detail::record(rep, "seminorm_zero", std::fabs(p(r.zero())), tol);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    detail::record(rep, "seminorm_even", std::fabs(p(samples[i]) - p(r.neg(samples[i]))), tol + 1e-13);
    detail::record(rep, "seminorm_nonnegative", p(samples[i]) < 0 ? -p(samples[i]) : 0.0, tol);
    for (std::size_t j = 0; j < samples.size(); ++j) {
      double tri = p(r.add(samples[i], samples[j])) - p(samples[i]) - p(samples[j]);
      detail::record(rep, "seminorm_triangle", tri > 0 ? tri : 0.0, tol + 1e-13);
    }
  }
  return rep;
}

// direct lookup into the indexed family; unknown indices are an error
template <RingOf R>
double seminorm_eval(const R& r, std::size_t index, const typename R::Element& x) {
  if (index >= r.seminorm_count()) throw std::out_of_range("seminorm index out of range");
  return r.seminorm(index, x);
}

}  // namespace ringcalc
