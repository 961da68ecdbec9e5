#pragma once

// Exact sparse Laurent polynomials over the rationals in a fixed list of
// commuting indeterminates. Negative exponents are first-class, so formal
// inverses of the circle variables (and of Q, S) are plain monomials and no
// localization bookkeeping is needed; each checked identity still records the
// clearing multiplier it was stated with. Canonical form (sorted exponent
// vectors, no zero coefficients) is maintained by every operation.
//
// The indeterminates commute. Every identity checked against this engine
// involves one ring element together with central scalars, so the scalar
// verification transfers to the ring statement by the substitution
// homomorphism; F is reserved for an involution (F^2 = 1 is applied as a
// rewrite) and R for the commuting positive part, with Q = R F.

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ringcalc/rational.hpp"

namespace ringcalc {

class MultiPoly {
public:
  static constexpr int kVars = 10;
  using Expo = std::array<int, kVars>;

  static const std::array<const char*, kVars>& var_names() {
    static const std::array<const char*, kVars> names = {"z", "w", "t", "Q", "S",
                                                         "P", "T", "F", "R", "X"};
    return names;
  }

  static int var_index(const std::string& name) {
    const auto& names = var_names();
    for (int i = 0; i < kVars; ++i)
      if (name == names[i]) return i;
    throw std::invalid_argument("unknown indeterminate: " + name);
  }

  MultiPoly() = default;

  static MultiPoly constant(const Rational& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_[Expo{}] = c;
    return p;
  }
  static MultiPoly one() { return constant(Rational(1)); }
  static MultiPoly var(const std::string& name, int exp = 1) {
    MultiPoly p;
    Expo e{};
    e[var_index(name)] = exp;
    p.terms_[e] = Rational(1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // true if any coefficient has an even denominator (needs half-integers)
  bool uses_half() const {
    for (const auto& [e, c] : terms_)
      if (c.den % 2 == 0) return true;
    return false;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.bump(e, c);
    return out;
  }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out = a;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Expo e;
        for (int i = 0; i < kVars; ++i) e[i] = ea[i] + eb[i];
        out.bump(e, ca * cb);
      }
    return out;
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly scaled(const Rational& c) const {
    MultiPoly out;
    if (c.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& [e, v] : out.terms_) v *= c;
    return out;
  }

  MultiPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
    MultiPoly acc = one();
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  // involution rewrite v^k -> v^{k mod 2}; confluent since exponents reduce
  // independently per term
  MultiPoly reduce_involution(const std::string& name) const {
    int vi = var_index(name);
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
      Expo r = e;
      r[vi] = ((r[vi] % 2) + 2) % 2;
      out.bump(r, c);
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.str();
      for (int i = 0; i < kVars; ++i) {
        if (e[i] == 0) continue;
        os << "*" << var_names()[i];
        if (e[i] != 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

private:
  void bump(const Expo& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Expo, Rational> terms_;
};

// ring facade so the generic pencil combinator can run over MultiPoly
class PolyRing {
public:
  using Element = MultiPoly;

  Element zero() const { return {}; }
  Element one() const { return MultiPoly::one(); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool eq(const Element& a, const Element& b) const { return a == b; }
  Element from_int(std::int64_t k) const { return MultiPoly::constant(Rational(k)); }
  std::optional<Element> half() const { return MultiPoly::constant(Rational(1, 2)); }
  std::optional<Element> try_invert(const Element&) const { return std::nullopt; }
  std::size_t seminorm_count() const { return 1; }
  double seminorm(std::size_t, const Element& x) const { return x.is_zero() ? 0.0 : 1.0; }
  std::size_t companion(std::size_t i) const { return i; }
  bool is_exact() const { return true; }
  double tolerance() const { return 0.0; }
};

}  // namespace ringcalc
