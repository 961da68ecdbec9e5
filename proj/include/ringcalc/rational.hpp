#pragma once

// Exact rational arithmetic on 128-bit integers. All operations normalize
// (gcd-reduced, positive denominator) and throw ringcalc::overflow_error if a
// product or sum leaves the 128-bit range. Desk-scale workloads (series
// windows <= 32, kernel orders <= 24) stay far inside that bound.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ringcalc {

using int128 = __int128;

class overflow_error : public std::runtime_error {
public:
  explicit overflow_error(const char* what) : std::runtime_error(what) {}
};

namespace detail {

inline int128 i128_abs(int128 a) { return a < 0 ? -a : a; }

inline int128 i128_gcd(int128 a, int128 b) {
  a = i128_abs(a);
  b = i128_abs(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("rational: 128-bit multiply overflow");
  return r;
}

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("rational: 128-bit add overflow");
  return r;
}

inline std::string i128_to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
  std::string s;
  while (u > 0) {
    s.insert(s.begin(), char('0' + (int)(u % 10)));
    u /= 10;
  }
  return neg ? "-" + s : s;
}

// floor of sqrt for nonnegative 128-bit values (Newton, overflow-safe checks)
inline int128 i128_isqrt(int128 v) {
  if (v < 0) return -1;
  if (v < 2) return v;
  int128 x = v;
  int128 y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + v / x) / 2;
  }
  while (x > 0 && x > v / x) --x;
  while (v / (x + 1) >= (x + 1)) ++x;
  return x;
}

}  // namespace detail

struct Rational {
  int128 num = 0;
  int128 den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }
  static Rational raw(int128 n, int128 d) {
    Rational q;
    q.num = n;
    q.den = d;
    q.normalize();
    return q;
  }

  void normalize() {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) {
      den = 1;
      return;
    }
    int128 g = detail::i128_gcd(num, den);
    num /= g;
    den /= g;
  }

  bool is_zero() const { return num == 0; }
  bool is_one() const { return num == 1 && den == 1; }
  bool is_integer() const { return den == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    int128 g = detail::i128_gcd(a.den, b.den);
    int128 da = a.den / g;
    int128 db = b.den / g;
    int128 n = detail::checked_add(detail::checked_mul(a.num, db), detail::checked_mul(b.num, da));
    int128 d = detail::checked_mul(detail::checked_mul(da, g), db);
    return raw(n, d);
  }
  friend Rational operator-(const Rational& a) { return raw(-a.num, a.den); }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    int128 g1 = detail::i128_gcd(a.num, b.den);
    int128 g2 = detail::i128_gcd(b.num, a.den);
    int128 n = detail::checked_mul(a.num / g1, b.num / g2);
    int128 d = detail::checked_mul(a.den / g2, b.den / g1);
    return raw(n, d);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("rational: division by zero");
    return a * raw(b.den, b.num);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return detail::checked_mul(a.num, b.den) < detail::checked_mul(b.num, a.den);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num < 0 ? -*this : *this; }

  double to_double() const { return (double)((long double)num / (long double)den); }

  std::string str() const {
    std::string s = detail::i128_to_string(num);
    if (den != 1) s += "/" + detail::i128_to_string(den);
    return s;
  }
};

// Exact square root when num and den are both perfect squares.
inline std::optional<Rational> rational_sqrt_exact(const Rational& q) {
  if (q.num < 0) return std::nullopt;
  int128 rn = detail::i128_isqrt(q.num);
  int128 rd = detail::i128_isqrt(q.den);
  if (rn * rn != q.num || rd * rd != q.den) return std::nullopt;
  return Rational::raw(rn, rd);
}

inline Rational rational_pow(Rational base, int e) {
  if (e < 0) return rational_pow(Rational::raw(base.den, base.num), -e);
  Rational acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

// Parses "n" or "n/d" with optional sign.
inline std::optional<Rational> rational_parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational((std::int64_t)std::stoll(s));
    std::int64_t n = std::stoll(s.substr(0, slash));
    std::int64_t d = std::stoll(s.substr(slash + 1));
    if (d == 0) return std::nullopt;
    return Rational(n, d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace ringcalc
