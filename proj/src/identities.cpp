#include "ringcalc/identities.hpp"

#include <chrono>
#include <functional>

#include "ringcalc/laurent.hpp"

namespace ringcalc {

namespace {

using P = MultiPoly;

P L(std::vector<P> args) { return lambda_combinator(PolyRing{}, args); }

P C(std::int64_t n) { return P::constant(Rational(n)); }
P Chalf() { return P::constant(Rational(1, 2)); }

struct Vars {
  P z = P::var("z");
  P zi = P::var("z", -1);
  P w = P::var("w");
  P wi = P::var("w", -1);
  P t = P::var("t");
  P Q = P::var("Q");
  P Qi = P::var("Q", -1);
  P S = P::var("S");
  P Si = P::var("S", -1);
  P Pp = P::var("P");
  P T = P::var("T");
  P F = P::var("F");
  P R = P::var("R");
  P X = P::var("X");
};

// the sixteen printed terms of the four-argument bracket, in display order;
// bit k of the mask selects the (k+1)-th argument
struct Lambda4Term {
  unsigned mask;
  int sign;
};
constexpr Lambda4Term kLambda4Terms[16] = {
    {0b0000, +1}, {0b0001, +1}, {0b0010, +1}, {0b0100, +1}, {0b1000, +1},
    {0b0011, -1}, {0b0110, -1}, {0b1100, -1}, {0b0101, +1}, {0b1001, +1},
    {0b1010, +1}, {0b0111, +1}, {0b1101, -1}, {0b1011, -1}, {0b1110, +1},
    {0b1111, -1},
};

}  // namespace

MultiPoly lambda4_printed(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c,
                          const MultiPoly& d, int mutate_term) {
  const MultiPoly* args[4] = {&a, &b, &c, &d};
  P acc;
  for (int i = 0; i < 16; ++i) {
    P term = P::one();
    for (int k = 0; k < 4; ++k)
      if (kLambda4Terms[i].mask >> k & 1) term *= *args[k];
    int sign = kLambda4Terms[i].sign;
    if (i == mutate_term) sign = -sign;
    acc = sign > 0 ? acc + term : acc - term;
  }
  return acc.scaled(Rational(1, 4));
}

namespace {

struct Builder {
  std::string id, set_tag, multiplier, note;
  bool needs_half;
  std::function<P(int)> residual;  // lambda4 mutation index or -1
};

std::vector<Builder> make_builders() {
  std::vector<Builder> out;
  Vars v;

  auto Lz = [&](const P& zz, const P& q) { return L({zz, q}); };  // (1+q)/2 + (1-q)/2 z

  // --- sign -----------------------------------------------------------------

  out.push_back({"E7", "sign", "2 Lambda(z,Q) Lambda(w,Q)",
                 "product difference of pencil ratios against the averaged kernel weight, "
                 "plus the partial-fraction split of (z-w)/(pencil pencil)",
                 true, [v, Lz](int) {
                   P one_minus_Q2 = C(1) - v.Q * v.Q;
                   P res_a = (Lz(v.z, v.Q) * Lz(v.w, v.Q) - Lz(-v.z, v.Q) * Lz(-v.w, v.Q)).scaled(Rational(2)) -
                             (v.z + v.w) * one_minus_Q2;
                   P res_b = ((v.z - C(1)) * Lz(v.w, v.Q) - (v.w - C(1)) * Lz(v.z, v.Q) -
                              (v.z - v.w)) * one_minus_Q2;
                   return res_a + v.X * res_b;
                 }});

  out.push_back({"LAMBDA_NEG", "sign", "2", "negation swaps the pencil to its reflected form",
                 false, [v, Lz](int) {
                   return (Lz(v.z, -v.Q) - v.z * Lz(v.zi, v.Q)).scaled(Rational(2));
                 }});

  out.push_back({"LAMBDA_INV", "sign", "2 Q",
                 "inversion of the element reflects the circle variable", false, [v, Lz](int) {
                   return (v.Q * Lz(v.z, v.Qi) - Lz(-v.z, v.Q)).scaled(Rational(2));
                 }});

  out.push_back({"E13", "sign", "2 (1+Q)^{n+1}, n = 0..6",
                 "recurrence of the one-sided pencil-inverse coefficients against their closed form",
                 false, [v](int) {
                   // coefficients a_n = 2 (Q-1)^n / (1+Q)^{n+1}, a_{-1} = 0;
                   // (1-Q)/2 a_{n-1} + (1+Q)/2 a_n = delta_{0,n}
                   P acc;
                   P onep = C(1) + v.Q;
                   P qm1 = v.Q - C(1);
                   // the n = 0 row uses a_{-1} = 0 (vanishing z^{-1}
                   // coefficient on the plus side)
                   for (int n = 0; n <= 6; ++n) {
                     P lhs = (C(1) + v.Q) * qm1.pow(n);
                     if (n >= 1) lhs += (C(1) - v.Q) * qm1.pow(n - 1) * onep;
                     P rhs = (n == 0) ? onep.pow(n + 1) : P{};
                     acc += v.X.pow(n) * (lhs - rhs).scaled(Rational(2));
                   }
                   return acc;
                 }});

  // --- sqrt -----------------------------------------------------------------

  out.push_back({"SQ_FACTOR", "sqrt", "4",
                 "the three-slot pencil of the square factors through the two sign pencils",
                 true, [v, Lz](int) {
                   return (L({v.z, v.Q * v.Q, v.zi}) - Lz(v.z, v.Q) * Lz(v.zi, v.Q)).scaled(Rational(4));
                 }});

  out.push_back({"ROOTSIGN_AVG", "sqrt", "2 Lambda(z,Q) Lambda(z^{-1},Q)",
                 "averaging the ratio over z and z^{-1} collapses onto Q over the square pencil",
                 true, [v, Lz](int) {
                   return (Lz(-v.z, v.Q) * Lz(v.zi, v.Q) + Lz(-v.zi, v.Q) * Lz(v.z, v.Q) -
                           C(2) * v.Q).scaled(Rational(4));
                 }});

  out.push_back({"LAMBDA_SINV", "sqrt", "4 S",
                 "inverting the element inside the three-slot pencil negates the circle variable",
                 true, [v](int) {
                   return (L({-v.z, v.S, -v.zi}) - v.S * L({v.z, v.Si, v.zi})).scaled(Rational(4));
                 }});

  out.push_back({"E9", "sqrt", "2 Lambda(z,S,z^{-1}) Lambda(w,S,w^{-1}) (zw)^k",
                 "splits the square-root product defect into the two seven-slot brackets",
                 true, [v](int) {
                   P l3z = L({v.z, v.S, v.zi});
                   P l3w = L({v.w, v.S, v.wi});
                   P l7a = L({v.z, v.S, v.zi, C(1), v.w, v.S, v.wi});
                   P l7b = L({v.z, v.S, v.zi, C(1), v.wi, v.S, v.w});
                   return (C(2) * v.S * l3z * l3w - v.S * (l7a + l7b)).scaled(Rational(16));
                 }});

  out.push_back({"E10", "sqrt", "2 Lambda(z,S,z^{-1}) Lambda(w,S,w^{-1}) (z-w)",
                 "first seven-slot bracket against the kernel in w z^{-1}; kernel times (z-w) is z+w",
                 true, [v](int) {
                   P l7a = L({v.z, v.S, v.zi, C(1), v.w, v.S, v.wi});
                   P rho_z_num = L({-v.z, v.S, v.zi});
                   P rho_w_num = L({-v.w, v.S, v.wi});
                   P l3z = L({v.z, v.S, v.zi});
                   P l3w = L({v.w, v.S, v.wi});
                   return ((v.z - v.w) * (v.S - l7a) -
                           (v.z + v.w) * (rho_z_num * l3w - rho_w_num * l3z)).scaled(Rational(16));
                 }});

  out.push_back({"E11", "sqrt", "2 Lambda(z,S,z^{-1}) Lambda(w,S,w^{-1}) (zw-1)",
                 "second seven-slot bracket against the kernel in zw; kernel times (zw-1) is 1+zw",
                 true, [v](int) {
                   P l7b = L({v.z, v.S, v.zi, C(1), v.wi, v.S, v.w});
                   P rho_z_num = L({-v.z, v.S, v.zi});
                   P sig_w_num = L({v.w, v.S, -v.wi});
                   P l3z = L({v.z, v.S, v.zi});
                   P l3w = L({v.w, v.S, v.wi});
                   return ((v.z * v.w - C(1)) * (v.S - l7b) -
                           (C(1) + v.z * v.w) * (rho_z_num * l3w - sig_w_num * l3z)).scaled(Rational(16));
                 }});

  // --- idem -----------------------------------------------------------------

  out.push_back({"IDEM_SHIFT", "idem", "(1-2P) for the substitution row",
                 "circle reflection of the shifted pencil, and the -P(1-2P)^{-1} substitution",
                 false, [v](int) {
                   // pencil of 1-P equals z times the reflected pencil of P
                   P pen_of_complement = v.Pp + (C(1) - v.Pp) * v.z;
                   P pen_reflected = (C(1) - v.Pp) + v.Pp * v.zi;
                   P res1 = pen_of_complement - pen_reflected * v.z;
                   // (1-2P)(1-U) + (1-2P) U z with U(1-2P) = -P, against 1-P+P(-z)
                   P lhs = (C(1) - C(2) * v.Pp) + v.Pp - v.Pp * v.z;
                   P rhs = C(1) - v.Pp + v.Pp * (-v.z);
                   return res1 + v.X * (lhs - rhs);
                 }});

  out.push_back({"E15_FINAL", "idem", "(1-P+Pz)(1-P+Pw)",
                 "partial-fraction split of the idempotent integrand's cross term",
                 false, [v](int) {
                   P dz = C(1) - v.Pp + v.Pp * v.z;
                   P dw = C(1) - v.Pp + v.Pp * v.w;
                   return ((v.z - C(1)) * dw - (v.w - C(1)) * dz - (v.z - v.w)) * v.Pp *
                          (C(1) - v.Pp);
                 }});

  // --- fsqrt ----------------------------------------------------------------

  out.push_back({"FSQRT_SHIFT", "fsqrt", "(1-4T)",
                 "the -T/(1-4T) substitution reflects the circle variable in the f-square-root pencil",
                 false, [v](int) {
                   P lhs = (C(1) - C(4) * v.T) + (v.z - C(2) + v.zi) * (-v.T);
                   P rhs = C(1) + (-v.z - C(2) - v.zi) * v.T;
                   return lhs - rhs;
                 }});

  out.push_back({"FACT_P", "fsqrt", "z",
                 "the f-square-root pencil of P(1-P) factors through the two shifted pencils",
                 false, [v](int) {
                   P t = v.Pp * (C(1) - v.Pp);
                   P lhs = v.z * (C(1) + (v.z - C(2) + v.zi) * t);
                   P rhs = v.z * ((C(1) - v.Pp + v.Pp * v.z) * (C(1) - v.Pp + v.Pp * v.zi));
                   return lhs - rhs;
                 }});

  out.push_back({"FSQRT_DECOMP", "fsqrt", "2 (1-P+Pz)(1-P+Pz^{-1})",
                 "integrand identity behind the P(1-P) decomposition", true, [v](int) {
                   P t = v.Pp * (C(1) - v.Pp);
                   P dz = (C(1) - v.Pp + v.Pp * v.z) * (C(1) - v.Pp + v.Pp * v.zi);
                   P lhs = (C(1) + (v.z + v.zi) * Chalf()) * t +
                           ((v.z - v.zi) * Chalf()) * t * (C(1) - C(2) * v.Pp);
                   P rhs = v.Pp * dz +
                           v.Pp * v.z * (C(1) - C(2) * v.Pp) * (C(1) - v.Pp + v.Pp * v.zi);
                   return (lhs - rhs).scaled(Rational(2));
                 }});

  out.push_back({"E17_FINAL", "fsqrt", "2 D(z) D(w), D(z) = 1+(z-2+z^{-1})T",
                 "partial-fraction split of the f-square-root integrand's cross term",
                 true, [v](int) {
                   P dz = C(1) + (v.z - C(2) + v.zi) * v.T;
                   P dw = C(1) + (v.w - C(2) + v.wi) * v.T;
                   P oz = (v.z - v.zi) * Chalf();
                   P ow = (v.w - v.wi) * Chalf();
                   P lhs = (oz - ow) * (C(1) - C(2) * v.T) + (v.z * v.wi - v.zi * v.w) * v.T;
                   P rhs = oz * dw - ow * dz;
                   return ((lhs - rhs) * v.T * (C(1) - C(4) * v.T)).scaled(Rational(2));
                 }});

  // --- homotopy -------------------------------------------------------------

  // block pieces over the involution F and the positive part R (Q = R F)
  auto ep = [v]() { return (C(1) + v.F).scaled(Rational(1, 2)); };
  auto em = [v]() { return (C(1) - v.F).scaled(Rational(1, 2)); };
  auto lam_t = [v]() { return (C(1) + v.R).scaled(Rational(1, 2)) + (C(1) - v.R).scaled(Rational(1, 2)) * v.t; };
  auto lam_mt = [v]() { return (C(1) + v.R).scaled(Rational(1, 2)) - (C(1) - v.R).scaled(Rational(1, 2)) * v.t; };
  auto lam_tz = [v]() { return (C(1) + v.R).scaled(Rational(1, 2)) + (C(1) - v.R).scaled(Rational(1, 2)) * v.t * v.z; };
  auto lam_tzi = [v]() { return (C(1) + v.R).scaled(Rational(1, 2)) + (C(1) - v.R).scaled(Rational(1, 2)) * v.t * v.zi; };

  out.push_back({"KH_CLOSED", "homotopy", "Lambda(t,R); 2 Lambda(t,R); Lambda(tz,R) Lambda(tz^{-1},R)",
                 "K against its two bracket closed forms and the K H = 1 product; F^2 = 1",
                 true, [v, ep, em, lam_t, lam_mt, lam_tz, lam_tzi](int mut) {
                   P kl = ep() * lam_tz() + em() * (v.z * lam_tzi());
                   P res1 = (kl - lambda4_printed(v.z, v.F, v.t, v.R, mut)).reduce_involution("F");
                   P res2 = (kl.scaled(Rational(2)) -
                             (lam_t() + lam_mt() * v.F + (lam_t() - lam_mt() * v.F) * v.z))
                                .reduce_involution("F");
                   P res3 = (lambda4_printed(v.z, v.F, v.t, v.R, mut) *
                                 lambda4_printed(v.zi, v.F, v.t, v.R, mut) -
                             lam_tz() * lam_tzi())
                                .reduce_involution("F");
                   return res1 + v.X * res2 + v.X.pow(2) * res3;
                 }});

  out.push_back({"LG_CLOSED", "homotopy", "1; Lambda(tz,R) Lambda(tz^{-1},R)",
                 "L's two bracket closed forms (Q = R F) and the inverse G's closed form; F^2 = 1",
                 true, [v, ep, em, lam_tz, lam_tzi](int mut) {
                   P res1 = (lambda4_printed(v.z, v.F, v.t, v.R, mut) -
                             lambda4_printed(v.t, v.F, v.z, v.R * v.F, mut))
                                .reduce_involution("F");
                   P res2 = (ep() * lam_tzi() + em() * (v.zi * lam_tz()) -
                             lambda4_printed(v.zi, v.F, v.t, v.R, mut))
                                .reduce_involution("F");
                   return res1 + v.X * res2;
                 }});

  out.push_back({"LAMBDA4_SCHEME", "homotopy", "4",
                 "printed four-argument bracket against the signed-sum scheme", true, [v](int mut) {
                   return (lambda4_printed(v.z, v.w, v.t, v.R, mut) -
                           L({v.z, v.w, v.t, v.R})).scaled(Rational(4));
                 }});

  return out;
}

const std::vector<Builder>& builders() {
  static const std::vector<Builder> b = make_builders();
  return b;
}

}  // namespace

std::vector<IdentityEntry> identity_catalog() {
  std::vector<IdentityEntry> out;
  for (const auto& b : builders()) out.push_back({b.id, b.set_tag, b.multiplier, b.note});
  return out;
}

std::vector<IdentityResult> verify_identities(const std::string& set, int lambda4_mutation) {
  std::vector<IdentityResult> out;
  for (const auto& b : builders()) {
    if (set != "all" && set != b.set_tag) continue;
    auto t0 = std::chrono::steady_clock::now();
    P res = b.residual(lambda4_mutation);
    auto t1 = std::chrono::steady_clock::now();
    IdentityResult r;
    r.id = b.id;
    r.set_tag = b.set_tag;
    r.verified = res.is_zero();
    r.needs_half = b.needs_half;
    r.residual = res.is_zero() ? "0" : res.str();
    r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out.push_back(std::move(r));
  }
  if (out.empty()) throw std::invalid_argument("unknown identity set: " + set);
  return out;
}

}  // namespace ringcalc
