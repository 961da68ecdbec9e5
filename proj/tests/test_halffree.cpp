#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringcalc/fixtures.hpp"
#include "ringcalc/halffree.hpp"
#include "ringcalc/verify_suites.hpp"

using namespace ringcalc;

namespace {
IntRing Z;
RationalRing Q;
}  // namespace

TEST_CASE("integration pairing over the symmetrized bases") {
  SymSeries<RationalRing> a{SymSpace::Angle, {{0, Rational(1)}, {1, Rational(1)}}};
  SymSeries<RationalRing> b{SymSpace::Bracket, {{0, Rational(5)}, {1, Rational(7)}}};
  CHECK(integral_pairing(Q, a, b) == Rational(12));

  SymSeries<RationalRing> a2{SymSpace::Angle, {{0, Rational(2)}, {1, Rational(3)}}};
  CHECK(integral_pairing(Q, a2, b) == Rational(31));

  SymSeries<RationalRing> zero{SymSpace::Bracket, {}};
  CHECK(integral_pairing(Q, a, zero).is_zero());
  CHECK_THROWS_AS(integral_pairing(Q, b, b), pairing_error);
}

TEST_CASE("bracket embedding doubles the off-center coefficients") {
  SymSeries<RationalRing> b{SymSpace::Bracket,
                            {{0, Rational(4)}, {2, Rational(3)}, {-1, Rational(5)}}};
  auto e = embed_bracket(Q, b);
  CHECK(e.space == SymSpace::Angle);
  CHECK(e.coeff(Q, 0) == Rational(4));
  CHECK(e.coeff(Q, 2) == Rational(6));
  CHECK(e.coeff(Q, -1) == Rational(10));
  // int b = int 1 . b
  SymSeries<RationalRing> bra{SymSpace::Bracket, {{0, Rational(9)}, {3, Rational(2)}}};
  SymSeries<RationalRing> one{SymSpace::Angle, {{0, Rational(1)}}};
  CHECK(integral_pairing(Q, one, bra) == Rational(9));
}

TEST_CASE("module action respects the grading with integer structure constants") {
  // (z^2 + z^{-2}) . (z^3 - z^{-3})/2 = (z^5 - z^{-5})/2 + (z^1 - z^{-1})/2
  SymSeries<IntRing> b{SymSpace::Bracket, {{2, (std::int64_t)1}}};
  SymSeries<IntRing> a{SymSpace::Angle, {{-3, (std::int64_t)1}}};
  auto prod = sym_module_mul(Z, b, a);
  CHECK(prod.coeff(Z, -5) == 1);
  CHECK(prod.coeff(Z, -1) == 1);
  CHECK(prod.c.size() == 2);

  // odd times odd flips into the even family: (z-z^{-1}).(z-z^{-1})/2 = (z^2+z^{-2})/2 - 1
  SymSeries<IntRing> bo{SymSpace::Bracket, {{-1, (std::int64_t)1}}};
  SymSeries<IntRing> ao{SymSpace::Angle, {{-1, (std::int64_t)1}}};
  auto prod2 = sym_module_mul(Z, bo, ao);
  CHECK(prod2.coeff(Z, 2) == 1);
  CHECK(prod2.coeff(Z, 0) == -1);
}

TEST_CASE("single-colon normal ordering examples") {
  BiLaurent<IntRing> a;
  bi_add_term(Z, a, 1, 3, (std::int64_t)1);
  auto n = normal_order_single(Z, a);
  CHECK(n.coeff(Z, 3, 1) == 1);

  BiLaurent<IntRing> fixed;
  bi_add_term(Z, fixed, 2, 2, (std::int64_t)1);
  CHECK(normal_order_single(Z, fixed).coeff(Z, 2, 2) == 1);
}

TEST_CASE("normal ordering preserves the double integral (brute force)") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    BiLaurent<IntRing> a;
    for (int i = 0; i < 10; ++i)
      bi_add_term(Z, a, rng.range(-8, 8), rng.range(-8, 8), (std::int64_t)rng.range(-4, 4));
    CHECK(bi_integral(Z, a) == bi_integral(Z, normal_order_single(Z, a)));
    CHECK(bi_integral(Z, a) == d_integral(Z, normal_order_double(Z, a)));
  }
}

TEST_CASE("single-colon Hilbert product rules") {
  auto rule = [&](int n, int m) {
    BiLaurent<IntRing> a;
    bi_add_term(Z, a, n, m, (std::int64_t)1);
    bi_add_term(Z, a, m, n, (std::int64_t)-1);
    return hilbert_product_single(Z, a);
  };
  auto r30 = rule(3, 0);
  CHECK(r30.coeff(Z, 3, 0) == 1);
  CHECK(r30.coeff(Z, 2, 1) == 2);
  CHECK(r30.c.size() == 2);

  auto r20 = rule(2, 0);
  CHECK(r20.coeff(Z, 2, 0) == 1);
  CHECK(r20.coeff(Z, 1, 1) == 1);
  CHECK(r20.c.size() == 2);

  auto r31 = rule(3, 1);
  CHECK(r31.coeff(Z, 3, 1) == 1);
  CHECK(r31.coeff(Z, 2, 2) == 1);
  CHECK(r31.c.size() == 2);

  BiLaurent<IntRing> bad;
  bi_add_term(Z, bad, 1, 1, (std::int64_t)1);
  CHECK_THROWS_AS(hilbert_product_single(Z, bad), std::domain_error);
}

TEST_CASE("double-colon ordering on graded basis elements") {
  auto plus = normal_order_double_graded(Z, true, true, 2, 1, Z.one());
  CHECK(plus.coeff(Z, 2, 1) == 1);
  CHECK(plus.c.size() == 1);
  CHECK(normal_order_double_graded(Z, true, false, 2, 1, Z.one()).c.empty());
  CHECK(normal_order_double_graded(Z, false, true, 3, 2, Z.one()).c.empty());
  CHECK(normal_order_double_graded(Z, false, false, 2, 2, Z.one()).c.empty());

  // plain monomial: ::z^{-2} w^1:: = d(2,1)
  BiLaurent<IntRing> mono;
  bi_add_term(Z, mono, -2, 1, (std::int64_t)1);
  CHECK(normal_order_double(Z, mono).coeff(Z, 2, 1) == 1);
}

TEST_CASE("double-colon Hilbert product reproduces the printed table") {
  const std::map<std::pair<int, int>, std::map<std::pair<int, int>, std::int64_t>> table = {
      {{1, 0}, {{{1, 0}, 1}}},
      {{1, 1}, {{{1, 1}, 1}, {{0, 0}, 1}}},
      {{1, 2}, {{{1, 0}, 2}}},
      {{1, 3}, {{{2, 2}, -1}, {{1, 1}, 1}, {{2, 0}, 2}}},
      {{2, 0}, {{{2, 0}, 1}, {{1, 1}, 1}}},
      {{2, 1}, {{{2, 1}, 2}, {{1, 0}, 2}}},
      {{2, 2}, {{{2, 2}, 1}, {{1, 1}, 2}, {{0, 0}, 1}}},
      {{2, 3}, {{{2, 1}, 2}, {{1, 0}, 2}}},
      {{3, 0}, {{{3, 0}, 1}, {{2, 1}, 2}}},
      {{3, 1}, {{{3, 1}, 2}, {{2, 2}, 1}, {{1, 1}, 1}, {{2, 0}, 2}}},
      {{3, 2}, {{{3, 2}, 2}, {{2, 1}, 2}, {{1, 0}, 2}}},
      {{3, 3}, {{{3, 3}, 1}, {{2, 2}, 2}, {{1, 1}, 2}, {{0, 0}, 1}}},
  };
  for (const auto& [key, expect] : table) {
    CSeries<IntRing> cs;
    cs.c[{key.first, key.second}] = 1;
    auto d = hilbert_product_double(Z, cs);
    for (const auto& [dk, val] : expect) {
      INFO("c(", key.first, ",", key.second, ") at d(", dk.first, ",", dk.second, ")");
      CHECK(d.coeff(Z, dk.first, dk.second) == val);
    }
    CHECK(d.c.size() == expect.size());
  }
}

TEST_CASE("doubled-angle antisymmetric input fails integrality") {
  auto raw = hilbert_product_double_angle_raw(1, 1);
  bool nonintegral = false;
  for (const auto& [k, v] : raw) nonintegral |= !v.is_integer();
  CHECK(nonintegral);
  CSeries<IntRing> bad;
  bad.c[{0, 2}] = 1;  // malformed key
  CHECK_THROWS_AS(hilbert_product_double(Z, bad), std::domain_error);
}

TEST_CASE("ordering equivalence survives symmetric even multipliers") {
  // a1 and a2 with equal double-colon orderings stay equal after
  // multiplication by a symmetric (+,+) bracket element
  SplitMix64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    BiLaurent<IntRing> a1;
    for (int i = 0; i < 6; ++i)
      bi_add_term(Z, a1, rng.range(-5, 5), rng.range(-5, 5), (std::int64_t)rng.range(-3, 3));
    // reflection z -> z^{-1} preserves the double-colon ordering
    BiLaurent<IntRing> a2;
    for (const auto& [k, x] : a1.c) bi_add_term(Z, a2, -k.first, k.second, x);
    // symmetric (+,+) multiplier b(z,w) = b(w,z), built from e_j(z) e_j(w) blocks
    BiLaurent<IntRing> b;
    for (int j = 1; j <= 2; ++j) {
      std::int64_t c = rng.range(-2, 2);
      for (int sz : {-j, j})
        for (int sw : {-j, j}) bi_add_term(Z, b, sz, sw, c);
    }
    bi_add_term(Z, b, 0, 0, (std::int64_t)rng.range(-2, 2));
    auto lhs = normal_order_double(Z, bi_mul(Z, a1, b));
    auto rhs = normal_order_double(Z, bi_mul(Z, a2, b));
    CHECK(lhs.c == rhs.c);
  }
}

TEST_CASE("vanishing identities on random odd data") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    // single colon: a(z) - a(w) for a plain Laurent a
    BiLaurent<IntRing> f;
    for (int k = -8; k <= 8; ++k) {
      if (k == 0) continue;
      std::int64_t ak = rng.range(-4, 4);
      if (!ak) continue;
      bi_add_term(Z, f, k, 0, ak);
      bi_add_term(Z, f, 0, k, -ak);
    }
    CHECK(bi_integral(Z, hilbert_product_single(Z, f)) == 0);

    // double colon: odd-part a in the c_{k,0} basis
    CSeries<IntRing> cs;
    for (int k = 1; k <= 8; ++k) {
      std::int64_t ak = rng.range(-4, 4);
      if (ak) cs.c[{k, 0}] = ak;
    }
    CHECK(d_integral(Z, hilbert_product_double(Z, cs)) == 0);
  }
}

TEST_CASE("idem without half") {
  CHECK(idem_nohalf(Q, Rational(0)).value.is_zero());
  CHECK(idem_nohalf(Q, Rational(1)).value == Rational(1));
  CHECK(idem_nohalf(Q, Rational(2)).value == Rational(1));
  CHECK(idem_nohalf(Q, Rational(1, 4)).value.is_zero());
  CHECK(idem_nohalf(Q, Rational(2)).value == idem_spec(Q, Rational(2),
                                                       Backend<RationalRing>::series(32)).value);

  // idempotent integer matrix: exact fixed point
  RationalMatrixRing rm(2);
  Matrix<Rational> p(2);
  p(0, 0) = Rational(1);
  p(0, 1) = Rational(1);
  auto res = idem_nohalf(rm, p);
  CHECK(rm.eq(res.value, p));
  CHECK(res.residuals.at("idempotent") == 0.0);

  // sum rule
  SplitMix64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    Rational v(rng.range(-9, 9), rng.range(1, 5));
    if (v + v == Rational(1)) continue;
    CHECK(idem_nohalf(Q, v).value + idem_nohalf(Q, Rational(1) - v).value == Rational(1));
  }

  // complex quadrature route agrees with the split form
  ComplexMatrixRing<double> cm(2);
  Matrix<Cplx<double>> pm(2);
  pm(0, 0) = {0.9, 0.1};
  pm(0, 1) = {0.3, 0};
  pm(1, 1) = {0.1, -0.2};
  auto nh = idem_nohalf(cm, pm);
  auto sp = idem_spec(cm, pm, Backend<ComplexMatrixRing<double>>::quadrature(64));
  CHECK((nh.value - sp.value).row_sum_norm() <= 1e-9);
}

TEST_CASE("f-square-root without half") {
  CHECK(fsqrt_nohalf(Q, Rational(0)).value.is_zero());
  CHECK(fsqrt_nohalf(Q, Rational(-2)).value == Rational(-1));
  CHECK(fsqrt_nohalf(Q, Rational(-6)).value == Rational(-2));
  CHECK(fsqrt_nohalf(Z, (std::int64_t)-2).value == -1);
  CHECK(fsqrt_nohalf(Z, (std::int64_t)-6).value == -2);
  auto res = fsqrt_nohalf(Q, Rational(3, 16));
  CHECK(res.value == Rational(1, 4));
  CHECK(res.residuals.at("fsquare") == 0.0);
  CHECK(res.residuals.at("shifted_square") == 0.0);
  CHECK_THROWS_AS(fsqrt_nohalf(Q, Rational(1, 2)), spectral_class_error);
}

TEST_CASE("f-square-root pencil expansion") {
  auto exp = fsqrt_pencil_expansion(Q, Rational(-2), 6);
  CHECK(series_coeff(Q, exp, 0) == Rational(1, 3));
  CHECK(series_coeff(Q, exp, 1) == Rational(1, 6));
  CHECK(series_coeff(Q, exp, -1) == Rational(1, 6));
  CHECK(series_coeff(Q, exp, 0) + series_coeff(Q, exp, -1) == Rational(1, 2));

  auto at0 = fsqrt_pencil_expansion(Q, Rational(0), 6);
  CHECK(series_eq(Q, at0, series_const(Q, Rational(1))));

  // multiplying back against the pencil leaves only boundary residuals
  LaurentSeries<RationalRing> pencil;
  pencil.lo = -1;
  pencil.c = {Rational(-2) * Rational(1), Rational(1) + Rational(4), Rational(-2)};
  // 1 + (z - 2 + z^{-1})(-2) = 5 - 2z - 2z^{-1}
  auto back = series_mul(Q, pencil, exp);
  CHECK(series_coeff(Q, back, 0) == Rational(1));
  for (int n = 1; n <= 5; ++n) {
    CHECK(series_coeff(Q, back, n).is_zero());
    CHECK(series_coeff(Q, back, -n).is_zero());
  }
}

TEST_CASE("idem from the f-square-root") {
  CHECK(idem_from_fsqrt(Q, Rational(0)).value.is_zero());
  CHECK(idem_from_fsqrt(Q, Rational(2)).value == Rational(1));
  CHECK(idem_from_fsqrt(Z, (std::int64_t)2).value == 1);
  auto res = idem_from_fsqrt(Q, Rational(2));
  CHECK(res.residuals.at("decomposition") == 0.0);

  // idempotent scalar inputs are fixed points
  for (auto v : {Rational(0), Rational(1)})
    CHECK(idem_from_fsqrt(Q, v).value == v);

  // agreement with the direct route where both exist
  SplitMix64 rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    Rational p(rng.range(-6, 6), 1);
    if (p + p == Rational(1)) continue;
    auto disc = Rational(1) - Rational(4) * p * (Rational(1) - p);
    if (!rational_sqrt_exact(disc)) continue;
    CHECK(idem_from_fsqrt(Q, p).value == idem_nohalf(Q, p).value);
  }
}

TEST_CASE("trapping ring discipline end to end") {
  TrappingHalfRing<RationalRing> tq{RationalRing{}};
  CHECK(fsqrt_nohalf(tq, Rational(-2)).value == Rational(-1));
  CHECK(idem_nohalf(tq, Rational(2)).value == Rational(1));
  CHECK(idem_from_fsqrt(tq, Rational(2)).value == Rational(1));
  CHECK(tq.half_requests() == 0);

  TrappingHalfRing<IntRing> tz{IntRing{}};
  CHECK(fsqrt_nohalf(tz, (std::int64_t)-2).value == -1);
  CHECK(idem_from_fsqrt(tz, (std::int64_t)2).value == 1);
  // idempotent integer input through the trapping integer ring
  CHECK(idem_nohalf(tz, (std::int64_t)1).value == 1);
  CHECK(tz.half_requests() == 0);
}

TEST_CASE("halffree suite passes") {
  for (const auto& c : suite_halffree()) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
}
