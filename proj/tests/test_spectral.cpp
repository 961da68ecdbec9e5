#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringcalc/fixtures.hpp"
#include "ringcalc/spectral.hpp"
#include "ringcalc/verify_suites.hpp"

using namespace ringcalc;

namespace {

RationalRing Q;
const Backend<RationalRing> BS = Backend<RationalRing>::series(32);

using CM = ComplexMatrixRing<double>;
using C1 = ComplexRing<double>;
using MatC = Matrix<Cplx<double>>;

MatC upper2(double a, double b, double d) {
  MatC m(2);
  m(0, 0) = {a, 0};
  m(0, 1) = {b, 0};
  m(1, 1) = {d, 0};
  return m;
}

}  // namespace

TEST_CASE("sign on exact scalars") {
  CHECK(sgn(Q, Rational(3), BS).value == Rational(1));
  CHECK(sgn(Q, Rational(-3), BS).value == Rational(-1));
  CHECK_THROWS_AS(sgn(Q, Rational(0), BS), spectral_class_error);
  auto res = sgn(Q, Rational(7, 3), BS);
  CHECK(res.residuals.at("involution") == 0.0);
  CHECK(res.error_budget == 0.0);
}

TEST_CASE("sign on the conjugated matrix fixture") {
  CM ring(2);
  auto q = upper2(3, 1, -2);
  auto res = sgn(ring, q, Backend<CM>::quadrature(64));
  MatC expect(2);
  expect(0, 0) = {1, 0};
  expect(0, 1) = {0.4, 0};
  expect(1, 1) = {-1, 0};
  CHECK((res.value - expect).row_sum_norm() <= 1e-9);
  CHECK(res.residuals.at("involution") <= 1e-12);
  CHECK(res.residuals.at("commute") <= 1e-12);
}

TEST_CASE("square root examples") {
  CHECK(sqrt_spec(Q, Rational(4), BS).value == Rational(2));
  CM ring(2);
  auto bq = Backend<CM>::quadrature(64);
  MatC d(2);
  d(0, 0) = {4, 0};
  d(1, 1) = {9, 0};
  auto rd = sqrt_spec(ring, d, bq);
  CHECK((double)(rd.value(0, 0) - Cplx<double>(2)).abs() <= 1e-10);
  CHECK((double)(rd.value(1, 1) - Cplx<double>(3)).abs() <= 1e-10);

  // Jordan block: value squares back to the input
  auto j = upper2(2, 1, 2);
  auto rj = sqrt_spec(ring, j, bq);
  CHECK((rj.value * rj.value - j).row_sum_norm() <= 1e-10);
  CHECK((double)(rj.value(0, 0) - Cplx<double>(std::sqrt(2.0))).abs() <= 1e-10);
  CHECK((double)(rj.value(0, 1) - Cplx<double>(1.0 / (2.0 * std::sqrt(2.0)))).abs() <= 1e-10);
}

TEST_CASE("idempotent splitter examples") {
  CHECK(idem_spec(Q, Rational(2), BS).value == Rational(1));
  CHECK(idem_spec(Q, Rational(1, 4), BS).value == Rational(0));
  CHECK_THROWS_AS(idem_spec(Q, Rational(1, 2), BS), spectral_class_error);

  CM ring(2);
  auto p = upper2(1, 1, 0);  // idempotent
  auto res = idem_spec(ring, p, Backend<CM>::quadrature(64));
  CHECK((res.value - p).row_sum_norm() <= 1e-10);
}

TEST_CASE("f-square-root examples") {
  CHECK(fsqrt_spec(Q, Rational(0), BS).value == Rational(0));
  CHECK(fsqrt_spec(Q, Rational(-2), BS).value == Rational(-1));
  CHECK(fsqrt_spec(Q, Rational(3, 16), BS).value == Rational(1, 4));
  CHECK_THROWS_AS(fsqrt_spec(Q, Rational(1, 2), BS), spectral_class_error);
}

TEST_CASE("scalar laws on exact rationals") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    Rational x(rng.range(-60, 60), rng.range(1, 9));
    if (x.is_zero()) continue;
    auto s = sgn(Q, x, BS).value;
    CHECK(s * s == Rational(1));
    CHECK(sgn(Q, Rational(1) / x, BS).value == s);
    CHECK(sgn(Q, -x, BS).value == -s);
    // sgn q = q^{-1} sqrt(q^2) whenever the square root is exactly representable
    if (auto rt = rational_sqrt_exact(x * x)) CHECK(s == *rt / x);
  }
  for (int trial = 0; trial < 40; ++trial) {
    Rational p(rng.range(-40, 40), rng.range(1, 9));
    if (p + p == Rational(1)) continue;
    auto i = idem_spec(Q, p, BS).value;
    CHECK(i * i == i);
    CHECK(idem_spec(Q, Rational(1) - p, BS).value == Rational(1) - i);
    // moebius shift fixes the splitter: idem(-p/(1-2p)) = idem(p)
    auto shifted = -p / (Rational(1) - p - p);
    CHECK(idem_spec(Q, shifted, BS).value == i);
  }
  for (int trial = 0; trial < 40; ++trial) {
    // representable inputs: t = x(1-x) with x < 1/2 makes 1-4t a perfect square
    Rational xg(rng.range(-40, 0), rng.range(1, 9));
    Rational t = xg * (Rational(1) - xg);
    auto x = fsqrt_spec(Q, t, BS).value;
    CHECK(x == xg);
    CHECK(x * (Rational(1) - x) == t);
    // fsqrt(-t/(1-4t)) = -fsqrt(t)(1-2 fsqrt(t))^{-1}
    auto t2 = -t / (Rational(1) - Rational(4) * t);
    auto x2 = fsqrt_spec(Q, t2, BS).value;
    CHECK(x2 == -x / (Rational(1) - x - x));
  }
}

TEST_CASE("square root of the inverse is the inverse square root") {
  SplitMix64 rng(27);
  for (int trial = 0; trial < 20; ++trial) {
    std::int64_t a = rng.range(1, 12), b = rng.range(1, 12);
    Rational s(a * a, b * b);  // exactly representable roots
    auto r1 = sqrt_spec(Q, Rational(1) / s, BS).value;
    auto r2 = Rational(1) / sqrt_spec(Q, s, BS).value;
    CHECK(r1 == r2);
  }
  CM ring(2);
  auto bq = Backend<CM>::quadrature(128);
  auto m = upper2(4, 1, 9);
  auto rt_inv = sqrt_spec(ring, *ring.try_invert(m), bq).value;
  auto inv_rt = *ring.try_invert(sqrt_spec(ring, m, bq).value);
  CHECK((rt_inv - inv_rt).row_sum_norm() <= 1e-9);
}

TEST_CASE("non-representable exact roots are refused, not approximated") {
  CHECK_THROWS_AS(sqrt_spec(Q, Rational(2), BS), std::domain_error);
  CHECK_THROWS_AS(fsqrt_spec(Q, Rational(-3), BS), std::domain_error);
}

TEST_CASE("derived decompositions") {
  CHECK(derived_decomposition(Q, DerivedKind::AbsR, Rational(-3), BS).value == Rational(3));
  CHECK(derived_decomposition(Q, DerivedKind::PertR, Rational(1), BS).value == Rational(0));
  CHECK(derived_decomposition(Q, DerivedKind::PertR, Rational(3), BS).value == Rational(1, 2));

  C1 c;
  auto bq = Backend<C1>::quadrature(128);
  auto absi = derived_decomposition(c, DerivedKind::AbsI, Cplx<double>(0, 2), bq);
  CHECK((double)(absi.value - Cplx<double>(2)).abs() <= 1e-10);
  auto pol = derived_decomposition(c, DerivedKind::Pol, Cplx<double>(0, 2), bq);
  CHECK((double)(pol.value - Cplx<double>(0, 1)).abs() <= 1e-10);
  CHECK(pol.residuals.at("skew_involution") <= 1e-10);

  // |P|_F and the decomposition P = idem + |P|_F - 2 |P|_F idem
  auto absf = derived_decomposition(c, DerivedKind::AbsF, Cplx<double>(2.0, 0.3), bq);
  CHECK(absf.residuals.at("decomposition") <= 1e-9);

  // the integral route and the algebraic route for pert_r agree
  CM ring(2);
  auto pr = derived_decomposition(ring, DerivedKind::PertR, upper2(3, 1, 2),
                                  Backend<CM>::quadrature(128));
  CHECK(pr.residuals.at("route_defect") <= 1e-10);
}

TEST_CASE("spectral split") {
  CM ring(2);
  auto bq = Backend<CM>::quadrature(64);
  MatC d(2);
  d(0, 0) = {3, 0};
  d(1, 1) = {-2, 0};
  auto sp = spectral_split(ring, d, bq);
  CHECK((double)(sp.proj_minus(1, 1) - Cplx<double>(1)).abs() <= 1e-12);
  CHECK((double)(sp.proj_plus(0, 0) - Cplx<double>(1)).abs() <= 1e-12);
  CHECK((double)(sp.q_plus(0, 0) - Cplx<double>(3)).abs() <= 1e-12);
  CHECK((double)(sp.q_minus(1, 1) - Cplx<double>(2)).abs() <= 1e-12);
  for (const auto& [k, v] : sp.residuals) {
    INFO(k);
    CHECK(v <= 1e-9);
  }

  auto sp2 = spectral_split(ring, upper2(3, 1, -2), bq);
  CHECK((double)(sp2.proj_plus(0, 0) - Cplx<double>(1)).abs() <= 1e-10);
  CHECK((double)(sp2.proj_plus(0, 1) - Cplx<double>(0.2)).abs() <= 1e-10);
  CHECK((double)(sp2.proj_plus(1, 1)).abs() <= 1e-10);

  // scalar split is trivial
  auto sp3 = spectral_split(Q, Rational(3), BS);
  CHECK(sp3.proj_plus == Rational(1));
  CHECK(sp3.proj_minus == Rational(0));
}

TEST_CASE("pencil inverse expansions, exactly") {
  auto ea = pencil_inverse_expansion(Q, Rational(3), PencilVariant::SignA, 8, BS);
  for (int n = 0; n <= 8; ++n)
    CHECK(series_coeff(Q, ea, n) == Rational(1, (std::int64_t)1 << (n + 1)));
  for (int n = -8; n < 0; ++n) CHECK(series_coeff(Q, ea, n).is_zero());

  auto eb = pencil_inverse_expansion(Q, Rational(3), PencilVariant::SignB, 8, BS);
  CHECK(series_coeff(Q, eb, 0) == Rational(1));
  for (int n = 1; n <= 8; ++n)
    CHECK(series_coeff(Q, eb, n) == Rational(2) / Rational((std::int64_t)1 << n));

  auto es = pencil_inverse_expansion(Q, Rational(9), PencilVariant::Sqrt, 8, BS);
  CHECK(series_coeff(Q, es, 0) == Rational(1, 3));
  CHECK(series_coeff(Q, es, 1) == Rational(1, 6));
  CHECK(series_coeff(Q, es, -1) == Rational(1, 6));
  CHECK(series_coeff(Q, es, 2) == Rational(1, 12));

  // multiplying back against the pencil leaves only boundary residuals
  LaurentSeries<RationalRing> pencil;
  pencil.lo = 0;
  pencil.c = {Rational(2), Rational(-1)};  // 2 - z
  auto back = series_mul(Q, pencil, ea);
  CHECK(series_coeff(Q, back, 0) == Rational(1));
  for (int n = 1; n <= 8; ++n) CHECK(series_coeff(Q, back, n).is_zero());
  CHECK_FALSE(series_coeff(Q, back, 9).is_zero());

  // supplied sign data short-circuits the backend
  auto ea2 = pencil_inverse_expansion(Q, Rational(3), PencilVariant::SignA, 4, BS, Rational(1));
  CHECK(series_eq(Q, ea2, pencil_inverse_expansion(Q, Rational(3), PencilVariant::SignA, 4, BS)));

  // mixed-sign scalar: both windows populated
  auto em = pencil_inverse_expansion(Q, Rational(-3), PencilVariant::SignB, 4, BS);
  CHECK(series_coeff(Q, em, 0) == Rational(-1));
  CHECK(series_coeff(Q, em, -1) == Rational(-1));
  CHECK(series_coeff(Q, em, 1).is_zero());
}

TEST_CASE("matrix pencil expansion inverts the pencil inside the window") {
  CM ring(2);
  auto bq = Backend<CM>::quadrature(128);
  auto x = upper2(3, 1, -2);  // mixed spectrum
  const int M = 20;
  auto exp = pencil_inverse_expansion(ring, x, PencilVariant::SignA, M, bq);
  LaurentSeries<CM> pencil;
  pencil.lo = 0;
  auto h = ring.one().scaled(Cplx<double>(0.5));
  pencil.c = {h * (ring.one() + x), h * (ring.one() - x)};
  auto back = series_mul(ring, pencil, exp);
  CHECK((series_coeff(ring, back, 0) - ring.one()).row_sum_norm() <= 1e-9);
  for (int n = 1; n <= M - 1; ++n) {
    CHECK(series_coeff(ring, back, n).row_sum_norm() <= 1e-9);
    CHECK(series_coeff(ring, back, -n).row_sum_norm() <= 1e-9);
  }
}

TEST_CASE("matrix homotopy product collapses to one inside the window") {
  CM ring(2);
  auto bq = Backend<CM>::quadrature(128);
  auto q = upper2(3, 1, -2);
  auto k = homotopy_eval(ring, HomotopyKind::K, Rational(1, 4), q, 24, bq);
  auto h = homotopy_eval(ring, HomotopyKind::H, Rational(1, 4), q, 24, bq);
  auto prod = series_mul(ring, k, h);
  CHECK((series_coeff(ring, prod, 0) - ring.one()).row_sum_norm() <= 1e-9);
  for (int n = 1; n <= 20; ++n) {
    CHECK(series_coeff(ring, prod, n).row_sum_norm() <= 1e-9);
    CHECK(series_coeff(ring, prod, -n).row_sum_norm() <= 1e-9);
  }
  auto l = homotopy_eval(ring, HomotopyKind::L, Rational(1, 4), q, 24, bq);
  auto g = homotopy_eval(ring, HomotopyKind::G, Rational(1, 4), q, 24, bq);
  auto prod2 = series_mul(ring, l, g);
  CHECK((series_coeff(ring, prod2, 0) - ring.one()).row_sum_norm() <= 1e-9);
  for (int n = 1; n <= 20; ++n) CHECK(series_coeff(ring, prod2, n).row_sum_norm() <= 1e-9);
}

TEST_CASE("auxiliary integrals") {
  CHECK(aux_integral(Q, AuxKind::InvOnePlusAbsR, Rational(3), BS).value == Rational(1, 4));
  CHECK(aux_integral(Q, AuxKind::InvOnePlusSqrt, Rational(9), BS).value == Rational(1, 4));
  CHECK(aux_integral(Q, AuxKind::InvOnePlusAbsR, Rational(1), BS).value == Rational(1, 2));
  CHECK(aux_integral(Q, AuxKind::InvOnePlusSqrt, Rational(1), BS).value == Rational(1, 2));
  CHECK(aux_integral(Q, AuxKind::InvOnePlusAbsR, Rational(3), BS).residuals.at("route_defect") ==
        0.0);
}

TEST_CASE("homotopy evaluation on a matrix") {
  CM ring(2);
  auto bq = Backend<CM>::quadrature(128);
  auto q = upper2(3, 1, -2);
  auto l0 = homotopy_eval(ring, HomotopyKind::L, Rational(0), q, 8, bq);
  // L(0,-1,Q) = (Q + sgn Q)/2
  auto at_m1 = limit_at_one(ring, transform_variable(ring, l0, TransformRule::NegateZ));
  MatC expect(2);
  expect(0, 0) = {2, 0};
  expect(0, 1) = {0.7, 0};
  expect(1, 1) = {-1.5, 0};
  CHECK((at_m1 - expect).row_sum_norm() <= 1e-9);

  // K(t,1,Q) = 1 for any t
  auto k = homotopy_eval(ring, HomotopyKind::K, Rational(2, 5), q, 8, bq);
  CHECK((limit_at_one(ring, k) - ring.one()).row_sum_norm() <= 1e-9);
}

TEST_CASE("homotopy products invert exactly on exact scalars") {
  for (auto qv : {Rational(3), Rational(-3), Rational(5, 2)}) {
    auto k = homotopy_eval(Q, HomotopyKind::K, Rational(1, 3), qv, 24, BS);
    auto h = homotopy_eval(Q, HomotopyKind::H, Rational(1, 3), qv, 24, BS);
    auto prod = series_mul(Q, k, h);
    CHECK(series_coeff(Q, prod, 0) == Rational(1));
    for (int n = -23; n <= 23; ++n)
      if (n != 0) CHECK(series_coeff(Q, prod, n).is_zero());
    auto l = homotopy_eval(Q, HomotopyKind::L, Rational(1, 3), qv, 24, BS);
    auto g = homotopy_eval(Q, HomotopyKind::G, Rational(1, 3), qv, 24, BS);
    auto prod2 = series_mul(Q, l, g);
    CHECK(series_coeff(Q, prod2, 0) == Rational(1));
    for (int n = -23; n <= 23; ++n)
      if (n != 0) CHECK(series_coeff(Q, prod2, n).is_zero());
  }
}

TEST_CASE("contraction family") {
  auto c0 = contraction_eval(Q, Rational(0), Rational(9), BS);
  CHECK(c0.c == Rational(1));
  auto c1 = contraction_eval(Q, Rational(1), Rational(9), BS);
  CHECK(c1.c == Rational(9));
  CHECK(c1.sqrt_c == Rational(3));
  auto cid = contraction_eval(Q, Rational(3, 7), Rational(1), BS);
  CHECK(cid.c == Rational(1));
  auto cm = contraction_eval(Q, Rational(2, 5), Rational(9), BS);
  CHECK(cm.residuals.at("inverse_pair") == 0.0);
  CHECK(cm.residuals.at("poisson_transform") == 0.0);
  CHECK(cm.sqrt_c * cm.sqrt_c == cm.c);
}

TEST_CASE("geometric mean") {
  C1 c;
  auto bq = Backend<C1>::quadrature(128);
  CHECK((double)(geometric_mean(c, Cplx<double>(4), Cplx<double>(9), bq).value -
                 Cplx<double>(6)).abs() <= 1e-10);
  CHECK((double)(geometric_mean(c, Cplx<double>(1), Cplx<double>(9), bq).value -
                 Cplx<double>(3)).abs() <= 1e-10);

  CM ring(2);
  auto m = upper2(2, 1, 5);  // positive spectrum
  auto gm = geometric_mean(ring, m, m, Backend<CM>::quadrature(128));
  CHECK((gm.value - m).row_sum_norm() <= 1e-9);
  CHECK_THROWS_AS(geometric_mean(Q, Rational(4), Rational(9), BS), std::domain_error);
}

TEST_CASE("segment square root agrees with the circle rule") {
  C1 c;
  CHECK((double)(sqrt_real_segment(c, Cplx<double>(9), 64).value - Cplx<double>(3)).abs() <=
        1e-10);
  CHECK((double)(sqrt_real_segment(c, Cplx<double>(1), 64).value - Cplx<double>(1)).abs() <=
        1e-12);
  CM ring(2);
  MatC d(2);
  d(0, 0) = {4, 0};
  d(1, 1) = {9, 0};
  auto seg = sqrt_real_segment(ring, d, 64);
  CHECK((double)(seg.value(0, 0) - Cplx<double>(2)).abs() <= 1e-10);
  CHECK((double)(seg.value(1, 1) - Cplx<double>(3)).abs() <= 1e-10);
}

TEST_CASE("class membership certificates") {
  C1 c;
  auto bq = Backend<C1>::quadrature(64);
  auto cert = class_membership(c, Cplx<double>(3), SpectralClassTag::AvoidImagAxis, bq);
  CHECK(cert.certified());
  CHECK(cert.margin == doctest::Approx(1.0));
  auto refuted = class_membership(c, Cplx<double>(0, 1), SpectralClassTag::AvoidImagAxis, bq);
  CHECK(refuted.status == ClassCertificate::Status::Refuted);

  CM ring(2);
  auto bqm = Backend<CM>::quadrature(64);
  auto p = upper2(1, 1, 0);
  auto idc = class_membership(ring, p, SpectralClassTag::Idempotent, bqm);
  CHECK(idc.certified());
  CHECK(idc.method == "algebraic");
  MatC inv(2);
  inv(0, 0) = {1, 0};
  inv(1, 1) = {-1, 0};
  CHECK(class_membership(ring, inv, SpectralClassTag::Involution, bqm).certified());
  MatC skew(2);
  skew(0, 1) = {1, 0};
  skew(1, 0) = {-1, 0};
  CHECK(class_membership(ring, skew, SpectralClassTag::SkewInvolution, bqm).certified());

  // one-sided decay certificates; the float threshold p(w^M) <= 1e-12 p(1)
  // needs a window long enough for the rate at hand (here |w| = 1/2)
  auto bq_long = bq;
  bq_long.order = 128;
  auto one_sided = class_membership(c, Cplx<double>(3), SpectralClassTag::AvoidLeftHalf, bq_long);
  CHECK(one_sided.certified());
  CHECK(one_sided.method == "cayley-decay");
  auto short_win = class_membership(c, Cplx<double>(3), SpectralClassTag::AvoidLeftHalf, bq);
  CHECK(short_win.status == ClassCertificate::Status::Inconclusive);
  auto disk = class_membership(Q, Rational(1, 3), SpectralClassTag::DiskComplementAvoided, BS);
  CHECK(disk.certified());
  CHECK_FALSE(class_membership(Q, Rational(2), SpectralClassTag::DiskComplementAvoided, BS)
                  .certified());

  // exact scalar rules
  CHECK(class_membership(Q, Rational(3), SpectralClassTag::AvoidImagAxis, BS).certified());
  CHECK(class_membership(Q, Rational(0), SpectralClassTag::AvoidImagAxis, BS).status ==
        ClassCertificate::Status::Refuted);
  CHECK(class_membership(Q, Rational(1, 5), SpectralClassTag::AvoidQuarterShiftedNegReals, BS)
            .certified());
}

TEST_CASE("asserted class skips certification but flags the result") {
  CM ring(2);
  auto b = Backend<CM>::quadrature(64);
  b.assert_class = true;
  auto res = sgn(ring, upper2(3, 1, -2), b);
  CHECK_FALSE(res.class_verified);
  CHECK(res.residuals.at("involution") <= 1e-10);
}

TEST_CASE("oracle backend conjugates the diagonal") {
  auto fx = make_fixture<double>(3, {{2, 0.5}, {-1, 0.25}, {3, 0}}, 99);
  CM ring(3);
  auto b = Backend<CM>::with_oracle(fixture_oracle(fx));
  auto res = sgn(ring, fx.a, b);
  CHECK((res.value - fixture_expected(fx, SpectralFn::Sgn)).row_sum_norm() <= 1e-12);
  CHECK(res.backend == BackendKind::Oracle);
}

TEST_CASE("series backend refuses two-sided matrix data") {
  RationalMatrixRing ring(2);
  Matrix<Rational> m(2);
  m(0, 0) = Rational(3);
  m(1, 1) = Rational(-2);
  auto b = Backend<RationalMatrixRing>::series(16);
  CHECK_THROWS(sgn(ring, m, b));
}

TEST_CASE("quadrature pairwise flag reproduces the sequential mean") {
  CM ring(2);
  auto q = upper2(3, 1, -2);
  auto b1 = Backend<CM>::quadrature(64);
  auto b2 = b1;
  b2.pairwise_sum = true;
  auto v1 = sgn(ring, q, b1).value;
  auto v2 = sgn(ring, q, b2).value;
  CHECK((v1 - v2).row_sum_norm() <= 1e-13);
}

TEST_CASE("quadrature convergence on the standard fixture") {
  auto fx = make_fixture<double>(2, {{3, 0}, {-2, 0}}, 7);
  CM ring(2);
  auto expect = fixture_expected(fx, SpectralFn::Sgn);
  double e32 = (sgn(ring, fx.a, Backend<CM>::quadrature(32)).value - expect).row_sum_norm();
  double e64 = (sgn(ring, fx.a, Backend<CM>::quadrature(64)).value - expect).row_sum_norm();
  double e128 = (sgn(ring, fx.a, Backend<CM>::quadrature(128)).value - expect).row_sum_norm();
  CHECK(e64 <= e32 / 10.0);
  CHECK(e128 <= 1e-8);
}

TEST_CASE("spectral suite passes") {
  for (const auto& c : suite_spectral(1e-8)) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
}
