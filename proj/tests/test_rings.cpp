#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringcalc/fixtures.hpp"
#include "ringcalc/rings.hpp"

using namespace ringcalc;

TEST_CASE("seminorm evaluation on the shipped rings") {
  ComplexMatrixRing<double> m2(2);
  CHECK(seminorm_eval(m2, 0, m2.zero()) == 0.0);

  ComplexRing<double> c;
  CHECK(seminorm_eval(c, 0, Cplx<double>(3, -4)) == doctest::Approx(5.0));

  RationalRing q;
  CHECK(seminorm_eval(q, 0, Rational(-7, 2)) == doctest::Approx(3.5));
  CHECK_THROWS_AS(seminorm_eval(q, 5, Rational(1)), std::out_of_range);
}

TEST_CASE("axiom check passes on integer samples") {
  IntRing z;
  auto rep = axiom_check(z, {-2, 0, 5});
  CHECK(rep.all_pass());
}

TEST_CASE("axiom check passes on float matrices within tolerance") {
  ComplexMatrixRing<double> ring(2, 1e-12);
  SplitMix64 rng(5);
  std::vector<Matrix<Cplx<double>>> samples;
  for (int i = 0; i < 4; ++i) {
    Matrix<Cplx<double>> m(2);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) m(a, b) = {rng.uniform() - 0.5, rng.uniform() - 0.5};
    samples.push_back(m);
  }
  auto rep = axiom_check(ring, samples);
  for (const auto& r : rep.results) {
    INFO(r.name, " worst ", r.worst);
    CHECK(r.pass);
  }
}

TEST_CASE("axiom check needs at least three samples") {
  IntRing z;
  CHECK_THROWS_AS(axiom_check(z, {1, 2}), std::invalid_argument);
}

TEST_CASE("a broken signed seminorm candidate is reported") {
  // p(X) = first entry, signed: fails evenness and the triangle inequality
  ComplexMatrixRing<double> ring(2);
  std::vector<Matrix<Cplx<double>>> samples;
  Matrix<Cplx<double>> a(2), b(2);
  a(0, 0) = {1, 0};
  b(0, 0) = {-3, 0};
  samples.push_back(a);
  samples.push_back(b);
  auto p = [](const Matrix<Cplx<double>>& m) { return (double)m(0, 0).re; };
  auto rep = seminorm_axiom_check<ComplexMatrixRing<double>>(ring, p, samples);
  bool triangle_or_even_failed = false;
  for (const auto& r : rep.results)
    if ((r.name == "seminorm_triangle" || r.name == "seminorm_even" ||
         r.name == "seminorm_nonnegative") &&
        !r.pass)
      triangle_or_even_failed = true;
  CHECK(triangle_or_even_failed);
}

TEST_CASE("submultiplicativity against the companion index on random pairs") {
  SplitMix64 rng(99);
  ComplexMatrixRing<double> ring(3);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix<Cplx<double>> x(3), y(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        x(i, j) = {2 * rng.uniform() - 1, 2 * rng.uniform() - 1};
        y(i, j) = {2 * rng.uniform() - 1, 2 * rng.uniform() - 1};
      }
    auto pc = ring.companion(0);
    CHECK(ring.seminorm(0, x * y) <=
          ring.seminorm(pc, x) * ring.seminorm(pc, y) + 1e-12);
  }
  RationalRing q;
  SplitMix64 rng2(100);
  for (int trial = 0; trial < 100; ++trial) {
    Rational x(rng2.range(-50, 50), rng2.range(1, 9));
    Rational y(rng2.range(-50, 50), rng2.range(1, 9));
    CHECK(q.seminorm(0, x * y) <= q.seminorm(0, x) * q.seminorm(0, y) + 1e-12);
  }
  IntRing z;
  for (int trial = 0; trial < 100; ++trial) {
    std::int64_t x = rng2.range(-40, 40), y = rng2.range(-40, 40);
    CHECK(z.seminorm(0, x * y) <= z.seminorm(0, x) * z.seminorm(0, y) + 1e-12);
  }
  RationalMatrixRing rm(2);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix<Rational> x(2), y(2);
    for (std::size_t i = 0; i < 4; ++i) {
      x.data()[i] = Rational(rng2.range(-9, 9), rng2.range(1, 4));
      y.data()[i] = Rational(rng2.range(-9, 9), rng2.range(1, 4));
    }
    CHECK(rm.seminorm(0, rm.mul(x, y)) <= rm.seminorm(0, x) * rm.seminorm(0, y) + 1e-12);
  }
  ComplexRing<double> c;
  for (int trial = 0; trial < 100; ++trial) {
    Cplx<double> x{2 * rng2.uniform() - 1, 2 * rng2.uniform() - 1};
    Cplx<double> y{2 * rng2.uniform() - 1, 2 * rng2.uniform() - 1};
    CHECK(c.seminorm(0, x * y) <= c.seminorm(0, x) * c.seminorm(0, y) + 1e-12);
  }
}

TEST_CASE("half capability per ring") {
  CHECK_FALSE(IntRing{}.half().has_value());
  CHECK(RationalRing{}.half().has_value());
  CHECK(ComplexRing<double>{}.half().has_value());
  CHECK(RationalMatrixRing{2}.half().has_value());
}

TEST_CASE("cayley examples and round trips") {
  RationalRing q;
  CHECK(cayley(q, Rational(3)) == Rational(-1, 2));
  CHECK(cayley(q, Rational(1)) == Rational(0));
  CHECK(cayley_inv(q, Rational(0)) == Rational(1));
  CHECK_THROWS_AS(cayley(q, Rational(-1)), spectral_class_error);

  SplitMix64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Rational x(rng.range(-40, 40), rng.range(1, 11));
    if (x == Rational(-1)) continue;
    CHECK(cayley_inv(q, cayley(q, x)) == x);
  }

  ComplexMatrixRing<double> ring(3);
  SplitMix64 rng2(8);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix<Cplx<double>> x(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) x(i, j) = {rng2.uniform() - 0.5, rng2.uniform() - 0.5};
    try {
      auto round = cayley_inv(ring, cayley(ring, x));
      CHECK((round - x).row_sum_norm() <= 1e-12);
    } catch (const spectral_class_error&) {
      // 1 + x happened to be singular; outside the correspondence
    }
  }
}

TEST_CASE("trapping ring counts and throws on half") {
  TrappingHalfRing<RationalRing> t{RationalRing{}};
  CHECK(t.add(Rational(1), Rational(1)) == Rational(2));
  CHECK_THROWS_AS((void)t.half(), half_trap_error);
  CHECK(t.half_requests() == 1);
}

TEST_CASE("matrix inversion validity") {
  RationalMatrixRing ring(3);
  Matrix<Rational> m(3);
  m(0, 0) = Rational(2);
  m(0, 2) = Rational(1);
  m(1, 1) = Rational(-3);
  m(2, 0) = Rational(1);
  m(2, 2) = Rational(1);
  auto inv = ring.try_invert(m);
  REQUIRE(inv.has_value());
  CHECK(ring.eq(ring.mul(m, *inv), ring.one()));
  CHECK(ring.eq(ring.mul(*inv, m), ring.one()));

  Matrix<Rational> sing(2);
  sing(0, 0) = Rational(1);
  sing(0, 1) = Rational(2);
  sing(1, 0) = Rational(2);
  sing(1, 1) = Rational(4);
  CHECK_FALSE(ring.try_invert(sing).has_value());
}
