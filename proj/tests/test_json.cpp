#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringcalc/fixtures.hpp"
#include "ringcalc/json_io.hpp"

using namespace ringcalc;

TEST_CASE("complex matrix schema round trip") {
  SplitMix64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + rng.range(0, 3);
    Matrix<Cplx<double>> m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = {rng.uniform() - 0.5, rng.uniform() - 0.5};
    auto j = complex_matrix_to_json(m);
    CHECK(j["kind"] == "complex_matrix");
    CHECK(j["n"] == n);
    auto back = complex_matrix_from_json(j);
    CHECK((back - m).row_sum_norm() == 0.0);
  }
}

TEST_CASE("rational matrix schema round trip") {
  SplitMix64 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + rng.range(0, 2);
    Matrix<Rational> m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(rng.range(-20, 20), rng.range(1, 9));
    auto j = rational_matrix_to_json(m);
    CHECK(j["kind"] == "rational_matrix");
    auto back = rational_matrix_from_json(j);
    for (std::size_t i = 0; i < n * n; ++i) CHECK(back.data()[i] == m.data()[i]);
  }
}

TEST_CASE("schema violations are rejected") {
  json j = {{"kind", "complex_matrix"}, {"n", 2}, {"data", {{1.0, 0.0}}}};
  CHECK_THROWS_AS(complex_matrix_from_json(j), std::invalid_argument);
  json j2 = {{"kind", "other"}, {"n", 1}, {"data", {{1.0, 0.0}}}};
  CHECK_THROWS_AS(complex_matrix_from_json(j2), std::invalid_argument);
}

TEST_CASE("series debug dump shape") {
  RationalRing q;
  LaurentSeries<RationalRing> s;
  s.lo = -1;
  s.c = {Rational(1, 2), Rational(0), Rational(3)};
  s.cls = GrowthClass::RapidRing;
  auto j = series_to_json(q, s);
  CHECK(j["class"] == "rapid_ring");
  CHECK(j["window"][0] == -1);
  CHECK(j["coeffs"]["-1"] == "1/2");
  CHECK(j["coeffs"]["1"] == "3");
  CHECK(j["coeffs"].contains("0") == false);
}
