#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringcalc/kernels.hpp"
#include "ringcalc/verify_suites.hpp"

using namespace ringcalc;

TEST_CASE("coefficient rules match the displayed expansions") {
  CHECK(kernel_coeff(KernelKind::Poisson, 2, -2) == Rational(1));
  CHECK(kernel_coeff(KernelKind::Poisson, 1, -2) == Rational(0));
  CHECK(kernel_coeff(KernelKind::HilbertPoisson, 3, -3) == Rational(-1));
  CHECK(kernel_coeff(KernelKind::HilbertPoisson, 0, 0) == Rational(0));
  // variant regularization: center column is exactly t
  CHECK(kernel_coeff(KernelKind::VariantRegularization, 1, 0) == Rational(1));
  CHECK(kernel_coeff(KernelKind::VariantRegularization, 2, 0) == Rational(0));
  CHECK(kernel_coeff(KernelKind::VariantRegularization, 3, 2) == Rational(1, 2));
  CHECK(kernel_coeff(KernelKind::VariantRegularization, 2, 2) == Rational(-1, 2));
  // shifted odd rows
  CHECK(kernel_coeff(KernelKind::ShiftedOddPoisson, 2, -2) == Rational(1));
  CHECK(kernel_coeff(KernelKind::ShiftedOddPoisson, 2, 3) == Rational(1));
  CHECK(kernel_coeff(KernelKind::ShiftedOddPoisson, 0, 1) == Rational(1));
  // two-variable Hilbert
  CHECK(kernel_coeff(KernelKind::HilbertTwoVar, 3, -3) == Rational(1));
  CHECK(kernel_coeff(KernelKind::HilbertTwoVar, 0, 0) == Rational(0));
}

TEST_CASE("coefficient table carries only nonzero entries") {
  TransformationKernel k{KernelKind::Poisson, 6, 6};
  auto table = kernel_coefficients(k);
  CHECK(table.size() == 13);  // one diagonal pair per degree
  for (const auto& [key, val] : table) CHECK(val == Rational(1));
}

TEST_CASE("kernel application examples") {
  RationalRing Q;
  TransformationKernel poisson{KernelKind::Poisson, 8, 8};
  // b = z + z^{-1}: the degree-1 row picks both coefficients
  LaurentSeries<RationalRing> b;
  b.lo = -1;
  b.c = {Rational(1), Rational(0), Rational(1)};
  auto tb = apply_kernel(Q, poisson, b);
  CHECK(series_coeff(Q, tb, 1) == Rational(2));
  CHECK(series_coeff(Q, tb, 0).is_zero());

  TransformationKernel reg{KernelKind::VariantRegularization, 8, 8};
  auto one = series_const(Q, Rational(1));
  auto t_only = apply_kernel(Q, reg, one);
  CHECK(series_coeff(Q, t_only, 1) == Rational(1));
  CHECK(series_coeff(Q, t_only, 2).is_zero());

  CHECK(apply_kernel(Q, poisson, series_zero(Q)).empty());

  IntRing Z;
  CHECK_THROWS_AS(apply_kernel(Z, reg, series_const(Z, std::int64_t{1})), half_missing_error);
}

TEST_CASE("limits at t = 1") {
  TransformationKernel reg{KernelKind::VariantRegularization, 12, 12};
  auto lim = kernel_limit_t1(reg, 11);
  RationalRing Q;
  CHECK(series_eq(Q, lim, series_const(Q, Rational(1))));

  TransformationKernel poisson{KernelKind::Poisson, 12, 12};
  auto plim = kernel_limit_t1(poisson, 12);
  for (int s = -12; s <= 12; ++s) CHECK(series_coeff(Q, plim, s) == Rational(1));

  // the shifted odd kernel's z^1 column sums to 1 (its t^0 entry)
  TransformationKernel shifted{KernelKind::ShiftedOddPoisson, 12, 12};
  auto slim = kernel_limit_t1(shifted, 4);
  CHECK(series_coeff(Q, slim, 1) == Rational(1));
}

TEST_CASE("variant Hilbert kernel is the half-shifted scaling at every truncation") {
  for (int d = 0; d <= 20; ++d)
    for (int s = -20; s <= 20; ++s) {
      Rational lhs = kernel_coeff(KernelKind::VariantHilbertPoisson, d, s);
      Rational rhs = (kernel_coeff(KernelKind::HilbertPoisson, d, s) +
                      kernel_coeff(KernelKind::HilbertPoisson, d - 1, s)) *
                     Rational(1, 2);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("ordinary regularization kernel carries the awkwardness flag") {
  TransformationKernel ordinary{KernelKind::OrdinaryRegularization, 8, 8};
  CHECK(ordinary.algebraically_awkward());
  CHECK_FALSE(TransformationKernel{KernelKind::VariantRegularization, 8, 8}.algebraically_awkward());
  // off-center columns oscillate (+2, -2, ...) instead of telescoping, which
  // is exactly the inconvenience the flag records
  CHECK(kernel_coeff(KernelKind::OrdinaryRegularization, 1, 0) == Rational(2));
  CHECK(kernel_coeff(KernelKind::OrdinaryRegularization, 2, 1) == Rational(2));
  CHECK(kernel_coeff(KernelKind::OrdinaryRegularization, 3, 1) == Rational(-2));
}

TEST_CASE("resolvent pipeline vanishes identically for scalar rationals") {
  for (std::int64_t qv : {2, 3, -3}) {
    auto rep = resolvent_analytic_pipeline(Rational(qv), 12, 12);
    CHECK(rep.vanishes);
    CHECK(rep.direct.empty());
    CHECK(rep.reduced_z.empty());
    CHECK(rep.reduced_w.empty());
  }
}

TEST_CASE("kernel suite passes") {
  for (const auto& c : suite_kernels()) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
}
