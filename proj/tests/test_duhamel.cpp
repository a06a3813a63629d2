#include <doctest.h>

#include <cmath>

#include "oracle_values.hpp"
#include "splitcheck/duhamel.hpp"
#include "splitcheck/splitting.hpp"
#include "test_util.hpp"

using namespace splitcheck;
using namespace splitcheck::linalg;
using namespace splitcheck::duhamel;

namespace {

struct Triple {
  ComplexMatrix p1, p2, p3;
};

Triple oracle_triple() {
  return {from_rows(oracle::kP1, oracle::kDim), from_rows(oracle::kP2, oracle::kDim),
          from_rows(oracle::kP3, oracle::kDim)};
}

}  // namespace

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (int order : {1, 2, 5, 8, 12}) {
    const GaussLegendre rule(order);
    double wsum = 0.0;
    for (double w : rule.weights()) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    for (int deg = 0; deg <= 2 * order - 1; ++deg) {
      double q = 0.0;
      for (const auto& p : rule.composite(0.0, 1.0, 3)) q += p.w * std::pow(p.x, deg);
      CHECK(q == doctest::Approx(1.0 / (deg + 1)).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(GaussLegendre(0), InvalidArgument);
}

TEST_CASE("quadrature settings validation") {
  QuadratureSpec bad;
  bad.max_panels = 0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  QuadratureSpec tight;
  tight.gauss_order = 2;
  tight.target_tol = 1e-15;
  tight.max_panels = 4;
  const auto p = random_skew_hermitian(3, 1) * 3.0;
  const auto q = random_skew_hermitian(3, 2);
  CHECK_THROWS_AS(z_integral(p, q, 1.0, tight), ToleranceNotReached);
}

TEST_CASE("z integral equals the commutator with the exponential") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto p = random_skew_hermitian(4, seed);
    const auto q = random_skew_hermitian(4, seed + 10);
    for (double t : {0.1, 1.0}) {
      CHECK(op_norm(z_integral(p, q, t) - commutator(expm(p, t), q)) <= 1e-8);
    }
  }
}

TEST_CASE("w integral forms agree") {
  const auto tr = oracle_triple();
  for (double tau : {0.1, 0.5}) {
    CHECK(op_norm(w_integral(tr.p1, tr.p2, tr.p3, tau) -
                  w_integral_defining(tr.p1, tr.p2, tr.p3, tau)) <= 1e-9);
  }
}

TEST_CASE("Duhamel representation reproduces the measured error") {
  const auto tr = oracle_triple();
  const splitting::OperatorSet ops{{"P1", tr.p1}, {"P2", tr.p2}, {"P3", tr.p3}};
  for (double t : {0.25, 0.5}) {
    const auto measured = splitting::splitting_error(splitting::make_three_factor(), ops, t);
    const auto represented = duhamel_error(tr.p1, tr.p2, tr.p3, t);
    CHECK(op_norm(measured - represented) <= 1e-9);
  }
  CHECK(rel_diff(op_norm(duhamel_error(tr.p1, tr.p2, tr.p3, 0.25)), oracle::kTripleErrorNormAt025) <=
        1e-8);
  CHECK(op_norm(duhamel_error(tr.p1, tr.p2, tr.p3, 0.0)) == 0.0);
}

TEST_CASE("Duhamel representation requires the second-order condition") {
  const auto tr = oracle_triple();
  CHECK_THROWS_AS(duhamel_error(tr.p1, tr.p2, tr.p1 + tr.p2, 0.25), ConditionViolated);
  CHECK_THROWS_AS(duhamel_error(tr.p1, tr.p2, ComplexMatrix::Zero(2, 2), 0.25), DimensionMismatch);
}

TEST_CASE("error bound") {
  const auto tr = oracle_triple();
  CHECK(rel_diff(error_bound(tr.p1, tr.p2, tr.p3, 1.0), oracle::kBoundCoefficient) <= 1e-12);
  CHECK(error_bound(tr.p1, tr.p2, tr.p3, 0.5) ==
        doctest::Approx(8.0 * error_bound(tr.p1, tr.p2, tr.p3, 0.25)).epsilon(1e-14));
  for (double t : {0.25, 0.5}) {
    const auto v = verify_triple(tr.p1, tr.p2, tr.p3, {t});
    CHECK(v.reports[0].measured_error_norm <= v.reports[0].bound_value + 1e-9);
  }
}

TEST_CASE("sign calibration") {
  const auto tr = oracle_triple();
  const auto v = verify_triple(tr.p1, tr.p2, tr.p3, {0.0, 0.25, 0.5});
  CHECK(v.sign_factor == 1);
  CHECK(v.calibration_time == 0.25);
  CHECK(v.sign_consistent);
  CHECK(v.reports[0].discrepancy == 0.0);
  CHECK(v.max_discrepancy <= 1e-9);
}

TEST_CASE("commuting triple has zero error on both sides") {
  ComplexMatrix d1 = ComplexMatrix::Zero(3, 3), d2 = ComplexMatrix::Zero(3, 3);
  d1.diagonal() << Complex(0, 1), Complex(0, -1), Complex(0, 0.3);
  d2.diagonal() << Complex(0, 2), Complex(0, 0.1), Complex(0, -1);
  const auto v = verify_triple(d1, d2, d1, {0.5});
  CHECK(v.reports[0].measured_error_norm <= 1e-14);
  CHECK(v.reports[0].duhamel_norm <= 1e-14);
  CHECK(v.reports[0].bound_value == 0.0);
}
