#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle_values.hpp"
#include "splitcheck/errors.hpp"
#include "splitcheck/schrodinger.hpp"

using namespace splitcheck;
using namespace splitcheck::schrodinger;
using std::numbers::pi;

namespace {

const Complex I(0.0, 1.0);

WaveFunction gaussian(const Grid1D& g, double x0 = 0.0, double sigma = 1.0, double k = 0.0) {
  return WaveFunction::from_function(g, [=](double x) {
    return std::exp(-(x - x0) * (x - x0) / (2 * sigma * sigma)) * std::exp(I * k * x);
  });
}

double max_abs(const Samples& s) { return s.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("grid validation and layout") {
  CHECK_THROWS_AS(Grid1D(10.0, 100), InvalidArgument);
  CHECK_THROWS_AS(Grid1D(10.0, 8), InvalidArgument);
  CHECK_THROWS_AS(Grid1D(-1.0, 64), InvalidArgument);
  const Grid1D g(10.0, 16);
  const auto x = g.nodes();
  CHECK(x(0) == -10.0);
  CHECK(x(15) == doctest::Approx(10.0 - 20.0 / 16));
  const auto k = g.wavenumbers();
  CHECK(k(1) == doctest::Approx(pi / 10));
  CHECK(k(8) == doctest::Approx(-8 * pi / 10));
  CHECK(k(15) == doctest::Approx(-pi / 10));
}

TEST_CASE("l2 distance requires matching grids") {
  const Grid1D a(10.0, 32), b(10.0, 64);
  CHECK_THROWS_AS(l2_distance(gaussian(a), gaussian(b)), GridMismatch);
  CHECK(l2_distance(gaussian(a), gaussian(a)) == 0.0);
}

TEST_CASE("plane waves are eigenfunctions of the kinetic flow") {
  const Grid1D g(10.0, 64);
  for (int m : {0, 1, 5, -7}) {
    const double k = pi * m / g.half_width();
    const auto u = WaveFunction::from_function(g, [&](double x) { return std::exp(I * k * x); });
    const double t = 0.37;
    const auto v = laplacian_propagator(u, t);
    const Samples expected = u.samples() * std::exp(I * t * k * k / 2.0);
    CHECK(max_abs(v.samples() - expected) <= 1e-13);
  }
}

TEST_CASE("potential flow is a pointwise phase") {
  const Grid1D g(10.0, 64);
  const auto v = Potential::harmonic();
  const auto u = gaussian(g);
  const auto w = potential_propagator(u, v, 0.5);
  const auto x = g.nodes();
  for (int j = 0; j < g.points(); ++j) {
    CHECK(std::abs(w.samples()(j) - u.samples()(j) * std::exp(I * 0.5 * 0.5 * x(j) * x(j))) <= 1e-15);
  }
}

TEST_CASE("free Gaussian evolution matches the analytic solution") {
  for (const auto& s : oracle::kFreeGaussian) {
    CHECK(std::abs(free_gaussian(s.x, s.t) - s.u) <= 1e-15);
  }
  const Grid1D g(10.0, 256);
  const auto u0 = gaussian(g);
  for (double t : {0.5, 1.0}) {
    const auto u = laplacian_propagator(u0, t);
    const auto x = g.nodes();
    double err = 0.0;
    for (int j = 0; j < g.points(); ++j) {
      err = std::max(err, std::abs(u.samples()(j) - free_gaussian(x(j), t)));
    }
    CHECK(err <= 1e-8);
  }
}

TEST_CASE("split steps conserve mass") {
  const Grid1D g(10.0, 256);
  const auto u0 = gaussian(g, 1.0);
  const auto v = Potential::harmonic();
  for (const auto& scheme : {splitting::make_strang(), splitting::make_lie_trotter()}) {
    const auto u = evolve(u0, v, 1.0 / 64, 64, scheme);
    CHECK(std::abs(u.l2_norm() - u0.l2_norm()) <= 1e-10);
  }
  CHECK_THROWS_AS(split_step(u0, v, 0.1, splitting::make_three_factor()), NonCanonicalScheme);
}

TEST_CASE("constant potential commutes with the kinetic part") {
  const Grid1D g(10.0, 128);
  const auto u0 = gaussian(g);
  const auto v = Potential::constant(0.7);
  const auto a = evolve(u0, v, 0.25, 4, splitting::make_lie_trotter());
  const auto b = evolve(u0, v, 0.25, 4, splitting::make_strang());
  CHECK(l2_distance(a, b) <= 1e-13);
}

TEST_CASE("strang error is stable under grid refinement") {
  const auto v = Potential::harmonic();
  double errs[2];
  int idx = 0;
  for (int n : {256, 512}) {
    const Grid1D g(10.0, n);
    const auto u0 = gaussian(g, 1.0);
    const auto coarse = evolve(u0, v, 1.0 / 16, 16, splitting::make_strang());
    const auto fine = evolve(u0, v, 1.0 / 256, 256, splitting::make_strang());
    errs[idx++] = l2_distance(coarse, fine);
  }
  CHECK(errs[1] == doctest::Approx(errs[0]).epsilon(1e-6));
}

TEST_CASE("commutator fits the first-order operator form") {
  const Grid1D g(10.0, 256);
  for (const auto& v : {Potential::harmonic(), Potential::cosine(1.0, 10.0, 2),
                        Potential::gaussian_well()}) {
    const auto fit = fit_commutator(gaussian(g, 0.5, 1.2, 0.8), v);
    INFO(v.name());
    CHECK(fit.relative_residual <= 1e-6);
    CHECK(std::abs(fit.c1 - Complex(0.5, 0.0)) <= 1e-6);
    CHECK(std::abs(fit.c2 - Complex(1.0, 0.0)) <= 1e-6);
  }
  const auto lin = fit_commutator(gaussian(g), Potential::linear());
  CHECK(lin.c1 == Complex(0.0, 0.0));
  CHECK(std::abs(lin.c2 - Complex(1.0, 0.0)) <= 1e-6);
}

TEST_CASE("double commutator is multiplication by a multiple of V'^2") {
  const Grid1D g(10.0, 256);
  for (const auto& v : {Potential::harmonic(), Potential::cosine(1.0, 10.0, 1)}) {
    const auto u1 = WaveFunction::from_function(g, [](double x) {
      return Complex(2.0 + std::cos(pi * x / 10), 0.3 * std::sin(pi * x / 5));
    });
    const auto u2 = WaveFunction::from_function(g, [](double x) {
      return std::exp(I * std::sin(pi * x / 10)) * (1.5 + 0.5 * std::sin(pi * x / 10));
    });
    const auto f1 = fit_double_commutator(u1, v);
    const auto f2 = fit_double_commutator(u2, v);
    INFO(v.name());
    CHECK(f1.relative_residual <= 1e-6);
    CHECK(std::abs(f1.constant - Complex(0.0, -1.0)) <= 1e-6);
    CHECK(max_abs(f1.ratio - f2.ratio) <= 1e-6 * max_abs(f1.ratio));
  }
  CHECK_THROWS_AS(fit_double_commutator(gaussian(Grid1D(10.0, 256)), Potential::harmonic()),
                  VanishingState);
}
