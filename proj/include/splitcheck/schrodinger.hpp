#pragma once

// Periodic 1D split-step Fourier machinery for
//   u_t = A u + B u,   A = -(i/2) d^2/dx^2,   B = i V(x),
// on the box [-L, L) with N equispaced nodes.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "splitcheck/splitting.hpp"

namespace splitcheck::schrodinger {

using Complex = std::complex<double>;
using Samples = Eigen::VectorXcd;
using RealSamples = Eigen::VectorXd;

class Grid1D {
 public:
  // Throws InvalidArgument unless N is a power of two >= 16 and L > 0.
  Grid1D(double half_width, int points);

  double half_width() const { return half_width_; }
  int points() const { return points_; }
  double spacing() const { return 2.0 * half_width_ / points_; }

  // x_j = -L + 2 L j / N
  RealSamples nodes() const;
  // kappa_k = (pi / L) m_k in FFT order, m_k = k for k < N/2 and k - N otherwise.
  RealSamples wavenumbers() const;

  friend bool operator==(const Grid1D&, const Grid1D&) = default;

 private:
  double half_width_;
  int points_;
};

class WaveFunction {
 public:
  WaveFunction(Grid1D grid, Samples samples);

  static WaveFunction from_function(const Grid1D& grid, const std::function<Complex(double)>& f);

  const Grid1D& grid() const { return grid_; }
  const Samples& samples() const { return samples_; }

  // sqrt(dx * sum |u_j|^2)
  double l2_norm() const;

 private:
  Grid1D grid_;
  Samples samples_;
};

// ||u - v|| in the discrete L2 norm; throws GridMismatch.
double l2_distance(const WaveFunction& u, const WaveFunction& v);

// Real potential with an analytic generator (value and first two derivatives).
class Potential {
 public:
  struct Generator {
    std::function<double(double)> value;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
  };

  Potential(std::string name, Generator generator, bool periodic);

  // 0.5 * omega^2 x^2
  static Potential harmonic(double omega = 1.0);
  // amplitude * cos(pi * wavenumber * x / L); periodic on the grid for integer wavenumber.
  static Potential cosine(double amplitude, double half_width, int wavenumber = 1);
  // -depth * exp(-x^2 / (2 width^2)); treated as periodic (negligible at the box edge).
  static Potential gaussian_well(double depth = 1.0, double width = 1.0);
  static Potential constant(double c);
  static Potential linear(double slope = 1.0);

  // "harmonic", "cosine", "gaussian-well" with default parameters.
  static Potential by_name(const std::string& name, double half_width);

  const std::string& name() const { return name_; }
  // Whether products V*u of periodic u stay smooth-periodic on the box, so that
  // spectral differentiation of the product is accurate.
  bool periodic() const { return periodic_; }

  RealSamples sample(const Grid1D& grid) const;
  RealSamples sample_d1(const Grid1D& grid) const;
  RealSamples sample_d2(const Grid1D& grid) const;

 private:
  std::string name_;
  Generator generator_;
  bool periodic_;
};

// Owns FFTW plans for one grid size. Not shareable across threads; create one
// per run.
class SpectralWorkspace {
 public:
  explicit SpectralWorkspace(const Grid1D& grid);
  ~SpectralWorkspace();
  SpectralWorkspace(const SpectralWorkspace&) = delete;
  SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;

  const Grid1D& grid() const { return grid_; }

  // Unnormalised forward transform and normalised inverse.
  Samples forward(const Samples& u);
  Samples inverse(const Samples& u_hat);

  // Applies the Fourier multiplier m(kappa_k) to u.
  Samples apply_multiplier(const Samples& u, const Samples& multiplier);

  Samples derivative(const Samples& u);
  Samples second_derivative(const Samples& u);

 private:
  struct Plans;
  Grid1D grid_;
  RealSamples kappa_;
  std::unique_ptr<Plans> plans_;
};

// e^{tA} u: Fourier multiplier e^{i t kappa^2 / 2}.
WaveFunction laplacian_propagator(const WaveFunction& u, double t);
WaveFunction laplacian_propagator(const WaveFunction& u, double t, SpectralWorkspace& ws);

// e^{tB} u: pointwise phase e^{i t V(x_j)}.
WaveFunction potential_propagator(const WaveFunction& u, const Potential& v, double t);

// One step of a canonical scheme over {A, B}; the rightmost operand acts first.
// Throws NonCanonicalScheme for anything else.
WaveFunction split_step(const WaveFunction& u, const Potential& v, double t,
                        const splitting::SplittingScheme& scheme);

// `steps` consecutive split steps of size h, reusing one workspace.
WaveFunction evolve(const WaveFunction& u, const Potential& v, double h, int steps,
                    const splitting::SplittingScheme& scheme);

// Free evolution of u0(x) = exp(-x^2 / (2 sigma^2)) under u_t = -(i/2) u_xx on
// the real line: (sigma^2 / (sigma^2 - i t))^{1/2} exp(-x^2 / (2 (sigma^2 - i t))).
Complex free_gaussian(double x, double t, double sigma = 1.0);

// A u and B u.
WaveFunction apply_kinetic(const WaveFunction& u, SpectralWorkspace& ws);
WaveFunction apply_potential(const WaveFunction& u, const Potential& v);

// [A,B] u = A(B u) - B(A u). For periodic potentials A(Bu) is spectral; for
// non-periodic ones the product rule with the generator's derivatives is used.
WaveFunction commutator_apply(const WaveFunction& u, const Potential& v);

// [B,[A,B]] u = 2 BABu - BBAu - ABBu, same differentiation policy.
WaveFunction double_commutator_apply(const WaveFunction& u, const Potential& v);

// Least-squares fit [A,B]u ~ c1 * V'' u + c2 * V' u'. A basis column that is
// identically zero leaves its coefficient at 0. Throws IllConditionedFit when
// both columns are nonzero but numerically parallel.
struct CommutatorFit {
  Complex c1{0.0, 0.0};
  Complex c2{0.0, 0.0};
  double relative_residual = 0.0;
  WaveFunction result;
};
CommutatorFit fit_commutator(const WaveFunction& u, const Potential& v);

// ([B,[A,B]]u)_j / u_j fitted as kappa * V'(x_j)^2. Throws VanishingState if
// min |u_j| < 1e-8 max |u_j|.
struct DoubleCommutatorFit {
  Samples ratio;
  Complex constant{0.0, 0.0};
  double relative_residual = 0.0;
};
DoubleCommutatorFit fit_double_commutator(const WaveFunction& u, const Potential& v);

}  // namespace splitcheck::schrodinger
