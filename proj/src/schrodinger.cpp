#include "splitcheck/schrodinger.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include <fftw3.h>

#include "splitcheck/errors.hpp"

namespace splitcheck::schrodinger {

namespace {

constexpr Complex kI{0.0, 1.0};

// FFTW's planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void require_same_grid(const Grid1D& a, const Grid1D& b, const char* who) {
  if (!(a == b)) throw GridMismatch(std::string(who) + ": grids differ");
}

}  // namespace

// ---- Grid1D / WaveFunction ---------------------------------------------------

Grid1D::Grid1D(double half_width, int points) : half_width_(half_width), points_(points) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw InvalidArgument("Grid1D: half width must be positive");
  }
  if (points < 16 || (points & (points - 1)) != 0) {
    throw InvalidArgument("Grid1D: N must be a power of two >= 16");
  }
}

RealSamples Grid1D::nodes() const {
  RealSamples x(points_);
  for (int j = 0; j < points_; ++j) x(j) = -half_width_ + 2.0 * half_width_ * j / points_;
  return x;
}

RealSamples Grid1D::wavenumbers() const {
  RealSamples k(points_);
  const double base = std::numbers::pi / half_width_;
  for (int j = 0; j < points_; ++j) k(j) = base * (j < points_ / 2 ? j : j - points_);
  return k;
}

WaveFunction::WaveFunction(Grid1D grid, Samples samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.points()) throw GridMismatch("WaveFunction: sample count != N");
  if (!samples_.allFinite()) throw InvalidArgument("WaveFunction: non-finite samples");
}

WaveFunction WaveFunction::from_function(const Grid1D& grid,
                                         const std::function<Complex(double)>& f) {
  const RealSamples x = grid.nodes();
  Samples s(grid.points());
  for (int j = 0; j < grid.points(); ++j) s(j) = f(x(j));
  return WaveFunction(grid, std::move(s));
}

double WaveFunction::l2_norm() const { return std::sqrt(grid_.spacing()) * samples_.norm(); }

double l2_distance(const WaveFunction& u, const WaveFunction& v) {
  require_same_grid(u.grid(), v.grid(), "l2_distance");
  return std::sqrt(u.grid().spacing()) * (u.samples() - v.samples()).norm();
}

// ---- Potential ---------------------------------------------------------------

Potential::Potential(std::string name, Generator generator, bool periodic)
    : name_(std::move(name)), generator_(std::move(generator)), periodic_(periodic) {}

Potential Potential::harmonic(double omega) {
  const double w2 = omega * omega;
  return Potential("harmonic",
                   {[w2](double x) { return 0.5 * w2 * x * x; }, [w2](double x) { return w2 * x; },
                    [w2](double) { return w2; }},
                   false);
}

Potential Potential::cosine(double amplitude, double half_width, int wavenumber) {
  const double k = std::numbers::pi * wavenumber / half_width;
  return Potential("cosine",
                   {[=](double x) { return amplitude * std::cos(k * x); },
                    [=](double x) { return -amplitude * k * std::sin(k * x); },
                    [=](double x) { return -amplitude * k * k * std::cos(k * x); }},
                   true);
}

Potential Potential::gaussian_well(double depth, double width) {
  const double s2 = width * width;
  auto g = [=](double x) { return std::exp(-x * x / (2.0 * s2)); };
  return Potential("gaussian-well",
                   {[=](double x) { return -depth * g(x); },
                    [=](double x) { return depth * x / s2 * g(x); },
                    [=](double x) { return depth * (1.0 / s2 - x * x / (s2 * s2)) * g(x); }},
                   true);
}

Potential Potential::constant(double c) {
  return Potential("constant",
                   {[c](double) { return c; }, [](double) { return 0.0; },
                    [](double) { return 0.0; }},
                   true);
}

Potential Potential::linear(double slope) {
  return Potential("linear",
                   {[slope](double x) { return slope * x; }, [slope](double) { return slope; },
                    [](double) { return 0.0; }},
                   false);
}

Potential Potential::by_name(const std::string& name, double half_width) {
  if (name == "harmonic") return harmonic();
  if (name == "cosine") return cosine(1.0, half_width);
  if (name == "gaussian-well") return gaussian_well();
  throw InvalidArgument("unknown potential '" + name + "'");
}

namespace {

RealSamples sample_with(const std::function<double(double)>& f, const Grid1D& grid) {
  const RealSamples x = grid.nodes();
  RealSamples out(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) out(j) = f(x(j));
  return out;
}

}  // namespace

RealSamples Potential::sample(const Grid1D& grid) const { return sample_with(generator_.value, grid); }
RealSamples Potential::sample_d1(const Grid1D& grid) const { return sample_with(generator_.d1, grid); }
RealSamples Potential::sample_d2(const Grid1D& grid) const { return sample_with(generator_.d2, grid); }

// ---- SpectralWorkspace ---------------------------------------------------------

struct SpectralWorkspace::Plans {
  int n;
  fftw_complex* buffer;
  fftw_plan forward;
  fftw_plan backward;

  explicit Plans(int n_) : n(n_) {
    std::lock_guard lock(planner_mutex());
    buffer = fftw_alloc_complex(n);
    forward = fftw_plan_dft_1d(n, buffer, buffer, FFTW_FORWARD, FFTW_ESTIMATE);
    backward = fftw_plan_dft_1d(n, buffer, buffer, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Plans() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
    fftw_free(buffer);
  }

  Samples run(fftw_plan plan, const Samples& in, double scale) {
    auto* data = reinterpret_cast<Complex*>(buffer);
    for (int j = 0; j < n; ++j) data[j] = in(j);
    fftw_execute(plan);
    Samples out(n);
    for (int j = 0; j < n; ++j) out(j) = data[j] * scale;
    return out;
  }
};

SpectralWorkspace::SpectralWorkspace(const Grid1D& grid)
    : grid_(grid), kappa_(grid.wavenumbers()), plans_(std::make_unique<Plans>(grid.points())) {}

SpectralWorkspace::~SpectralWorkspace() = default;

Samples SpectralWorkspace::forward(const Samples& u) { return plans_->run(plans_->forward, u, 1.0); }

Samples SpectralWorkspace::inverse(const Samples& u_hat) {
  return plans_->run(plans_->backward, u_hat, 1.0 / grid_.points());
}

Samples SpectralWorkspace::apply_multiplier(const Samples& u, const Samples& multiplier) {
  return inverse(forward(u).cwiseProduct(multiplier));
}

Samples SpectralWorkspace::derivative(const Samples& u) {
  Samples m = kI * kappa_.cast<Complex>();
  m(grid_.points() / 2) = 0.0;  // Nyquist mode has no odd counterpart
  return apply_multiplier(u, m);
}

Samples SpectralWorkspace::second_derivative(const Samples& u) {
  const Samples m = -kappa_.array().square().cast<Complex>();
  return apply_multiplier(u, m);
}

// ---- propagators -------------------------------------------------------------

WaveFunction laplacian_propagator(const WaveFunction& u, double t, SpectralWorkspace& ws) {
  require_same_grid(u.grid(), ws.grid(), "laplacian_propagator");
  const RealSamples k = u.grid().wavenumbers();
  Samples m(k.size());
  for (Eigen::Index j = 0; j < k.size(); ++j) m(j) = std::exp(kI * (0.5 * t * k(j) * k(j)));
  return WaveFunction(u.grid(), ws.apply_multiplier(u.samples(), m));
}

WaveFunction laplacian_propagator(const WaveFunction& u, double t) {
  if (t == 0.0) return u;
  SpectralWorkspace ws(u.grid());
  return laplacian_propagator(u, t, ws);
}

WaveFunction potential_propagator(const WaveFunction& u, const Potential& v, double t) {
  const RealSamples vs = v.sample(u.grid());
  Samples out = u.samples();
  for (Eigen::Index j = 0; j < out.size(); ++j) out(j) *= std::exp(kI * (t * vs(j)));
  return WaveFunction(u.grid(), std::move(out));
}

namespace {

void require_canonical(const splitting::SplittingScheme& scheme) {
  if (!scheme.canonical()) {
    throw NonCanonicalScheme("split_step: scheme '" + scheme.name() +
                             "' is not canonical over {A, B}");
  }
}

// Precomputed sub-propagator multipliers for repeated steps of size h.
class StepPropagator {
 public:
  StepPropagator(const Grid1D& grid, const Potential& v, double h,
                 const splitting::SplittingScheme& scheme)
      : ws_(grid), grid_(grid) {
    require_canonical(scheme);
    const RealSamples k = grid.wavenumbers();
    const RealSamples vs = v.sample(grid);
    const auto& ops = scheme.operands();
    // Rightmost operand acts first.
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
      const double s = it->coefficient * h;
      Stage stage;
      stage.kinetic = it->ref == "A";
      stage.phase.resize(grid.points());
      for (int j = 0; j < grid.points(); ++j) {
        const double arg = stage.kinetic ? 0.5 * s * k(j) * k(j) : s * vs(j);
        stage.phase(j) = std::exp(kI * arg);
      }
      stages_.push_back(std::move(stage));
    }
  }

  Samples step(const Samples& u) {
    Samples cur = u;
    for (const auto& stage : stages_) {
      cur = stage.kinetic ? ws_.apply_multiplier(cur, stage.phase)
                          : Samples(cur.cwiseProduct(stage.phase));
    }
    return cur;
  }

 private:
  struct Stage {
    bool kinetic = false;
    Samples phase;
  };
  SpectralWorkspace ws_;
  Grid1D grid_;
  std::vector<Stage> stages_;
};

}  // namespace

WaveFunction split_step(const WaveFunction& u, const Potential& v, double t,
                        const splitting::SplittingScheme& scheme) {
  return evolve(u, v, t, 1, scheme);
}

WaveFunction evolve(const WaveFunction& u, const Potential& v, double h, int steps,
                    const splitting::SplittingScheme& scheme) {
  if (steps < 0) throw InvalidArgument("evolve: negative step count");
  StepPropagator prop(u.grid(), v, h, scheme);
  Samples cur = u.samples();
  for (int k = 0; k < steps; ++k) cur = prop.step(cur);
  return WaveFunction(u.grid(), std::move(cur));
}

Complex free_gaussian(double x, double t, double sigma) {
  const Complex a = Complex(sigma * sigma, -t);
  return std::sqrt(Complex(sigma * sigma, 0.0) / a) * std::exp(-x * x / (2.0 * a));
}

// ---- commutator structure --------------------------------------------------------

namespace {

// A smooth function on the grid together with its first two derivatives,
// used to apply A to products f*u.
struct Multiplier {
  Samples value, d1, d2;
  bool periodic;

  static Multiplier potential_phase(const Potential& v, const Grid1D& grid) {
    return {kI * v.sample(grid).cast<Complex>(), kI * v.sample_d1(grid).cast<Complex>(),
            kI * v.sample_d2(grid).cast<Complex>(), v.periodic()};
  }

  Multiplier operator*(const Multiplier& o) const {
    return {value.cwiseProduct(o.value),
            d1.cwiseProduct(o.value) + value.cwiseProduct(o.d1),
            d2.cwiseProduct(o.value) + 2.0 * d1.cwiseProduct(o.d1) + value.cwiseProduct(o.d2),
            periodic && o.periodic};
  }
};

Samples kinetic(const Samples& u, SpectralWorkspace& ws) { return -0.5 * kI * ws.second_derivative(u); }

// A (f u)
Samples kinetic_of_product(const Multiplier& f, const Samples& u, SpectralWorkspace& ws) {
  if (f.periodic) return kinetic(f.value.cwiseProduct(u), ws);
  const Samples du = ws.derivative(u);
  const Samples ddu = ws.second_derivative(u);
  return -0.5 * kI *
         (f.d2.cwiseProduct(u) + 2.0 * f.d1.cwiseProduct(du) + f.value.cwiseProduct(ddu));
}

}  // namespace

WaveFunction apply_kinetic(const WaveFunction& u, SpectralWorkspace& ws) {
  require_same_grid(u.grid(), ws.grid(), "apply_kinetic");
  return WaveFunction(u.grid(), kinetic(u.samples(), ws));
}

WaveFunction apply_potential(const WaveFunction& u, const Potential& v) {
  return WaveFunction(u.grid(), kI * v.sample(u.grid()).cast<Complex>().cwiseProduct(u.samples()));
}

WaveFunction commutator_apply(const WaveFunction& u, const Potential& v) {
  SpectralWorkspace ws(u.grid());
  const Multiplier b = Multiplier::potential_phase(v, u.grid());
  const Samples abu = kinetic_of_product(b, u.samples(), ws);
  const Samples bau = b.value.cwiseProduct(kinetic(u.samples(), ws));
  return WaveFunction(u.grid(), abu - bau);
}

WaveFunction double_commutator_apply(const WaveFunction& u, const Potential& v) {
  SpectralWorkspace ws(u.grid());
  const Multiplier b = Multiplier::potential_phase(v, u.grid());
  const Multiplier bb = b * b;
  const Samples& s = u.samples();
  const Samples babu = b.value.cwiseProduct(kinetic_of_product(b, s, ws));
  const Samples bbau = bb.value.cwiseProduct(kinetic(s, ws));
  const Samples abbu = kinetic_of_product(bb, s, ws);
  return WaveFunction(u.grid(), 2.0 * babu - bbau - abbu);
}

CommutatorFit fit_commutator(const WaveFunction& u, const Potential& v) {
  SpectralWorkspace ws(u.grid());
  const Samples& s = u.samples();
  const Samples col1 = v.sample_d2(u.grid()).cast<Complex>().cwiseProduct(s);
  const Samples col2 = v.sample_d1(u.grid()).cast<Complex>().cwiseProduct(ws.derivative(s));
  CommutatorFit fit{.result = commutator_apply(u, v)};
  const Samples& r = fit.result.samples();

  const double scale = std::max({col1.norm(), col2.norm(), r.norm()});
  const double negligible = 1e-13 * std::max(scale, 1e-300);
  const bool use1 = col1.norm() > negligible;
  const bool use2 = col2.norm() > negligible;

  Samples model = Samples::Zero(s.size());
  if (use1 && use2) {
    Eigen::MatrixXcd basis(s.size(), 2);
    basis.col(0) = col1 / col1.norm();
    basis.col(1) = col2 / col2.norm();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(basis, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto sv = svd.singularValues();
    if (sv(1) < 1e-8 * sv(0)) {
      throw IllConditionedFit("fit_commutator: V''u and V'u' are numerically dependent");
    }
    const Eigen::VectorXcd c = svd.solve(r);
    fit.c1 = c(0) / col1.norm();
    fit.c2 = c(1) / col2.norm();
    model = fit.c1 * col1 + fit.c2 * col2;
  } else if (use1) {
    fit.c1 = col1.dot(r) / col1.squaredNorm();
    model = fit.c1 * col1;
  } else if (use2) {
    fit.c2 = col2.dot(r) / col2.squaredNorm();
    model = fit.c2 * col2;
  }
  const double rn = r.norm();
  fit.relative_residual = rn > 0.0 ? (r - model).norm() / rn : 0.0;
  return fit;
}

DoubleCommutatorFit fit_double_commutator(const WaveFunction& u, const Potential& v) {
  const Samples& s = u.samples();
  const double max_abs = s.cwiseAbs().maxCoeff();
  if (!(max_abs > 0.0) || s.cwiseAbs().minCoeff() < 1e-8 * max_abs) {
    throw VanishingState("fit_double_commutator: u vanishes on the grid");
  }
  const Samples r = double_commutator_apply(u, v).samples();
  DoubleCommutatorFit fit;
  fit.ratio = r.cwiseQuotient(s);
  const Samples q = v.sample_d1(u.grid()).array().square().cast<Complex>();
  const double rn = fit.ratio.norm();
  if (q.norm() > 0.0) fit.constant = q.dot(fit.ratio) / q.squaredNorm();
  fit.relative_residual = rn > 0.0 ? (fit.ratio - fit.constant * q).norm() / rn : 0.0;
  return fit;
}

}  // namespace splitcheck::schrodinger
