#include "splitcheck/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "splitcheck/errors.hpp"
#include "splitcheck/schrodinger.hpp"

namespace splitcheck::harness {

using linalg::op_norm;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_string(Problem p) { return p == Problem::matrix ? "matrix" : "schrodinger"; }

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// ---- convergence -------------------------------------------------------------------

std::vector<double> dyadic_steps(double coarsest, int count) {
  std::vector<double> out;
  for (int k = 0; k < count; ++k) out.push_back(std::ldexp(coarsest, -k));
  return out;
}

namespace {

int step_count(double horizon, double h) {
  const double n = horizon / h;
  const double rounded = std::round(n);
  if (rounded < 1 || std::abs(n - rounded) > 1e-9 * rounded) {
    throw InvalidArgument("step " + std::to_string(h) + " does not divide horizon " +
                          std::to_string(horizon));
  }
  return static_cast<int>(rounded);
}

std::optional<double> default_expected_order(const std::string& scheme) {
  if (scheme == "lie-trotter") return 1.0;
  if (scheme == "strang") return 2.0;
  return std::nullopt;
}

double local_slope(const StudyRow& a, const StudyRow& b) {
  return std::log(a.error / b.error) / std::log(a.h / b.h);
}

std::vector<StudyRow> matrix_rows(const ConvergenceStudy& study) {
  const auto refs = study.scheme.references();
  splitting::OperatorSet ops;
  for (std::size_t r = 0; r < refs.size(); ++r) {
    ops.bind(refs[r], linalg::random_skew_hermitian(study.dim, derive_seed(study.seed, r)));
  }
  std::vector<StudyRow> rows;
  for (double h : study.steps) {
    const int n = step_count(study.horizon, h);
    const ComplexMatrix step = splitting::apply_splitting(study.scheme, ops, h);
    ComplexMatrix propagated = ComplexMatrix::Identity(ops.dim(), ops.dim());
    for (int k = 0; k < n; ++k) propagated = step * propagated;
    const ComplexMatrix reference = linalg::expm(splitting::generator(study.scheme, ops),
                                                 study.horizon);
    rows.push_back({h, op_norm(propagated - reference), linalg::unitarity_defect(propagated)});
  }
  return rows;
}

std::vector<StudyRow> schrodinger_rows(const ConvergenceStudy& study, double& reference_ratio) {
  using namespace schrodinger;
  const auto& cfg = study.schrodinger;
  const Grid1D grid(cfg.half_width, cfg.points);
  const Potential v = Potential::by_name(cfg.potential, cfg.half_width);
  const double norm_const = std::pow(std::numbers::pi * cfg.sigma * cfg.sigma, -0.25);
  const WaveFunction u0 = WaveFunction::from_function(grid, [&](double x) {
    const double d = (x - cfg.x0) / cfg.sigma;
    return Complex(norm_const * std::exp(-0.5 * d * d), 0.0);
  });
  const double norm0 = u0.l2_norm();

  const auto strang = splitting::make_strang();
  const double h_min = study.steps.back();
  auto strang_run = [&](double h) { return evolve(u0, v, h, step_count(study.horizon, h), strang); };
  const WaveFunction reference = strang_run(h_min / 4);
  const WaveFunction half = strang_run(h_min / 2);
  const WaveFunction finest = strang_run(h_min);
  reference_ratio = l2_distance(finest, half) / l2_distance(half, reference);

  std::vector<StudyRow> rows;
  for (double h : study.steps) {
    const WaveFunction u = evolve(u0, v, h, step_count(study.horizon, h), study.scheme);
    rows.push_back({h, l2_distance(u, reference), std::abs(u.l2_norm() - norm0)});
  }
  return rows;
}

}  // namespace

void ConvergenceStudy::validate() const {
  if (steps.size() < 4) throw InvalidArgument("convergence study needs >= 4 step sizes");
  if (!(horizon > 0.0)) throw InvalidArgument("convergence study horizon must be positive");
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i - 1] != 2.0 * steps[i]) {
      throw InvalidArgument("convergence study steps must halve exactly");
    }
  }
  for (double h : steps) step_count(horizon, h);
  if (problem == Problem::matrix && dim < 1) throw InvalidArgument("matrix dimension must be >= 1");
  if (problem == Problem::schrodinger && !scheme.canonical()) {
    throw NonCanonicalScheme("schrodinger studies need a canonical scheme over {A, B}");
  }
}

OrderFit estimate_order(std::span<const StudyRow> rows) {
  if (rows.size() < 3) throw InvalidArgument("estimate_order: need at least 3 rows");
  const auto n = static_cast<double>(rows.size());
  double sx = 0, sy = 0;
  for (const auto& r : rows) {
    if (!(r.error > 0.0) || !(r.h > 0.0)) {
      throw InvalidArgument("estimate_order: step sizes and errors must be positive");
    }
    sx += std::log(r.h);
    sy += std::log(r.error);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& r : rows) {
    const double dx = std::log(r.h) - mx;
    const double dy = std::log(r.error) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw InvalidArgument("estimate_order: step sizes are all equal");
  OrderFit fit;
  fit.order = sxy / sxx;
  fit.r2 = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  return fit;
}

StudyResult run_convergence(const ConvergenceStudy& study) {
  study.validate();
  StudyResult result;
  result.problem = to_string(study.problem);
  result.scheme = study.scheme.name();
  result.seed = study.seed;
  result.expected_order =
      study.expected_order ? study.expected_order : default_expected_order(study.scheme.name());

  if (study.problem == Problem::matrix) {
    result.rows = matrix_rows(study);
  } else {
    double ratio = 0.0;
    result.rows = schrodinger_rows(study, ratio);
    result.reference_ratio = ratio;
  }

  const auto& rows = result.rows;
  double max_error = 0.0;
  for (const auto& r : rows) max_error = std::max(max_error, r.error);
  if (max_error < 1e-12) {
    result.verdict = Verdict::inconclusive;
    result.note = "degenerate: no order measurable";
    return result;
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].error < rows[i - 1].error)) {
      result.verdict = Verdict::inconclusive;
      result.note = "non-monotone error sequence at h=" + std::to_string(rows[i].h);
      return result;
    }
  }

  // Drop up to two of the coarsest steps if they sit outside the asymptotic
  // regime, keeping at least three rows in the fit.
  std::size_t first = 0;
  const std::size_t max_drop = std::min<std::size_t>(2, rows.size() - 3);
  if (max_drop > 0) {
    const auto tail = estimate_order(std::span(rows).subspan(max_drop));
    if (max_drop >= 2 && std::abs(local_slope(rows[1], rows[2]) - tail.order) > 0.25) {
      first = 2;
    } else if (std::abs(local_slope(rows[0], rows[1]) - tail.order) > 0.25) {
      first = 1;
    }
  }
  for (std::size_t i = 0; i < first; ++i) result.dropped_steps.push_back(rows[i].h);

  const auto fit = estimate_order(std::span(rows).subspan(first));
  result.fitted_order = fit.order;
  result.fit_r2 = fit.r2;

  bool ok = fit.r2 >= study.min_r2;
  if (result.expected_order) {
    ok = ok && std::abs(fit.order - *result.expected_order) <= study.order_tolerance;
  }
  if (result.reference_ratio && std::abs(*result.reference_ratio - 4.0) > 1.0) {
    result.verdict = Verdict::inconclusive;
    result.note = "reference solution failed the Richardson consistency check";
    return result;
  }
  result.verdict = ok ? Verdict::pass : Verdict::fail;
  return result;
}

// ---- algebra ---------------------------------------------------------------------

AlgebraReport certify_algebra(const algebra::CertificationOptions& options) {
  AlgebraReport report;
  report.steps = algebra::certify_chain(options);
  report.all_passed = std::all_of(report.steps.begin(), report.steps.end(),
                                  [](const auto& s) { return s.passed; });
  return report;
}

// ---- campaigns ---------------------------------------------------------------------

void CampaignSettings::validate() const {
  if (count < 1) throw InvalidArgument("campaign count must be >= 1");
  if (dim < 1 || dim > 8) throw InvalidArgument("campaign dim must be in 1..8");
  if (times.empty()) throw InvalidArgument("campaign needs at least one time");
  for (double t : times) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("campaign times must be >= 0");
  }
  quadrature.validate();
}

ConstrainedTriple sample_constrained_triple(int dim, std::uint64_t seed) {
  for (int attempt = 0; attempt < kMaxResampleAttempts; ++attempt) {
    ConstrainedTriple triple;
    triple.p1 = linalg::random_skew_hermitian(dim, derive_seed(seed, 2 * attempt));
    triple.p2 = linalg::random_skew_hermitian(dim, derive_seed(seed, 2 * attempt + 1));
    try {
      triple.p3 = linalg::solve_second_order_constraint(triple.p1, triple.p2);
    } catch (const ResidualTooLarge&) {
      continue;
    }
    triple.residual = linalg::second_order_residual(triple.p1, triple.p2, triple.p3);
    triple.attempts = attempt + 1;
    return triple;
  }
  throw ResidualTooLarge("constraint solver resampling exhausted after " +
                         std::to_string(kMaxResampleAttempts) + " attempts");
}

DuhamelCampaign verify_duhamel(const CampaignSettings& settings) {
  settings.validate();
  DuhamelCampaign campaign;
  campaign.settings = settings;
  campaign.pass = true;
  for (int i = 0; i < settings.count; ++i) {
    const auto triple = sample_constrained_triple(settings.dim, derive_seed(settings.seed, i));
    DuhamelInstance inst;
    inst.index = i;
    inst.residual = triple.residual;
    inst.verification =
        duhamel::verify_triple(triple.p1, triple.p2, triple.p3, settings.times, settings.quadrature);
    campaign.max_discrepancy = std::max(campaign.max_discrepancy, inst.verification.max_discrepancy);
    if (!inst.verification.sign_consistent || inst.verification.max_discrepancy > kDuhamelTolerance) {
      campaign.pass = false;
    }
    campaign.instances.push_back(std::move(inst));
  }
  return campaign;
}

BoundCampaign verify_bound(const CampaignSettings& settings) {
  settings.validate();
  BoundCampaign campaign;
  campaign.settings = settings;
  const auto scheme = splitting::make_three_factor();
  for (int i = 0; i < settings.count; ++i) {
    const auto triple = sample_constrained_triple(settings.dim, derive_seed(settings.seed, i));
    const splitting::OperatorSet ops{{"P1", triple.p1}, {"P2", triple.p2}, {"P3", triple.p3}};
    for (double t : settings.times) {
      BoundRow row;
      row.instance = i;
      row.t = t;
      row.measured = op_norm(splitting::splitting_error(scheme, ops, t));
      row.bound = duhamel::error_bound(triple.p1, triple.p2, triple.p3, t);
      row.saturation = row.bound > 0.0 ? row.measured / row.bound : 0.0;
      row.violated = row.measured > row.bound + kBoundSlack;
      campaign.violations += row.violated ? 1 : 0;
      campaign.max_saturation = std::max(campaign.max_saturation, row.saturation);
      campaign.rows.push_back(row);
    }
  }
  campaign.pass = campaign.violations == 0;
  return campaign;
}

}  // namespace splitcheck::harness
