#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "splitcheck/duhamel.hpp"
#include "splitcheck/identities.hpp"
#include "splitcheck/splitting.hpp"

namespace splitcheck::harness {

using linalg::ComplexMatrix;

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

enum class Problem { matrix, schrodinger };
std::string to_string(Problem p);

// SplitMix64 finaliser of base + stream; used to derive independent child
// seeds for mt19937_64 from one recorded study seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// ---- convergence studies -------------------------------------------------------

struct SchrodingerSetup {
  std::string potential = "harmonic";
  double half_width = 10.0;
  int points = 256;
  double x0 = 1.0;     // centre of the initial Gaussian
  double sigma = 1.0;  // width of the initial Gaussian
};

struct ConvergenceStudy {
  Problem problem = Problem::matrix;
  splitting::SplittingScheme scheme = splitting::make_strang();
  std::vector<double> steps;  // descending, each exactly half the previous
  double horizon = 1.0;
  std::uint64_t seed = 0;
  int dim = 8;                // matrix problems
  SchrodingerSetup schrodinger;
  std::optional<double> expected_order;  // defaults from the scheme name
  double order_tolerance = 0.1;
  double min_r2 = 0.999;

  void validate() const;
};

// h_k = coarsest / 2^k, k = 0..count-1
std::vector<double> dyadic_steps(double coarsest, int count);

struct StudyRow {
  double h = 0.0;
  double error = 0.0;
  double norm_defect = 0.0;
};

struct OrderFit {
  double order = 0.0;
  double r2 = 0.0;
};

// Least-squares slope of log(error) against log(h). Requires >= 3 rows and
// strictly positive errors.
OrderFit estimate_order(std::span<const StudyRow> rows);

struct StudyResult {
  std::string problem;
  std::string scheme;
  std::uint64_t seed = 0;
  std::vector<StudyRow> rows;
  double fitted_order = 0.0;
  double fit_r2 = 0.0;
  std::vector<double> dropped_steps;
  std::optional<double> expected_order;
  // Schrodinger only: ||u_{h/2} - u_{h}|| / ||u_{h/4} - u_{h/2}|| at the finest
  // step (about 4 for a valid second-order reference).
  std::optional<double> reference_ratio;
  Verdict verdict = Verdict::inconclusive;
  std::string note;
};

StudyResult run_convergence(const ConvergenceStudy& study);

// ---- algebra -------------------------------------------------------------------

struct AlgebraReport {
  std::vector<algebra::CertificationStep> steps;
  bool all_passed = false;
};

AlgebraReport certify_algebra(const algebra::CertificationOptions& options = {});

// ---- Duhamel / bound campaigns ---------------------------------------------------

inline constexpr double kDuhamelTolerance = 1e-6;
inline constexpr double kBoundSlack = 1e-9;
inline constexpr int kMaxResampleAttempts = 10;

struct CampaignSettings {
  int count = 20;
  int dim = 4;
  std::vector<double> times{0.25, 0.5};
  std::uint64_t seed = 7;
  duhamel::QuadratureSpec quadrature;

  void validate() const;
};

struct ConstrainedTriple {
  ComplexMatrix p1, p2, p3;
  double residual = 0.0;
  int attempts = 0;
};

// Skew-Hermitian P1, P2 and the minimum-norm P3 solving the second-order
// condition; resamples up to kMaxResampleAttempts times.
ConstrainedTriple sample_constrained_triple(int dim, std::uint64_t seed);

struct DuhamelInstance {
  int index = 0;
  double residual = 0.0;
  duhamel::TripleVerification verification;
};

struct DuhamelCampaign {
  CampaignSettings settings;
  std::vector<DuhamelInstance> instances;
  double max_discrepancy = 0.0;
  bool pass = false;
};

DuhamelCampaign verify_duhamel(const CampaignSettings& settings);

struct BoundRow {
  int instance = 0;
  double t = 0.0;
  double measured = 0.0;
  double bound = 0.0;
  double saturation = 0.0;  // measured / bound (0 when bound is 0)
  bool violated = false;
};

struct BoundCampaign {
  CampaignSettings settings;
  std::vector<BoundRow> rows;
  int violations = 0;
  double max_saturation = 0.0;
  bool pass = false;
};

BoundCampaign verify_bound(const CampaignSettings& settings);

}  // namespace splitcheck::harness
