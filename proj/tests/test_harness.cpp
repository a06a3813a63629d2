#include <doctest.h>

#include <cmath>
#include <random>

#include "splitcheck/config.hpp"
#include "splitcheck/errors.hpp"
#include "splitcheck/reports.hpp"

using namespace splitcheck;
using namespace splitcheck::harness;

namespace {

std::vector<StudyRow> power_law(double c, double p, int n) {
  std::vector<StudyRow> rows;
  for (double h : dyadic_steps(0.5, n)) rows.push_back({h, c * std::pow(h, p), 0.0});
  return rows;
}

}  // namespace

TEST_CASE("order fit recovers exact slopes") {
  for (double p : {1.0, 2.0, 3.0}) {
    const auto fit = estimate_order(power_law(3.0, p, 6));
    CHECK(std::abs(fit.order - p) <= 1e-12);
    CHECK(std::abs(fit.r2 - 1.0) <= 1e-12);
  }
}

TEST_CASE("order fit with 1% multiplicative noise") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> noise(-0.01, 0.01);
  auto rows = power_law(1.0, 3.0, 8);
  for (auto& r : rows) r.error *= 1.0 + noise(rng);
  const auto fit = estimate_order(rows);
  CHECK(std::abs(fit.order - 3.0) <= 0.05);
}

TEST_CASE("order fit rejects bad input") {
  CHECK_THROWS_AS(estimate_order(power_law(1.0, 2.0, 2)), InvalidArgument);
  auto rows = power_law(1.0, 2.0, 4);
  rows[1].error = 0.0;
  CHECK_THROWS_AS(estimate_order(rows), InvalidArgument);
}

TEST_CASE("seed derivation") {
  CHECK(derive_seed(7, 0) == derive_seed(7, 0));
  CHECK(derive_seed(7, 0) != derive_seed(7, 1));
  CHECK(derive_seed(7, 1) != derive_seed(8, 0));
}

TEST_CASE("study validation") {
  ConvergenceStudy s;
  s.steps = dyadic_steps(0.0625, 3);
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s.steps = {0.0625, 0.03125, 0.015, 0.0078125};
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s.steps = dyadic_steps(0.3, 4);
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s.steps = dyadic_steps(0.0625, 4);
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("matrix convergence studies") {
  ConvergenceStudy s;
  s.steps = dyadic_steps(1.0 / 16, 6);
  s.seed = 3;
  auto strang = run_convergence(s);
  CHECK(strang.verdict == Verdict::pass);
  CHECK(std::abs(strang.fitted_order - 2.0) <= 0.1);
  s.scheme = splitting::make_lie_trotter();
  auto lt = run_convergence(s);
  CHECK(lt.verdict == Verdict::pass);
  CHECK(std::abs(lt.fitted_order - 1.0) <= 0.1);
  CHECK(to_json(lt).dump() == to_json(run_convergence(s)).dump());
}

TEST_CASE("commuting problem is reported as degenerate") {
  ConvergenceStudy s;
  s.steps = dyadic_steps(1.0 / 16, 4);
  s.dim = 1;  // 1x1 operators always commute
  const auto r = run_convergence(s);
  CHECK(r.verdict == Verdict::inconclusive);
  CHECK(r.note.find("degenerate") != std::string::npos);
}

TEST_CASE("schrodinger convergence study") {
  ConvergenceStudy s;
  s.problem = Problem::schrodinger;
  s.steps = dyadic_steps(1.0 / 16, 5);
  const auto r = run_convergence(s);
  CHECK(r.verdict == Verdict::pass);
  REQUIRE(r.reference_ratio.has_value());
  CHECK(std::abs(*r.reference_ratio - 4.0) <= 0.1);
}

TEST_CASE("algebra certification report") {
  const auto ok = certify_algebra();
  CHECK(ok.all_passed);
  CHECK(to_text(ok).find("certification: PASS") != std::string::npos);
  const auto bad = certify_algebra({.mutate_reduced_form = true});
  CHECK_FALSE(bad.all_passed);
  CHECK(to_text(bad).find("offending element") != std::string::npos);
}

TEST_CASE("small Duhamel and bound campaigns") {
  CampaignSettings c;
  c.count = 3;
  c.dim = 3;
  c.times = {0.0, 0.25};
  const auto d = verify_duhamel(c);
  CHECK(d.pass);
  CHECK(d.instances.size() == 3);
  CHECK(d.instances[0].verification.reports[0].discrepancy == 0.0);
  const auto j = to_json(d);
  const auto report = error_report_from_json(j["instances"][1]["reports"][1]["error_report"]);
  CHECK(report.discrepancy == d.instances[1].verification.reports[1].discrepancy);
  CHECK(to_csv(d).rfind("instance,t,measured_error_norm,duhamel_norm,bound_value,sign_factor,"
                        "discrepancy\n", 0) == 0);

  const auto b = verify_bound(c);
  CHECK(b.pass);
  CHECK(b.rows.size() == 6);
  CHECK(to_csv(b) == to_csv(verify_bound(c)));
  c.dim = 9;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

TEST_CASE("config parsing") {
  const auto defaults = parse_config("");
  CHECK(defaults.study.steps.size() == 6);
  CHECK(defaults.campaign.count == 20);

  const auto cfg = parse_config(R"(
version: 1
study:
  problem: schrodinger
  scheme: lie-trotter
  steps: {coarsest: 0.125, count: 5}
  seeds: [1, 2]
schrodinger:
  potential: cosine
  points: 128
campaign:
  count: 4
  times: [0.1, 0.2]
quadrature:
  gauss_order: 6
)");
  CHECK(cfg.study.problem == Problem::schrodinger);
  CHECK(cfg.study.scheme.name() == "lie-trotter");
  CHECK(cfg.study.steps.front() == 0.125);
  CHECK(cfg.seeds == std::vector<std::uint64_t>{1, 2});
  CHECK(cfg.study.schrodinger.points == 128);
  CHECK(cfg.campaign.times == std::vector<double>{0.1, 0.2});
  CHECK(cfg.campaign.quadrature.gauss_order == 6);

  CHECK_THROWS_AS(parse_config("version: 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("study:\n  unknown: 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("bogus: {}\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("campaign:\n  count: many\n"), ConfigError);
}
