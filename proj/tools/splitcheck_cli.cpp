#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitcheck/config.hpp"
#include "splitcheck/errors.hpp"
#include "splitcheck/reports.hpp"
#include "splitcheck/scheme_io.hpp"

namespace fs = std::filesystem;
using namespace splitcheck;
using namespace splitcheck::harness;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;

struct CommonOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config, "YAML experiment config")->check(CLI::ExistingFile);
  cmd->add_option("--seed", opts.seed, "Override the RNG seed");
  cmd->add_option("--out", opts.out, "Directory for artifacts (stdout when omitted)");
  cmd->add_option("--format", opts.format, "Artifact format")
      ->check(CLI::IsMember({"csv", "json"}));
}

ExperimentConfig load(const CommonOptions& opts) {
  return opts.config.empty() ? parse_config("") : load_config(opts.config);
}

// Writes `body` to <out>/<stem>.<ext>, or to stdout when no directory is given.
void emit(const CommonOptions& opts, const std::string& stem, const std::string& ext,
          const std::string& body) {
  if (opts.out.empty()) {
    std::cout << body;
    return;
  }
  fs::create_directories(opts.out);
  const fs::path path = fs::path(opts.out) / (stem + "." + ext);
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot write " + path.string());
  os << body;
  std::cerr << "wrote " << path.string() << '\n';
}

void emit_json(const CommonOptions& opts, const std::string& stem, const nlohmann::json& j) {
  emit(opts, stem, "json", j.dump(2) + "\n");
}

int exit_code(const std::vector<Verdict>& verdicts) {
  bool inconclusive = false;
  for (auto v : verdicts) {
    if (v == Verdict::fail) return kExitFail;
    if (v == Verdict::inconclusive) inconclusive = true;
  }
  return inconclusive ? kExitInconclusive : kExitPass;
}

int run_certify(const CommonOptions& opts, bool mutate) {
  if (!opts.config.empty()) load(opts);  // validates the file; nothing in it applies
  const auto report = certify_algebra({.mutate_reduced_form = mutate});
  if (opts.format == "json") {
    emit_json(opts, "certify-algebra", to_json(report));
  } else {
    emit(opts, "certify-algebra", "txt", to_text(report));
  }
  std::cerr << "certify-algebra: " << (report.all_passed ? "PASS" : "FAIL") << '\n';
  return report.all_passed ? kExitPass : kExitFail;
}

int run_studies(const CommonOptions& opts, const std::string& scheme_file,
                const std::string& scheme_name, bool schrodinger) {
  auto cfg = load(opts);
  if (schrodinger) cfg.study.problem = Problem::schrodinger;
  if (!scheme_file.empty()) cfg.study.scheme = splitting::load_scheme(scheme_file);
  if (!scheme_name.empty()) cfg.study.scheme = splitting::scheme_by_name(scheme_name);
  if (opts.seed) cfg.seeds = {*opts.seed};
  if (schrodinger) cfg.seeds.resize(1);  // deterministic problem, one run

  std::vector<StudyResult> results;
  std::vector<Verdict> verdicts;
  for (auto seed : cfg.seeds) {
    auto study = cfg.study;
    study.seed = seed;
    results.push_back(run_convergence(study));
    const auto& r = results.back();
    verdicts.push_back(r.verdict);
    std::cerr << r.problem << ' ' << r.scheme << " seed=" << r.seed << " order=" << r.fitted_order
              << " r2=" << r.fit_r2 << ' ' << to_string(r.verdict)
              << (r.note.empty() ? "" : " (" + r.note + ")") << '\n';
  }

  const std::string stem = schrodinger ? "schrodinger-bench" : "convergence";
  if (opts.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results) j.push_back(to_json(r));
    emit_json(opts, stem, schrodinger ? j.front() : j);
  } else {
    emit(opts, stem, "csv", schrodinger ? schrodinger_csv(results.front()) : convergence_csv(results));
  }
  return exit_code(verdicts);
}

CampaignSettings campaign_settings(const CommonOptions& opts) {
  auto cfg = load(opts);
  if (opts.seed) cfg.campaign.seed = *opts.seed;
  cfg.campaign.validate();
  return cfg.campaign;
}

int run_duhamel(const CommonOptions& opts) {
  const auto campaign = verify_duhamel(campaign_settings(opts));
  if (opts.format == "json") {
    emit_json(opts, "verify-duhamel", to_json(campaign));
  } else {
    emit(opts, "verify-duhamel", "csv", to_csv(campaign));
  }
  std::cerr << "verify-duhamel: max discrepancy " << campaign.max_discrepancy << ' '
            << (campaign.pass ? "PASS" : "FAIL") << '\n';
  return campaign.pass ? kExitPass : kExitFail;
}

int run_bound(const CommonOptions& opts) {
  const auto campaign = verify_bound(campaign_settings(opts));
  if (opts.format == "json") {
    emit_json(opts, "verify-bound", to_json(campaign));
  } else {
    emit(opts, "verify-bound", "csv", to_csv(campaign));
  }
  std::cerr << "verify-bound: " << campaign.violations << " violations, max saturation "
            << campaign.max_saturation << ' ' << (campaign.pass ? "PASS" : "FAIL") << '\n';
  return campaign.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splitting-error verification harness"};
  app.require_subcommand(1);

  CommonOptions opts;
  bool mutate = false;
  std::string scheme_file, scheme_name;

  auto* certify = app.add_subcommand("certify-algebra", "Exact-rational certification of the error expansion");
  add_common(certify, opts);
  certify->add_flag("--mutate", mutate, "Self-test: perturb the reduced-form coefficient");

  auto* convergence = app.add_subcommand("convergence", "Matrix or Schrodinger convergence studies");
  add_common(convergence, opts);
  convergence->add_option("--scheme", scheme_file, "Scheme file")->check(CLI::ExistingFile);
  convergence->add_option("--scheme-name", scheme_name, "Built-in scheme")
      ->check(CLI::IsMember({"lie-trotter", "strang"}));

  auto* duhamel = app.add_subcommand("verify-duhamel", "Duhamel representation campaign");
  add_common(duhamel, opts);

  auto* bound = app.add_subcommand("verify-bound", "Error-bound campaign");
  add_common(bound, opts);

  auto* bench = app.add_subcommand("schrodinger-bench", "Split-step Fourier self-convergence");
  add_common(bench, opts);
  bench->add_option("--scheme", scheme_file, "Scheme file")->check(CLI::ExistingFile);
  bench->add_option("--scheme-name", scheme_name, "Built-in scheme")
      ->check(CLI::IsMember({"lie-trotter", "strang"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInconclusive;
  }

  try {
    if (*certify) return run_certify(opts, mutate);
    if (*convergence) return run_studies(opts, scheme_file, scheme_name, false);
    if (*duhamel) return run_duhamel(opts);
    if (*bound) return run_bound(opts);
    if (*bench) return run_studies(opts, scheme_file, scheme_name, true);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInconclusive;
  }
  return kExitInconclusive;
}
