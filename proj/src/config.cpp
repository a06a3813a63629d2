#include "splitcheck/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "splitcheck/errors.hpp"
#include "splitcheck/scheme_io.hpp"

namespace splitcheck::harness {

namespace {

void check_keys(const YAML::Node& node, const std::string& section,
                const std::set<std::string>& allowed) {
  if (!node.IsMap()) throw ConfigError("config: section '" + section + "' must be a mapping");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.count(key)) throw ConfigError("config: unknown key '" + section + "." + key + "'");
  }
}

template <class T>
void read(const YAML::Node& node, const char* key, T& out, const std::string& section) {
  if (!node[key]) return;
  try {
    out = node[key].as<T>();
  } catch (const YAML::Exception& e) {
    throw ConfigError("config: bad value for '" + section + "." + key + "': " + e.what());
  }
}

std::vector<double> read_steps(const YAML::Node& node) {
  if (node.IsSequence()) return node.as<std::vector<double>>();
  check_keys(node, "study.steps", {"coarsest", "count"});
  double coarsest = 0.0;
  int count = 0;
  read(node, "coarsest", coarsest, "study.steps");
  read(node, "count", count, "study.steps");
  if (!(coarsest > 0.0) || count < 1) throw ConfigError("config: study.steps needs coarsest > 0, count >= 1");
  return dyadic_steps(coarsest, count);
}

}  // namespace

ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  ExperimentConfig cfg;
  cfg.study.steps = dyadic_steps(1.0 / 16, 6);
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return cfg;

  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("config: YAML parse error: ") + e.what());
  }
  if (root.IsNull()) return cfg;
  check_keys(root, "<root>", {"version", "study", "schrodinger", "campaign", "quadrature"});
  int version = kConfigVersion;
  read(root, "version", version, "<root>");
  if (version != kConfigVersion) {
    throw ConfigError("config: unsupported version " + std::to_string(version));
  }

  try {
    if (const auto s = root["study"]) {
      check_keys(s, "study", {"problem", "scheme", "scheme_file", "dim", "steps", "horizon",
                              "seeds", "expected_order", "order_tolerance", "min_r2"});
      std::string problem = "matrix";
      read(s, "problem", problem, "study");
      if (problem == "matrix") {
        cfg.study.problem = Problem::matrix;
      } else if (problem == "schrodinger") {
        cfg.study.problem = Problem::schrodinger;
      } else {
        throw ConfigError("config: study.problem must be matrix|schrodinger");
      }
      if (s["scheme"] && s["scheme_file"]) {
        throw ConfigError("config: give either study.scheme or study.scheme_file");
      }
      if (s["scheme"]) cfg.study.scheme = splitting::scheme_by_name(s["scheme"].as<std::string>());
      if (s["scheme_file"]) {
        cfg.study.scheme = splitting::load_scheme(base_dir / s["scheme_file"].as<std::string>());
      }
      read(s, "dim", cfg.study.dim, "study");
      if (s["steps"]) cfg.study.steps = read_steps(s["steps"]);
      read(s, "horizon", cfg.study.horizon, "study");
      read(s, "seeds", cfg.seeds, "study");
      if (s["expected_order"]) cfg.study.expected_order = s["expected_order"].as<double>();
      read(s, "order_tolerance", cfg.study.order_tolerance, "study");
      read(s, "min_r2", cfg.study.min_r2, "study");
    }
    if (const auto s = root["schrodinger"]) {
      check_keys(s, "schrodinger", {"potential", "half_width", "points", "x0", "sigma"});
      auto& sc = cfg.study.schrodinger;
      read(s, "potential", sc.potential, "schrodinger");
      read(s, "half_width", sc.half_width, "schrodinger");
      read(s, "points", sc.points, "schrodinger");
      read(s, "x0", sc.x0, "schrodinger");
      read(s, "sigma", sc.sigma, "schrodinger");
    }
    if (const auto s = root["campaign"]) {
      check_keys(s, "campaign", {"count", "dim", "times", "seed"});
      read(s, "count", cfg.campaign.count, "campaign");
      read(s, "dim", cfg.campaign.dim, "campaign");
      read(s, "times", cfg.campaign.times, "campaign");
      read(s, "seed", cfg.campaign.seed, "campaign");
    }
    if (const auto s = root["quadrature"]) {
      check_keys(s, "quadrature", {"gauss_order", "panels", "target_tol", "max_panels"});
      auto& q = cfg.campaign.quadrature;
      read(s, "gauss_order", q.gauss_order, "quadrature");
      read(s, "panels", q.panels, "quadrature");
      read(s, "target_tol", q.target_tol, "quadrature");
      read(s, "max_panels", q.max_panels, "quadrature");
    }
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (cfg.seeds.empty()) throw ConfigError("config: study.seeds must not be empty");
  cfg.study.seed = cfg.seeds.front();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str(), path.parent_path());
}

}  // namespace splitcheck::harness
