#pragma once

// Experiment configuration files (YAML, format version 1). The grammar is
// documented in docs/config-format.md.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "splitcheck/harness.hpp"

namespace splitcheck::harness {

inline constexpr int kConfigVersion = 1;

struct ExperimentConfig {
  ConvergenceStudy study;
  // Seeds for convergence studies; one study per seed.
  std::vector<std::uint64_t> seeds{0};
  CampaignSettings campaign;
};

// Defaults for every key; `text` may be empty. Throws ConfigError on unknown
// sections or keys, wrong types, or an unsupported version.
ExperimentConfig parse_config(const std::string& text,
                              const std::filesystem::path& base_dir = ".");
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace splitcheck::harness
