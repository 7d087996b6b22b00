#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppclab/sequences.hpp"
#include "ppclab/torus.hpp"

namespace ppclab {

struct AlphaSpec {
  enum class Kind { mu, fixed };
  Kind kind = Kind::mu;
  std::size_t samples = 1;
  double mu_gamma = 0.5;                     // per-coordinate measure parameter
  std::vector<std::vector<double>> values;   // fixed list
};

struct SelbergCheckSpec {
  std::size_t k = 64;
  double s = 1.0;
  double scale = 10.0;
};

struct OutputSpec {
  std::string directory = "out";
  bool csv = true, json = true, svg = false;
};

struct ExperimentConfig {
  // sequence
  SeqFamily family = SeqFamily::power;
  std::vector<double> thetas;
  double log_power = 1.0;
  std::size_t n0 = 0;  // 0 = family default
  std::string seq_path;
  std::size_t dim = 0;  // 0 = derived from the sequence

  std::vector<std::string> tasks;
  std::vector<std::size_t> n_grid;
  std::vector<double> s_grid;
  std::vector<double> gamma;
  std::vector<std::size_t> subset;  // 0-based internally
  AlphaSpec alpha;
  bool seed_set = false;
  std::uint64_t seed = 0;
  double r = 1.0;
  double s = 1.0;
  Norm norm = Norm::sup;
  SelbergCheckSpec selberg;
  OutputSpec output;
  unsigned threads = 0;

  nlohmann::json raw;  // canonical source for the config hash
};

// Rejects unknown keys and reports every violated field at once.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);

struct TaskRecord {
  std::string name;
  std::string status;  // "ok" | "failed"
  std::string message;
  std::vector<std::string> outputs;  // paths relative to the output directory
};

struct RunManifest {
  std::string config_hash;
  std::string tool_version;
  std::string started;
  std::string finished;
  std::vector<TaskRecord> tasks;
  bool ok = true;
};

std::uint64_t fnv1a64(std::string_view bytes);
// hash of the canonical (key-sorted) dump, stable under key reordering
std::string config_hash(const nlohmann::json& j);

extern const char* const kToolVersion;

// Runs every task, persists outputs plus manifest.json under the output
// directory; failures are recorded per task and execution continues.
RunManifest run_experiment(const ExperimentConfig& config);

}  // namespace ppclab
