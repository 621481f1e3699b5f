#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "breakaway/dataset.hpp"
#include "breakaway/decoder.hpp"
#include "breakaway/evaluation.hpp"
#include "breakaway/expert.hpp"
#include "breakaway/policy_trainer.hpp"
#include "breakaway/runtime.hpp"

namespace breakaway {

struct MorphologySettings {
  int n_modules = 4;
  int n_training = 8;
  int n_held_out = 20;
  double link_mass = 0.25;
  // Explicit training descriptors; sampled from the seed when empty.
  std::vector<Morphology> training;
};

/// CI gating thresholds for the eval exit code.
struct GateSettings {
  double e1_alpha = 0.10;
  double e2_alpha = 0.05;
  double e3_alpha = 0.10;
  bool require_significance = false;  // otherwise only an inverted direction fails
};

struct ExperimentConfig {
  std::uint64_t seed = 0;
  std::string out_dir = "runs/default";
  MorphologySettings morphologies;
  PhysicsConfig physics;
  RewardConfig reward;
  ESConfig es;
  CollectConfig collect;
  ProxyConfig proxy;
  double p_real = 0.1;
  DecoderConfig decoder;
  TrainOptions train;
  ResetRule reset;
  EvalSettings eval;  // `workers` comes from the command line
  GateSettings gate;

  ModuleSpec module_spec() const;
  void validate() const;
};

/// Pipeline stages in dependency order.
enum class Stage { morphs, experts, collect, policy, eval };
const char* to_string(Stage s);

/// Hash of the config sections a stage reads, chained through every upstream
/// stage, so a change invalidates exactly the stages downstream of it.
std::string stage_hash(const ExperimentConfig& c, Stage s);

nlohmann::json to_json(const ExperimentConfig& c);
/// Missing keys keep their defaults; unknown keys are an error.
ExperimentConfig config_from_json(const nlohmann::json& j);
/// Reads JSON that may contain // and /* */ comments.
ExperimentConfig load_config(const std::string& path);
/// The config as JSON with a comment above every setting.
std::string commented_config(const ExperimentConfig& c);

}  // namespace breakaway
