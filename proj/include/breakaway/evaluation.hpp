#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "breakaway/runtime.hpp"
#include "breakaway/stats.hpp"

namespace breakaway {

struct SpeedResult {
  double speed = 0.0;    // m/s
  bool flagged = false;  // path shorter than the window; full length used
};

/// Best net speed over any contiguous window of `window_s` seconds of a
/// cluster path sampled every `control_dt`.
SpeedResult best_window_speed(const std::vector<Vec2>& path, double control_dt, double window_s = 10.0);
inline SpeedResult best_10s_speed(const std::vector<Vec2>& path, double control_dt) {
  return best_window_speed(path, control_dt, 10.0);
}

/// Straight-line distance between the first and last path points.
double displacement(const std::vector<Vec2>& path);

/// True when the last `window_s` seconds of the path cover less than `eps`.
bool is_frozen(const std::vector<Vec2>& path, double control_dt, double window_s = 5.0, double eps = 0.01);

/// One evaluated policy configuration.
struct Condition {
  std::string name;
  const PolicyWeights* policy = nullptr;
  std::optional<ResetRule> reset;
  bool breakable = true;
  // Per-morphology restriction of breakable welds (random-destruct baseline).
  std::map<std::string, int> only_attachment;
};

struct Trial {
  std::string morphology_id;
  std::string condition;
  int index = 0;
  std::uint64_t seed = 0;
  double displacement = 0.0;
  double best_10s_speed = 0.0;
  bool speed_flagged = false;
  bool frozen = false;
  int reset_count = 0;
  int first_detach_step = -1;
  bool failed = false;
  ConnectivityMask final_mask;
  std::vector<Vec2> path;
};

struct Comparison {
  std::string metric;  // "displacement" or "best_10s_speed"
  std::string test;    // "paired_t" or "welch_t"
  std::string condition_a, condition_b;
  std::vector<double> per_morph_a, per_morph_b;  // per-morphology means
  double mean_a = 0.0, mean_b = 0.0, std_a = 0.0, std_b = 0.0;
  TestResult result;
  double permutation_p = 1.0;
  int frozen_a = 0, frozen_b = 0;
  bool degenerate = false;  // test undefined on these inputs
  std::string note;
};

struct EvalReport {
  std::string study;  // e1, e2, e3
  std::vector<std::string> morphologies;
  std::vector<Trial> trials;  // sorted by (morphology, condition, index)
  Comparison comparison;
};

struct EvalSettings {
  int episode_length = 400;
  int e1_seeds = 5;
  int ood_seeds = 3;
  double max_delta = kDefaultRateLimit;
  ResetRule reset;
  int workers = 1;
};

/// Runs `seeds` trials of each condition on each morphology. Trials share
/// seeds across conditions, derived from (seed, study, morphology, index).
std::vector<Trial> run_trials(const std::string& study, const std::vector<Morphology>& morphs,
                              const std::vector<Condition>& conditions, int seeds, std::uint64_t seed,
                              const EvalSettings& settings, const PhysicsConfig& phys, const RewardConfig& reward);

/// Compares two conditions of a trial set on per-morphology means.
Comparison compare(const std::vector<Trial>& trials, const std::vector<std::string>& morph_ids,
                   const std::string& a, const std::string& b, const std::string& metric, bool paired);

/// In-distribution study: learned versus random destruction, displacement,
/// paired test across morphologies.
EvalReport run_e1(const Condition& self_destruct, const Condition& random_destruct,
                  const std::vector<Morphology>& training, std::uint64_t seed, const EvalSettings& settings,
                  const PhysicsConfig& phys, const RewardConfig& reward);

/// Held-out study: self-destruct versus no-destruct, best 10 s speed, Welch
/// test over per-morphology means.
EvalReport run_e2(const Condition& self_destruct, const Condition& no_destruct, const std::vector<Morphology>& held_out,
                  std::uint64_t seed, const EvalSettings& settings, const PhysicsConfig& phys,
                  const RewardConfig& reward);

/// Reset ablation on the held-out set: the same policy with and without the
/// reset rule, paired across morphologies.
EvalReport run_e3(const PolicyWeights& self_destruct, const std::vector<Morphology>& held_out, std::uint64_t seed,
                  const EvalSettings& settings, const PhysicsConfig& phys, const RewardConfig& reward);

nlohmann::json to_json(const EvalReport& r);
/// Human-readable aggregate table.
std::string format_table(const EvalReport& r);
/// Writes `time x y` lines for one trial.
void write_path_file(const std::string& path, const Trial& t, double control_dt);

}  // namespace breakaway
