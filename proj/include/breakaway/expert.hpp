#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "breakaway/episode.hpp"
#include "breakaway/morphology.hpp"
#include "breakaway/physics.hpp"
#include "breakaway/reward.hpp"
#include "breakaway/trajectory.hpp"

namespace breakaway {

enum class DestructMode { self_destruct, no_destruct, random_destruct };

const char* to_string(DestructMode m);
DestructMode parse_destruct_mode(const std::string& s);

struct ESConfig {
  int population = 64;
  double noise_std = 0.05;
  double learning_rate = 0.02;
  int episodes_per_eval = 2;
  int episode_length = 400;
  int generations = 300;
  std::uint64_t seed = 0;
  int hidden = 64;
  double rate_limit = kDefaultRateLimit;
  double abort_return = -1000.0;

  /// noise_std may be zero, which freezes the weights.
  void validate(const RewardConfig& reward) const;
};

/// obs -> hidden -> hidden -> n_modules, tanh throughout, output scaled by
/// the joint limit. Weights are kept at float32 precision.
struct ExpertPolicy {
  std::string morphology_id;
  DestructMode mode = DestructMode::self_destruct;
  int n_modules = 0;
  int obs_dim = 0;
  int hidden = 64;
  double joint_limit = 1.5707963267948966;
  int breakable_attachment = -1;  // random_destruct only
  std::string config_hash;
  std::vector<float> weights;

  static std::size_t param_count(int obs_dim, int hidden, int n_out);
  std::vector<double> act(std::span<const double> obs) const;
  std::vector<double> act(std::span<const double> obs, std::span<const double> params) const;
};

struct TrainingCurve {
  std::vector<double> mean_return;    // population mean per generation
  std::vector<double> center_return;  // unperturbed weights per generation
  std::vector<double> best_so_far;
};

struct ExpertResult {
  ExpertPolicy policy;
  TrainingCurve curve;
};

/// Leaf weld designated for random_destruct; depends on (morphology, seed) only.
int random_destruct_attachment(const Morphology& m, std::uint64_t seed);

SpawnOptions spawn_options_for(DestructMode mode, int breakable_attachment);

ExpertPolicy init_expert(const Morphology& m, DestructMode mode, const ESConfig& cfg);

/// Mean return of `params` over the given episode seeds.
double evaluate_params(const ExpertPolicy& p, std::span<const double> params, const Morphology& m,
                       std::span<const std::uint64_t> seeds, const ESConfig& es, const PhysicsConfig& phys,
                       const RewardConfig& reward);

using GenerationCallback = std::function<void(int generation, const TrainingCurve&)>;

/// Antithetic ES with centered-rank fitness shaping. Each candidate is
/// evaluated on the generation's shared episode seeds, so results do not
/// depend on `workers`.
ExpertResult train_expert(const Morphology& m, DestructMode mode, const ESConfig& es, const PhysicsConfig& phys,
                          const RewardConfig& reward, int workers = 1, const GenerationCallback& on_gen = {});

/// One centered-rank ES step, exposed for property tests.
/// `returns` holds (plus, minus) pairs; `noise` one row per pair.
std::vector<double> es_gradient(std::span<const double> returns, const std::vector<std::vector<double>>& noise,
                                double noise_std);
std::vector<double> centered_ranks(std::span<const double> x);

EpisodeResult rollout_expert(const ExpertPolicy& p, const Morphology& m, std::uint64_t seed, int length,
                             const PhysicsConfig& phys, const RewardConfig& reward, double max_delta = kDefaultRateLimit,
                             bool record = true);

void save_expert(const ExpertPolicy& p, const std::string& path);
ExpertPolicy load_expert(const std::string& path);

/// Runs fn(i) for i in [0, n) on up to `workers` threads.
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

}  // namespace breakaway
