#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "breakaway/expert.hpp"
#include "breakaway/trajectory.hpp"

namespace breakaway {

inline constexpr std::uint16_t kTrajectoryFormatVersion = 1;

/// Header block shared by every record in a trajectory file.
struct TrajectoryFileHeader {
  std::string config_hash;
  std::uint64_t global_seed = 0;
  std::string stage;
  TrajectorySource source = TrajectorySource::expert;
};

void write_trajectories(const std::string& path, const TrajectoryFileHeader& header,
                        const std::vector<Trajectory>& trajectories);
std::vector<Trajectory> read_trajectories(const std::string& path, TrajectoryFileHeader* header = nullptr);
TrajectoryFileHeader read_trajectory_header(const std::string& path);

struct DatasetEntry {
  std::string file;
  std::size_t trajectory = 0;  // record index within the file
  std::size_t length = 0;
};

/// In-memory view over the trajectories of both sources.
struct DatasetIndex {
  std::vector<DatasetEntry> expert;
  std::vector<DatasetEntry> proxy;
  double p_real = 0.1;
  // Loaded records, parallel to the entry lists.
  std::vector<Trajectory> expert_data;
  std::vector<Trajectory> proxy_data;

  void add(const std::string& file, std::vector<Trajectory> trajectories);
  void validate() const;
};

struct ExpertJob {
  ExpertPolicy policy;
  Morphology morphology;
};

struct CollectConfig {
  std::size_t steps_per_config = 200000;
  int episode_length = 400;
  int context_steps = 5;  // trajectories shorter than 2*K are dropped
  double rate_limit = kDefaultRateLimit;
};

/// Rolls out one expert with seeds derived from (seed, morphology id, episode
/// index) until at least `steps_per_config` pairs are stored.
std::vector<Trajectory> collect_expert_trajectories(const ExpertJob& job, const CollectConfig& cfg, std::uint64_t seed,
                                                    const PhysicsConfig& phys, const RewardConfig& reward);

struct ProxyConfig {
  double amplitude = 0.5;   // rad
  double frequency = 1.0;   // Hz
  double phase = 1.5707963267948966;
  int count_per = 10;
  int episode_length = 400;
  double friction_jitter = 0.3;  // relative
  double gain_jitter = 0.2;      // relative
};

/// Open-loop target of module i at time t.
double proxy_action(const ProxyConfig& cfg, int module, double t);

/// Sinusoidal rollouts on reduced morphologies under perturbed physics and
/// random initial yaw.
std::vector<Trajectory> collect_proxy_rollouts(const std::vector<Morphology>& final_morphologies, const ProxyConfig& cfg,
                                               std::uint64_t seed, const PhysicsConfig& phys,
                                               const RewardConfig& reward);

/// K-step training window. `members[t][i]` is true when module i belongs to
/// the largest cluster at step t of the window.
struct Window {
  const Trajectory* trajectory = nullptr;
  std::size_t start = 0;
  std::vector<std::vector<bool>> members;
  bool from_proxy = false;
};

class WindowSampler {
 public:
  WindowSampler(const DatasetIndex& index, int context_steps, std::uint64_t seed);
  Window sample();
  std::vector<Window> batch(int size);

 private:
  Window draw(const std::vector<Trajectory>& pool, bool proxy);

  const DatasetIndex& index_;
  int k_;
  std::mt19937_64 rng_;
  std::vector<std::size_t> expert_ok_, proxy_ok_;  // trajectories with >= K steps
};

std::vector<std::vector<bool>> cluster_members(const Trajectory& t, std::size_t start, std::size_t count);

}  // namespace breakaway
