#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "breakaway/decoder.hpp"
#include "breakaway/episode.hpp"

namespace breakaway {

/// Clears the policy's token history when recent actions stop varying.
struct ResetRule {
  int window = 5;  // H; matches the context length by default
  double std_threshold = 0.2;
  int min_step = 50;
  void validate() const;
};

/// Fires iff `step > min_step` and, over the last `window` actions, the
/// largest per-dimension population standard deviation is below the
/// threshold. Dimensions with `include[i] == false` are ignored; fewer than
/// `window` actions never fire.
bool reset_check(const std::deque<std::vector<double>>& actions, int step, const ResetRule& rule,
                 const std::vector<bool>& include = {});

/// Rolling token history for one episode.
class ControlContext {
 public:
  ControlContext(int context_steps, int n_modules, int action_window);

  /// Starts a new timestep with the given per-module state tokens.
  void push_states(const std::vector<ModuleState>& states);
  /// Completes the current timestep with the executed, normalized action.
  void push_action(const std::vector<double>& action);
  /// Drops every timestep except the current one.
  void reset();

  /// Window over the stored timesteps. The action of the current timestep is
  /// zero; causal masking keeps it from influencing the current prediction.
  WindowInput window(int n_slots) const;

  int steps() const { return static_cast<int>(history_.size()); }
  const std::deque<std::vector<double>>& recent_actions() const { return actions_; }
  int step_counter = 0;
  int reset_count = 0;

 private:
  struct Step {
    std::vector<ModuleState> states;
    std::vector<double> action;
  };
  int k_, n_, h_;
  std::deque<Step> history_;
  std::deque<std::vector<double>> actions_;
};

struct EpisodeStats {
  int reset_count = 0;
  int first_detach_step = -1;
  ConnectivityMask final_mask;
  bool failed = false;
  double episode_return = 0.0;
};

struct RunResult {
  Trajectory trajectory;
  std::vector<Vec2> cluster_path;
  EpisodeStats stats;
};

struct RunOptions {
  int length = 400;
  double max_delta = kDefaultRateLimit;  // same smoothing as the expert rollouts
  std::optional<ResetRule> reset;
  bool breakable = true;
  std::optional<std::vector<int>> breakable_attachments;  // restricts which welds may break
  bool record = true;
};

/// Closed-loop autoregressive control of a freshly spawned world.
RunResult run_episode(const PolicyWeights& w, const Morphology& m, std::uint64_t seed, const RunOptions& opts,
                      const PhysicsConfig& phys, const RewardConfig& reward);

}  // namespace breakaway
