#pragma once

#include <functional>
#include <span>
#include <vector>

#include "breakaway/physics.hpp"
#include "breakaway/reward.hpp"
#include "breakaway/trajectory.hpp"

namespace breakaway {

/// Default per-step command smoothing, rad. It exceeds the full joint range,
/// so it only bounds commands: servo torque is already clamped, and tighter
/// limits keep every maneuver below the detachment thresholds.
inline constexpr double kDefaultRateLimit = 3.2;

/// Clamps each target to within `max_delta` of the previous command.
std::vector<double> rate_limit(std::span<const double> target, std::span<const double> prev, double max_delta);

/// Called once per control step with the world and the previously executed
/// action; returns raw joint targets in radians.
using Controller = std::function<std::vector<double>(const SimWorld&, std::span<const double> prev_action)>;

struct EpisodeOptions {
  int length = 400;
  double max_delta = kDefaultRateLimit;  // per control step, rad
  bool record = true;
  double abort_return = -1000.0;
};

struct EpisodeResult {
  Trajectory trajectory;  // steps empty unless recording
  double episode_return = 0.0;
  int steps = 0;
  bool failed = false;
  int first_detach_step = -1;
  ConnectivityMask final_mask;
  std::vector<Vec2> cluster_path;  // cluster position at spawn and after every step
};

/// Drives one episode. `world` is advanced in place. Rewards follow the
/// cluster-mean history seeded with the spawn position. An instability abort
/// ends the episode early, marks the trajectory truncated and replaces the
/// return with `abort_return`.
EpisodeResult run_closed_loop(SimWorld& world, const Controller& controller, const RewardConfig& reward,
                              const EpisodeOptions& opts);

}  // namespace breakaway
