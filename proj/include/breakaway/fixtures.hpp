#pragma once

#include <cstdint>

#include "breakaway/physics.hpp"

namespace breakaway {

/// Two modules: the child's base (-x port) sits on the root's +y face,
/// rolled a quarter turn so its hinge swings toward the ground.
Morphology lever_morphology();

struct LeverRun {
  bool detached = false;
  int detach_step = -1;
  double peak_bending = 0.0;  // largest weld bending torque seen, N m
  double tau_detach = 0.0;
};

/// Root base pinned just above the ground; the child's servo alternates
/// between pressing its swing tip into the ground and lifting it, switching
/// every `half_period` control steps.
LeverRun scripted_lever(std::uint64_t seed, const PhysicsConfig& phys, int max_steps = 400, int half_period = 10);

struct LoadRun {
  bool detached = false;
  double detach_time = -1.0;  // s after the load starts
  double max_position_drift = 0.0;  // m
  double max_angle_drift = 0.0;     // rad
  double tau_detach = 0.0;
};

/// Root base pinned well clear of the ground; a constant external torque of `fraction * tau_detach`
/// about `axis` (weld frame) acts on the child base for `duration` seconds
/// while the servo holds zero. With `absolute`, `fraction` is the torque in
/// N m instead.
LoadRun sustained_load(std::uint64_t seed, const PhysicsConfig& phys, const Vec3& axis, double fraction,
                       double duration, bool absolute = false);

}  // namespace breakaway
