#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "breakaway/morphology.hpp"

namespace breakaway {

/// Physics constants. Defaults are desk-scale proxies except the detachment
/// threshold range and control period.
struct PhysicsConfig {
  double physics_dt = 0.005;
  double control_dt = 0.05;
  Vec3 gravity{0.0, 0.0, -9.81};
  double ground_friction = 0.8;
  double kp = 8.0;
  double kd = 0.4;
  double max_torque = 6.0;
  double tau_detach_min = 20.0;
  double tau_detach_max = 25.0;
  int solver_iterations = 20;
  double joint_erp = 0.2;
  double contact_erp = 0.2;
  double contact_slop = 5e-4;
  double max_body_speed = 100.0;
  // Expert observations use the root module's frame when true, otherwise
  // the mean over modules of the largest cluster.
  bool root_frame_observation = true;

  int substeps() const;
  void validate() const;
};

struct RigidBodyState {
  Vec3 position = Vec3::Zero();
  Quat orientation = Quat::Identity();
  Vec3 linear_velocity = Vec3::Zero();
  Vec3 angular_velocity = Vec3::Zero();  // world frame
  double mass = 1.0;
  Mat3 inertia = Mat3::Identity();  // body frame
  Vec3 half_extents = Vec3::Zero();
  bool fixed = false;
  Vec3 external_force = Vec3::Zero();
  Vec3 external_torque = Vec3::Zero();

  double inv_mass() const { return fixed ? 0.0 : 1.0 / mass; }
  Mat3 inv_inertia_world() const;
};

struct HingeJoint {
  int base_body = 0;
  int swing_body = 0;
  Vec3 anchor_base = Vec3::Zero();   // in base-link frame
  Vec3 anchor_swing = Vec3::Zero();  // in swing-link frame
  Vec3 axis = Vec3::UnitY();         // in both frames
  double joint_limit = 1.5707963267948966;
  double angle = 0.0;
  double velocity = 0.0;
  double target = 0.0;
  double kp = 0.0;
  double kd = 0.0;
  double max_torque = 0.0;
  double applied_torque = 0.0;
};

struct WeldConstraint {
  int attachment = 0;
  int body_a = 0;
  int body_b = 0;
  Transform frame_a;  // in body_a frame; +z is the mating normal
  Transform frame_b;  // in body_b frame
  bool active = true;
  double tau_detach = std::numeric_limits<double>::infinity();
  Vec3 last_reaction_torque = Vec3::Zero();  // in frame_a
};

/// Per-module proprioceptive token.
struct ModuleState {
  Vec3 projected_gravity = Vec3(0.0, 0.0, -1.0);
  Vec3 angular_velocity = Vec3::Zero();  // base-link frame
  double cos_angle = 1.0;
  double joint_velocity = 0.0;

  static constexpr int kDim = 8;
  std::array<double, kDim> to_array() const;
};

struct StepReport {
  std::vector<ModuleState> module_states;
  ConnectivityMask mask;
  std::vector<Vec2> module_positions;
  std::vector<int> newly_detached;
  bool failed = false;
};

/// Bending magnitude test; the twist component about the mating normal is
/// ignored.
inline bool exceeds_detach_threshold(const Vec3& torque_in_weld_frame, double tau_detach) {
  return std::hypot(torque_in_weld_frame.x(), torque_in_weld_frame.y()) > tau_detach;
}

struct SpawnOptions {
  bool breakable = true;
  double yaw = 0.0;
  // When set, only these attachments may break; the rest get an infinite threshold.
  std::optional<std::vector<int>> breakable_attachments;
};

class SimWorld {
 public:
  static SimWorld spawn(const Morphology& m, std::uint64_t seed, bool breakable,
                        const PhysicsConfig& cfg = {});
  static SimWorld spawn(const Morphology& m, std::uint64_t seed, const SpawnOptions& opts,
                        const PhysicsConfig& cfg = {});

  /// Advances by one control period. Entries of `action` are hinge targets
  /// in radians, clamped to the joint limit. A failed world stays failed.
  StepReport step_control(std::span<const double> action);

  /// One physics substep with the current hinge targets.
  void step_physics();

  std::vector<ModuleState> module_states() const;
  std::vector<double> expert_observation(std::span<const double> prev_action) const;
  static int expert_observation_size(int n_modules) { return (n_modules - 1) + 6 + 3 * n_modules; }

  ConnectivityMask mask() const;
  std::vector<Vec2> module_positions() const;
  /// Mean planar base-link position of the largest connected cluster.
  Vec2 cluster_position() const;
  std::vector<int> cluster() const { return largest_connected_cluster(morphology_, mask()); }

  double kinetic_energy() const;
  double potential_energy() const;
  double lowest_point() const;

  /// Permanently deactivates a weld (fixtures and tests).
  void deactivate_weld(int attachment);

  const Morphology& morphology() const { return morphology_; }
  const PhysicsConfig& config() const { return cfg_; }
  int n_modules() const { return morphology_.n_modules; }
  double time() const { return time_; }
  bool failed() const { return failed_; }

  std::vector<RigidBodyState>& bodies() { return bodies_; }
  const std::vector<RigidBodyState>& bodies() const { return bodies_; }
  std::vector<HingeJoint>& hinges() { return hinges_; }
  const std::vector<HingeJoint>& hinges() const { return hinges_; }
  std::vector<WeldConstraint>& welds() { return welds_; }
  const std::vector<WeldConstraint>& welds() const { return welds_; }
  PhysicsConfig& mutable_config() { return cfg_; }

  static int base_body(int module) { return 2 * module; }
  static int swing_body(int module) { return 2 * module + 1; }

 private:
  struct ContactCache {
    double normal = 0.0;
    Vec2 tangent = Vec2::Zero();
  };

  void update_hinge_kinematics();
  void check_stability();

  Morphology morphology_;
  PhysicsConfig cfg_;
  std::vector<RigidBodyState> bodies_;
  std::vector<HingeJoint> hinges_;
  std::vector<WeldConstraint> welds_;
  // Warm-start impulses, persistent across substeps.
  std::vector<Vec3> weld_lin_, weld_ang_, hinge_lin_;
  std::vector<Vec2> hinge_ang_;
  std::vector<double> hinge_motor_, hinge_limit_;
  std::vector<ContactCache> contact_cache_;  // 8 corners per body
  double time_ = 0.0;
  bool failed_ = false;
};

}  // namespace breakaway
