#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "breakaway/core.hpp"

namespace breakaway {

inline constexpr int kMaxModules = 4;

enum class LinkRole : std::uint8_t { base = 0, swing = 1 };

struct AttachmentPort {
  LinkRole owner_link = LinkRole::base;
  // +z of the frame is the outward face normal.
  Transform frame;
};

/// Geometry and actuation limits shared by every module instance.
struct ModuleSpec {
  Vec3 base_link_half_extents{0.05, 0.03, 0.03};
  Vec3 swing_link_half_extents{0.06, 0.025, 0.025};
  double link_mass = 0.25;
  Vec3 hinge_axis{0.0, 1.0, 0.0};
  double joint_limit = 1.5707963267948966;
  std::vector<AttachmentPort> port_list;

  /// Default block: five base-link faces (all but the hinge face) and the
  /// swing-link tip.
  static ModuleSpec standard();

  /// Hinge location on the +x face of the base link, in base-link frame.
  Vec3 hinge_anchor() const { return {base_link_half_extents.x(), 0.0, 0.0}; }

  /// Pose of the swing link relative to the base link at the given hinge angle.
  Transform swing_pose(double angle) const;

  /// Pose of a link relative to its module's base link at hinge angle 0.
  Transform link_rest_pose(LinkRole role) const {
    return role == LinkRole::base ? Transform::identity() : swing_pose(0.0);
  }

  const Vec3& half_extents(LinkRole role) const {
    return role == LinkRole::base ? base_link_half_extents : swing_link_half_extents;
  }

  /// Throws Error when an invariant is violated.
  void validate() const;
};

struct Attachment {
  int parent_module = 0;
  int parent_port = 0;
  int child_module = 0;
  int child_port = 0;
  int roll = 0;  // multiples of 90 degrees about the mating normal
};

/// One flag per attachment, in attachment order.
using ConnectivityMask = std::vector<bool>;

/// A kinematic tree of identical modules; module 0 is the root.
struct Morphology {
  std::string id;
  ModuleSpec spec = ModuleSpec::standard();
  int n_modules = 1;
  std::vector<Attachment> attachments;

  /// Rest-pose (all hinge angles zero) base-link transform of every module
  /// relative to the root base link.
  std::vector<Transform> rest_module_poses() const;

  /// World-from-port transform of the mating frame on the parent side,
  /// relative to the root base link, for attachment `a`.
  Transform attachment_frame(int a) const;

  /// Throws Error when the tree/port/interpenetration invariants fail.
  void validate() const;

  ConnectivityMask all_active() const {
    return ConnectivityMask(attachments.size(), true);
  }

  /// Canonical text signature; equal for morphologies with identical structure.
  std::string signature() const;

  bool operator==(const Morphology&) const;
};

Morphology sample_morphology(std::uint64_t rng_seed, int n_modules,
                             const ModuleSpec& spec = ModuleSpec::standard());

/// Vertex set of the largest connected component over active edges, sorted
/// ascending. Ties go to the component containing the lowest module index.
std::vector<int> largest_connected_cluster(const Morphology& m, const ConnectivityMask& mask);

/// Indices into spec.port_list of the ports of `module_index` that no
/// attachment uses.
std::vector<int> free_ports(const Morphology& m, int module_index);

/// Sub-morphology induced by `modules` (which must be connected through
/// active edges); modules are re-indexed in ascending order.
Morphology reduced_morphology(const Morphology& m, const ConnectivityMask& mask,
                              const std::vector<int>& modules);

bool is_path(const Morphology& m);
bool is_star(const Morphology& m);

/// True when link boxes of non-adjacent links overlap in the rest pose.
bool rest_pose_interpenetrates(const Morphology& m);

nlohmann::json to_json(const Morphology& m);
Morphology morphology_from_json(const nlohmann::json& j);

inline constexpr int kMorphologyFormatVersion = 1;

}  // namespace breakaway
