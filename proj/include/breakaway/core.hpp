#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace breakaway {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Quat = Eigen::Quaterniond;

/// Rigid transform: x_parent = rotation * x_local + position.
struct Transform {
  Vec3 position = Vec3::Zero();
  Quat rotation = Quat::Identity();

  static Transform identity() { return {}; }

  Vec3 apply(const Vec3& p) const { return rotation * p + position; }

  Transform operator*(const Transform& rhs) const {
    return {rotation * rhs.position + position, (rotation * rhs.rotation).normalized()};
  }

  Transform inverse() const {
    const Quat inv = rotation.conjugate();
    return {-(inv * position), inv};
  }
};

/// Base error for recoverable failures surfaced to callers and the CLI.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// SplitMix64 finalizer; the basis of every derived seed.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Splittable seed scheme: a child seed depends only on the parent and the
/// path of (tag, index) labels, never on worker scheduling.
std::uint64_t derive_seed(std::uint64_t parent, std::string_view tag, std::uint64_t index = 0);

/// 64-bit FNV-1a, used for config and content hashes.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

Quat axis_angle(const Vec3& axis, double angle);

}  // namespace breakaway
