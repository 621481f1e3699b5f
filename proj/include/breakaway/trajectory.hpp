#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "breakaway/morphology.hpp"
#include "breakaway/physics.hpp"

namespace breakaway {

enum class TrajectorySource : std::uint8_t { expert = 0, proxy_openloop = 1, policy = 2 };

const char* to_string(TrajectorySource s);

/// One control step. States and the mask are observed before the action is
/// applied; the reward is the one received after it. Values are stored at
/// float32 precision so that serialization is field-exact.
struct TrajectoryStep {
  std::vector<float> states;  // n_modules * ModuleState::kDim
  std::vector<float> action;  // executed joint targets, rad
  ConnectivityMask mask;
  std::array<float, 2> cluster_position{};
  std::array<float, 4> reward{};  // speed, efficiency, connection, total

  bool operator==(const TrajectoryStep&) const = default;
};

struct Trajectory {
  std::string morphology_id;
  std::uint64_t seed = 0;
  TrajectorySource source = TrajectorySource::expert;
  Morphology morphology;
  bool truncated = false;
  std::vector<TrajectoryStep> steps;

  int n_modules() const { return morphology.n_modules; }
  std::size_t size() const { return steps.size(); }
  /// Throws Error on length mismatches or a reactivated weld.
  void validate() const;
  bool operator==(const Trajectory&) const = default;
};

std::vector<float> pack_states(const std::vector<ModuleState>& states);

}  // namespace breakaway
