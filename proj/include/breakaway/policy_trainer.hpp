#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "breakaway/dataset.hpp"
#include "breakaway/decoder.hpp"

namespace breakaway {

struct TrainOptions {
  double lr = 3e-4;
  int batch = 256;
  int steps = 20000;
  double grad_clip = 1.0;
  std::uint64_t seed = 0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_eps = 1e-8;
};

struct TrainResult {
  PolicyWeights weights;
  std::vector<double> loss_curve;  // one entry per optimizer step
};

class Adam {
 public:
  Adam(std::size_t n, const TrainOptions& opt) : opt_(opt), m_(n, 0.0), v_(n, 0.0) {}
  /// Clips the gradient to `grad_clip` global norm, then applies one step.
  /// Returns the pre-clip norm.
  double step(std::vector<double>& params, std::vector<double>& grad);

 private:
  TrainOptions opt_;
  std::vector<double> m_, v_;
  long t_ = 0;
};

/// Token blocks for steps [start, start+count) of a trajectory, padded to
/// the decoder's slot count. Actions are divided by the joint limit.
WindowInput make_window_input(const Trajectory& t, std::size_t start, std::size_t count, int n_slots);
/// Loss weights are 1 for modules in the largest cluster at each step.
WindowTarget make_window_target(const Trajectory& t, std::size_t start, std::size_t count, int n_slots,
                                const std::vector<std::vector<bool>>& members);

using StepCallback = std::function<void(int step, double loss)>;

/// Masked-MSE behaviour cloning on windows drawn from the index.
TrainResult train_policy(const DatasetIndex& index, const DecoderConfig& cfg, const TrainOptions& opt,
                         const StepCallback& on_step = {});

/// Full-batch training on a fixed window set (capacity checks).
TrainResult train_on_windows(const std::vector<WindowInput>& inputs, const std::vector<WindowTarget>& targets,
                             const DecoderConfig& cfg, const TrainOptions& opt, const StepCallback& on_step = {});

}  // namespace breakaway
