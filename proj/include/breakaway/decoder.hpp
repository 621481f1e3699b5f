#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "breakaway/core.hpp"

namespace breakaway {

/// Causal decoder over interleaved per-module state tokens and one action
/// token per timestep: (s^0 ... s^{n_slots-1}, a) repeated for each step.
struct DecoderConfig {
  int n_slots = 4;
  int context_steps = 5;
  int state_dim = 8;
  int embed_dim = 32;
  int n_layers = 2;
  int n_heads = 4;
  int mlp_ratio = 4;
  double dropout = 0.0;

  int tokens_per_step() const { return n_slots + 1; }
  int context_tokens() const { return context_steps * tokens_per_step(); }
  void validate() const;
  bool operator==(const DecoderConfig&) const = default;
};

struct ParamTensor {
  std::string name;
  int rows = 0;
  int cols = 0;
  std::size_t offset = 0;
  std::size_t size() const { return static_cast<std::size_t>(rows) * cols; }
};

/// Flat parameter storage with named, column-major tensors. Every matrix maps
/// inputs to outputs as (out x in).
class PolicyWeights {
 public:
  PolicyWeights() = default;
  static PolicyWeights init(const DecoderConfig& cfg, std::uint64_t seed);
  /// Same layout, all parameters zero.
  static PolicyWeights zeros(const DecoderConfig& cfg);

  const DecoderConfig& config() const { return cfg_; }
  const std::vector<ParamTensor>& tensors() const { return tensors_; }
  const ParamTensor& tensor(const std::string& name) const;
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }
  std::size_t size() const { return data_.size(); }

  Eigen::Map<Eigen::MatrixXd> mat(const std::string& name);
  Eigen::Map<const Eigen::MatrixXd> mat(const std::string& name) const;

  void round_to_float();
  bool all_finite() const;
  bool operator==(const PolicyWeights& o) const { return cfg_ == o.cfg_ && data_ == o.data_; }

 private:
  void layout();
  DecoderConfig cfg_;
  std::vector<ParamTensor> tensors_;
  std::vector<double> data_;
};

/// One context window of `steps` timesteps. Rows of `states` are ordered by
/// (timestep, slot). Actions are normalized joint targets, one row per step.
struct WindowInput {
  int steps = 0;
  Eigen::MatrixXd states;   // (steps * n_slots) x state_dim
  Eigen::MatrixXd actions;  // steps x n_slots
  std::vector<bool> slot_valid;
};

/// Regression target and 0/1 loss weights for a window, steps x n_slots.
struct WindowTarget {
  Eigen::MatrixXd action;
  Eigen::MatrixXd weight;
};

/// Predicted normalized actions, steps x n_slots.
Eigen::MatrixXd forward(const PolicyWeights& w, const WindowInput& in);

struct LossResult {
  double loss = 0.0;          // weighted mean squared error
  double weighted_sum = 0.0;  // sum of weighted squared errors
  double weight_total = 0.0;
};

/// Masked MSE over a batch, optionally accumulating d(loss)/d(params) into
/// `grad` (resized to the parameter count). `dropout_rng` enables dropout.
LossResult loss_and_grad(const PolicyWeights& w, const std::vector<WindowInput>& inputs,
                         const std::vector<WindowTarget>& targets, std::vector<double>* grad,
                         std::mt19937_64* dropout_rng = nullptr);

/// Max relative error between analytic and central-difference gradients
/// over `samples` randomly chosen parameters, drawn from the named tensors
/// when `tensors` is non-empty.
double gradient_check(const PolicyWeights& w, const std::vector<WindowInput>& inputs,
                      const std::vector<WindowTarget>& targets, double h = 1e-4, int samples = 200,
                      std::uint64_t seed = 0, const std::vector<std::string>& tensors = {});

void save_policy(const PolicyWeights& w, const std::string& path, const std::string& config_hash);
PolicyWeights load_policy(const std::string& path, std::string* config_hash = nullptr);

}  // namespace breakaway
