#pragma once

#include <cstddef>
#include <deque>
#include <span>

#include "breakaway/core.hpp"
#include "breakaway/morphology.hpp"

namespace breakaway {

struct RewardConfig {
  int window = 100;
  double dt = 0.05;
  int n_expected = 2;
  double eff_coeff = 0.01;
  double eps = 1e-6;
  double conn_coeff = -0.2;

  void validate() const;
};

/// Most recent cluster-mean planar positions, oldest first.
class PositionHistory {
 public:
  explicit PositionHistory(std::size_t capacity) : capacity_(capacity) {}

  void push(const Vec2& p) {
    if (buf_.size() == capacity_) buf_.pop_front();
    buf_.push_back(p);
  }
  void clear() { buf_.clear(); }

  std::size_t size() const { return buf_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool full() const { return buf_.size() == capacity_; }
  bool empty() const { return buf_.empty(); }
  const Vec2& operator[](std::size_t i) const { return buf_[i]; }
  const Vec2& front() const { return buf_.front(); }
  const Vec2& back() const { return buf_.back(); }

 private:
  std::size_t capacity_;
  std::deque<Vec2> buf_;
};

struct RewardBreakdown {
  double speed = 0.0;
  double efficiency = 0.0;
  double connection = 0.0;
  double total = 0.0;
  bool warmup = false;
};

/// Per-step reward from the position window and the active weld count.
/// A partial window uses its current length in place of `window`.
RewardBreakdown step_reward(const PositionHistory& h, const ConnectivityMask& mask, const RewardConfig& cfg);

/// Undiscounted sum of totals.
double episode_return(std::span<const RewardBreakdown> rewards);
double episode_return(std::span<const double> totals);

}  // namespace breakaway
