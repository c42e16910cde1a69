#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <vector>

#include "subsat/cnf.hpp"

namespace subsat {

inline constexpr std::size_t kSizingFeatures = 5;

/// Regression inputs: QUBO size, widest clause, literal count, N, L.
using SizingFeatures = std::array<double, kSizingFeatures>;

[[nodiscard]] SizingFeatures sizing_features(const CnfFormula& formula, double qubo_size);

struct SizingSample {
  SizingFeatures features{};
  double m = 0.0;
};

/// Affine predictor of the sub-SAT size M that converts to a QUBO of a
/// given size. An untrained model predicts Q/2.
class SizingModel {
 public:
  SizingModel() = default;
  SizingModel(std::array<double, kSizingFeatures> weights, double intercept);

  [[nodiscard]] bool trained() const { return trained_; }
  [[nodiscard]] const std::array<double, kSizingFeatures>& weights() const { return weights_; }
  [[nodiscard]] double intercept() const { return intercept_; }

  [[nodiscard]] double predict(const SizingFeatures& x) const;
  /// predict() rounded and clamped to [1, n].
  [[nodiscard]] std::size_t propose(const SizingFeatures& x, std::size_t n) const;

 private:
  bool trained_ = false;
  std::array<double, kSizingFeatures> weights_{};
  double intercept_ = 0.0;
};

struct SizingFit {
  SizingModel model;
  std::vector<double> residuals;  // observed - predicted, per sample
  double mean_abs_error = 0.0;
};

/// Least squares on centred features with ridge 1e-8, so features that are
/// constant across the samples get zero weight. Fewer than six samples, or no
/// feature that varies, leaves the model untrained.
[[nodiscard]] SizingFit fit_sizing(std::span<const SizingSample> samples);

/// Adaptive sub-SAT size for the QUBO inner optimizer.
struct MController {
  std::size_t current_m = 1;
  std::size_t m_min = 1;
  std::size_t m_max = 1;
  double slack_threshold = 0.9;
  bool initialised = false;

  [[nodiscard]] std::size_t step_up() const { return std::max<std::size_t>(1, current_m / 10); }
  void set(std::size_t m) { current_m = std::clamp(m, m_min, m_max); }
};

}  // namespace subsat
