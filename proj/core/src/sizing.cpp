#include "subsat/sizing.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace subsat {

SizingFeatures sizing_features(const CnfFormula& formula, double qubo_size) {
  return {qubo_size, static_cast<double>(formula.max_clause_width()),
          static_cast<double>(formula.num_literals()), static_cast<double>(formula.num_variables()),
          static_cast<double>(formula.num_clauses())};
}

SizingModel::SizingModel(std::array<double, kSizingFeatures> weights, double intercept)
    : trained_(true), weights_(weights), intercept_(intercept) {}

double SizingModel::predict(const SizingFeatures& x) const {
  if (!trained_) return x[0] / 2.0;
  double y = intercept_;
  for (std::size_t k = 0; k < kSizingFeatures; ++k) y += weights_[k] * x[k];
  return y;
}

std::size_t SizingModel::propose(const SizingFeatures& x, std::size_t n) const {
  const double m = std::round(predict(x));
  if (!(m >= 1.0)) return 1;
  return std::min(n, static_cast<std::size_t>(m));
}

SizingFit fit_sizing(std::span<const SizingSample> samples) {
  constexpr double kRidge = 1e-8;
  SizingFit fit;
  const auto count = static_cast<Eigen::Index>(samples.size());
  if (samples.size() < kSizingFeatures + 1) return fit;

  Eigen::MatrixXd x(count, kSizingFeatures);
  Eigen::VectorXd y(count);
  for (Eigen::Index r = 0; r < count; ++r) {
    for (std::size_t k = 0; k < kSizingFeatures; ++k) {
      x(r, static_cast<Eigen::Index>(k)) = samples[r].features[k];
    }
    y(r) = samples[r].m;
  }
  const Eigen::RowVectorXd x_mean = x.colwise().mean();
  const double y_mean = y.mean();
  const Eigen::MatrixXd xc = x.rowwise() - x_mean;
  const Eigen::VectorXd yc = y.array() - y_mean;
  if (xc.cwiseAbs().maxCoeff() == 0.0) return fit;

  Eigen::MatrixXd normal = xc.transpose() * xc;
  normal.diagonal().array() += kRidge;
  const Eigen::VectorXd w = normal.ldlt().solve(xc.transpose() * yc);
  if (!w.allFinite()) return fit;

  std::array<double, kSizingFeatures> weights{};
  for (std::size_t k = 0; k < kSizingFeatures; ++k) weights[k] = w(static_cast<Eigen::Index>(k));
  fit.model = SizingModel(weights, y_mean - x_mean.dot(w));

  double abs_sum = 0.0;
  for (const SizingSample& s : samples) {
    const double r = s.m - fit.model.predict(s.features);
    fit.residuals.push_back(r);
    abs_sum += std::abs(r);
  }
  fit.mean_abs_error = abs_sum / static_cast<double>(samples.size());
  return fit;
}

}  // namespace subsat
