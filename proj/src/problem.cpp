#include "lcorner/problem.hpp"

#include "lcorner/errors.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace lcorner {

namespace {

std::string format_lambda(double lambda) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", lambda);
  return buf;
}

}  // namespace

RegularizedProblem::RegularizedProblem(Matrix operator_matrix, Vector data)
    : operator_(std::move(operator_matrix)), data_(std::move(data)) {
  if (operator_.rows() == 0 || operator_.cols() == 0) {
    throw Error(errc::invalid_size,
                "invalid size: operator must have at least one row and one column");
  }
  if (data_.size() != operator_.rows()) {
    throw Error(errc::dimension_mismatch,
                "dimension mismatch: operator has " +
                    std::to_string(operator_.rows()) + " rows but data has " +
                    std::to_string(data_.size()) + " entries");
  }
  if (!operator_.allFinite()) {
    throw Error(errc::non_finite_input,
                "non-finite input: operator contains NaN or Inf");
  }
  if (!data_.allFinite()) {
    throw Error(errc::non_finite_input,
                "non-finite input: data contains NaN or Inf");
  }

  Eigen::JacobiSVD<Matrix> svd(operator_,
                               Eigen::ComputeThinU | Eigen::ComputeThinV);
  left_vectors_ = svd.matrixU();
  right_vectors_ = svd.matrixV();
  singular_values_ = svd.singularValues();
  projected_data_ = left_vectors_.transpose() * data_;
}

TikhonovSolution RegularizedProblem::solve(double lambda) const {
  if (!std::isfinite(lambda)) {
    throw Error(errc::non_finite_input, "non-finite input: lambda is NaN or Inf");
  }
  if (lambda < 0.0) {
    throw Error(errc::negative_lambda,
                "negative lambda: " + format_lambda(lambda) +
                    " (the penalty weight must be >= 0)");
  }
  const Eigen::Index r = singular_values_.size();
  if (lambda == 0.0) {
    const double s_max = singular_values_(0);
    const double s_min = singular_values_(r - 1);
    if (s_min <= kRankTolerance * s_max) {
      throw Error(errc::singular_at_zero,
                  "singular at lambda=0: operator is rank-deficient, the "
                  "unregularized least-squares solution is not stable");
    }
  }

  // Filter factors in the SVD basis: each projected-data coefficient is
  // scaled by sigma / (sigma^2 + lambda). At lambda = 0 this is 1/sigma
  // (plain least squares, guarded above); as lambda grows each component
  // is progressively damped.
  Vector coeffs(r);
  for (Eigen::Index i = 0; i < r; ++i) {
    const double s = singular_values_(i);
    coeffs(i) = s > 0.0 ? s / (s * s + lambda) * projected_data_(i) : 0.0;
  }

  TikhonovSolution solution;
  solution.lambda = lambda;
  solution.x = right_vectors_ * coeffs;
  solution.residual_sq = (operator_ * solution.x - data_).squaredNorm();
  solution.norm_sq = solution.x.squaredNorm();
  return solution;
}

LCurvePoint RegularizedProblem::l_curve_point(double lambda) const {
  const TikhonovSolution solution = solve(lambda);
  if (!(solution.residual_sq > kDegenerateNormThreshold)) {
    throw Error(errc::degenerate_norm,
                "degenerate norm at lambda=" + format_lambda(lambda) +
                    ": residual norm is (numerically) zero, its logarithm "
                    "is not finite");
  }
  if (!(solution.norm_sq > kDegenerateNormThreshold)) {
    throw Error(errc::degenerate_norm,
                "degenerate norm at lambda=" + format_lambda(lambda) +
                    ": solution norm is (numerically) zero, its logarithm "
                    "is not finite");
  }
  return LCurvePoint{lambda, std::log(solution.residual_sq),
                     std::log(solution.norm_sq)};
}

std::vector<LCurvePoint> RegularizedProblem::l_curve_sample(
    const std::vector<double>& grid) const {
  if (grid.empty()) {
    throw Error(errc::empty_grid, "empty grid: at least one lambda is required");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw Error(errc::non_monotone_grid,
                  "non-monotone grid: entries must be strictly increasing, "
                  "but grid[" +
                      std::to_string(i - 1) + "]=" + format_lambda(grid[i - 1]) +
                      " >= grid[" + std::to_string(i) + "]=" +
                      format_lambda(grid[i]));
    }
  }

  std::vector<LCurvePoint> points;
  points.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    try {
      points.push_back(l_curve_point(grid[i]));
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) + " (while sampling grid index " +
                                std::to_string(i) + ", lambda=" +
                                format_lambda(grid[i]) + ")");
    }
  }
  return points;
}

RegularizedProblem build_problem(Matrix operator_matrix, Vector data) {
  return RegularizedProblem(std::move(operator_matrix), std::move(data));
}

TikhonovSolution tikhonov_solve(const RegularizedProblem& problem, double lambda) {
  return problem.solve(lambda);
}

LCurvePoint l_curve_point(const RegularizedProblem& problem, double lambda) {
  return problem.l_curve_point(lambda);
}

std::vector<LCurvePoint> l_curve_sample(const RegularizedProblem& problem,
                                        const std::vector<double>& grid) {
  return problem.l_curve_sample(grid);
}

}  // namespace lcorner
