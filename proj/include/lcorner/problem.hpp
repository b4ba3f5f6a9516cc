#pragma once

#include <Eigen/Dense>

#include <vector>

namespace lcorner {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Solution of min ||A x - b||^2 + lambda ||x||^2 for one penalty weight.
struct TikhonovSolution {
  double lambda;
  Vector x;
  double residual_sq;  // ||A x - b||^2
  double norm_sq;      // ||x||^2
};

// One point of the L-curve: xi = log residual_sq, eta = log norm_sq
// (natural logarithm; the corner location is invariant to the log base).
struct LCurvePoint {
  double lambda;
  double xi;
  double eta;

  friend bool operator==(const LCurvePoint&, const LCurvePoint&) = default;
};

// A linear system A x = b prepared for regularized solving. The singular
// value decomposition of A is computed once at construction; every solve
// afterwards is a cheap filter-factor evaluation in the SVD basis, which is
// what makes dense parameter sweeps and the corner search affordable.
//
// Instances are immutable after construction and safe to share across
// threads for concurrent read-only use.
class RegularizedProblem {
 public:
  // Validates dimensions and finiteness, then factorizes. The relative
  // cutoff below which the smallest singular value marks the operator as
  // rank-deficient for lambda = 0 solves.
  static constexpr double kRankTolerance = 1e-12;

  // Logarithms in l_curve_point are rejected below this threshold instead
  // of producing -inf; a vanishing residual or solution norm means the
  // requested lambda sits outside the regime the L-curve can describe.
  static constexpr double kDegenerateNormThreshold = 1e-300;

  RegularizedProblem(Matrix operator_matrix, Vector data);

  Eigen::Index rows() const { return operator_.rows(); }
  Eigen::Index cols() const { return operator_.cols(); }
  const Matrix& operator_matrix() const { return operator_; }
  const Vector& data() const { return data_; }

  // Cached factorization: operator = U diag(sigma) V^T with thin U, V.
  const Vector& singular_values() const { return singular_values_; }
  const Matrix& left_vectors() const { return left_vectors_; }
  const Matrix& right_vectors() const { return right_vectors_; }

  // Minimizer of ||A x - b||^2 + lambda ||x||^2 via filter factors
  // sigma_i / (sigma_i^2 + lambda) applied to the projected data.
  // lambda = 0 is allowed only for full-rank operators and then returns
  // the plain least-squares solution.
  TikhonovSolution solve(double lambda) const;

  LCurvePoint l_curve_point(double lambda) const;

  // Points for a strictly increasing lambda grid, in grid order. Errors
  // from individual points are annotated with the offending lambda.
  std::vector<LCurvePoint> l_curve_sample(const std::vector<double>& grid) const;

 private:
  Matrix operator_;
  Vector data_;
  Matrix left_vectors_;    // m x r
  Matrix right_vectors_;   // n x r
  Vector singular_values_; // length r = min(m, n), non-increasing
  Vector projected_data_;  // U^T b
};

RegularizedProblem build_problem(Matrix operator_matrix, Vector data);

// Free-function forms of the solver operations; thin wrappers over the
// corresponding RegularizedProblem methods.
TikhonovSolution tikhonov_solve(const RegularizedProblem& problem, double lambda);
LCurvePoint l_curve_point(const RegularizedProblem& problem, double lambda);
std::vector<LCurvePoint> l_curve_sample(const RegularizedProblem& problem,
                                        const std::vector<double>& grid);

}  // namespace lcorner
