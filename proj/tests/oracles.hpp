#pragma once

// Reference computations for tests. Each deliberately takes a different
// route than the library code it checks, so agreement is evidence rather
// than tautology.

#include "lcorner/problem.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace oracles {

// Tikhonov solution via the stacked least-squares form
//   min || [A; sqrt(lambda) I] x - [b; 0] ||
// solved by Householder QR. This is the normal-equations solution
// (A^T A + lambda I) x = A^T b computed without forming the normal matrix
// (forming it squares the conditioning and costs digits), and shares no
// code with the SVD filter-factor path.
inline lcorner::Vector tikhonov_stacked_qr(const lcorner::Matrix& a,
                                           const lcorner::Vector& b,
                                           double lambda) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  lcorner::Matrix stacked(m + n, n);
  stacked.topRows(m) = a;
  stacked.bottomRows(n) =
      std::sqrt(lambda) * lcorner::Matrix::Identity(n, n);
  lcorner::Vector rhs = lcorner::Vector::Zero(m + n);
  rhs.head(m) = b;
  return stacked.colPivHouseholderQr().solve(rhs);
}

// Singular values through the eigenvalues of the Gram matrix A^T A,
// sorted non-increasing.
inline lcorner::Vector gram_singular_values(const lcorner::Matrix& a) {
  const lcorner::Matrix gram = a.transpose() * a;
  Eigen::SelfAdjointEigenSolver<lcorner::Matrix> eig(gram);
  lcorner::Vector values = eig.eigenvalues();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    values(i) = std::sqrt(std::max(values(i), 0.0));
  }
  std::sort(values.data(), values.data() + values.size(),
            [](double x, double y) { return x > y; });
  return values;
}

// Circumradius of a triangle from its three side lengths alone:
// R = abc / (4 * area), with the area from Kahan's numerically stable
// rearrangement of Heron's formula (requires sides sorted a >= b >= c).
inline double circumradius_from_sides(double a, double b, double c) {
  if (a < b) {
    std::swap(a, b);
  }
  if (a < c) {
    std::swap(a, c);
  }
  if (b < c) {
    std::swap(b, c);
  }
  const double area =
      0.25 * std::sqrt((a + (b + c)) * (c - (a - b)) * (c + (a - b)) *
                       (a + (b - c)));
  return a * b * c / (4.0 * area);
}

}  // namespace oracles
