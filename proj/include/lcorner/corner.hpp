#pragma once

#include "lcorner/problem.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace lcorner {

// Golden ratio, used both for interior point placement and as the exact
// per-step contraction factor of the search window.
extern const double kGoldenRatio;

// Signed curvature of the circumcircle through three plane points (Menger
// curvature), evaluated on the (xi, eta) coordinates; the lambda fields are
// ignored. Magnitude is 1/circumradius; the sign is positive when the
// triple pj -> pk -> pl runs counterclockwise and zero when collinear.
struct CurvatureValue {
  double value;
};

// Squared pairwise distances below this are treated as coincident points.
inline constexpr double kDistinctnessThreshold = 1e-30;

CurvatureValue menger_curvature(const LCurvePoint& pj, const LCurvePoint& pk,
                                const LCurvePoint& pl);

enum class ParameterScale { linear, log };

// Places the two interior points of a golden-section quadruple:
// lambda2 = (hi + phi*lo) / (1 + phi), lambda3 = lo + (hi - lambda2).
// In log scale the same construction is applied to log10(lambda) and the
// results exponentiated back. lo = 0 is accepted in linear scale only
// (the degenerate limit of the formula); log scale needs lo > 0.
std::pair<double, double> golden_section_init(double lambda_lo, double lambda_hi,
                                              ParameterScale scale);

struct CornerSearchConfig {
  double lambda_lo = 1e-10;
  double lambda_hi = 1e-3;
  double epsilon = 0.01;
  ParameterScale scale = ParameterScale::linear;
  int max_iterations = 100;

  // Throws InvalidInterval / InvalidConfig when the invariants
  // 0 < lambda_lo < lambda_hi, 0 < epsilon < 1, max_iterations >= 4 fail.
  void validate() const;

  friend bool operator==(const CornerSearchConfig&,
                         const CornerSearchConfig&) = default;
};

enum class SearchBranch { shrink_negative_c3, move_left, move_right };

// Snapshot of the search window after one step. The curvatures c2 and c3
// always describe the quadruple stored in this record, so a record is
// self-consistent even when the step that produced it replaced points.
struct IterationRecord {
  int index = 0;  // 1-based position in the trace
  std::array<double, 4> lambdas{};
  double c2 = 0.0;
  double c3 = 0.0;
  std::optional<SearchBranch> branch;   // absent on the initial record
  std::optional<LCurvePoint> new_point;  // absent on the initial record

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct CornerResult {
  double lambda_opt = 0.0;
  LCurvePoint corner_point{};
  std::vector<IterationRecord> trace;
  int evaluations = 0;  // provider calls; always 4 + (trace.size() - 1)
  // Every provider evaluation in call order (the four initial points
  // followed by one point per post-initialization record).
  std::vector<LCurvePoint> points;
  // True when the final window still touches the corresponding initial
  // extreme, which signals that the corner may lie outside the searched
  // interval.
  bool window_at_lambda_lo = false;
  bool window_at_lambda_hi = false;
};

using PointProvider = std::function<LCurvePoint(double)>;

// Locates the L-curve corner by golden-section search on the signed
// curvature of the moving point quadruple. Each outer iteration first
// shrinks the upper extreme while the right-hand curvature c3 is not
// positive, then moves the window toward the side of larger curvature;
// every step costs exactly one provider call. Terminates when
// (lambda4 - lambda1) / lambda4 < epsilon, measured on raw lambda in both
// scales.
CornerResult corner_search(const PointProvider& provider,
                           const CornerSearchConfig& config);

// Convenience overload sampling the problem's own L-curve.
CornerResult corner_search(const RegularizedProblem& problem,
                           const CornerSearchConfig& config);

struct CurvatureSample {
  double lambda;      // lambda of the middle point of the triple
  double curvature;
};

struct DenseCornerResult {
  double lambda_star = 0.0;
  std::size_t index_star = 0;  // index into the input points
  std::vector<CurvatureSample> profile;  // one entry per interior point
};

// Reference corner finder: curvature of every consecutive triple of a
// densely sampled L-curve, indexed by the middle point; returns the lambda
// of the maximum positive curvature. Used to validate the search, not by
// it.
DenseCornerResult dense_corner_oracle(const std::vector<LCurvePoint>& points);

}  // namespace lcorner
