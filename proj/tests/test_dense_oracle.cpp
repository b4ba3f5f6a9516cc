#include "lcorner/corner.hpp"

#include "lcorner/errors.hpp"
#include "lcorner/test_problems.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using lcorner::Error;
using lcorner::LCurvePoint;
using lcorner::dense_corner_oracle;
using lcorner::errc;

namespace {

std::vector<LCurvePoint> hyperbola_log_grid(double lo, double hi, int count) {
  std::vector<LCurvePoint> points;
  points.reserve(static_cast<std::size_t>(count));
  const double lg_lo = std::log10(lo);
  const double lg_hi = std::log10(hi);
  for (int i = 0; i < count; ++i) {
    const double lambda =
        std::pow(10.0, lg_lo + (lg_hi - lg_lo) * i / (count - 1));
    points.push_back(LCurvePoint{lambda, lambda, 1.0 / lambda});
  }
  return points;
}

}  // namespace

TEST(DenseCornerOracle, HyperbolaArgmaxNearOne) {
  const auto points = hyperbola_log_grid(0.1, 10.0, 101);
  const auto result = dense_corner_oracle(points);
  // grid step is 0.02 decades; the corner of xi*eta = 1 sits at lambda = 1
  EXPECT_LE(std::abs(std::log10(result.lambda_star)), 0.02 + 1e-12);
  EXPECT_EQ(result.profile.size(), points.size() - 2);
  EXPECT_EQ(points[result.index_star].lambda, result.lambda_star);
}

TEST(DenseCornerOracle, ProfileIndexedByMiddlePoint) {
  const auto points = hyperbola_log_grid(0.1, 10.0, 11);
  const auto result = dense_corner_oracle(points);
  for (std::size_t i = 0; i < result.profile.size(); ++i) {
    EXPECT_EQ(result.profile[i].lambda, points[i + 1].lambda);
    const double direct = lcorner::menger_curvature(points[i], points[i + 1],
                                                    points[i + 2])
                              .value;
    EXPECT_EQ(result.profile[i].curvature, direct);
  }
}

TEST(DenseCornerOracle, CollinearPointsHaveNoCorner) {
  std::vector<LCurvePoint> line;
  for (int i = 0; i < 3; ++i) {
    const double lambda = 1.0 + i;
    line.push_back(LCurvePoint{lambda, lambda, 2.0 * lambda + 1.0});
  }
  try {
    dense_corner_oracle(line);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::no_positive_curvature);
    EXPECT_NE(std::string(e.what()).find("no positive curvature"),
              std::string::npos);
  }
}

TEST(DenseCornerOracle, ConcaveCurveHasNoCorner) {
  std::vector<LCurvePoint> arc;
  for (int i = 0; i < 12; ++i) {
    const double lambda = 0.5 + 0.25 * i;
    // clockwise traversal: negative curvature throughout
    arc.push_back(LCurvePoint{lambda, lambda, -lambda * lambda});
  }
  EXPECT_THROW(dense_corner_oracle(arc), Error);
}

TEST(DenseCornerOracle, RejectsTooFewPoints) {
  const auto points = hyperbola_log_grid(0.1, 10.0, 2);
  try {
    dense_corner_oracle(points);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::too_few_points);
    EXPECT_NE(std::string(e.what()).find("too few points"), std::string::npos);
  }
}

TEST(DenseCornerOracle, RejectsUnorderedLambdas) {
  auto points = hyperbola_log_grid(0.1, 10.0, 5);
  std::swap(points[1], points[2]);
  try {
    dense_corner_oracle(points);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::non_monotone_grid);
  }
}

TEST(DenseCornerOracle, AnnotatesDegenerateTriples) {
  std::vector<LCurvePoint> points{{1.0, 0.0, 0.0},
                                  {2.0, 1.0, 1.0},
                                  {3.0, 1.0, 1.0},  // same plane position
                                  {4.0, 2.0, 0.0}};
  try {
    dense_corner_oracle(points);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::degenerate_points);
    EXPECT_NE(std::string(e.what()).find("triple centered on index"),
              std::string::npos);
  }
}

TEST(DenseCornerOracle, TestProblemProfileHasSinglePositivePeak) {
  const auto tp = lcorner::make_test_problem(32, 0.1, 1e-2, 1);
  std::vector<double> grid(500);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = std::pow(10.0, -10.0 + 7.0 * static_cast<double>(i) / 499.0);
  }
  const auto sample = tp.problem.l_curve_sample(grid);
  const auto result = dense_corner_oracle(sample);

  // one dominant positive peak: among samples above a tenth of the peak
  // curvature there is exactly one local maximum
  double peak = 0.0;
  for (const auto& s : result.profile) {
    peak = std::max(peak, s.curvature);
  }
  ASSERT_GT(peak, 0.0);
  int significant_maxima = 0;
  for (std::size_t i = 1; i + 1 < result.profile.size(); ++i) {
    const double c = result.profile[i].curvature;
    if (c > 0.1 * peak && c >= result.profile[i - 1].curvature &&
        c >= result.profile[i + 1].curvature) {
      ++significant_maxima;
    }
  }
  EXPECT_EQ(significant_maxima, 1);
}

TEST(DenseCornerOracle, ArgmaxStableUnderGridRefinement) {
  const auto tp = lcorner::make_test_problem(32, 0.1, 1e-2, 1);
  const auto sample_at = [&tp](int count) {
    std::vector<double> grid(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      grid[static_cast<std::size_t>(i)] =
          std::pow(10.0, -10.0 + 7.0 * i / (count - 1.0));
    }
    return dense_corner_oracle(tp.problem.l_curve_sample(grid)).lambda_star;
  };
  const double coarse = sample_at(500);
  const double fine = sample_at(1000);
  const double coarse_step = 7.0 / 499.0;  // decades between coarse points
  EXPECT_LE(std::abs(std::log10(coarse) - std::log10(fine)),
            coarse_step + 1e-12);
}
