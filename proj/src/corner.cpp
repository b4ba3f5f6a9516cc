#include "lcorner/corner.hpp"

#include "lcorner/errors.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace lcorner {

const double kGoldenRatio = (1.0 + std::sqrt(5.0)) / 2.0;

namespace {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double square(double v) { return v * v; }

// Interior golden-section points of [x1, x4] in the active coordinate.
void golden_interior(double x1, double x4, double& x2, double& x3) {
  x2 = (x4 + kGoldenRatio * x1) / (1.0 + kGoldenRatio);
  x3 = x1 + (x4 - x2);
}

}  // namespace

CurvatureValue menger_curvature(const LCurvePoint& pj, const LCurvePoint& pk,
                                const LCurvePoint& pl) {
  const double d2_jk = square(pk.xi - pj.xi) + square(pk.eta - pj.eta);
  const double d2_kl = square(pl.xi - pk.xi) + square(pl.eta - pk.eta);
  const double d2_lj = square(pj.xi - pl.xi) + square(pj.eta - pl.eta);
  if (!(d2_jk > kDistinctnessThreshold) || !(d2_kl > kDistinctnessThreshold) ||
      !(d2_lj > kDistinctnessThreshold)) {
    throw Error(errc::degenerate_points,
                "degenerate points: two of the three L-curve points coincide "
                "(squared distances " +
                    format_value(d2_jk) + ", " + format_value(d2_kl) + ", " +
                    format_value(d2_lj) + ")");
  }
  // Twice the signed triangle area over the product of the side lengths.
  // Positive when pj -> pk -> pl runs counterclockwise. Centering the
  // differences on the middle point keeps the value translation-invariant
  // and makes exchanging pj and pl an exact sign flip (the same two
  // products with the subtraction reversed).
  const double cross = (pl.xi - pk.xi) * (pj.eta - pk.eta) -
                       (pj.xi - pk.xi) * (pl.eta - pk.eta);
  return CurvatureValue{2.0 * cross / std::sqrt(d2_jk * d2_kl * d2_lj)};
}

std::pair<double, double> golden_section_init(double lambda_lo, double lambda_hi,
                                              ParameterScale scale) {
  if (scale == ParameterScale::log) {
    if (!(lambda_lo > 0.0) || !(lambda_lo < lambda_hi) ||
        !std::isfinite(lambda_hi)) {
      throw Error(errc::invalid_interval,
                  "invalid interval: log scale requires "
                  "0 < lambda_lo < lambda_hi");
    }
  } else {
    if (!(lambda_lo >= 0.0) || !(lambda_lo < lambda_hi) ||
        !std::isfinite(lambda_hi)) {
      throw Error(errc::invalid_interval,
                  "invalid interval: require 0 <= lambda_lo < lambda_hi");
    }
  }

  double x1 = lambda_lo;
  double x4 = lambda_hi;
  if (scale == ParameterScale::log) {
    x1 = std::log10(lambda_lo);
    x4 = std::log10(lambda_hi);
  }
  double x2 = 0.0;
  double x3 = 0.0;
  golden_interior(x1, x4, x2, x3);
  double lambda2 = x2;
  double lambda3 = x3;
  if (scale == ParameterScale::log) {
    lambda2 = std::pow(10.0, x2);
    lambda3 = std::pow(10.0, x3);
  }
  if (!(lambda_lo < lambda2 && lambda2 < lambda3 && lambda3 < lambda_hi)) {
    throw Error(errc::invalid_interval,
                "invalid interval: too narrow to hold distinct golden-section "
                "interior points");
  }
  return {lambda2, lambda3};
}

void CornerSearchConfig::validate() const {
  if (!(lambda_lo > 0.0) || !(lambda_lo < lambda_hi) ||
      !std::isfinite(lambda_hi)) {
    throw Error(errc::invalid_interval,
                "invalid interval: require 0 < lambda_lo < lambda_hi");
  }
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw Error(errc::invalid_config,
                "invalid config: epsilon must lie in (0, 1)");
  }
  if (max_iterations < 4) {
    throw Error(errc::invalid_config,
                "invalid config: max_iterations must be at least 4");
  }
}

namespace {

struct SearchState {
  std::array<double, 4> x{};    // window in the active scale coordinate
  std::array<double, 4> lam{};  // the same window in raw lambda
  std::array<LCurvePoint, 4> p{};
  bool logscale = false;

  double from_x(double value) const {
    return logscale ? std::pow(10.0, value) : value;
  }

  void require_ordered() const {
    if (!(lam[0] < lam[1] && lam[1] < lam[2] && lam[2] < lam[3])) {
      throw Error(errc::interval_collapse,
                  "interval collapse: floating-point resolution reached before "
                  "epsilon; the lambda quadruple is no longer strictly ordered "
                  "(" +
                      format_value(lam[0]) + ", " + format_value(lam[1]) + ", " +
                      format_value(lam[2]) + ", " + format_value(lam[3]) + ")");
    }
  }
};

}  // namespace

CornerResult corner_search(const PointProvider& provider,
                           const CornerSearchConfig& config) {
  config.validate();

  SearchState s;
  s.logscale = config.scale == ParameterScale::log;
  s.x[0] = s.logscale ? std::log10(config.lambda_lo) : config.lambda_lo;
  s.x[3] = s.logscale ? std::log10(config.lambda_hi) : config.lambda_hi;
  golden_interior(s.x[0], s.x[3], s.x[1], s.x[2]);
  s.lam = {config.lambda_lo, s.from_x(s.x[1]), s.from_x(s.x[2]),
           config.lambda_hi};
  if (!(s.lam[0] < s.lam[1] && s.lam[1] < s.lam[2] && s.lam[2] < s.lam[3])) {
    throw Error(errc::invalid_interval,
                "invalid interval: too narrow to hold distinct golden-section "
                "interior points");
  }

  CornerResult result;
  result.points.reserve(static_cast<std::size_t>(config.max_iterations) + 4);
  for (int i = 0; i < 4; ++i) {
    s.p[i] = provider(s.lam[i]);
    result.points.push_back(s.p[i]);
  }
  result.evaluations = 4;

  auto push_record = [&](std::optional<SearchBranch> branch,
                         std::optional<LCurvePoint> new_point) {
    IterationRecord rec;
    rec.index = static_cast<int>(result.trace.size()) + 1;
    rec.lambdas = s.lam;
    rec.c2 = menger_curvature(s.p[0], s.p[1], s.p[2]).value;
    rec.c3 = menger_curvature(s.p[1], s.p[2], s.p[3]).value;
    rec.branch = branch;
    rec.new_point = new_point;
    result.trace.push_back(rec);
  };
  push_record(std::nullopt, std::nullopt);

  auto check_iteration_budget = [&](int steps) {
    if (steps >= config.max_iterations) {
      throw Error(errc::max_iterations_exceeded,
                  "max iterations exceeded: " + std::to_string(steps) +
                      " steps without reaching the termination threshold");
    }
  };

  std::optional<double> lambda_opt;
  LCurvePoint corner_point{};
  int steps = 0;

  while ((s.lam[3] - s.lam[0]) / s.lam[3] >= config.epsilon) {
    double c2 = menger_curvature(s.p[0], s.p[1], s.p[2]).value;
    double c3 = menger_curvature(s.p[1], s.p[2], s.p[3]).value;

    // While the right-hand triple is flat or concave the window cannot
    // bracket a corner yet: discard the upper extreme and re-place lambda2.
    while (c3 <= 0.0) {
      check_iteration_budget(steps);
      s.x[3] = s.x[2]; s.lam[3] = s.lam[2]; s.p[3] = s.p[2];
      s.x[2] = s.x[1]; s.lam[2] = s.lam[1]; s.p[2] = s.p[1];
      s.x[1] = (s.x[3] + kGoldenRatio * s.x[0]) / (1.0 + kGoldenRatio);
      s.lam[1] = s.from_x(s.x[1]);
      s.require_ordered();
      s.p[1] = provider(s.lam[1]);
      result.points.push_back(s.p[1]);
      ++result.evaluations;
      c3 = menger_curvature(s.p[1], s.p[2], s.p[3]).value;
      // c2 must describe the current triple before the branch comparison
      // below; the shifted points would otherwise leave it stale.
      c2 = menger_curvature(s.p[0], s.p[1], s.p[2]).value;
      push_record(SearchBranch::shrink_negative_c3, s.p[1]);
      ++steps;
    }

    check_iteration_budget(steps);
    if (c2 > c3) {
      // Larger curvature on the left: keep [lambda1, lambda3], candidate
      // corner is the current lambda2.
      lambda_opt = s.lam[1];
      corner_point = s.p[1];
      s.x[3] = s.x[2]; s.lam[3] = s.lam[2]; s.p[3] = s.p[2];
      s.x[2] = s.x[1]; s.lam[2] = s.lam[1]; s.p[2] = s.p[1];
      s.x[1] = (s.x[3] + kGoldenRatio * s.x[0]) / (1.0 + kGoldenRatio);
      s.lam[1] = s.from_x(s.x[1]);
      s.require_ordered();
      s.p[1] = provider(s.lam[1]);
      result.points.push_back(s.p[1]);
      ++result.evaluations;
      push_record(SearchBranch::move_left, s.p[1]);
      ++steps;
    } else {
      // Larger (or equal) curvature on the right: keep [lambda2, lambda4],
      // candidate corner is the current lambda3.
      lambda_opt = s.lam[2];
      corner_point = s.p[2];
      s.x[0] = s.x[1]; s.lam[0] = s.lam[1]; s.p[0] = s.p[1];
      s.x[1] = s.x[2]; s.lam[1] = s.lam[2]; s.p[1] = s.p[2];
      s.x[2] = s.x[0] + (s.x[3] - s.x[1]);
      s.lam[2] = s.from_x(s.x[2]);
      s.require_ordered();
      s.p[2] = provider(s.lam[2]);
      result.points.push_back(s.p[2]);
      ++result.evaluations;
      push_record(SearchBranch::move_right, s.p[2]);
      ++steps;
    }
  }

  if (!lambda_opt) {
    // The interval already satisfied the termination test before any branch
    // ran; apply the same storage rule the branches would have used.
    const double c2 = menger_curvature(s.p[0], s.p[1], s.p[2]).value;
    const double c3 = menger_curvature(s.p[1], s.p[2], s.p[3]).value;
    if (c2 >= c3) {
      lambda_opt = s.lam[1];
      corner_point = s.p[1];
    } else {
      lambda_opt = s.lam[2];
      corner_point = s.p[2];
    }
  }

  result.lambda_opt = *lambda_opt;
  result.corner_point = corner_point;
  result.window_at_lambda_lo = s.lam[0] == config.lambda_lo;
  result.window_at_lambda_hi = s.lam[3] == config.lambda_hi;
  return result;
}

CornerResult corner_search(const RegularizedProblem& problem,
                           const CornerSearchConfig& config) {
  return corner_search(
      [&problem](double lambda) { return problem.l_curve_point(lambda); },
      config);
}

DenseCornerResult dense_corner_oracle(const std::vector<LCurvePoint>& points) {
  if (points.size() < 3) {
    throw Error(errc::too_few_points,
                "too few points: the curvature profile needs at least 3 "
                "points, got " +
                    std::to_string(points.size()));
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].lambda > points[i - 1].lambda)) {
      throw Error(errc::non_monotone_grid,
                  "non-monotone grid: point lambdas must be strictly "
                  "increasing, but lambda[" +
                      std::to_string(i - 1) + "]=" +
                      format_value(points[i - 1].lambda) + " >= lambda[" +
                      std::to_string(i) + "]=" +
                      format_value(points[i].lambda));
    }
  }

  DenseCornerResult result;
  result.profile.reserve(points.size() - 2);
  bool found = false;
  double best = 0.0;
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    double c = 0.0;
    try {
      c = menger_curvature(points[i - 1], points[i], points[i + 1]).value;
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) +
                                " (triple centered on index " +
                                std::to_string(i) + ", lambda=" +
                                format_value(points[i].lambda) + ")");
    }
    result.profile.push_back(CurvatureSample{points[i].lambda, c});
    if (c > 0.0 && (!found || c > best)) {
      found = true;
      best = c;
      result.index_star = i;
    }
  }
  if (!found) {
    throw Error(errc::no_positive_curvature,
                "no positive curvature: every sampled triple is flat or "
                "concave, the curve has no corner on this grid");
  }
  result.lambda_star = points[result.index_star].lambda;
  return result;
}

}  // namespace lcorner
