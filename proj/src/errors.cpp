#include "lcorner/errors.hpp"

namespace lcorner {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::dimension_mismatch:
      return "DimensionMismatch";
    case errc::non_finite_input:
      return "NonFiniteInput";
    case errc::negative_lambda:
      return "NegativeLambda";
    case errc::empty_grid:
      return "EmptyGrid";
    case errc::non_monotone_grid:
      return "NonMonotoneGrid";
    case errc::invalid_interval:
      return "InvalidInterval";
    case errc::invalid_config:
      return "InvalidConfig";
    case errc::too_few_points:
      return "TooFewPoints";
    case errc::invalid_size:
      return "InvalidSize";
    case errc::io_error:
      return "IoError";
    case errc::parse_error:
      return "ParseError";
    case errc::singular_at_zero:
      return "SingularAtZero";
    case errc::degenerate_norm:
      return "DegenerateNorm";
    case errc::degenerate_points:
      return "DegeneratePoints";
    case errc::max_iterations_exceeded:
      return "MaxIterationsExceeded";
    case errc::interval_collapse:
      return "IntervalCollapse";
    case errc::no_positive_curvature:
      return "NoPositiveCurvature";
  }
  return "UnknownError";
}

bool is_input_error(errc code) noexcept {
  switch (code) {
    case errc::singular_at_zero:
    case errc::degenerate_norm:
    case errc::degenerate_points:
    case errc::max_iterations_exceeded:
    case errc::interval_collapse:
    case errc::no_positive_curvature:
      return false;
    default:
      return true;
  }
}

}  // namespace lcorner
