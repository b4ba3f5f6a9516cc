#pragma once

#include <stdexcept>
#include <string>

namespace lcorner {

// Failure categories for the library. Input errors describe rejected
// arguments or malformed data; numerical errors describe computations that
// could not be completed even though the inputs were admissible.
enum class errc {
  // input
  dimension_mismatch,
  non_finite_input,
  negative_lambda,
  empty_grid,
  non_monotone_grid,
  invalid_interval,
  invalid_config,
  too_few_points,
  invalid_size,
  io_error,
  parse_error,
  // numerical
  singular_at_zero,
  degenerate_norm,
  degenerate_points,
  max_iterations_exceeded,
  interval_collapse,
  no_positive_curvature,
};

// CamelCase name of the error variant, e.g. "DimensionMismatch".
const char* errc_name(errc code) noexcept;

// True for errors caused by bad input (CLI exit code 2), false for
// numerical failures (exit code 3).
bool is_input_error(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace lcorner
