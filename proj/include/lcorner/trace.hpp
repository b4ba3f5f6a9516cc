#pragma once

#include "lcorner/corner.hpp"

#include <string>
#include <vector>

namespace lcorner {

// Self-describing record of one complete corner search: the configuration
// it ran with, the answer, and every window snapshot and evaluated point.
// Serializes to JSON; serialize followed by parse reproduces the document
// exactly (including every double bit for bit).
struct TraceDocument {
  std::string schema_version = kSchemaVersion;
  CornerSearchConfig config{};
  double lambda_opt = 0.0;
  LCurvePoint corner_point{};
  int evaluations = 0;
  bool window_at_lambda_lo = false;
  bool window_at_lambda_hi = false;
  std::vector<IterationRecord> iterations;
  std::vector<LCurvePoint> points;  // every evaluation, in call order

  static constexpr const char* kSchemaVersion = "1";

  static TraceDocument from_result(const CornerSearchConfig& config,
                                   const CornerResult& result);

  std::string serialize() const;
  static TraceDocument parse(const std::string& text);

  friend bool operator==(const TraceDocument&, const TraceDocument&) = default;
};

const char* to_string(ParameterScale scale);
const char* to_string(SearchBranch branch);

}  // namespace lcorner
