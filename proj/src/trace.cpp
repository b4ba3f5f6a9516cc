#include "lcorner/trace.hpp"

#include "lcorner/errors.hpp"

#include <json.hpp>

#include <exception>

namespace lcorner {

using nlohmann::json;

const char* to_string(ParameterScale scale) {
  return scale == ParameterScale::log ? "log" : "linear";
}

const char* to_string(SearchBranch branch) {
  switch (branch) {
    case SearchBranch::shrink_negative_c3:
      return "shrink_negative_c3";
    case SearchBranch::move_left:
      return "move_left";
    case SearchBranch::move_right:
      return "move_right";
  }
  return "unknown";
}

namespace {

ParameterScale scale_from_string(const std::string& s) {
  if (s == "linear") {
    return ParameterScale::linear;
  }
  if (s == "log") {
    return ParameterScale::log;
  }
  throw Error(errc::parse_error,
              "parse error: trace document: unknown scale '" + s + "'");
}

SearchBranch branch_from_string(const std::string& s) {
  if (s == "shrink_negative_c3") {
    return SearchBranch::shrink_negative_c3;
  }
  if (s == "move_left") {
    return SearchBranch::move_left;
  }
  if (s == "move_right") {
    return SearchBranch::move_right;
  }
  throw Error(errc::parse_error,
              "parse error: trace document: unknown branch '" + s + "'");
}

json point_to_json(const LCurvePoint& p) {
  return json{{"lambda", p.lambda}, {"xi", p.xi}, {"eta", p.eta}};
}

LCurvePoint point_from_json(const json& j) {
  return LCurvePoint{j.at("lambda").get<double>(), j.at("xi").get<double>(),
                     j.at("eta").get<double>()};
}

}  // namespace

TraceDocument TraceDocument::from_result(const CornerSearchConfig& config,
                                         const CornerResult& result) {
  TraceDocument doc;
  doc.config = config;
  doc.lambda_opt = result.lambda_opt;
  doc.corner_point = result.corner_point;
  doc.evaluations = result.evaluations;
  doc.window_at_lambda_lo = result.window_at_lambda_lo;
  doc.window_at_lambda_hi = result.window_at_lambda_hi;
  doc.iterations = result.trace;
  doc.points = result.points;
  return doc;
}

std::string TraceDocument::serialize() const {
  json j;
  j["schema_version"] = schema_version;
  j["config"] = json{{"lambda_lo", config.lambda_lo},
                     {"lambda_hi", config.lambda_hi},
                     {"epsilon", config.epsilon},
                     {"scale", to_string(config.scale)},
                     {"max_iterations", config.max_iterations}};
  j["lambda_opt"] = lambda_opt;
  j["corner_point"] = point_to_json(corner_point);
  j["evaluations"] = evaluations;
  j["window_at_lambda_lo"] = window_at_lambda_lo;
  j["window_at_lambda_hi"] = window_at_lambda_hi;

  json its = json::array();
  for (const IterationRecord& rec : iterations) {
    json r;
    r["index"] = rec.index;
    r["lambdas"] = json{rec.lambdas[0], rec.lambdas[1], rec.lambdas[2],
                        rec.lambdas[3]};
    r["c2"] = rec.c2;
    r["c3"] = rec.c3;
    if (rec.branch) {
      r["branch"] = to_string(*rec.branch);
    }
    if (rec.new_point) {
      r["new_point"] = point_to_json(*rec.new_point);
    }
    its.push_back(std::move(r));
  }
  j["iterations"] = std::move(its);

  json pts = json::array();
  for (const LCurvePoint& p : points) {
    pts.push_back(point_to_json(p));
  }
  j["points"] = std::move(pts);

  return j.dump(2) + "\n";
}

TraceDocument TraceDocument::parse(const std::string& text) {
  try {
    const json j = json::parse(text);
    TraceDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != kSchemaVersion) {
      throw Error(errc::parse_error,
                  "parse error: trace document: unsupported schema_version '" +
                      doc.schema_version + "'");
    }
    const json& cfg = j.at("config");
    doc.config.lambda_lo = cfg.at("lambda_lo").get<double>();
    doc.config.lambda_hi = cfg.at("lambda_hi").get<double>();
    doc.config.epsilon = cfg.at("epsilon").get<double>();
    doc.config.scale = scale_from_string(cfg.at("scale").get<std::string>());
    doc.config.max_iterations = cfg.at("max_iterations").get<int>();
    doc.lambda_opt = j.at("lambda_opt").get<double>();
    doc.corner_point = point_from_json(j.at("corner_point"));
    doc.evaluations = j.at("evaluations").get<int>();
    doc.window_at_lambda_lo = j.at("window_at_lambda_lo").get<bool>();
    doc.window_at_lambda_hi = j.at("window_at_lambda_hi").get<bool>();

    for (const json& r : j.at("iterations")) {
      IterationRecord rec;
      rec.index = r.at("index").get<int>();
      const json& lams = r.at("lambdas");
      if (!lams.is_array() || lams.size() != 4) {
        throw Error(errc::parse_error,
                    "parse error: trace document: 'lambdas' must be an array "
                    "of four values");
      }
      for (int k = 0; k < 4; ++k) {
        rec.lambdas[static_cast<std::size_t>(k)] = lams.at(k).get<double>();
      }
      rec.c2 = r.at("c2").get<double>();
      rec.c3 = r.at("c3").get<double>();
      if (r.contains("branch")) {
        rec.branch = branch_from_string(r.at("branch").get<std::string>());
      }
      if (r.contains("new_point")) {
        rec.new_point = point_from_json(r.at("new_point"));
      }
      doc.iterations.push_back(std::move(rec));
    }
    for (const json& p : j.at("points")) {
      doc.points.push_back(point_from_json(p));
    }
    return doc;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(errc::parse_error,
                std::string("parse error: trace document: ") + e.what());
  }
}

}  // namespace lcorner
