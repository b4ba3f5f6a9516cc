#include "lcorner/cli.hpp"

#include "lcorner/corner.hpp"
#include "lcorner/csv.hpp"
#include "lcorner/errors.hpp"
#include "lcorner/problem.hpp"
#include "lcorner/test_problems.hpp"
#include "lcorner/trace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace lcorner::cli {

namespace {

struct Options {
  std::string matrix_path;
  std::string rhs_path;
  std::string output;
  double lambda_min = 1e-10;
  double lambda_max = 1e-3;
  double epsilon = 0.01;
  std::string scale = "linear";
  int max_iter = 100;
  int points = 200;
  double lambda = 0.0;
  std::string format = "csv";
  int n = 32;
  double kernel_width = 0.1;
  double noise = 1e-2;
  std::uint64_t seed = 1;
  std::string prefix = "demo";
};

// Sends the payload to --output when given (summary then goes to `out`),
// otherwise to `out` itself (summary to `err`, so piping the payload
// stays clean).
std::ostream& emit_payload(const std::string& payload, const Options& o,
                           std::ostream& out, std::ostream& err) {
  if (o.output.empty()) {
    out << payload;
    return err;
  }
  std::ofstream file(o.output);
  if (!file) {
    throw Error(errc::io_error,
                "io error: cannot open '" + o.output + "' for writing");
  }
  file << payload;
  if (!file) {
    throw Error(errc::io_error, "io error: failed writing '" + o.output + "'");
  }
  return out;
}

ParameterScale parse_scale(const std::string& s) {
  return s == "log" ? ParameterScale::log : ParameterScale::linear;
}

int run_corner(const Options& o, std::ostream& out, std::ostream& err) {
  Matrix a = read_matrix_csv(std::filesystem::path(o.matrix_path));
  Vector b = read_vector_csv(std::filesystem::path(o.rhs_path));

  CornerSearchConfig config;
  config.lambda_lo = o.lambda_min;
  config.lambda_hi = o.lambda_max;
  config.epsilon = o.epsilon;
  config.scale = parse_scale(o.scale);
  config.max_iterations = o.max_iter;

  const RegularizedProblem problem = build_problem(std::move(a), std::move(b));
  const CornerResult result = corner_search(problem, config);
  const TraceDocument doc = TraceDocument::from_result(config, result);

  std::ostream& summary = emit_payload(doc.serialize(), o, out, err);
  const IterationRecord& last = result.trace.back();
  summary << "corner search: " << problem.rows() << "x" << problem.cols()
          << " system, scale=" << to_string(config.scale)
          << ", epsilon=" << format_double(config.epsilon) << "\n"
          << "interval [" << format_double(config.lambda_lo) << ", "
          << format_double(config.lambda_hi) << "] -> final window ["
          << format_double(last.lambdas[0]) << ", "
          << format_double(last.lambdas[3]) << "] after "
          << result.trace.size() - 1 << " iterations (" << result.evaluations
          << " evaluations)\n";
  if (result.window_at_lambda_lo) {
    summary << "note: final window still touches lambda_lo; the corner may "
               "lie at or below the lower extreme\n";
  }
  if (result.window_at_lambda_hi) {
    summary << "note: final window still touches lambda_hi; the corner may "
               "lie at or above the upper extreme\n";
  }
  summary << "corner point: xi = " << format_double(result.corner_point.xi)
          << ", eta = " << format_double(result.corner_point.eta) << "\n"
          << "lambda_opt = " << format_double(result.lambda_opt) << "\n";
  return 0;
}

int run_lcurve(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.points < 3) {
    throw Error(errc::too_few_points,
                "too few points: --points must be at least 3, got " +
                    std::to_string(o.points));
  }
  if (!(o.lambda_min > 0.0) || !(o.lambda_min < o.lambda_max) ||
      !std::isfinite(o.lambda_max)) {
    throw Error(errc::invalid_interval,
                "invalid interval: the log-spaced grid requires "
                "0 < lambda-min < lambda-max");
  }

  Matrix a = read_matrix_csv(std::filesystem::path(o.matrix_path));
  Vector b = read_vector_csv(std::filesystem::path(o.rhs_path));
  const RegularizedProblem problem = build_problem(std::move(a), std::move(b));

  std::vector<double> grid(static_cast<std::size_t>(o.points));
  const double lg_lo = std::log10(o.lambda_min);
  const double lg_hi = std::log10(o.lambda_max);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = static_cast<double>(i) / (grid.size() - 1);
    grid[i] = std::pow(10.0, lg_lo + t * (lg_hi - lg_lo));
  }
  grid.front() = o.lambda_min;
  grid.back() = o.lambda_max;

  const std::vector<LCurvePoint> sample = problem.l_curve_sample(grid);
  const DenseCornerResult oracle = dense_corner_oracle(sample);

  std::string payload;
  if (o.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < sample.size(); ++i) {
      nlohmann::json row{{"lambda", sample[i].lambda},
                         {"xi", sample[i].xi},
                         {"eta", sample[i].eta},
                         {"is_corner", i == oracle.index_star}};
      if (i >= 1 && i + 1 < sample.size()) {
        row["curvature"] = oracle.profile[i - 1].curvature;
      } else {
        row["curvature"] = nullptr;
      }
      rows.push_back(std::move(row));
    }
    nlohmann::json j{{"schema_version", "1"},
                     {"lambda_star", oracle.lambda_star},
                     {"index_star", oracle.index_star},
                     {"rows", std::move(rows)}};
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream table;
    write_lcurve_csv(table, sample, oracle.profile, oracle.index_star);
    payload = table.str();
  }

  std::ostream& summary = emit_payload(payload, o, out, err);
  summary << "l-curve: " << problem.rows() << "x" << problem.cols()
          << " system, " << o.points << " log-spaced points in ["
          << format_double(o.lambda_min) << ", " << format_double(o.lambda_max)
          << "]\n"
          << "corner (maximum positive curvature): row " << oracle.index_star
          << ", curvature = "
          << format_double(oracle.profile[oracle.index_star - 1].curvature)
          << "\n"
          << "lambda_star = " << format_double(oracle.lambda_star) << "\n";
  return 0;
}

int run_solve(const Options& o, std::ostream& out, std::ostream& err) {
  Matrix a = read_matrix_csv(std::filesystem::path(o.matrix_path));
  Vector b = read_vector_csv(std::filesystem::path(o.rhs_path));
  const RegularizedProblem problem = build_problem(std::move(a), std::move(b));
  const TikhonovSolution solution = problem.solve(o.lambda);

  std::string payload;
  if (o.format == "json") {
    nlohmann::json x = nlohmann::json::array();
    for (Eigen::Index i = 0; i < solution.x.size(); ++i) {
      x.push_back(solution.x(i));
    }
    nlohmann::json j{{"schema_version", "1"},
                     {"lambda", solution.lambda},
                     {"x", std::move(x)},
                     {"residual_sq", solution.residual_sq},
                     {"norm_sq", solution.norm_sq}};
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream column;
    write_vector_csv(column, solution.x);
    payload = column.str();
  }

  std::ostream& summary = emit_payload(payload, o, out, err);
  summary << "solve: " << problem.rows() << "x" << problem.cols()
          << " system at lambda = " << format_double(solution.lambda) << "\n"
          << "residual_sq = " << format_double(solution.residual_sq)
          << " (residual = " << format_double(std::sqrt(solution.residual_sq))
          << ")\n"
          << "norm_sq = " << format_double(solution.norm_sq)
          << " (norm = " << format_double(std::sqrt(solution.norm_sq)) << ")\n";
  return 0;
}

int run_demo(const Options& o, std::ostream& out, std::ostream& /*err*/) {
  const TestProblem tp =
      make_test_problem(o.n, o.kernel_width, o.noise, o.seed);

  const std::string matrix_path = o.prefix + "_matrix.csv";
  const std::string rhs_path = o.prefix + "_rhs.csv";
  const std::string x_true_path = o.prefix + "_x_true.csv";
  write_matrix_csv(std::filesystem::path(matrix_path),
                   tp.problem.operator_matrix());
  write_vector_csv(std::filesystem::path(rhs_path), tp.problem.data());
  write_vector_csv(std::filesystem::path(x_true_path), tp.x_true);

  const double realized =
      (tp.problem.data() - tp.b_clean).norm() / tp.b_clean.norm();
  out << "demo problem: n=" << o.n
      << ", kernel_width=" << format_double(o.kernel_width)
      << ", noise=" << format_double(o.noise) << ", seed=" << o.seed << "\n"
      << "realized relative noise: " << format_double(realized) << "\n"
      << "wrote " << matrix_path << ", " << rhs_path << ", " << x_true_path
      << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{
      "Tikhonov regularization with automatic parameter selection: locates "
      "the L-curve corner by a curvature-guided golden-section search."};
  app.require_subcommand(1);

  CLI::App* corner = app.add_subcommand(
      "corner", "Search the corner of the L-curve and emit a JSON trace");
  corner->add_option("matrix", o.matrix_path, "operator matrix CSV")->required();
  corner->add_option("rhs", o.rhs_path, "right-hand side vector CSV")->required();
  corner->add_option("--lambda-min", o.lambda_min, "lower search extreme")
      ->capture_default_str();
  corner->add_option("--lambda-max", o.lambda_max, "upper search extreme")
      ->capture_default_str();
  corner->add_option("--epsilon", o.epsilon,
                     "relative window width at which the search stops")
      ->capture_default_str();
  corner->add_option("--scale", o.scale,
                     "coordinate for golden-section placement")
      ->check(CLI::IsMember({"linear", "log"}))
      ->capture_default_str();
  corner->add_option("--max-iter", o.max_iter, "iteration safeguard cap")
      ->capture_default_str();
  corner->add_option("--output", o.output, "write the trace here instead of stdout");

  CLI::App* lcurve = app.add_subcommand(
      "lcurve", "Densely sample the L-curve with curvatures and corner mark");
  lcurve->add_option("matrix", o.matrix_path, "operator matrix CSV")->required();
  lcurve->add_option("rhs", o.rhs_path, "right-hand side vector CSV")->required();
  lcurve->add_option("--lambda-min", o.lambda_min, "smallest grid lambda")
      ->capture_default_str();
  lcurve->add_option("--lambda-max", o.lambda_max, "largest grid lambda")
      ->capture_default_str();
  lcurve->add_option("--points", o.points, "number of log-spaced grid points")
      ->capture_default_str();
  lcurve->add_option("--format", o.format, "payload format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  lcurve->add_option("--output", o.output, "write the table here instead of stdout");

  CLI::App* solve = app.add_subcommand(
      "solve", "Solve the regularized system at one lambda");
  solve->add_option("matrix", o.matrix_path, "operator matrix CSV")->required();
  solve->add_option("rhs", o.rhs_path, "right-hand side vector CSV")->required();
  solve->add_option("lambda", o.lambda, "penalty weight (>= 0)")->required();
  solve->add_option("--format", o.format, "payload format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  solve->add_option("--output", o.output, "write the solution here instead of stdout");

  CLI::App* demo = app.add_subcommand(
      "demo", "Generate a seeded ill-posed test problem as CSV files");
  demo->add_option("--n", o.n, "problem size (n x n, n >= 8)")
      ->capture_default_str();
  demo->add_option("--kernel-width", o.kernel_width, "smoothing kernel width")
      ->capture_default_str();
  demo->add_option("--noise", o.noise, "relative noise level")
      ->capture_default_str();
  demo->add_option("--seed", o.seed, "random seed")->capture_default_str();
  demo->add_option("--output-prefix", o.prefix, "prefix for the written files")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("lcorner");
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (corner->parsed()) {
      return run_corner(o, out, err);
    }
    if (lcurve->parsed()) {
      return run_lcurve(o, out, err);
    }
    if (solve->parsed()) {
      return run_solve(o, out, err);
    }
    if (demo->parsed()) {
      return run_demo(o, out, err);
    }
  } catch (const Error& e) {
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace lcorner::cli
