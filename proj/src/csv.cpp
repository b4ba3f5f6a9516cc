#include "lcorner/csv.hpp"

#include "lcorner/errors.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace lcorner {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(begin, end - begin);
}

double parse_field(const std::string& raw, const std::string& source,
                   std::size_t line_number) {
  const std::string field = trimmed(raw);
  if (field.empty()) {
    throw Error(errc::parse_error, "parse error: " + source + " line " +
                                       std::to_string(line_number) +
                                       ": empty field");
  }
  const char* start = field.c_str();
  char* end = nullptr;
  const double value = std::strtod(start, &end);
  if (end != start + field.size()) {
    throw Error(errc::parse_error, "parse error: " + source + " line " +
                                       std::to_string(line_number) + ": '" +
                                       field + "' is not a number");
  }
  return value;
}

// Rows of fields; blank lines are ignored so a trailing newline is fine.
std::vector<std::vector<double>> read_rows(std::istream& in,
                                           const std::string& source) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (trimmed(line).empty()) {
      continue;
    }
    std::vector<double> row;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      row.push_back(parse_field(field, source, line_number));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(errc::parse_error,
                  "parse error: " + source + " line " +
                      std::to_string(line_number) + ": row has " +
                      std::to_string(row.size()) + " fields but previous rows have " +
                      std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw Error(errc::parse_error, "parse error: " + source + ": no data rows");
  }
  return rows;
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_matrix_csv(std::ostream& out, const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) {
        out << ',';
      }
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

void write_vector_csv(std::ostream& out, const Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out << format_double(v(i)) << '\n';
  }
}

namespace {

std::ofstream open_for_writing(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(errc::io_error,
                "io error: cannot open '" + path.string() + "' for writing");
  }
  return out;
}

std::ifstream open_for_reading(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(errc::io_error,
                "io error: cannot open '" + path.string() + "' for reading");
  }
  return in;
}

}  // namespace

void write_matrix_csv(const std::filesystem::path& path, const Matrix& m) {
  auto out = open_for_writing(path);
  write_matrix_csv(out, m);
  if (!out) {
    throw Error(errc::io_error, "io error: failed writing '" + path.string() + "'");
  }
}

void write_vector_csv(const std::filesystem::path& path, const Vector& v) {
  auto out = open_for_writing(path);
  write_vector_csv(out, v);
  if (!out) {
    throw Error(errc::io_error, "io error: failed writing '" + path.string() + "'");
  }
}

Matrix read_matrix_csv(std::istream& in, const std::string& source_name) {
  const auto rows = read_rows(in, source_name);
  Matrix m(static_cast<Eigen::Index>(rows.size()),
           static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return m;
}

Vector read_vector_csv(std::istream& in, const std::string& source_name) {
  const auto rows = read_rows(in, source_name);
  if (rows.front().size() != 1) {
    throw Error(errc::parse_error,
                "parse error: " + source_name +
                    ": expected one value per line for a vector, found " +
                    std::to_string(rows.front().size()) + " fields");
  }
  Vector v(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = rows[i][0];
  }
  return v;
}

Matrix read_matrix_csv(const std::filesystem::path& path) {
  auto in = open_for_reading(path);
  return read_matrix_csv(in, path.string());
}

Vector read_vector_csv(const std::filesystem::path& path) {
  auto in = open_for_reading(path);
  return read_vector_csv(in, path.string());
}

void write_lcurve_csv(std::ostream& out, const std::vector<LCurvePoint>& points,
                      const std::vector<CurvatureSample>& profile,
                      std::size_t corner_index) {
  out << "lambda,xi,eta,curvature,is_corner\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << format_double(points[i].lambda) << ',' << format_double(points[i].xi)
        << ',' << format_double(points[i].eta) << ',';
    if (i >= 1 && i + 1 < points.size()) {
      out << format_double(profile[i - 1].curvature);
    }
    out << ',' << (i == corner_index ? '1' : '0') << '\n';
  }
}

}  // namespace lcorner
