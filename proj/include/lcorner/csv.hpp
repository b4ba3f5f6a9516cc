#pragma once

#include "lcorner/corner.hpp"
#include "lcorner/problem.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace lcorner {

// Shortest text that still reproduces the double exactly on read-back
// (17 significant digits).
std::string format_double(double value);

// Matrices are written one row per line, comma separated, no header;
// vectors one value per line. Readers reject ragged rows, non-numeric
// fields and empty files with ParseError, and missing files with IoError.
void write_matrix_csv(std::ostream& out, const Matrix& m);
void write_vector_csv(std::ostream& out, const Vector& v);
void write_matrix_csv(const std::filesystem::path& path, const Matrix& m);
void write_vector_csv(const std::filesystem::path& path, const Vector& v);

Matrix read_matrix_csv(std::istream& in, const std::string& source_name);
Vector read_vector_csv(std::istream& in, const std::string& source_name);
Matrix read_matrix_csv(const std::filesystem::path& path);
Vector read_vector_csv(const std::filesystem::path& path);

// Dense L-curve table: header lambda,xi,eta,curvature,is_corner, one row
// per sampled point. The curvature column is empty on the first and last
// row (a curvature needs both neighbours); is_corner is 1 exactly on the
// row of corner_index.
void write_lcurve_csv(std::ostream& out, const std::vector<LCurvePoint>& points,
                      const std::vector<CurvatureSample>& profile,
                      std::size_t corner_index);

}  // namespace lcorner
