#pragma once

#include <iosfwd>
#include <string>

#include "rls/linalg.hpp"

namespace rls {

// Plain CSV, one row per line, no header, decimal-point reals.
// Readers reject ragged rows, empty cells, and non-finite values.
Matrix read_matrix_csv(std::istream& in, const std::string& name = "matrix");
Matrix read_matrix_csv_file(const std::string& path);

// A vector file is a single-column (or single-row) CSV.
Vector read_vector_csv(std::istream& in, const std::string& name = "vector");
Vector read_vector_csv_file(const std::string& path);

void write_matrix_csv(std::ostream& out, const Matrix& A);
void write_vector_csv(std::ostream& out, const Vector& v);

// Shortest round-trip-exact decimal form ("%.17g").
std::string format_double(double v);

}  // namespace rls
