#include "rls/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace rls {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_cell(const std::string& cell, const std::string& name, int row) {
  const std::string t = trim(cell);
  if (t.empty())
    throw CsvParseError(name + ": empty cell in row " + std::to_string(row + 1));
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw CsvParseError(name + ": bad number '" + t + "' in row " +
                        std::to_string(row + 1));
  }
  if (used != t.size())
    throw CsvParseError(name + ": trailing junk in '" + t + "' in row " +
                        std::to_string(row + 1));
  if (!std::isfinite(v))
    throw CsvParseError(name + ": non-finite value in row " + std::to_string(row + 1));
  return v;
}

std::vector<std::vector<double>> read_rows(std::istream& in, const std::string& name) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ','))
      row.push_back(parse_cell(cell, name, static_cast<int>(rows.size())));
    if (!rows.empty() && row.size() != rows.front().size())
      throw CsvParseError(name + ": ragged row " + std::to_string(rows.size() + 1) +
                          " (got " + std::to_string(row.size()) + " cells, expected " +
                          std::to_string(rows.front().size()) + ")");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw CsvParseError(name + ": no data rows");
  return rows;
}

}  // namespace

Matrix read_matrix_csv(std::istream& in, const std::string& name) {
  const auto rows = read_rows(in, name);
  Matrix A(rows.size(), rows.front().size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return A;
}

Matrix read_matrix_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvParseError("cannot open file: " + path);
  return read_matrix_csv(in, path);
}

Vector read_vector_csv(std::istream& in, const std::string& name) {
  const Matrix A = read_matrix_csv(in, name);
  if (A.cols() == 1) return A.col(0);
  if (A.rows() == 1) return A.row(0).transpose();
  throw CsvParseError(name + ": expected a single column (or row) of values");
}

Vector read_vector_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvParseError("cannot open file: " + path);
  return read_vector_csv(in, path);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_matrix_csv(std::ostream& out, const Matrix& A) {
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      if (j) out << ',';
      out << format_double(A(i, j));
    }
    out << '\n';
  }
}

void write_vector_csv(std::ostream& out, const Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) out << format_double(v(i)) << '\n';
}

}  // namespace rls
