#pragma once

#include <Eigen/Dense>

#include "rls/errors.hpp"

namespace rls {

// Dense double-precision storage used throughout. Row/column shapes are
// carried by Eigen; finiteness is enforced at the system boundaries
// (CSV readers, problem construction, generators).
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Thin SVD, A = U * diag(singular_values) * V^T with k = min(m, n).
// Column signs are fixed so the largest-magnitude entry of each U column
// is positive, making downstream results deterministic.
struct SvdResult {
  Matrix U;                 // m x k, orthonormal columns
  Vector singular_values;   // length k, non-increasing, >= 0
  Matrix V;                 // n x k, orthonormal columns
};

SvdResult svd(const Matrix& A);

// Solves M z = y for symmetric positive definite M via Cholesky with one
// step of residual refinement. Throws NotPositiveDefinite when a pivot
// fails, std::invalid_argument when M is not symmetric to 1e-12 relative.
Vector solve_spd(const Matrix& M, const Vector& y);

// sigma_max / sigma_min; +infinity when sigma_min underflows to zero.
double condition_number(const Matrix& A);

// True when every entry is finite (no NaN/Inf).
bool all_finite(const Matrix& A);
bool all_finite(const Vector& v);

}  // namespace rls
