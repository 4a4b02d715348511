#include "rls/linalg.hpp"

#include <cmath>
#include <limits>

namespace rls {

bool all_finite(const Matrix& A) { return A.allFinite(); }
bool all_finite(const Vector& v) { return v.allFinite(); }

SvdResult svd(const Matrix& A) {
  if (A.size() == 0) throw std::invalid_argument("svd: empty matrix");
  if (!all_finite(A)) throw std::invalid_argument("svd: non-finite entries");

  Eigen::JacobiSVD<Matrix> dec(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (dec.info() != Eigen::Success)
    throw ConvergenceFailure("svd: iteration did not converge");

  SvdResult out{dec.matrixU(), dec.singularValues(), dec.matrixV()};

  // Sign convention: largest-magnitude entry of each U column positive.
  for (Eigen::Index j = 0; j < out.U.cols(); ++j) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < out.U.rows(); ++i) {
      const double a = std::abs(out.U(i, j));
      if (a > best) {
        best = a;
        imax = i;
      }
    }
    if (out.U(imax, j) < 0.0) {
      out.U.col(j) *= -1.0;
      out.V.col(j) *= -1.0;
    }
  }
  return out;
}

Vector solve_spd(const Matrix& M, const Vector& y) {
  if (M.rows() != M.cols()) throw ShapeMismatch("solve_spd: matrix not square");
  if (M.rows() != y.size()) throw ShapeMismatch("solve_spd: size mismatch");

  const double scale = M.cwiseAbs().maxCoeff();
  if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, scale))
    throw std::invalid_argument("solve_spd: matrix not symmetric");

  Eigen::LLT<Matrix> llt(M);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefinite("solve_spd: factorization pivot <= 0");

  Vector z = llt.solve(y);
  // One refinement step keeps the residual near machine level even when
  // M is as ill-conditioned as a de-regularized TLS system.
  z += llt.solve(y - M * z);
  return z;
}

double condition_number(const Matrix& A) {
  const SvdResult s = svd(A);
  const double smax = s.singular_values(0);
  const double smin = s.singular_values(s.singular_values.size() - 1);
  if (smax <= 0.0) throw std::invalid_argument("condition_number: zero matrix");
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return smax / smin;
}

}  // namespace rls
