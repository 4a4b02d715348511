#pragma once

#include <variant>

#include "rls/linalg.hpp"

namespace rls {

// Overdetermined instance: minimize over x some notion of ||Ax - b|| with
// the entries of A trusted only up to an uncertainty set.
//
// Construction enforces m > n and finite entries. Full column rank is a
// lazy requirement: estimators that need it call require_full_rank and
// report RankDeficient.
struct ProblemInstance {
  Matrix A;
  Vector b;

  ProblemInstance(Matrix A_in, Vector b_in);

  Eigen::Index rows() const { return A.rows(); }
  Eigen::Index cols() const { return A.cols(); }
};

// Throws RankDeficient unless sigma_min(A) > 1e-12 * sigma_max(A).
void require_full_rank(const Matrix& A);

// Element-wise box descriptions for the perturbation Delta, |Delta| <= D.
struct FixedPointUncertainty {
  double delta;  // uniform bound, D = delta * ones
};

struct BoxUncertainty {
  Matrix D;  // element-wise >= 0, same shape as A
};

struct ProportionalUncertainty {
  double p;  // D = p * |A|
};

using UncertaintySet =
    std::variant<FixedPointUncertainty, BoxUncertainty, ProportionalUncertainty>;

// Decimal rounding place: digit d means entries were rounded to the
// nearest multiple of 10^-d.
struct QuantizationSpec {
  int round_digit;
};

// Sanity range for round digits accepted anywhere in the library.
inline constexpr int kMinRoundDigit = -6;
inline constexpr int kMaxRoundDigit = 12;

void validate_quantization_spec(const QuantizationSpec& spec);

// Rounding to digit d leaves each entry within half a grid step of the
// observed value: delta = 0.5 * 10^-d.
FixedPointUncertainty delta_from_round_digit(const QuantizationSpec& spec);
double fixed_point_delta(int round_digit);

// Expands any uncertainty description into the explicit bound matrix D
// for the given data matrix. Output is element-wise non-negative.
Matrix materialize_box(const UncertaintySet& u, const Matrix& A);

}  // namespace rls
