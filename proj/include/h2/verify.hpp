#pragma once

#include <functional>
#include <string>
#include <vector>

#include "h2/cnormal.hpp"

namespace h2 {

inline constexpr double kTrueKernelTol = 1e-9;
inline constexpr double kFalseKernelTol = 1e-7;
/// Truncation residuals below this are rounding noise and never count as an increase.
inline constexpr double kMatrixNoiseFloor = 1e-10;

struct VerifyOptions {
  int grid_n = 12;
  std::vector<Eigen::Index> truncations{32, 64, 128};
};

using PredicateFn = std::function<bool(const CaseParams&)>;

struct VerificationReport {
  CaseId case_id;
  bool verdict = false;
  double violation = 0.0;
  double kernel_residual = 0.0;
  int grid_evaluated = 0;
  int grid_excluded = 0;
  std::vector<MatrixResidual> matrix_residuals;
  bool consistent = false;
  double timing_ms = 0.0;
  std::vector<std::string> warnings;

  // Parameter echo.
  std::string map;
  std::string conj;
  bool weighted = false;
  cplx beta{1.0};
  int grid_n = 0;

  double matrix_residual_max_n() const { return matrix_residuals.empty() ? 0.0 : matrix_residuals.back().residual; }

  std::string to_json(int indent = 2) const;
  std::string to_csv_row(std::size_t sample) const;
};

/// (verdict => kernel < 1e-9) and (!verdict => kernel > 1e-7) and (verdict => matrix residuals non-increasing).
bool consistency_flag(bool verdict, double kernel, const std::vector<MatrixResidual>& matrix);

/**
 * Predicate verdict plus both oracles. `override_predicate` replaces the
 * theorem predicate (used for mutation testing of the consistency gate).
 * Throws IllConditionedGridError from the kernel oracle.
 */
VerificationReport verify(const CaseParams& params, const VerifyOptions& options = {},
                          const PredicateFn& override_predicate = nullptr);

}  // namespace h2
