#pragma once

#include <string>
#include <vector>

#include "h2/conjugations.hpp"
#include "h2/hardy.hpp"
#include "h2/moebius.hpp"
#include "h2/operators.hpp"

namespace h2 {

enum class CaseId { CompJmu, CompJW, WeightedJmu, WeightedJW };

std::string to_string(CaseId id);

/// Operator T = C_phi, or W_{psi,phi} with psi = beta K_{sigma(0)} = beta d/(cz+d).
struct CaseParams {
  Lft map;
  ConjugationSpec conj;
  bool weighted = false;
  cplx beta{1.0};

  CaseId id() const;
};

/// Values of the two sides of C T^* T C = T T^* applied to K_w, at z.
struct Sides {
  cplx lhs;
  cplx rhs;
};

/**
 * lhs = C_phi C_phi^* J_mu K_w(z) = K_{phi(mu conj(w))}(phi(z)),
 * rhs = J_mu C_phi^* C_phi K_w(z) in three-term form (valid for conj(a) w != conj(c)).
 * Throws ExcludedPointError near the singular set or a vanishing denominator.
 */
Sides eval_sides_comp_jmu(const Lft& m, cplx mu, cplx w, cplx z);

/// Same identity for JW_p, with eta = (conj(p) - conj(w) lambda)/(1 - conj(w p)).
Sides eval_sides_comp_jw(const Lft& m, cplx p, cplx w, cplx z);

/// lhs = J_mu W W^* K_w(z), rhs = W^* W J_mu K_w(z), both as single rational expressions.
Sides eval_sides_weighted_jmu(const Lft& m, cplx beta, cplx mu, cplx w, cplx z);

/// Denominators (X1 w + Y1) z + ... of both sides in the weighted JW case.
struct QuadrupleSet {
  cplx A1, B1, C1, D1;
  cplx A2, B2, C2, D2;

  /// max(|A1-A2|, |B1-B2|, |C1-C2|, |D1-D2|).
  double max_mismatch() const;
};

QuadrupleSet weighted_jw_quadruples(const Lft& m, cplx p);

/// |beta|^2 |d|^2 sqrt(1-|p|^2) over each quadruple denominator.
Sides eval_sides_weighted_jw(const Lft& m, cplx beta, cplx p, cplx w, cplx z);

/// Case dispatch over eval_sides_*.
Sides eval_sides(const CaseParams& params, cplx w, cplx z);

/// First n coefficients of psi = beta K_{sigma(0)}, i.e. beta (-c/d)^k.
HardyVectorXcd weight_series(const Lft& m, cplx beta, Eigen::Index n);

/// grid_n points for w and grid_n points for z on rings of radius 0.3, 0.6, 0.9.
struct KernelGrid {
  std::vector<cplx> w;
  std::vector<cplx> z;
};

KernelGrid kernel_grid(int grid_n);

struct KernelResidual {
  double value = 0.0;
  int evaluated = 0;
  int excluded = 0;
};

/**
 * max |lhs - rhs| over the grid_n x grid_n (w, z) pairs, divided by |beta|^2
 * for weighted cases. Excluded pairs are skipped; more than 20% excluded
 * raises IllConditionedGridError.
 */
KernelResidual kernel_residual_detail(const CaseParams& params, int grid_n);
double kernel_residual(const CaseParams& params, int grid_n);

/// T at truncation n: composition_matrix or weighted_composition_matrix.
DenseComplexMatrix operator_matrix(const CaseParams& params, Eigen::Index n);

struct MatrixResidual {
  Eigen::Index n;
  Eigen::Index keep;
  double residual;
};

/// resolvable_block(n, spread of phi times spread of the conjugation).
Eigen::Index resolvable_keep(const CaseParams& params, Eigen::Index n);

/**
 * cnormal_residual_matrix on the leading keep x keep block (default: the
 * resolvable block at n), divided by |beta|^2 for weighted cases.
 */
MatrixResidual matrix_residual(const CaseParams& params, Eigen::Index n, Eigen::Index keep = 0);

// Predicates. Each normalizes the map to max |coefficient| = 1 and applies an
// absolute tolerance to the normalized conditions. The *_violation functions
// return the largest normalized condition residual.

inline constexpr double kCompTol = 1e-12;
inline constexpr double kWeightedTol = 1e-10;

double comp_jmu_violation(const Lft& m);
bool predicate_comp_jmu(const Lft& m);

double comp_jw_violation(const Lft& m);
bool predicate_comp_jw(const Lft& m, cplx p);

double weighted_jmu_violation(const Lft& m, cplx mu);
bool predicate_weighted_jmu(const Lft& m, cplx mu);

struct JwConditions {
  double first;   // (|b|^2-|c|^2) p = (-conj(a)c + conj(b)d - a conj(b) + c conj(d)) |p|^2
  double second;  // (|a|^2-|d|^2)|p|^2 = (conj(a)c - conj(b)d) conj(p) - (conj(a)b - conj(c)d) p
};

JwConditions weighted_jw_conditions(const Lft& m, cplx p);
double weighted_jw_violation(const Lft& m, cplx p);
bool predicate_weighted_jw(const Lft& m, cplx p);

/// All four quadruple equalities within kWeightedTol on the normalized map.
bool predicate_weighted_jw_quadruples(const Lft& m, cplx p);

/// Violation of the predicate selected by params.
double case_violation(const CaseParams& params);
bool predicate(const CaseParams& params);

}  // namespace h2
