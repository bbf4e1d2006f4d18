#pragma once

#include <ostream>

#include <Eigen/Core>

#include "h2/conjugations.hpp"
#include "h2/hardy.hpp"
#include "h2/moebius.hpp"

namespace h2 {

/// N x N truncation in the monomial basis; entry (i, j) = <T z^j, z^i>.
using DenseComplexMatrix = Eigen::MatrixXcd;

/// Column j holds the first n coefficients of phi^j.
DenseComplexMatrix composition_matrix(const Lft& m, Eigen::Index n);

/// Lower-triangular Toeplitz matrix of multiplication by an analytic symbol.
DenseComplexMatrix analytic_toeplitz_matrix(const HardyVectorXcd& symbol, Eigen::Index n);

/// T_psi C_phi.
DenseComplexMatrix weighted_composition_matrix(const HardyVectorXcd& psi, const Lft& m, Eigen::Index n);

/// T_g C_sigma T_h^* from the Cowen triple. Throws NotExpandableError when sigma
/// has a pole in the closed disk.
DenseComplexMatrix adjoint_via_cowen(const Lft& m, Eigen::Index n);

/// x -> M conj(x).
class AntilinearOperator {
 public:
  explicit AntilinearOperator(DenseComplexMatrix m) : m_(std::move(m)) {}

  const DenseComplexMatrix& matrix() const { return m_; }
  Eigen::Index size() const { return m_.rows(); }

  HardyVectorXcd apply(const HardyVectorXcd& x) const { return m_ * x.conjugate(); }

  /// Linear map C o C = M conj(M).
  DenseComplexMatrix square() const { return m_ * m_.conjugate(); }

  /// Matrix of the linear map C A C.
  DenseComplexMatrix sandwich(const DenseComplexMatrix& a) const { return m_ * a.conjugate() * m_.conjugate(); }

 private:
  DenseComplexMatrix m_;
};

/// J_mu: beta diag(conj(mu)^n). JW: beta conj(T_xi C_tau).
AntilinearOperator conjugation_operator(const ConjugationSpec& c, Eigen::Index n);

/**
 * Frobenius norm of the leading keep x keep block of C T^* T C - T T^*.
 * Requires 1 <= keep <= N/2.
 */
double cnormal_residual_matrix(const DenseComplexMatrix& t, const AntilinearOperator& c, Eigen::Index keep);

/**
 * Largest leading block whose entries are unaffected by truncation, given the
 * combined mode-spreading factor of the operator and the conjugation:
 * clamp(floor(n / (2 spread)), 1, n/2). With spread 1 this is n/2.
 */
Eigen::Index resolvable_block(Eigen::Index n, double spread);

/// One CSV line per column: re_0,im_0,re_1,im_1,... (column-major pairs).
void write_matrix_csv(std::ostream& os, const DenseComplexMatrix& m);

}  // namespace h2
