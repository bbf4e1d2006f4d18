#include "h2/operators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace h2 {

DenseComplexMatrix composition_matrix(const Lft& m, Eigen::Index n) {
  const HardyVectorXcd phi = lft_power_series(m, n);
  DenseComplexMatrix out = DenseComplexMatrix::Zero(n, n);
  HardyVectorXcd column = HardyVectorXcd::Zero(n);
  if (n > 0) column(0) = 1.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    out.col(j) = column;
    column = series_multiply(column, phi, n);
  }
  return out;
}

DenseComplexMatrix analytic_toeplitz_matrix(const HardyVectorXcd& symbol, Eigen::Index n) {
  DenseComplexMatrix out = DenseComplexMatrix::Zero(n, n);
  const Eigen::Index len = std::min<Eigen::Index>(symbol.size(), n);
  for (Eigen::Index k = 0; k < len; ++k) {
    out.diagonal(-k).setConstant(symbol(k));
  }
  return out;
}

DenseComplexMatrix weighted_composition_matrix(const HardyVectorXcd& psi, const Lft& m, Eigen::Index n) {
  return analytic_toeplitz_matrix(psi, n) * composition_matrix(m, n);
}

DenseComplexMatrix adjoint_via_cowen(const Lft& m, Eigen::Index n) {
  const CowenTriple<double> ct = cowen_triple(m);
  // g = g_num / (g_den_const + g_den_coeff z), geometric with ratio -g_den_coeff/g_den_const.
  if (std::abs(ct.g_den_coeff) >= std::abs(ct.g_den_const)) {
    throw NotExpandableError("g has a pole in the closed disk");
  }
  HardyVectorXcd gs(n);
  const cplx ratio = -ct.g_den_coeff / ct.g_den_const;
  cplx term = ct.g_num / ct.g_den_const;
  for (Eigen::Index k = 0; k < n; ++k) {
    gs(k) = term;
    term *= ratio;
  }
  HardyVectorXcd h = HardyVectorXcd::Zero(std::max<Eigen::Index>(n, 2));
  h(0) = ct.h0;
  h(1) = ct.h1;
  const DenseComplexMatrix tg = analytic_toeplitz_matrix(gs, n);
  const DenseComplexMatrix th = analytic_toeplitz_matrix(h.head(n), n);
  return tg * composition_matrix(ct.sigma, n) * th.adjoint();
}

AntilinearOperator conjugation_operator(const ConjugationSpec& c, Eigen::Index n) {
  if (c.is_jmu()) {
    const JMu& j = c.as_jmu();
    DenseComplexMatrix m = DenseComplexMatrix::Zero(n, n);
    cplx power(1.0);
    for (Eigen::Index k = 0; k < n; ++k) {
      m(k, k) = j.beta * power;
      power *= std::conj(j.mu);
    }
    return AntilinearOperator(std::move(m));
  }
  const JWp& j = c.as_jwp();
  const double s = std::sqrt(1.0 - std::norm(j.p));
  const HardyVectorXcd xi = s * kernel_series(j.p, n);
  const DenseComplexMatrix w = weighted_composition_matrix(xi, j.tau(), n);
  return AntilinearOperator(j.beta * w.conjugate());
}

double cnormal_residual_matrix(const DenseComplexMatrix& t, const AntilinearOperator& c, Eigen::Index keep) {
  const Eigen::Index n = t.rows();
  if (t.cols() != n || c.size() != n) {
    throw DomainError("operator and conjugation truncations have different sizes");
  }
  if (keep < 1 || keep > n / 2) throw DomainError("residual block must satisfy 1 <= keep <= N/2");
  const DenseComplexMatrix tstar_t = t.adjoint() * t;
  const DenseComplexMatrix t_tstar = t * t.adjoint();
  const DenseComplexMatrix lhs = c.sandwich(tstar_t);
  return (lhs.topLeftCorner(keep, keep) - t_tstar.topLeftCorner(keep, keep)).norm();
}

Eigen::Index resolvable_block(Eigen::Index n, double spread) {
  const auto raw = static_cast<Eigen::Index>(std::floor(static_cast<double>(n) / (2.0 * std::max(spread, 1.0))));
  return std::clamp<Eigen::Index>(raw, 1, std::max<Eigen::Index>(n / 2, 1));
}

void write_matrix_csv(std::ostream& os, const DenseComplexMatrix& m) {
  char buf[64];
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      std::snprintf(buf, sizeof buf, "%s%.17g,%.17g", i == 0 ? "" : ",", m(i, j).real(), m(i, j).imag());
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace h2
