#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include <Eigen/Core>

#include "h2/errors.hpp"
#include "h2/moebius.hpp"

namespace h2 {

/// Taylor coefficients (a_0, ..., a_{N-1}) of an H^2 function.
template <typename Scalar>
using HardyVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using HardyVectorXcd = HardyVector<std::complex<double>>;

/// K_w(z) = 1 / (1 - conj(w) z).
template <typename Real>
std::complex<Real> kernel_eval(std::complex<Real> w, std::complex<Real> z) {
  const std::complex<Real> den = Real(1) - std::conj(w) * z;
  if (std::abs(den) < Real(1e-14)) throw PoleError("reproducing kernel evaluated at its singularity");
  return Real(1) / den;
}

/// First N Taylor coefficients of K_w, i.e. conj(w)^n.
template <typename Real>
HardyVector<std::complex<Real>> kernel_series(std::complex<Real> w, Eigen::Index n) {
  HardyVector<std::complex<Real>> out(n);
  std::complex<Real> term(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    out(k) = term;
    term *= std::conj(w);
  }
  return out;
}

/// Horner evaluation of a truncated series.
template <typename Scalar>
Scalar series_eval(const HardyVector<Scalar>& f, Scalar z) {
  Scalar acc(0);
  for (Eigen::Index k = f.size(); k-- > 0;) acc = acc * z + f(k);
  return acc;
}

/**
 * Taylor coefficients of (a z + b) / (c z + d) about 0:
 * p_0 = b/d, p_1 = (a - c p_0)/d, p_n = -(c/d) p_{n-1} for n >= 2.
 * Rejects maps whose pole lies in the closed unit disk (including d = 0).
 */
template <typename Real>
HardyVector<std::complex<Real>> lft_power_series(const LinearFractionalMap<Real>& m, Eigen::Index n) {
  using Scalar = std::complex<Real>;
  if (std::abs(m.d()) <= LinearFractionalMap<Real>::kPoleTol * m.scale()) {
    throw NotExpandableError("power series requested for a map with a pole at 0");
  }
  if (m.has_pole() && std::abs(m.pole()) <= Real(1)) {
    throw NotExpandableError("power series requested for a map with a pole in the closed disk");
  }
  HardyVector<Scalar> p = HardyVector<Scalar>::Zero(n);
  if (n == 0) return p;
  const Scalar ratio = -m.c() / m.d();
  p(0) = m.b() / m.d();
  if (n > 1) p(1) = (m.a() - m.c() * p(0)) / m.d();
  for (Eigen::Index k = 2; k < n; ++k) p(k) = ratio * p(k - 1);
  return p;
}

/// Cauchy product truncated to the first n coefficients.
template <typename Scalar>
HardyVector<Scalar> series_multiply(const HardyVector<Scalar>& f, const HardyVector<Scalar>& g, Eigen::Index n) {
  HardyVector<Scalar> out = HardyVector<Scalar>::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index lo = std::max<Eigen::Index>(0, k - (g.size() - 1));
    const Eigen::Index hi = std::min<Eigen::Index>(k, f.size() - 1);
    Scalar acc(0);
    for (Eigen::Index i = lo; i <= hi; ++i) acc += f(i) * g(k - i);
    out(k) = acc;
  }
  return out;
}

/// <f, g> = sum a_n conj(b_n); the shorter vector is zero-padded.
template <typename Scalar>
Scalar inner_product(const HardyVector<Scalar>& f, const HardyVector<Scalar>& g) {
  const Eigen::Index n = std::min(f.size(), g.size());
  return g.head(n).dot(f.head(n));
}

template <typename Real>
struct KernelTerm {
  std::complex<Real> weight;
  std::complex<Real> point;
};

/// Finite combination sum_i c_i K_{w_i} with every w_i strictly inside the disk.
template <typename Real>
class KernelCombo {
 public:
  using Scalar = std::complex<Real>;

  KernelCombo() = default;
  KernelCombo(Scalar weight, Scalar point) { add(weight, point); }

  void add(Scalar weight, Scalar point) {
    if (!(std::abs(point) < Real(1) - Real(1e-12))) {
      throw DomainError("kernel point must lie strictly inside the unit disk");
    }
    terms_.push_back({weight, point});
  }

  const std::vector<KernelTerm<Real>>& terms() const { return terms_; }

  Scalar operator()(Scalar z) const {
    Scalar acc(0);
    for (const auto& t : terms_) acc += t.weight * kernel_eval(t.point, z);
    return acc;
  }

  HardyVector<Scalar> to_series(Eigen::Index n) const {
    HardyVector<Scalar> out = HardyVector<Scalar>::Zero(n);
    for (const auto& t : terms_) out += t.weight * kernel_series(t.point, n);
    return out;
  }

 private:
  std::vector<KernelTerm<Real>> terms_;
};

}  // namespace h2
