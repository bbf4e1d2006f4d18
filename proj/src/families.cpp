#include "h2/families.hpp"

#include <cmath>

namespace h2 {
namespace {

using std::abs;
using std::conj;
using std::norm;

constexpr double kRealTol = 1e-14;

}  // namespace

Lft unitary_family_map(cplx q, cplx gamma1) { return Lft(-gamma1, gamma1 * q, -conj(q), 1.0); }

cplx unitary_family_beta(cplx q, cplx gamma2) { return gamma2 * std::sqrt(1.0 - norm(q)); }

bool predicate_unitary_wco(const Lft& m, const UnitaryWeight& psi) {
  if (!(abs(psi.q) < 1.0)) throw DomainError("weight point q must lie in the open disk");
  if (abs(abs(psi.gamma) - 1.0) > 1e-12) return false;
  const Lft sigma = cowen_triple(m).sigma;
  if (!lft_compose(sigma, m).projectively_equal(Lft::identity())) return false;
  if (!lft_is_self_map(m) || !lft_is_self_map(sigma)) return false;
  try {
    return abs(m(psi.q)) <= 1e-10;
  } catch (const PoleError&) {
    return false;
  }
}

HermitianWco hermitian_wco(cplx a0, cplx a1, cplx a2) {
  if (abs(a1.imag()) > kRealTol || abs(a2.imag()) > kRealTol) {
    throw DomainError("Hermitian family needs real a1 and a2");
  }
  if (!(abs(a0) < 1.0)) throw DomainError("Hermitian family needs |a0| < 1");
  const Lft map(a1.real() - norm(a0), a0, -conj(a0), 1.0);
  return {map, cplx(a2.real()), lft_is_self_map(map)};
}

bool predicate_hermitian_jmu(cplx a0, double a1, cplx mu) {
  return abs((a0 - conj(a0) * mu) * (1.0 + a1 - norm(a0))) <= 1e-12;
}

bool predicate_hermitian_jmu_literal(cplx a0, double a1, cplx mu) {
  return abs((a0 - conj(a0) * mu) * (1.0 + a1 + norm(a0))) <= 1e-12;
}

bool predicate_hermitian_jw(cplx a0, double a1, cplx p) {
  const double a = a1 - norm(a0);
  return abs((a * a - 1.0) * norm(p) + (a + 1.0) * 2.0 * std::real(a0 * p)) <= 1e-10;
}

std::optional<cplx> hermitian_jw_solution(cplx a0, double a1, double theta) {
  const double a = a1 - norm(a0);
  if (abs(1.0 - a) < 1e-12) return std::nullopt;
  const cplx e = std::polar(1.0, theta);
  const double r = 2.0 * std::real(a0 * e) / (1.0 - a);
  if (!(r > 0.0 && r < 1.0)) return std::nullopt;
  return r * e;
}

bool predicate_normal_bdyfix(const Lft& m, cplx param, NormalBranch which) {
  const Lft n = m.normalized();
  if (abs(abs(n.b()) - abs(n.c())) > kWeightedTol) {
    throw HypothesisViolationError("normal weighted composition operator needs |b| = |c|");
  }
  if (!lft_fixed_points(n).has_boundary()) {
    throw HypothesisViolationError("symbol has no boundary fixed point");
  }
  const cplx a = n.a(), b = n.b(), c = n.c(), d = n.d();
  if (which == NormalBranch::Jmu) {
    return abs((conj(c) * d - conj(a) * b) * conj(param) - (conj(a) * c - conj(b) * d)) <= kWeightedTol;
  }
  const double first = abs(a * conj(b) - c * conj(d) - (conj(b) * d - conj(a) * c));
  return first <= kWeightedTol && normal_bdyfix_real_part_residual(m, param) <= kWeightedTol;
}

double normal_bdyfix_real_part_residual(const Lft& m, cplx p) {
  const Lft n = m.normalized();
  const cplx a = n.a(), b = n.b(), c = n.c(), d = n.d();
  return abs((norm(a) - norm(d)) * norm(p) - 2.0 * std::real((a * conj(c) - b * conj(d)) * p));
}

double normal_bdyfix_real_part_residual_literal(const Lft& m, cplx p) {
  const Lft n = m.normalized();
  const cplx a = n.a(), c = n.c(), d = n.d();
  return abs((norm(a) - norm(d)) * norm(p) - 2.0 * std::real((a * conj(c) - d * conj(d)) * p));
}

}  // namespace h2
