#pragma once

#include <optional>

#include "h2/cnormal.hpp"
#include "h2/moebius.hpp"

namespace h2 {

/// phi(z) = gamma1 (q - z)/(1 - conj(q) z), as (-gamma1, gamma1 q, -conj(q), 1).
Lft unitary_family_map(cplx q, cplx gamma1);

/**
 * beta such that beta K_{sigma(0)} = gamma2 K_q / ||K_q||, for the map above:
 * gamma2 sqrt(1 - |q|^2).
 */
cplx unitary_family_beta(cplx q, cplx gamma2);

/// psi = gamma K_q / ||K_q|| in parametric form.
struct UnitaryWeight {
  cplx gamma;
  cplx q;
};

/**
 * True iff phi is a disk automorphism (sigma o phi is a multiple of the
 * identity and both phi and sigma are self-maps), |gamma| = 1, and q is the
 * zero of phi (|phi(q)| <= 1e-10). Throws DomainError when |q| >= 1.
 */
bool predicate_unitary_wco(const Lft& m, const UnitaryWeight& psi);

struct HermitianWco {
  Lft map;       // (a1 - |a0|^2, a0, -conj(a0), 1)
  cplx beta;     // a2
  bool self_map;
};

/**
 * phi(z) = a0 + a1 z / (1 - conj(a0) z), psi(z) = a2 / (1 - conj(a0) z).
 * Throws DomainError when a1 or a2 is not real or |a0| >= 1.
 */
HermitianWco hermitian_wco(cplx a0, cplx a1, cplx a2);

/// |(a0 - conj(a0) mu)(1 + a1 - |a0|^2)| <= 1e-12.
bool predicate_hermitian_jmu(cplx a0, double a1, cplx mu);

/// Variant with the factor (1 + a1 + |a0|^2); disagrees on the automorphisms a1 = |a0|^2 - 1.
bool predicate_hermitian_jmu_literal(cplx a0, double a1, cplx mu);

/// |[(a1 - |a0|^2)^2 - 1]|p|^2 + (a1 - |a0|^2 + 1) 2 Re(a0 p)| <= 1e-10.
bool predicate_hermitian_jw(cplx a0, double a1, cplx p);

/// p on the ray arg(p) = theta solving the Hermitian JW condition; nullopt when none in (0, 1).
std::optional<cplx> hermitian_jw_solution(cplx a0, double a1, double theta);

enum class NormalBranch { Jmu, Jw };

/**
 * C-normality test for normal W_{psi,phi} (|b| = |c|) whose symbol has a
 * boundary fixed point. jmu: (conj(c)d - conj(a)b) conj(mu) = conj(a)c - conj(b)d.
 * jw: a conj(b) - c conj(d) = conj(b)d - conj(a)c and
 * (|a|^2 - |d|^2)|p|^2 = 2 Re((a conj(c) - b conj(d)) p).
 * Throws HypothesisViolationError without a boundary fixed point or with |b| != |c|.
 */
bool predicate_normal_bdyfix(const Lft& m, cplx param, NormalBranch which);

/// Residual of the 2 Re condition above on the normalized map.
double normal_bdyfix_real_part_residual(const Lft& m, cplx p);

/// Variant with "d conj(d)" in place of "b conj(d)".
double normal_bdyfix_real_part_residual_literal(const Lft& m, cplx p);

}  // namespace h2
