#include "h2/cnormal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace h2 {
namespace {

using std::abs;
using std::conj;
using std::norm;

constexpr double kSingularTol = 1e-6;
constexpr double kDenominatorTol = 1e-12;
constexpr double kMaxExcludedFraction = 0.2;

cplx guarded_div(cplx num, cplx den, double ref) {
  if (abs(den) <= kDenominatorTol * ref) throw ExcludedPointError("vanishing denominator at grid point");
  return num / den;
}

/// K_v(x) = 1 / (1 - conj(v) x), guarded.
cplx kernel_at(cplx v, cplx x) { return guarded_div(1.0, 1.0 - conj(v) * x, 1.0); }

void require_off_singular_set(const Lft& n, cplx w) {
  if (abs(conj(n.a()) * w - conj(n.c())) < kSingularTol) {
    throw ExcludedPointError("grid point on the set conj(a) w = conj(c)");
  }
}

}  // namespace

std::string to_string(CaseId id) {
  switch (id) {
    case CaseId::CompJmu: return "CompJmu";
    case CaseId::CompJW: return "CompJW";
    case CaseId::WeightedJmu: return "WeightedJmu";
    case CaseId::WeightedJW: return "WeightedJW";
  }
  return "?";
}

CaseId CaseParams::id() const {
  if (weighted) return conj.is_jmu() ? CaseId::WeightedJmu : CaseId::WeightedJW;
  return conj.is_jmu() ? CaseId::CompJmu : CaseId::CompJW;
}

Sides eval_sides_comp_jmu(const Lft& m, cplx mu, cplx w, cplx z) {
  const Lft n = m.normalized();
  require_off_singular_set(n, w);
  const cplx a = n.a(), b = n.b(), c = n.c(), d = n.d();
  const cplx mub = conj(mu);

  const cplx lhs = kernel_at(n(mu * conj(w)), n(z));

  const cplx t1 = guarded_div(conj(c), conj(c) - conj(a) * w, 1.0);
  const cplx t2 = guarded_div(conj(d), conj(d) - conj(b) * w, 1.0);
  const cplx ratio = guarded_div((norm(a) - norm(b)) * w + b * conj(d) - a * conj(c),
                                 (conj(a) * c - conj(b) * d) * w + norm(d) - norm(c), 1.0);
  const cplx rhs = t1 * guarded_div(1.0, 1.0 - (b / d) * mub * z, 1.0) +
                   (t2 - t1) * guarded_div(1.0, 1.0 - mub * z * ratio, 1.0);
  return {lhs, rhs};
}

Sides eval_sides_comp_jw(const Lft& m, cplx p, cplx w, cplx z) {
  const Lft n = m.normalized();
  require_off_singular_set(n, w);
  const cplx b = n.b(), c = n.c(), d = n.d();
  const cplx lam = conj(p) / p;
  const double s = std::sqrt(1.0 - norm(p));

  const cplx eta = guarded_div(conj(p) - conj(w) * lam, 1.0 - conj(w) * conj(p), 1.0);
  const cplx lhs = s / (1.0 - p * w) * kernel_at(n(eta), n(z));

  const CowenTriple<double> ct = cowen_triple(n);
  const cplx g = ct.g(w);
  const cplx sig = ct.sigma(w);
  const cplx t = conj(lam) * (conj(p) - z) / (1.0 - p * z);
  const cplx term1 = -conj(c) * guarded_div(g, sig, 1.0) * guarded_div(1.0, 1.0 - (b / d) * t, 1.0);
  const cplx hbar = conj(ct.h(1.0 / conj(sig)));
  const cplx term2 = hbar * g * kernel_at(conj(n(sig)), t);
  const cplx rhs = s / (1.0 - p * z) * (term1 + term2);
  return {lhs, rhs};
}

Sides eval_sides_weighted_jmu(const Lft& m, cplx beta, cplx mu, cplx w, cplx z) {
  const Lft n = m.normalized();
  const cplx a = n.a(), b = n.b(), c = n.c(), d = n.d();
  const cplx mub = conj(mu);
  const cplx num = norm(beta) * norm(d);
  const double ref = norm(beta);

  const cplx den_l = ((norm(c) - norm(a)) * mub * w + (conj(c) * d - conj(a) * b) * mub) * z +
                     (c * conj(d) - a * conj(b)) * w + norm(d) - norm(b);
  const cplx den_r = ((conj(a) * c - conj(b) * d) - (norm(a) - norm(b)) * mub * w) * z +
                     (a * conj(c) - b * conj(d)) * mub * w + norm(d) - norm(c);
  return {guarded_div(num, den_l, ref), guarded_div(num, den_r, ref)};
}

double QuadrupleSet::max_mismatch() const {
  return std::max({abs(A1 - A2), abs(B1 - B2), abs(C1 - C2), abs(D1 - D2)});
}

QuadrupleSet weighted_jw_quadruples(const Lft& m, cplx p) {
  const cplx a = m.a(), b = m.b(), c = m.c(), d = m.d();
  const cplx lb = p / conj(p);
  QuadrupleSet q;
  q.A1 = (a * conj(b) - c * conj(d)) * p + (norm(a) - norm(c)) * lb;
  q.B1 = (norm(b) - norm(d)) * p + (conj(a) * b - d * conj(c)) * lb;
  q.C1 = c * conj(d) - a * conj(b) + (norm(c) - norm(a)) * p;
  q.D1 = norm(d) - norm(b) + (d * conj(c) - conj(a) * b) * p;
  q.A2 = (-conj(a) * c + conj(b) * d) * p + (norm(a) - norm(b)) * lb;
  q.B2 = conj(a) * c - conj(b) * d - p * (norm(a) - norm(b));
  q.C2 = -(norm(d) - norm(c)) * p + (b * conj(d) - a * conj(c)) * lb;
  q.D2 = norm(d) - norm(c) - p * (b * conj(d) - a * conj(c));
  return q;
}

Sides eval_sides_weighted_jw(const Lft& m, cplx beta, cplx p, cplx w, cplx z) {
  const Lft n = m.normalized();
  const QuadrupleSet q = weighted_jw_quadruples(n, p);
  const cplx num = norm(beta) * norm(n.d()) * std::sqrt(1.0 - norm(p));
  const double ref = norm(beta);
  return {guarded_div(num, (q.A1 * w + q.B1) * z + q.C1 * w + q.D1, ref),
          guarded_div(num, (q.A2 * w + q.B2) * z + q.C2 * w + q.D2, ref)};
}

Sides eval_sides(const CaseParams& params, cplx w, cplx z) {
  const cplx x = params.conj.parameter();
  switch (params.id()) {
    case CaseId::CompJmu: return eval_sides_comp_jmu(params.map, x, w, z);
    case CaseId::CompJW: return eval_sides_comp_jw(params.map, x, w, z);
    case CaseId::WeightedJmu: return eval_sides_weighted_jmu(params.map, params.beta, x, w, z);
    case CaseId::WeightedJW: return eval_sides_weighted_jw(params.map, params.beta, x, w, z);
  }
  throw DomainError("unknown case");
}

HardyVectorXcd weight_series(const Lft& m, cplx beta, Eigen::Index n) {
  if (abs(m.c()) >= abs(m.d())) throw NotExpandableError("weight has a pole in the closed disk");
  HardyVectorXcd out(n);
  const cplx ratio = -m.c() / m.d();
  cplx term = beta;
  for (Eigen::Index k = 0; k < n; ++k) {
    out(k) = term;
    term *= ratio;
  }
  return out;
}

KernelGrid kernel_grid(int grid_n) {
  if (grid_n < 8) throw DomainError("kernel grid needs grid_n >= 8");
  static constexpr double radii[3] = {0.3, 0.6, 0.9};
  KernelGrid g;
  g.w.reserve(grid_n);
  g.z.reserve(grid_n);
  for (int k = 0; k < grid_n; ++k) {
    const int ring = k % 3;
    const double theta = 2.0 * std::numbers::pi * (k + 0.5 * ring) / grid_n;
    g.w.push_back(std::polar(radii[ring], theta));
    g.z.push_back(std::polar(radii[(k + 1) % 3], theta + 0.37));
  }
  return g;
}

KernelResidual kernel_residual_detail(const CaseParams& params, int grid_n) {
  const KernelGrid g = kernel_grid(grid_n);
  KernelResidual out;
  for (const cplx w : g.w) {
    for (const cplx z : g.z) {
      try {
        const Sides s = eval_sides(params, w, z);
        out.value = std::max(out.value, abs(s.lhs - s.rhs));
        ++out.evaluated;
      } catch (const ExcludedPointError&) {
        ++out.excluded;
      } catch (const PoleError&) {
        ++out.excluded;
      }
    }
  }
  const int total = out.evaluated + out.excluded;
  if (out.excluded > kMaxExcludedFraction * total) {
    throw IllConditionedGridError("more than 20% of kernel grid points excluded (" + std::to_string(out.excluded) +
                                  " of " + std::to_string(total) + ")");
  }
  if (params.weighted) out.value /= norm(params.beta);
  return out;
}

double kernel_residual(const CaseParams& params, int grid_n) { return kernel_residual_detail(params, grid_n).value; }

DenseComplexMatrix operator_matrix(const CaseParams& params, Eigen::Index n) {
  if (!params.weighted) return composition_matrix(params.map, n);
  return weighted_composition_matrix(weight_series(params.map, params.beta, n), params.map, n);
}

Eigen::Index resolvable_keep(const CaseParams& params, Eigen::Index n) {
  return resolvable_block(n, boundary_spread(params.map) * params.conj.spread());
}

MatrixResidual matrix_residual(const CaseParams& params, Eigen::Index n, Eigen::Index keep) {
  const DenseComplexMatrix t = operator_matrix(params, n);
  const AntilinearOperator c = conjugation_operator(params.conj, n);
  if (keep == 0) keep = resolvable_keep(params, n);
  double r = cnormal_residual_matrix(t, c, keep);
  if (params.weighted) r /= norm(params.beta);
  return {n, keep, r};
}

double comp_jmu_violation(const Lft& m) {
  const Lft n = m.normalized();
  return std::max(abs(n.b()), abs(n.c()));
}

bool predicate_comp_jmu(const Lft& m) { return comp_jmu_violation(m) <= kCompTol; }

double comp_jw_violation(const Lft& m) {
  const Lft n = m.normalized();
  const double ad = abs(n.d()) > 0.0 ? abs(abs(n.a()) / abs(n.d()) - 1.0) : 1.0;
  return std::max({abs(n.b()), abs(n.c()), ad});
}

bool predicate_comp_jw(const Lft& m, cplx p) {
  if (!(abs(p) > 0.0 && abs(p) < 1.0)) throw DomainError("JW parameter p must satisfy 0 < |p| < 1");
  return comp_jw_violation(m) <= kCompTol;
}

double weighted_jmu_violation(const Lft& m, cplx mu) {
  const Lft n = m.normalized();
  const cplx a = n.a(), b = n.b(), c = n.c(), d = n.d();
  const double first = abs(abs(b) - abs(c));
  const double second = abs((conj(c) * d - conj(a) * b) * conj(mu) - (conj(a) * c - conj(b) * d));
  return std::max(first, second);
}

bool predicate_weighted_jmu(const Lft& m, cplx mu) { return weighted_jmu_violation(m, mu) <= kWeightedTol; }

JwConditions weighted_jw_conditions(const Lft& m, cplx p) {
  const Lft n = m.normalized();
  const cplx a = n.a(), b = n.b(), c = n.c(), d = n.d();
  const double p2 = norm(p);
  const cplx e1 = (norm(b) - norm(c)) * p - (-conj(a) * c + conj(b) * d - a * conj(b) + c * conj(d)) * p2;
  const cplx e2 = (norm(a) - norm(d)) * p2 - ((conj(a) * c - conj(b) * d) * conj(p) - (conj(a) * b - conj(c) * d) * p);
  return {abs(e1), abs(e2)};
}

double weighted_jw_violation(const Lft& m, cplx p) {
  const JwConditions e = weighted_jw_conditions(m, p);
  return std::max(e.first, e.second);
}

bool predicate_weighted_jw(const Lft& m, cplx p) { return weighted_jw_violation(m, p) <= kWeightedTol; }

bool predicate_weighted_jw_quadruples(const Lft& m, cplx p) {
  return weighted_jw_quadruples(m.normalized(), p).max_mismatch() <= kWeightedTol;
}

double case_violation(const CaseParams& params) {
  const cplx x = params.conj.parameter();
  switch (params.id()) {
    case CaseId::CompJmu: return comp_jmu_violation(params.map);
    case CaseId::CompJW: return comp_jw_violation(params.map);
    case CaseId::WeightedJmu: return weighted_jmu_violation(params.map, x);
    case CaseId::WeightedJW: return weighted_jw_violation(params.map, x);
  }
  throw DomainError("unknown case");
}

bool predicate(const CaseParams& params) {
  const cplx x = params.conj.parameter();
  switch (params.id()) {
    case CaseId::CompJmu: return predicate_comp_jmu(params.map);
    case CaseId::CompJW: return predicate_comp_jw(params.map, x);
    case CaseId::WeightedJmu: return predicate_weighted_jmu(params.map, x);
    case CaseId::WeightedJW: return predicate_weighted_jw(params.map, x);
  }
  throw DomainError("unknown case");
}

}  // namespace h2
