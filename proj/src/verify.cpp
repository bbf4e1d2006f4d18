#include "h2/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include <json.hpp>

#include "h2/families.hpp"

namespace h2 {
namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

std::vector<std::string> collect_warnings(const CaseParams& params, const KernelResidual& kr) {
  std::vector<std::string> out;
  if (kr.excluded > 0) {
    out.push_back(std::to_string(kr.excluded) + " kernel grid points excluded near singular sets");
  }
  if (!lft_is_self_map(cowen_triple(params.map).sigma)) {
    out.push_back("Cowen sigma is not a self-map of the disk");
  }
  if (params.id() == CaseId::WeightedJW) {
    const Lft n = params.map.normalized();
    bool normal_bdyfix = false;
    if (std::abs(std::abs(n.b()) - std::abs(n.c())) <= kWeightedTol) {
      normal_bdyfix = lft_fixed_points(n).has_boundary();
    }
    if (normal_bdyfix) {
      out.push_back(
          "boundary-fixed-point JW condition evaluated as (|a|^2-|d|^2)|p|^2 = 2Re((a conj(c) - b conj(d)) p); "
          "the variant with d conj(d) in place of b conj(d) is not used");
    }
  }
  return out;
}

}  // namespace

bool consistency_flag(bool verdict, double kernel, const std::vector<MatrixResidual>& matrix) {
  if (!verdict) return kernel > kFalseKernelTol;
  if (!(kernel < kTrueKernelTol)) return false;
  for (std::size_t i = 1; i < matrix.size(); ++i) {
    if (matrix[i].residual > std::max(matrix[i - 1].residual, kMatrixNoiseFloor)) return false;
  }
  return true;
}

VerificationReport verify(const CaseParams& params, const VerifyOptions& options, const PredicateFn& override_predicate) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Eigen::Index> ns = options.truncations;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  VerificationReport r;
  r.case_id = params.id();
  r.map = format_lft(params.map);
  r.conj = params.conj.to_string();
  r.weighted = params.weighted;
  r.beta = params.beta;
  r.grid_n = options.grid_n;

  r.verdict = override_predicate ? override_predicate(params) : predicate(params);
  r.violation = case_violation(params);

  const KernelResidual kr = kernel_residual_detail(params, options.grid_n);
  r.kernel_residual = kr.value;
  r.grid_evaluated = kr.evaluated;
  r.grid_excluded = kr.excluded;

  // One block for every truncation, so the residuals measure the same quantity.
  const Eigen::Index keep = ns.empty() ? 0 : resolvable_keep(params, ns.front());
  for (const Eigen::Index n : ns) r.matrix_residuals.push_back(matrix_residual(params, n, keep));

  r.consistent = consistency_flag(r.verdict, r.kernel_residual, r.matrix_residuals);
  r.warnings = collect_warnings(params, kr);
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string VerificationReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["case"] = to_string(case_id);
  j["verdict"] = verdict;
  j["violation"] = violation;
  j["kernel_residual"] = kernel_residual;
  nlohmann::ordered_json mr = nlohmann::ordered_json::array();
  for (const MatrixResidual& m : matrix_residuals) {
    mr.push_back({{"N", m.n}, {"keep", m.keep}, {"residual", m.residual}});
  }
  j["matrix_residuals"] = mr;
  j["consistent"] = consistent;
  j["params"] = {{"map", map}, {"conj", conj}, {"weighted", weighted}, {"beta", format_complex(beta)}};
  j["grid"] = {{"grid_n", grid_n},
               {"radii", {0.3, 0.6, 0.9}},
               {"evaluated", grid_evaluated},
               {"excluded", grid_excluded}};
  j["warnings"] = warnings;
  j["timing_ms"] = timing_ms;
  return j.dump(indent);
}

std::string VerificationReport::to_csv_row(std::size_t sample) const {
  return std::to_string(sample) + "," + to_string(case_id) + "," + (verdict ? "true" : "false") + "," +
         fmt(kernel_residual) + "," + fmt(matrix_residual_max_n()) + "," + (consistent ? "true" : "false");
}

}  // namespace h2
