#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "h2/verify.hpp"

namespace h2 {

/// Which symbols a sweep draws.
enum class SweepFamily { Random, Hermitian, Unitary };

std::optional<SweepFamily> parse_sweep_family(std::string_view text);
std::string to_string(SweepFamily f);

struct SweepConfig {
  CaseId case_id = CaseId::CompJmu;
  SweepFamily family = SweepFamily::Random;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  VerifyOptions verify;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Samples whose defining equalities hold to 1e-12 by construction are "true";
/// all others violate them by at least this margin on the normalized map.
inline constexpr double kSampleMargin = 1e-3;

struct SweepSample {
  CaseParams params;
  bool constructed_true;
  cplx beta_alt;  // second weight constant for the beta-independence check
};

/**
 * Deterministic sampler: coefficients are drawn from the complex unit square,
 * kept when the map is a nondegenerate self-map, then kept or rejected by the
 * margin rule. Roughly a third of the samples are built to satisfy the case's
 * predicate (alpha z, rotations, |b| = |c| with matching mu, Hermitian maps
 * with solved p, the unitary family).
 */
class SweepSampler {
 public:
  SweepSampler(CaseId case_id, SweepFamily family, std::uint64_t seed);

  SweepSample next();

 private:
  double uniform(double lo, double hi);
  cplx unit_square();
  cplx unimodular();
  cplx in_disk(double rmax);
  cplx jw_parameter();
  Lft random_self_map();
  Lft with_random_scale(const Lft& m);
  ConjugationSpec conj_for(cplx parameter) const;

  SweepSample random_sample(bool want_true);
  SweepSample hermitian_sample(bool want_true);
  SweepSample unitary_sample();
  SweepSample finish(Lft map, cplx param, cplx beta, bool constructed_true);

  CaseId case_id_;
  SweepFamily family_;
  std::mt19937_64 rng_;
};

struct SweepRow {
  std::size_t index;
  bool constructed_true;
  VerificationReport report;
  double beta_delta = 0.0;  // |kernel residual(beta) - kernel residual(beta_alt)|, weighted cases
  std::string error;
  bool agree = false;
};

struct SweepResult {
  CaseId case_id;
  std::vector<SweepRow> rows;

  std::size_t agreed() const;
  double agreement_rate() const;
};

inline constexpr double kBetaIndependenceTol = 1e-12;

/// Draws all samples sequentially from the seed, evaluates them in parallel, keeps index order.
SweepResult run_sweep(const SweepConfig& config, const PredicateFn& override_predicate = nullptr);

/// Header sample,case,verdict,kernel_residual,matrix_residual_max_n,consistent,
/// one row per sample, then "summary,<case>,<agreed>/<total>,,,<rate>".
void write_sweep_csv(std::ostream& os, const SweepResult& result);

void write_sweep_json(std::ostream& os, const SweepResult& result);

}  // namespace h2
