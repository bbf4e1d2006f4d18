#include "h2/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <thread>

#include <json.hpp>

#include "h2/families.hpp"

namespace h2 {
namespace {

constexpr double kTrueTol = 1e-12;
constexpr double kMinDeterminant = 1e-3;

bool is_weighted(CaseId id) { return id == CaseId::WeightedJmu || id == CaseId::WeightedJW; }
bool is_jmu(CaseId id) { return id == CaseId::CompJmu || id == CaseId::WeightedJmu; }

}  // namespace

std::optional<SweepFamily> parse_sweep_family(std::string_view text) {
  if (text == "random") return SweepFamily::Random;
  if (text == "hermitian") return SweepFamily::Hermitian;
  if (text == "unitary") return SweepFamily::Unitary;
  return std::nullopt;
}

std::string to_string(SweepFamily f) {
  switch (f) {
    case SweepFamily::Random: return "random";
    case SweepFamily::Hermitian: return "hermitian";
    case SweepFamily::Unitary: return "unitary";
  }
  return "?";
}

SweepSampler::SweepSampler(CaseId case_id, SweepFamily family, std::uint64_t seed)
    : case_id_(case_id), family_(family), rng_(seed) {}

double SweepSampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

cplx SweepSampler::unit_square() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

cplx SweepSampler::unimodular() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

cplx SweepSampler::in_disk(double rmax) {
  for (;;) {
    const cplx z = rmax * unit_square();
    if (std::abs(z) <= rmax) return z;
  }
}

cplx SweepSampler::jw_parameter() { return std::polar(uniform(0.05, 0.8), uniform(0.0, 2.0 * std::numbers::pi)); }

Lft SweepSampler::random_self_map() {
  for (;;) {
    const cplx a = unit_square(), b = unit_square(), c = unit_square(), d = unit_square();
    if (std::abs(a * d - b * c) < kMinDeterminant) continue;
    const Lft m(a, b, c, d);
    if (lft_is_self_map(m)) return m;
  }
}

Lft SweepSampler::with_random_scale(const Lft& m) {
  return m.scaled(std::polar(uniform(0.5, 2.0), uniform(0.0, 2.0 * std::numbers::pi)));
}

ConjugationSpec SweepSampler::conj_for(cplx parameter) const {
  return is_jmu(case_id_) ? ConjugationSpec::jmu(parameter) : ConjugationSpec::jwp(parameter);
}

SweepSample SweepSampler::finish(Lft map, cplx param, cplx beta, bool constructed_true) {
  const cplx beta_alt = std::polar(uniform(0.5, 2.0), uniform(0.0, 2.0 * std::numbers::pi));
  return {CaseParams{with_random_scale(map), conj_for(param), is_weighted(case_id_), beta}, constructed_true, beta_alt};
}

SweepSample SweepSampler::random_sample(bool want_true) {
  const cplx beta = std::polar(uniform(0.5, 2.0), uniform(0.0, 2.0 * std::numbers::pi));
  switch (case_id_) {
    case CaseId::CompJmu:
      if (want_true) {
        cplx alpha = in_disk(1.0);
        while (std::abs(alpha) < 0.05) alpha = in_disk(1.0);
        return finish(Lft::scaling(alpha), unimodular(), beta, true);
      }
      return finish(random_self_map(), unimodular(), beta, false);
    case CaseId::CompJW:
      if (want_true) return finish(Lft::scaling(unimodular()), jw_parameter(), beta, true);
      if (uniform(0.0, 1.0) < 0.3) {
        return finish(Lft::scaling(std::polar(uniform(0.05, 0.999), uniform(0.0, 6.3))), jw_parameter(), beta, false);
      }
      return finish(random_self_map(), jw_parameter(), beta, false);
    case CaseId::WeightedJmu:
      if (want_true) {
        if (uniform(0.0, 1.0) < 0.3) return unitary_sample();
        // |b| = |c| makes |conj(c)d - conj(a)b| = |conj(a)c - conj(b)d|, so a matching mu exists.
        for (;;) {
          const cplx a = unit_square(), b = unit_square(), d = unit_square();
          const cplx c = std::polar(std::abs(b), uniform(0.0, 2.0 * std::numbers::pi));
          if (std::abs(a * d - b * c) < kMinDeterminant) continue;
          const Lft m(a, b, c, d);
          if (!lft_is_self_map(m)) continue;
          const cplx x = std::conj(c) * d - std::conj(a) * b;
          const cplx y = std::conj(a) * c - std::conj(b) * d;
          cplx mu = std::abs(x) < 1e-8 ? unimodular() : std::conj(y / x);
          mu /= std::abs(mu);
          return finish(m, mu, beta, true);
        }
      }
      return finish(random_self_map(), unimodular(), beta, false);
    case CaseId::WeightedJW:
      if (want_true) {
        const double pick = uniform(0.0, 1.0);
        if (pick < 0.3) return unitary_sample();
        if (pick < 0.5) return finish(Lft::scaling(unimodular()), jw_parameter(), beta, true);
        return hermitian_sample(true);
      }
      return finish(random_self_map(), jw_parameter(), beta, false);
  }
  throw DomainError("unknown case");
}

SweepSample SweepSampler::hermitian_sample(bool want_true) {
  for (;;) {
    const cplx a0 = in_disk(0.9);
    const double a1 = uniform(-1.0, 1.0);
    const double a2 = (uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) * uniform(0.5, 2.0);
    const HermitianWco h = hermitian_wco(a0, a1, a2);
    if (!h.self_map || std::abs(h.map.determinant()) < kMinDeterminant) continue;
    switch (case_id_) {
      case CaseId::WeightedJW: {
        const std::optional<cplx> p = hermitian_jw_solution(a0, a1, uniform(0.0, 2.0 * std::numbers::pi));
        if (!p || std::abs(*p) < 0.05 || std::abs(*p) > 0.9) continue;
        return finish(h.map, *p, h.beta, true);
      }
      case CaseId::WeightedJmu:
        if (want_true && std::abs(a0) > 1e-3) return finish(h.map, a0 / std::conj(a0), h.beta, true);
        return finish(h.map, unimodular(), h.beta, false);
      case CaseId::CompJmu:
        return finish(h.map, unimodular(), h.beta, false);
      case CaseId::CompJW:
        return finish(h.map, jw_parameter(), h.beta, false);
    }
  }
}

SweepSample SweepSampler::unitary_sample() {
  cplx q = in_disk(0.9);
  while (std::abs(q) < 0.05) q = in_disk(0.9);
  const Lft m = unitary_family_map(q, unimodular());
  const cplx beta = unitary_family_beta(q, unimodular());
  const cplx param = is_jmu(case_id_) ? unimodular() : jw_parameter();
  return finish(m, param, beta, is_weighted(case_id_));
}

SweepSample SweepSampler::next() {
  for (;;) {
    const bool want_true = uniform(0.0, 1.0) < 0.35;
    SweepSample s = [&] {
      switch (family_) {
        case SweepFamily::Hermitian: return hermitian_sample(want_true);
        case SweepFamily::Unitary: return unitary_sample();
        case SweepFamily::Random: break;
      }
      return random_sample(want_true);
    }();
    // Margin rule: keep only samples that are clearly on one side of the predicate.
    const double v = case_violation(s.params);
    if (v <= kTrueTol) {
      s.constructed_true = true;
      return s;
    }
    if (v >= kSampleMargin) {
      s.constructed_true = false;
      return s;
    }
  }
}

std::size_t SweepResult::agreed() const {
  std::size_t n = 0;
  for (const SweepRow& r : rows) n += r.agree ? 1 : 0;
  return n;
}

double SweepResult::agreement_rate() const {
  return rows.empty() ? 0.0 : static_cast<double>(agreed()) / static_cast<double>(rows.size());
}

SweepResult run_sweep(const SweepConfig& config, const PredicateFn& override_predicate) {
  SweepSampler sampler(config.case_id, config.family, config.seed);
  std::vector<SweepSample> samples;
  samples.reserve(config.samples);
  for (std::size_t i = 0; i < config.samples; ++i) samples.push_back(sampler.next());

  SweepResult result{config.case_id, std::vector<SweepRow>(samples.size())};
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < samples.size(); i = cursor++) {
      const SweepSample& s = samples[i];
      SweepRow& row = result.rows[i];
      row.index = i;
      row.constructed_true = s.constructed_true;
      try {
        row.report = verify(s.params, config.verify, override_predicate);
        if (s.params.weighted) {
          CaseParams alt = s.params;
          alt.beta = s.beta_alt;
          row.beta_delta = std::abs(kernel_residual(alt, config.verify.grid_n) - row.report.kernel_residual);
        }
        row.agree = row.report.consistent && row.beta_delta <= kBetaIndependenceTol;
      } catch (const Error& e) {
        row.report.case_id = s.params.id();
        row.error = e.what();
        row.agree = false;
      }
    }
  };
  unsigned n_threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, std::max<std::size_t>(samples.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  return result;
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  os << "sample,case,verdict,kernel_residual,matrix_residual_max_n,consistent\n";
  for (const SweepRow& r : result.rows) {
    if (!r.error.empty()) {
      os << r.index << ',' << to_string(result.case_id) << ",error,,,false\n";
      continue;
    }
    os << r.report.to_csv_row(r.index) << '\n';
  }
  char rate[32];
  std::snprintf(rate, sizeof rate, "%.6f", result.agreement_rate());
  os << "summary," << to_string(result.case_id) << ',' << result.agreed() << '/' << result.rows.size() << ",,,"
     << rate << '\n';
}

void write_sweep_json(std::ostream& os, const SweepResult& result) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SweepRow& r : result.rows) {
    nlohmann::ordered_json j;
    j["sample"] = r.index;
    j["constructed_true"] = r.constructed_true;
    if (!r.error.empty()) {
      j["error"] = r.error;
    } else {
      nlohmann::ordered_json rep = nlohmann::ordered_json::parse(r.report.to_json(-1));
      rep.erase("timing_ms");
      j["report"] = rep;
      j["beta_delta"] = r.beta_delta;
    }
    j["agree"] = r.agree;
    rows.push_back(j);
  }
  nlohmann::ordered_json out;
  out["case"] = to_string(result.case_id);
  out["samples"] = result.rows.size();
  out["agreed"] = result.agreed();
  out["agreement_rate"] = result.agreement_rate();
  out["rows"] = rows;
  os << out.dump(2) << '\n';
}

}  // namespace h2
