#include "h2/conjugations.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "h2/operators.hpp"

namespace h2 {
namespace {

constexpr double kUnimodularTol = 1e-14;

void require_unimodular(cplx z, const char* what) {
  if (std::abs(std::abs(z) - 1.0) > kUnimodularTol) {
    throw DomainError(std::string(what) + " must be unimodular");
  }
}

void require_punctured_disk(cplx p) {
  const double r = std::abs(p);
  if (!(r > 0.0) || !(r < 1.0)) throw DomainError("JW parameter p must satisfy 0 < |p| < 1");
}

}  // namespace

cplx JWp::xi(cplx z) const { return std::sqrt(1.0 - std::norm(p)) / (1.0 - std::conj(p) * z); }

Lft JWp::tau() const {
  const cplx lam = lambda();
  return Lft(-lam, lam * p, -std::conj(p), 1.0);
}

ConjugationSpec ConjugationSpec::jmu(cplx mu, cplx beta) {
  require_unimodular(mu, "mu");
  require_unimodular(beta, "beta");
  return ConjugationSpec(JMu{mu, beta});
}

ConjugationSpec ConjugationSpec::jwp(cplx p, cplx beta) {
  require_punctured_disk(p);
  require_unimodular(beta, "beta");
  return ConjugationSpec(JWp{p, beta});
}

cplx ConjugationSpec::beta() const {
  return visit([](const auto& c) { return c.beta; });
}

cplx ConjugationSpec::parameter() const {
  return is_jmu() ? as_jmu().mu : as_jwp().p;
}

double ConjugationSpec::spread() const {
  if (is_jmu()) return 1.0;
  const double r = std::abs(as_jwp().p);
  return (1.0 + r) / (1.0 - r);
}

std::string ConjugationSpec::to_string() const {
  return (is_jmu() ? "jmu:" : "jw:") + format_complex(parameter());
}

ConjugationSpec parse_conjugation(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("conjugation must be 'jmu:<mu>' or 'jw:<p>', got '" + std::string(text) + "'");
  }
  const std::string_view tag = text.substr(0, colon);
  const cplx value = parse_complex(text.substr(colon + 1));
  if (tag == "jmu") return ConjugationSpec::jmu(value);
  if (tag == "jw") return ConjugationSpec::jwp(value);
  throw ParseError("unknown conjugation family '" + std::string(tag) + "'");
}

cplx AuvParams::u(cplx z) const {
  if (family == Family::I) return beta;
  const cplx p = mu_or_p;
  return beta * std::sqrt(1.0 - std::norm(p)) / (1.0 - p * z);
}

cplx AuvParams::v(cplx z) const {
  if (family == Family::I) return mu_or_p * z;
  const cplx p = mu_or_p;
  return (p / std::conj(p)) * (std::conj(p) - z) / (1.0 - p * z);
}

cplx AuvParams::apply_kernel(cplx w, cplx z) const { return u(z) / (1.0 - w * v(z)); }

double auv_action_residual(const AuvParams& params, const ConjugationSpec& c) {
  double worst = 0.0;
  for (const cplx w : {cplx(0.0), cplx(0.3)}) {
    const KernelCombo<double> image = conj_apply_kernel(c, w);
    for (int k = 0; k < 10; ++k) {
      const cplx z = std::polar(0.2 + 0.07 * k, 0.9 * k + 0.1);
      worst = std::max(worst, std::abs(params.apply_kernel(w, z) - image(z)));
    }
  }
  return worst;
}

ConjugationSpec build_conjugation(const AuvParams& params) {
  require_unimodular(params.beta, "beta");
  ConjugationSpec c = [&] {
    if (params.family == AuvParams::Family::I) {
      require_unimodular(params.mu_or_p, "mu");
      return ConjugationSpec::jmu(std::conj(params.mu_or_p), params.beta);
    }
    require_punctured_disk(params.mu_or_p);
    return ConjugationSpec::jwp(params.mu_or_p, params.beta);
  }();
  if (auv_action_residual(params, c) > 1e-12) {
    throw DomainError("A_{u,v} action does not match the constructed conjugation");
  }
  return c;
}

KernelCombo<double> conj_apply_kernel(const ConjugationSpec& c, cplx w) {
  if (c.is_jmu()) {
    const JMu& j = c.as_jmu();
    return KernelCombo<double>(j.beta, j.mu * std::conj(w));
  }
  const JWp& j = c.as_jwp();
  const cplx wb = std::conj(w);
  const cplx pb = std::conj(j.p);
  const cplx weight = j.beta * std::sqrt(1.0 - std::norm(j.p)) / (1.0 - w * j.p);
  const cplx eta = (pb - wb * j.lambda()) / (1.0 - wb * pb);
  return KernelCombo<double>(weight, eta);
}

HardyVectorXcd conj_apply_series(const ConjugationSpec& c, const HardyVectorXcd& f, Eigen::Index n) {
  HardyVectorXcd x = HardyVectorXcd::Zero(n);
  const Eigen::Index len = std::min(n, f.size());
  x.head(len) = f.head(len);
  if (c.is_jmu()) {
    const JMu& j = c.as_jmu();
    cplx power(1.0);
    for (Eigen::Index k = 0; k < n; ++k) {
      x(k) = j.beta * std::conj(x(k)) * power;
      power *= std::conj(j.mu);
    }
    return x;
  }
  return conjugation_operator(c, n).apply(x);
}

double smooth_test_vector_ratio(const ConjugationSpec& c) {
  if (c.is_jmu()) return 1.0;
  const double r = std::abs(c.as_jwp().p);
  const double rho = std::min(1.5, 0.5 * (1.0 + 1.0 / r));
  // tau_p maps the disk of radius rho onto one reaching radius R = (rho - r)/(1 - rho r).
  const double radius = (rho - r) / (1.0 - rho * r);
  return 1.0 / radius;
}

AxiomResiduals conj_axiom_residuals(const ConjugationSpec& c, Eigen::Index n, int samples, std::uint64_t seed) {
  if (n < 32) throw DomainError("axiom residuals need N >= 32");
  const AntilinearOperator op = conjugation_operator(c, n);
  const double ratio = smooth_test_vector_ratio(c);
  const Eigen::Index half = n / 2;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto random_vector = [&] {
    HardyVectorXcd x(n);
    double damp = 1.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      x(k) = damp * cplx(unit(rng), unit(rng));
      damp *= ratio;
    }
    return x;
  };

  AxiomResiduals out{0.0, 0.0};
  for (int s = 0; s < samples; ++s) {
    const HardyVectorXcd x = random_vector();
    const HardyVectorXcd y = random_vector();
    const HardyVectorXcd cx = op.apply(x);
    const HardyVectorXcd cy = op.apply(y);
    const HardyVectorXcd ccx = op.apply(cx);
    out.involution = std::max(out.involution, (ccx.head(half) - x.head(half)).norm());
    const cplx lhs = inner_product<cplx>(cx.head(half), cy.head(half));
    const cplx rhs = inner_product<cplx>(y.head(half), x.head(half));
    out.antiunitary = std::max(out.antiunitary, std::abs(lhs - rhs));
  }
  return out;
}

}  // namespace h2
