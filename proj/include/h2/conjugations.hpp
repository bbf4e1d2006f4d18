#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "h2/hardy.hpp"
#include "h2/moebius.hpp"

namespace h2 {

/// J_mu f(z) = beta * conj(f(mu conj(z))), |mu| = |beta| = 1.
struct JMu {
  cplx mu;
  cplx beta{1.0};
};

/**
 * JW f = beta * J(xi_p * (f o tau_p)) with
 * xi_p(z) = sqrt(1-|p|^2)/(1 - conj(p) z), tau_p(z) = lambda (p - z)/(1 - conj(p) z),
 * lambda = conj(p)/p, 0 < |p| < 1.
 */
struct JWp {
  cplx p;
  cplx beta{1.0};

  cplx lambda() const { return std::conj(p) / p; }
  cplx xi(cplx z) const;
  Lft tau() const;
};

class ConjugationSpec {
 public:
  /// Throws DomainError unless |mu| = 1 and |beta| = 1 (to 1e-14).
  static ConjugationSpec jmu(cplx mu, cplx beta = 1.0);
  /// Throws DomainError unless 0 < |p| < 1 and |beta| = 1.
  static ConjugationSpec jwp(cplx p, cplx beta = 1.0);

  bool is_jmu() const { return std::holds_alternative<JMu>(v_); }
  bool is_jwp() const { return std::holds_alternative<JWp>(v_); }
  const JMu& as_jmu() const { return std::get<JMu>(v_); }
  const JWp& as_jwp() const { return std::get<JWp>(v_); }
  cplx beta() const;

  /// The family parameter: mu for J_mu, p for JW.
  cplx parameter() const;

  /// Mode-spreading factor of the truncated operator: 1 for J_mu, (1+|p|)/(1-|p|) for JW.
  double spread() const;

  /// "jmu:<mu>" or "jw:<p>".
  std::string to_string() const;

  template <typename Visitor>
  decltype(auto) visit(Visitor&& vis) const {
    return std::visit(std::forward<Visitor>(vis), v_);
  }

 private:
  explicit ConjugationSpec(std::variant<JMu, JWp> v) : v_(v) {}
  std::variant<JMu, JWp> v_;
};

/// Parses "jmu:<complex>" or "jw:<complex>".
ConjugationSpec parse_conjugation(std::string_view text);

/**
 * Parameters of A_{u,v} f(z) = u(z) conj(f(conj(v(z)))).
 * Family I: u = beta, v = mu z. Family II: u = beta sqrt(1-|p|^2)/(1-pz),
 * v = (p/conj(p)) (conj(p) - z)/(1 - pz).
 */
struct AuvParams {
  enum class Family { I, II };

  Family family;
  cplx beta;
  cplx mu_or_p;

  static AuvParams family_i(cplx beta, cplx mu) { return {Family::I, beta, mu}; }
  static AuvParams family_ii(cplx beta, cplx p) { return {Family::II, beta, p}; }

  cplx u(cplx z) const;
  cplx v(cplx z) const;

  /// (A_{u,v} K_w)(z) = u(z) / (1 - w v(z)).
  cplx apply_kernel(cplx w, cplx z) const;
};

/**
 * Maps an A_{u,v} parameter set onto the conjugation with the same action.
 * Family I becomes J_{conj(mu)} (A_{u,v} composes f with conj(mu z)); family II
 * becomes JW with the same p. The correspondence is checked on K_0 and K_{0.3}
 * at ten points and a DomainError is thrown if it is off by more than 1e-12.
 */
ConjugationSpec build_conjugation(const AuvParams& params);

/// max |A_{u,v}K_w(z) - C K_w(z)| over w in {0, 0.3} and ten sample points z.
double auv_action_residual(const AuvParams& params, const ConjugationSpec& c);

/// C K_w as a single weighted kernel.
KernelCombo<double> conj_apply_kernel(const ConjugationSpec& c, cplx w);

/// C f on the first n coefficients (JW goes through the truncated operator matrix).
HardyVectorXcd conj_apply_series(const ConjugationSpec& c, const HardyVectorXcd& f, Eigen::Index n);

struct AxiomResiduals {
  double involution;
  double antiunitary;
};

/**
 * Truncation residuals of C^2 = I and <Cx, Cy> = <y, x> on the leading n/2
 * coefficients, maximised over `samples` random vectors.
 *
 * For JW the random vectors have coefficients damped by r^k, with r chosen so
 * that C x is analytic on a disk of radius rho = min(3/2, (1 + 1/|p|)/2); the
 * truncation error then decays like rho^{-n}. Undamped vectors of length n
 * cannot be resolved at size n because JW spreads mode k over up to
 * k (1+|p|)/(1-|p|) modes.
 */
AxiomResiduals conj_axiom_residuals(const ConjugationSpec& c, Eigen::Index n, int samples,
                                    std::uint64_t seed = 7);

/// Damping ratio r used by conj_axiom_residuals (1 for J_mu).
double smooth_test_vector_ratio(const ConjugationSpec& c);

}  // namespace h2
