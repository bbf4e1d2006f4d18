#include <doctest.h>

#include "h2/families.hpp"
#include "oracles.hpp"

using h2::ConjugationSpec;
using h2::cplx;
using h2::Lft;

TEST_CASE("unitary family") {
  const Lft m = h2::unitary_family_map(0.5, 1.0);
  CHECK(h2::predicate_unitary_wco(m, {1.0, 0.5}));
  CHECK(h2::predicate_unitary_wco(h2::unitary_family_map(cplx(0.2, -0.4), std::polar(1.0, 2.0)),
                                  {std::polar(1.0, -0.3), cplx(0.2, -0.4)}));
  CHECK_FALSE(h2::predicate_unitary_wco(Lft(1, 0, 0, 2), {1.0, 0.0}));
  CHECK_FALSE(h2::predicate_unitary_wco(m, {0.9, 0.5}));
  CHECK_FALSE(h2::predicate_unitary_wco(m, {1.0, 0.2}));
  CHECK_THROWS_AS(h2::predicate_unitary_wco(m, {1.0, 1.0}), h2::DomainError);

  // beta K_{sigma(0)} reproduces gamma2 K_q / ||K_q||.
  const cplx q(0.3, 0.4), g2 = std::polar(1.0, 0.8);
  const Lft u = h2::unitary_family_map(q, std::polar(1.0, -1.0));
  const h2::HardyVectorXcd psi = h2::weight_series(u, h2::unitary_family_beta(q, g2), 40);
  const h2::HardyVectorXcd want = g2 * std::sqrt(1.0 - std::norm(q)) * h2::kernel_series(q, 40);
  CHECK((psi - want).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("unitary family is J_mu-normal") {
  oracle::Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    const cplx q = rng.disk(0.9);
    const Lft m = h2::unitary_family_map(q, rng.unimodular());
    const cplx beta = h2::unitary_family_beta(q, rng.unimodular());
    const cplx mu = rng.unimodular();
    CHECK(h2::predicate_weighted_jmu(m, mu));
    CHECK(h2::kernel_residual({m, ConjugationSpec::jmu(mu), true, beta}, 12) < 1e-12);
  }
}

TEST_CASE("hermitian_wco") {
  const h2::HermitianWco h = h2::hermitian_wco(0.3, 0.2, 1.0);
  CHECK(h.map.projectively_equal(Lft(0.11, 0.3, -0.3, 1)));
  CHECK(std::abs(std::abs(h.map.b()) - std::abs(h.map.c())) < 1e-16);
  CHECK(h.self_map);
  CHECK(h2::hermitian_wco(0.0, 0.6, 1.0).map.projectively_equal(Lft(0.6, 0, 0, 1)));
  CHECK_THROWS_AS(h2::hermitian_wco(0.3, cplx(0.2, 0.1), 1.0), h2::DomainError);
  CHECK_THROWS_AS(h2::hermitian_wco(0.3, 0.2, cplx(1, 1)), h2::DomainError);
  CHECK_THROWS_AS(h2::hermitian_wco(1.0, 0.2, 1.0), h2::DomainError);

  // phi(z) = a0 + a1 z/(1 - conj(a0) z).
  const cplx a0(0.2, -0.3);
  const h2::HermitianWco g = h2::hermitian_wco(a0, 0.4, 1.0);
  const cplx z(0.1, 0.5);
  CHECK(std::abs(g.map(z) - (a0 + 0.4 * z / (1.0 - std::conj(a0) * z))) < 1e-15);
}

TEST_CASE("predicate_hermitian_jmu") {
  CHECK(h2::predicate_hermitian_jmu(0.3, 0.2, 1.0));
  CHECK_FALSE(h2::predicate_hermitian_jmu(cplx(0, 0.3), 0.2, 1.0));
  // The second factor vanishes on the automorphisms a1 = |a0|^2 - 1.
  const cplx a0(0.2, 0.3);
  for (double th : {0.0, 1.0, 2.5}) {
    CHECK(h2::predicate_hermitian_jmu(a0, std::norm(a0) - 1.0, std::polar(1.0, th)));
    CHECK_FALSE(h2::predicate_hermitian_jmu_literal(a0, std::norm(a0) - 1.0, std::polar(1.0, th)));
  }
  // a0 = 0, a1 = -1 is phi(z) = -z: both forms agree.
  CHECK(h2::predicate_hermitian_jmu(0.0, -1.0, std::polar(1.0, 0.7)));
  CHECK(h2::predicate_hermitian_jmu_literal(0.0, -1.0, std::polar(1.0, 0.7)));
}

TEST_CASE("predicate_hermitian_jw") {
  const cplx p = *h2::hermitian_jw_solution(0.3, 0.2, 0.0);
  CHECK(std::abs(p - 0.6 / 0.89) < 1e-15);
  CHECK(h2::predicate_hermitian_jw(0.3, 0.2, p));
  CHECK_FALSE(h2::predicate_hermitian_jw(0.3, 0.2, 0.3));
  CHECK(h2::predicate_hermitian_jw(0.0, 1.0, 0.5));
  CHECK_FALSE(h2::hermitian_jw_solution(0.3, 0.2, 3.14159).has_value());
}

TEST_CASE("Hermitian predicates match the generic weighted predicates") {
  oracle::Rng rng(42);
  int jmu_true = 0, jw_true = 0;
  for (int t = 0; t < 200; ++t) {
    const cplx a0 = rng.disk(0.8);
    const double a1 = t % 5 == 0 ? std::norm(a0) - 1.0 : rng.uniform(-1.0, 1.0);
    const Lft m = h2::hermitian_wco(a0, a1, 1.0).map;
    const cplx mu = t % 3 == 0 && std::abs(a0) > 0 ? a0 / std::conj(a0) : rng.unimodular();
    cplx p = std::polar(rng.uniform(0.05, 0.95), rng.uniform(0, 6.28));
    if (t % 2 == 0) {
      if (const auto s = h2::hermitian_jw_solution(a0, a1, rng.uniform(0, 6.28))) p = *s;
    }
    const bool hj = h2::predicate_hermitian_jmu(a0, a1, mu);
    const bool hw = h2::predicate_hermitian_jw(a0, a1, p);
    jmu_true += hj;
    jw_true += hw;
    CHECK(hj == h2::predicate_weighted_jmu(m, mu));
    CHECK(hw == h2::predicate_weighted_jw(m, p));
  }
  CHECK(jmu_true > 20);
  CHECK(jw_true > 20);
}

TEST_CASE("predicate_normal_bdyfix") {
  // Hermitian map with a parabolic boundary fixed point at zeta.
  const cplx a0(0.25, 0.1);
  const cplx zeta = std::polar(1.0, 0.6);
  const double a1 = std::norm(1.0 - std::conj(a0) * zeta);
  const Lft m = h2::hermitian_wco(a0, a1, 1.0).map;
  REQUIRE(h2::lft_fixed_points(m).has_boundary());

  const auto p = h2::hermitian_jw_solution(a0, a1, 0.2);
  REQUIRE(p.has_value());
  CHECK(h2::predicate_normal_bdyfix(m, *p, h2::NormalBranch::Jw));
  CHECK(h2::predicate_hermitian_jw(a0, a1, *p));
  CHECK_FALSE(h2::predicate_normal_bdyfix(m, 0.5 * *p, h2::NormalBranch::Jw));

  const cplx mu = a0 / std::conj(a0);
  CHECK(h2::predicate_normal_bdyfix(m, mu, h2::NormalBranch::Jmu) == h2::predicate_weighted_jmu(m, mu));

  // |b| != |c|.
  CHECK_THROWS_AS(h2::predicate_normal_bdyfix(Lft(0.5, 0.25, 0.1, 1), 0.4, h2::NormalBranch::Jw),
                  h2::HypothesisViolationError);
  // No boundary fixed point.
  CHECK_THROWS_AS(h2::predicate_normal_bdyfix(Lft(0.11, 0.3, -0.3, 1), 0.4, h2::NormalBranch::Jw),
                  h2::HypothesisViolationError);

  // |b| = |c| with a boundary fixed point but a conj(b) - c conj(d) != conj(b) d - conj(a) c.
  const Lft bad(cplx(0.5, 0.5), cplx(0.3), cplx(0, 0.3), cplx(0.5, -0.5));
  if (h2::lft_fixed_points(bad).has_boundary()) {
    CHECK_FALSE(h2::predicate_normal_bdyfix(bad, 0.4, h2::NormalBranch::Jw));
  }
}

TEST_CASE("real-part condition matches the second JW condition") {
  oracle::Rng rng(43);
  int literal_disagree = 0;
  for (int t = 0; t < 50; ++t) {
    const cplx a0 = rng.disk(0.7);
    const double a1 = std::norm(1.0 - std::conj(a0) * rng.unimodular());
    const Lft m = h2::hermitian_wco(a0, a1, 1.0).map;
    const cplx p = std::polar(rng.uniform(0.05, 0.95), rng.uniform(0, 6.28));
    CHECK(std::abs(h2::normal_bdyfix_real_part_residual(m, p) - h2::weighted_jw_conditions(m, p).second) < 1e-12);
    literal_disagree += std::abs(h2::normal_bdyfix_real_part_residual_literal(m, p) -
                                 h2::weighted_jw_conditions(m, p).second) > 1e-6;
  }
  CHECK(literal_disagree > 0);
}
