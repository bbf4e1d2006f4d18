#include <doctest.h>

#include "h2/hardy.hpp"
#include "oracles.hpp"

using h2::cplx;
using h2::HardyVectorXcd;
using h2::Lft;

TEST_CASE("kernel_eval") {
  CHECK(h2::kernel_eval(cplx(0), cplx(0.7, 0.1)) == cplx(1));
  CHECK(std::abs(h2::kernel_eval(cplx(0.5), cplx(0.5)) - 4.0 / 3.0) < 1e-15);
  CHECK_THROWS_AS(h2::kernel_eval(cplx(1), cplx(1)), h2::PoleError);
}

TEST_CASE("reproducing property on polynomials") {
  HardyVectorXcd f(4);
  f << cplx(1, 2), cplx(-0.5, 0), cplx(0, 0.3), cplx(0.25, -1);
  const cplx w(0.3, -0.6);
  const cplx got = h2::inner_product<cplx>(f, h2::kernel_series(w, 4));
  CHECK(std::abs(got - h2::series_eval<cplx>(f, w)) < 1e-15);
}

TEST_CASE("lft_power_series examples") {
  SUBCASE("z/2") {
    const HardyVectorXcd p = h2::lft_power_series(Lft(1, 0, 0, 2), 4);
    CHECK(std::abs(p(0)) == 0.0);
    CHECK(std::abs(p(1) - 0.5) < 1e-16);
    CHECK(std::abs(p(2)) == 0.0);
  }
  SUBCASE("z/(z/2+1)") {
    const HardyVectorXcd p = h2::lft_power_series(Lft(1, 0, 0.5, 1), 4);
    CHECK(std::abs(p(0)) == 0.0);
    CHECK(std::abs(p(1) - 1.0) < 1e-16);
    CHECK(std::abs(p(2) + 0.5) < 1e-16);
    CHECK(std::abs(p(3) - 0.25) < 1e-16);
  }
  SUBCASE("(0.5z+0.25)/(0.25z+1)") {
    const HardyVectorXcd p = h2::lft_power_series(Lft(0.5, 0.25, 0.25, 1), 3);
    CHECK(std::abs(p(0) - 0.25) < 1e-16);
    CHECK(std::abs(p(1) - 0.4375) < 1e-16);
    CHECK(std::abs(p(2) + 0.25 * 0.4375) < 1e-16);
  }
  SUBCASE("agrees with the sampled Taylor coefficients") {
    oracle::Rng rng(2);
    for (int t = 0; t < 10; ++t) {
      const Lft m = rng.self_map();
      const HardyVectorXcd p = h2::lft_power_series(m, 24);
      const Eigen::VectorXcd q = oracle::taylor_by_dft([&](cplx z) { return m(z); }, 24, 2048);
      CHECK((p - q).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(h2::lft_power_series(Lft(1, 1, 1, 0), 4), h2::NotExpandableError);
    CHECK_THROWS_AS(h2::lft_power_series(Lft(1, 0, 2, 1), 4), h2::NotExpandableError);
  }
}

TEST_CASE("power series tail ratio is |c/d|") {
  const Lft m(cplx(0.4, 0.1), cplx(0.2, -0.3), cplx(0.3, 0.2), 1);
  const HardyVectorXcd p = h2::lft_power_series(m, 30);
  for (int n = 2; n + 1 < 30; ++n) {
    CHECK(std::abs(std::abs(p(n + 1) / p(n)) - std::abs(m.c() / m.d())) < 1e-12);
  }
}

TEST_CASE("series_multiply") {
  HardyVectorXcd one = HardyVectorXcd::Zero(5);
  one(0) = 1;
  HardyVectorXcd f(5);
  f << 1, 2, 3, 4, 5;
  CHECK((h2::series_multiply(f, one, 5) - f).norm() == 0.0);

  HardyVectorXcd p(2), m(2);
  p << 1, 1;
  m << 1, -1;
  const HardyVectorXcd prod = h2::series_multiply(p, m, 4);
  CHECK(prod(0) == cplx(1));
  CHECK(prod(1) == cplx(0));
  CHECK(prod(2) == cplx(-1));
  CHECK(prod(3) == cplx(0));

  const HardyVectorXcd g = h2::kernel_series(cplx(0.5), 20);
  const HardyVectorXcd gg = h2::series_multiply(g, g, 20);
  for (int n = 0; n < 20; ++n) CHECK(std::abs(gg(n) - (n + 1) / std::pow(2.0, n)) < 1e-14);
}

TEST_CASE("series_multiply is commutative and associative") {
  oracle::Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    HardyVectorXcd a(16), b(16), c(16);
    for (int k = 0; k < 16; ++k) {
      a(k) = rng.square();
      b(k) = rng.square();
      c(k) = rng.square();
    }
    CHECK((h2::series_multiply(a, b, 16) - h2::series_multiply(b, a, 16)).cwiseAbs().maxCoeff() < 1e-13);
    const HardyVectorXcd l = h2::series_multiply(h2::series_multiply(a, b, 16), c, 16);
    const HardyVectorXcd r = h2::series_multiply(a, h2::series_multiply(b, c, 16), 16);
    CHECK((l - r).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("inner_product") {
  HardyVectorXcd f(3);
  f << cplx(1, 1), cplx(0, 2), cplx(-1, 0);
  const cplx ff = h2::inner_product<cplx>(f, f);
  CHECK(ff.real() == doctest::Approx(7.0));
  CHECK(std::abs(ff.imag()) == 0.0);

  HardyVectorXcd z = HardyVectorXcd::Zero(3), z2 = HardyVectorXcd::Zero(3);
  z(1) = 1;
  z2(2) = 1;
  CHECK(h2::inner_product<cplx>(z, z2) == cplx(0));

  // Zero padding of the shorter vector.
  HardyVectorXcd shortv(1);
  shortv << cplx(2, 0);
  CHECK(h2::inner_product<cplx>(f, shortv) == cplx(2, 2));

  // Against boundary quadrature.
  const oracle::Fn pf = [&](cplx x) { return h2::series_eval<cplx>(f, x); };
  HardyVectorXcd g(3);
  g << cplx(0.5, -1), cplx(2, 0), cplx(0, 0.25);
  const oracle::Fn pg = [&](cplx x) { return h2::series_eval<cplx>(g, x); };
  CHECK(std::abs(h2::inner_product<cplx>(f, g) - oracle::inner_by_quadrature(pf, pg, 64)) < 1e-13);
}

TEST_CASE("truncated kernel inner products converge with the geometric bound") {
  oracle::Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const cplx w = rng.disk(0.9), v = rng.disk(0.9);
    const cplx q = std::conj(w) * v;
    for (int n : {8, 32, 128}) {
      const cplx ip = h2::inner_product<cplx>(h2::kernel_series(v, n), h2::kernel_series(w, n));
      const double bound = std::pow(std::abs(q), n) / (1.0 - std::abs(q));
      CHECK(std::abs(ip - h2::kernel_eval(v, w)) <= bound * (1 + 1e-9) + 1e-15);
    }
  }
}

TEST_CASE("KernelCombo") {
  h2::KernelCombo<double> k;
  k.add(cplx(2), cplx(0.5));
  k.add(cplx(0, 1), cplx(0, 0.3));
  const cplx z(0.2, 0.4);
  CHECK(std::abs(k(z) - (2.0 * h2::kernel_eval(cplx(0.5), z) + cplx(0, 1) * h2::kernel_eval(cplx(0, 0.3), z))) < 1e-15);
  CHECK(std::abs(h2::series_eval<cplx>(k.to_series(200), z) - k(z)) < 1e-14);
  CHECK_THROWS_AS(k.add(cplx(1), cplx(1.0)), h2::DomainError);
}
