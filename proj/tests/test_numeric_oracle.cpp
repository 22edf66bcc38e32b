#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "caplab/bm_analysis.hpp"
#include "caplab/error.hpp"
#include "caplab/minkowski.hpp"
#include "caplab/numeric_oracle.hpp"
#include "support.hpp"

using namespace caplab;
using caplab::testing::q;

TEST_CASE("oracle config validation") {
  OracleConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.grid = 10;
  CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("golden section on a parabola") {
  const double x = golden_section_maximize([](double t) { return -(t - 0.3) * (t - 0.3); }, 0.0, 1.0, 100);
  CHECK(x == doctest::Approx(0.3).epsilon(1e-8));
  OracleConfig cfg;
  cfg.grid = 64;
  CHECK(maximize_on_interval([](double t) { return std::sin(t); }, 0.0, 3.0, cfg) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("numeric support norms match exact values") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const EllipsoidPair p = caplab::testing::random_generic_pair(rng);
    for (std::uint64_t k = 1; k <= 8; ++k) {
      for (std::uint64_t v1 = 0; v1 <= k; ++v1) {
        const IndexVector v{v1, k - v1};
        const double exact = support_norm(v, p).to_double();
        CHECK(support_norm_numeric(v, p) == doctest::Approx(exact).epsilon(1e-10));
        CHECK(support_norm_numeric_f(v, p) == doctest::Approx(exact).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("profile endpoints and interior value") {
  const EllipsoidPair p = odd_family(3).normalize();
  const IndexVector v{2, 1};
  const double a = 1, b = 1, c = 2.0 / 3, d = 1;
  CHECK(s_profile(v, p, c / a) == doctest::Approx(std::numbers::pi * 2 * (a + c) * (a + c)).epsilon(1e-12));
  CHECK(s_profile(v, p, d / b) == doctest::Approx(std::numbers::pi * 1 * (b + d) * (b + d)).epsilon(1e-12));
  // D = 1 - 2 = -1, N = 2 * 4/9 - 1 = -1/9, f0 = 1/9 is outside [2/3, 1]: maximum at an endpoint.
  CHECK(support_norm(v, p).coeff() == q(50, 9));
  CHECK_THROWS_AS(s_profile(v, p, 0.5), Error);

  const EllipsoidPair even = even_family(2).normalize();
  // D = 1 - 9/4 < 0, N = 4/9 - 9/4, f0 = 1; S(1) = 13/2 pi.
  CHECK(s_profile({1, 1}, even, 1.0) == doctest::Approx(6.5 * std::numbers::pi).epsilon(1e-12));
  CHECK(s_derivative({1, 1}, even, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("derivative sign check") {
  const EllipsoidPair even = even_family(2).normalize();
  const auto report = s_derivative_signcheck({1, 1}, even);
  CHECK(report.ok);
  CHECK(report.sign_mismatches == 0);
  CHECK(report.sign_changes == 1);
  REQUIRE(report.f0.has_value());
  CHECK(*report.f0 == doctest::Approx(1.0));
  CHECK(report.f0_is_max);

  for (std::uint64_t k = 1; k <= 6; ++k) {
    const auto edge = s_derivative_signcheck({k, 0}, even);
    CHECK(edge.ok);
    CHECK(edge.sign_changes == 0);
    CHECK_FALSE(edge.f0.has_value());
  }

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const EllipsoidPair p = caplab::testing::random_generic_pair(rng);
    for (std::uint64_t v1 = 0; v1 <= 6; ++v1) {
      const auto r = s_derivative_signcheck({v1, 6 - v1}, p);
      CHECK(r.ok);
      CHECK(r.sign_changes <= 1);
    }
  }
}

TEST_CASE("closed-form derivative against finite differences") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const EllipsoidPair p = caplab::testing::random_generic_pair(rng);
    const double lo = (p.c() / p.a()).to_double(), hi = (p.d() / p.b()).to_double();
    for (int i = 1; i < 10; ++i) {
      const double f = lo + (hi - lo) * i / 10.0;
      const IndexVector v{3, 2};
      const double closed = s_derivative(v, p, f);
      CHECK(std::abs(s_derivative_fd(v, p, f) - closed) <= 1e-6 * std::max(1.0, std::abs(closed)));
    }
  }
}

TEST_CASE("at most one interior local maximum") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const EllipsoidPair p = caplab::testing::random_generic_pair(rng);
    for (std::uint64_t v1 = 0; v1 <= 8; ++v1) {
      const IndexVector v{v1, 8 - v1};
      const std::size_t maxima = interior_local_maxima(v, p);
      CHECK(maxima <= 1);
      const Rational dd = Rational(BigInt(v.v2), BigInt(1)) * p.b().square() -
                          Rational(BigInt(v.v1), BigInt(1)) * p.a().square();
      if (dd.sign() >= 0) CHECK(maxima == 0);
    }
  }
}

TEST_CASE("numeric capacities") {
  const OracleConfig cfg;
  CHECK(capacity_numeric(3, DomainSpec::ellipsoid(1, 2), cfg) == doctest::Approx(std::numbers::pi * 3));
  CHECK(capacity_numeric(5, DomainSpec::polydisk(2, 3), cfg) == doctest::Approx(std::numbers::pi * 20));
  CHECK(capacity_numeric(2, DomainSpec::sum(Ellipsoid::make(q(3, 2), 1), Ellipsoid::make(1, q(3, 2))), cfg) ==
        doctest::Approx(6.5 * std::numbers::pi).epsilon(1e-10));
  CHECK(capacity_numeric(2, DomainSpec::product(DomainSpec::ellipsoid(1, 2), 2, 5), cfg) ==
        doctest::Approx(std::numbers::pi * 2));
}
