#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "caplab/bm_analysis.hpp"
#include "caplab/error.hpp"
#include "caplab/minkowski.hpp"
#include "support.hpp"

using namespace caplab;
using caplab::testing::q;

namespace {

// sqrt(s) vs sqrt(x) + sqrt(y) in floating point, for well-separated cases.
Ordering float_compare(const Rational& s, const Rational& x, const Rational& y) {
  const double lhs = std::sqrt(s.to_double()), rhs = std::sqrt(x.to_double()) + std::sqrt(y.to_double());
  if (std::abs(lhs - rhs) < 1e-9 * rhs) return Ordering::Equal;
  return lhs < rhs ? Ordering::Less : Ordering::Greater;
}

}  // namespace

TEST_CASE("families") {
  CHECK(even_family(2).first == Ellipsoid::make(q(3, 2), 1));
  CHECK(even_family(2).second == Ellipsoid::make(1, q(3, 2)));
  CHECK(odd_family(3).second == Ellipsoid::make(q(2, 3), 1));
  CHECK(family_for(4) == even_family(4));
  CHECK(family_for(5) == odd_family(5));
  CHECK_THROWS_AS(even_family(3), Error);
  CHECK_THROWS_AS(odd_family(1), Error);
  CHECK_THROWS_AS(odd_family(4), Error);
  CHECK(family_expected_coeff(2) == q(13, 2));
  CHECK(family_expected_coeff(3) == q(50, 9));
}

TEST_CASE("verdict names") {
  for (Verdict v : {Verdict::Violates, Verdict::Satisfies, Verdict::Equality}) {
    CHECK(verdict_from_string(to_string(v)) == v);
  }
  CHECK_THROWS_AS(verdict_from_string("maybe"), Error);
}

TEST_CASE("bm_check examples") {
  const auto even = bm_check(2, even_family(2));
  CHECK(even.c_sum.coeff() == q(13, 2));
  CHECK(even.c1.coeff() == q(2));
  CHECK(even.c2.coeff() == q(2));
  CHECK(even.verdict == Verdict::Violates);
  CHECK(even.comparison == Ordering::Less);

  const auto odd = bm_check(3, odd_family(3));
  CHECK(odd.c_sum.coeff() == q(50, 9));
  CHECK(odd.verdict == Verdict::Violates);

  const auto balls = bm_check(1, Ellipsoid::make(1, 1), Ellipsoid::make(1, 1));
  CHECK(balls.c_sum.coeff() == q(4));
  CHECK(balls.verdict == Verdict::Equality);
  CHECK(certificate_consistent(balls));

  const auto far = bm_check(1, Ellipsoid::make(1, 3), Ellipsoid::make(3, 1));
  CHECK(far.verdict == Verdict::Satisfies);
  CHECK(certificate_consistent(far));

  BMCertificate forged = even;
  forged.verdict = Verdict::Satisfies;
  CHECK_FALSE(certificate_consistent(forged));
  forged = even;
  forged.c_sum = PiRational(q(7));
  CHECK_FALSE(certificate_consistent(forged));
}

TEST_CASE("verdicts against a floating-point comparison") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const Ellipsoid e1 = caplab::testing::random_ellipsoid(rng, 9);
    const Ellipsoid e2 = caplab::testing::random_ellipsoid(rng, 9);
    std::uniform_int_distribution<int> pick_k(1, 12);
    const auto cert = bm_check(static_cast<std::uint64_t>(pick_k(rng)), e1, e2);
    const Ordering expected = float_compare(cert.c_sum.coeff(), cert.c1.coeff(), cert.c2.coeff());
    if (expected != Ordering::Equal) CHECK(cert.comparison == expected);
  }
}

TEST_CASE("k = 1 never violates") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto cert = bm_check(1, caplab::testing::random_ellipsoid(rng), caplab::testing::random_ellipsoid(rng));
    CHECK(cert.verdict != Verdict::Violates);
  }
}

TEST_CASE("reproduction") {
  const Reproduction result = reproduce_theorem(60, 2);
  CHECK(result.ok);
  REQUIRE(result.rows.size() == 59);
  for (const auto& row : result.rows) {
    CHECK(row.ok());
    CHECK(row.certificate.c_sum.coeff() == family_expected_coeff(row.certificate.k));
    CHECK(row.family == (row.certificate.k % 2 == 0 ? "even" : "odd"));
  }
  CHECK_THROWS_AS(reproduce_theorem(1), Error);
}

TEST_CASE("polydisk criterion") {
  for (std::uint64_t k = 1; k <= 40; ++k) {
    const auto report = ostrover_criterion(k);
    // k / floor((k+1)/2) is 2 for even k and 2k/(k+1) for odd k.
    const bool expected = k % 2 == 0 || k >= 9;
    CHECK(report.violating == expected);
    CHECK(report.polydisk_capacity.coeff() == q(static_cast<std::int64_t>(k)));
    CHECK(report.ball_capacity.coeff() == q(static_cast<std::int64_t>((k + 1) / 2)));
    CHECK(report.rhs == q(16, 9));
  }
  CHECK(ostrover_criterion(2).lhs == q(2));
  CHECK(ostrover_criterion(3).lhs == q(3, 2));
  CHECK_FALSE(ostrover_criterion(7).violating);
  CHECK(ostrover_criterion(9).lhs == q(9, 5));
}

TEST_CASE("support functions") {
  const double x[4] = {0.6, 0.0, 0.0, 0.8};
  CHECK(support_function(DomainSpec::ellipsoid(1, 1), x) == doctest::Approx(1.0));
  CHECK(support_function(DomainSpec::polydisk(1, 1), x) == doctest::Approx(1.4));
  CHECK(support_function(DomainSpec::ellipsoid(2, 3), x) == doctest::Approx(std::hypot(1.2, 2.4)));
  CHECK_THROWS_AS(support_function(DomainSpec::sum(Ellipsoid::make(1, 1), Ellipsoid::make(1, 2)), x), Error);
}

TEST_CASE("mean width") {
  const auto ball = mean_width_estimate(DomainSpec::ellipsoid(1, 1), 1000, 1);
  CHECK(ball.mean == 1.0);
  CHECK(ball.std_error == 0.0);
  CHECK(mean_width_estimate(DomainSpec::ellipsoid(2, 2), 1000, 1).mean == 2.0);

  const auto poly = mean_width_estimate(DomainSpec::polydisk(1, 1), 200'000, 7);
  CHECK(std::abs(poly.mean - 4.0 / 3) <= 4 * poly.std_error);

  const double oracle = caplab::testing::mean_width_quadrature(
      [](double r1, double r2) { return std::sqrt(4 * r1 * r1 + 9 * r2 * r2); });
  const auto ell = mean_width_estimate(DomainSpec::ellipsoid(2, 3), 200'000, 9);
  CHECK(std::abs(ell.mean - oracle) <= 4 * ell.std_error);

  const double poly_oracle = caplab::testing::mean_width_quadrature([](double r1, double r2) { return 2 * r1 + 5 * r2; });
  const auto p25 = mean_width_estimate(DomainSpec::polydisk(2, 5), 200'000, 3);
  CHECK(std::abs(p25.mean - poly_oracle) <= 4 * p25.std_error);

  // Identical results regardless of the worker count.
  const auto one = mean_width_estimate(DomainSpec::polydisk(1, 2), 100'000, 5, 1);
  const auto four = mean_width_estimate(DomainSpec::polydisk(1, 2), 100'000, 5, 4);
  CHECK(one.mean == four.mean);
  CHECK(one.std_error == four.std_error);
  CHECK(mean_width_estimate(DomainSpec::polydisk(1, 2), 100'000, 6).mean != one.mean);
  CHECK_THROWS_AS(mean_width_estimate(DomainSpec::polydisk(1, 1), 1, 1), Error);
}

TEST_CASE("radii of a given height") {
  const auto r = radii_of_height(3);
  // 1/3 1/2 2/3 1 3/2 2 3
  REQUIRE(r.size() == 7);
  CHECK(r.front() == q(1, 3));
  CHECK(r.back() == q(3));
  CHECK(std::is_sorted(r.begin(), r.end()));
}

TEST_CASE("search") {
  const auto found = search_violations(3, 2, 3, 2);
  CHECK_FALSE(found.empty());
  for (const auto& cert : found) {
    CHECK(cert.verdict == Verdict::Violates);
    CHECK(certificate_consistent(cert));
  }
  CHECK(search_violations(4, 1, 1).empty());
  CHECK(found == search_violations(3, 2, 3, 1));
}
