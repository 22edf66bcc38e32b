#include <doctest.h>

#include <random>

#include "caplab/bm_analysis.hpp"
#include "caplab/domains.hpp"
#include "caplab/error.hpp"
#include "caplab/minkowski.hpp"
#include "support.hpp"

using namespace caplab;
using caplab::testing::q;

namespace {

// c_k(X x Y) = min_{i+j=k} c_i(X) + c_j(Y) with c_0 = 0, for ellipsoids only.
Rational product_formula_oracle(std::uint64_t k, const Ellipsoid& x, const Ellipsoid& y) {
  auto c = [](std::uint64_t i, const Ellipsoid& e) {
    return i == 0 ? q(0) : ellipsoid_capacity(i, e).coeff();
  };
  Rational best = c(k, x);
  for (std::uint64_t i = 0; i <= k; ++i) best = min(best, c(i, x) + c(k - i, y));
  return best;
}

}  // namespace

TEST_CASE("ellipsoid capacity examples") {
  CHECK(ellipsoid_capacity(1, Ellipsoid::make(1, 1)).coeff() == q(1));
  CHECK(ellipsoid_capacity(2, Ellipsoid::make(q(3, 2), 1)).coeff() == q(2));
  CHECK(ellipsoid_capacity(3, Ellipsoid::make(q(2, 3), 1)).coeff() == q(1));
  CHECK_THROWS_AS(ellipsoid_capacity(0, Ellipsoid::make(1, 1)), Error);
  CHECK_THROWS_AS(Ellipsoid::make(0, 1), Error);
  CHECK_THROWS_AS(Ellipsoid::make(1, q(-1, 2)), Error);
}

TEST_CASE("ellipsoid capacity matches sorted multiples") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const Ellipsoid e = caplab::testing::random_ellipsoid(rng);
    for (std::uint64_t k = 1; k <= 40; ++k) {
      CHECK(ellipsoid_capacity(k, e).coeff() == caplab::testing::sorted_multiples_oracle(k, e.a, e.b));
    }
    std::uniform_int_distribution<std::uint64_t> big_k(41, 1000);
    for (int i = 0; i < 5; ++i) {
      const std::uint64_t k = big_k(rng);
      CHECK(ellipsoid_capacity(k, e).coeff() == caplab::testing::sorted_multiples_oracle(k, e.a, e.b));
    }
  }
  // Ties between the two progressions count with multiplicity.
  const Ellipsoid e = Ellipsoid::make(1, 2);  // 1 2 3 4 4 5 6 7 8 8
  CHECK(ellipsoid_capacity(3, e).coeff() == q(3));
  CHECK(ellipsoid_capacity(4, e).coeff() == q(4));
  CHECK(ellipsoid_capacity(5, e).coeff() == q(4));
  CHECK(ellipsoid_capacity(6, e).coeff() == q(5));
  CHECK(ellipsoid_capacity(10, e).coeff() == q(8));
}

TEST_CASE("ball capacity is pi r^2 ceil(k/2)") {
  for (const Rational& r : {q(1), q(3, 7), q(5, 2)}) {
    for (std::uint64_t k = 1; k <= 50; ++k) {
      CHECK(ellipsoid_capacity(k, Ellipsoid::make(r, r)).coeff() == r.square() * q((k + 1) / 2));
    }
  }
}

TEST_CASE("polydisk capacity") {
  CHECK(polydisk_capacity(5, Polydisk::make(1, 1)).coeff() == q(5));
  CHECK(polydisk_capacity(1, Polydisk::make(2, 3)).coeff() == q(4));
  CHECK(polydisk_capacity(3, Polydisk::make(1, 2)).coeff() == q(3));
  CHECK_THROWS_AS(polydisk_capacity(0, Polydisk::make(1, 1)), Error);
}

TEST_CASE("factor symmetry") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational a = caplab::testing::random_radius(rng), b = caplab::testing::random_radius(rng);
    for (std::uint64_t k = 1; k <= 15; ++k) {
      CHECK(ellipsoid_capacity(k, Ellipsoid::make(a, b)) == ellipsoid_capacity(k, Ellipsoid::make(b, a)));
      CHECK(polydisk_capacity(k, Polydisk::make(a, b)) == polydisk_capacity(k, Polydisk::make(b, a)));
    }
  }
}

TEST_CASE("product with a ball") {
  CHECK(product_with_ball_capacity(2, DomainSpec::ellipsoid(q(3, 2), 1), 2, 10).coeff() == q(2));
  CHECK(product_with_ball_capacity(1, DomainSpec::ellipsoid(1, 1), 4, 2).coeff() == q(1));
  const EllipsoidPair odd = odd_family(3);
  const DomainSpec odd_sum = DomainSpec::sum(odd.first, odd.second);
  CHECK(product_with_ball_capacity(3, odd_sum, 2, 10) == sum_capacity(3, odd));
  CHECK(product_with_ball_capacity(3, odd_sum, 2, 10).coeff() == q(50, 9));

  // pi R^2 must exceed c_k(X): R = 1 gives R^2 = c_1(E(1,1)) exactly.
  CHECK_THROWS_AS(product_with_ball_capacity(1, DomainSpec::ellipsoid(1, 1), 1, 1), Error);
  try {
    product_with_ball_capacity(1, DomainSpec::ellipsoid(1, 1), 1, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Precondition);
  }
  CHECK_THROWS_AS(DomainSpec::product(DomainSpec::product(DomainSpec::ellipsoid(1, 1), 1, 5), 1, 5), Error);
}

TEST_CASE("product stabilization agrees with the splitting formula") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const Ellipsoid x = caplab::testing::random_ellipsoid(rng, 6);
    for (std::uint64_t k = 1; k <= 12; ++k) {
      const Rational ck = ellipsoid_capacity(k, x).coeff();
      const Rational radius = q(static_cast<std::int64_t>(ck.ceil()) + 1);  // R^2 > c_k
      const Ellipsoid ball = Ellipsoid::make(radius, radius);
      CHECK(product_with_ball_capacity(k, DomainSpec{x}, 2, radius).coeff() == product_formula_oracle(k, x, ball));
    }
  }
}

TEST_CASE("capacity dispatch") {
  CHECK(capacity(1, DomainSpec::ellipsoid(1, 1)).coeff() == q(1));
  CHECK(capacity(4, DomainSpec::polydisk(1, 1)).coeff() == q(4));
  const EllipsoidPair even = even_family(2);
  CHECK(capacity(2, DomainSpec::sum(even.first, even.second)).coeff() == q(13, 2));
  CHECK_THROWS_AS(capacity(0, DomainSpec::ellipsoid(1, 1)), Error);
}

TEST_CASE("dimension") {
  CHECK(DomainSpec::ellipsoid(1, 1).dimension() == 4);
  CHECK(DomainSpec::product(DomainSpec::ellipsoid(1, 1), 3, 5).dimension() == 10);
}

TEST_CASE("scale_domain") {
  CHECK(scale_domain(2, DomainSpec::ellipsoid(1, 1)) == DomainSpec::ellipsoid(2, 2));
  CHECK(scale_domain(q(1, 2), DomainSpec::polydisk(2, 4)) == DomainSpec::polydisk(1, 2));
  const DomainSpec prod = DomainSpec::product(DomainSpec::polydisk(1, 3), 2, 7);
  CHECK(scale_domain(1, prod) == prod);
  CHECK_THROWS_AS(scale_domain(0, prod), Error);
}

TEST_CASE("conformality and monotonicity over random domains") {
  std::mt19937_64 rng(99);
  const Rational lambdas[] = {q(1, 3), q(1, 2), q(2), q(7, 5), q(11, 4)};
  for (int trial = 0; trial < 25; ++trial) {
    const Ellipsoid e1 = caplab::testing::random_ellipsoid(rng, 9);
    const Ellipsoid e2 = caplab::testing::random_ellipsoid(rng, 9);
    const DomainSpec domains[] = {DomainSpec{e1}, DomainSpec::polydisk(e1.a, e2.b), DomainSpec::sum(e1, e2),
                                  DomainSpec::product(DomainSpec{e2}, 1, 60)};
    for (const auto& d : domains) {
      PiRational previous;
      for (std::uint64_t k = 1; k <= 8; ++k) {
        const PiRational c = capacity(k, d);
        CHECK(previous <= c);
        previous = c;
        for (const auto& lambda : lambdas) {
          CHECK(capacity(k, scale_domain(lambda, d)).coeff() == lambda.square() * c.coeff());
        }
      }
    }
  }
}
