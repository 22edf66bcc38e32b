#include <doctest.h>

#include <cmath>
#include <random>

#include "caplab/error.hpp"
#include "caplab/rational.hpp"
#include "support.hpp"

using namespace caplab;
using caplab::testing::q;

TEST_CASE("rational arithmetic") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(q(2, 3) * q(3, 2) == q(1));
  CHECK(compare(q(9, 4), q(2)) == Ordering::Greater);
  CHECK(q(1, 2) - q(1, 2) == q(0));
  CHECK(q(-3, 4) / q(3, 8) == q(-2));
  CHECK((q(7, 3) <=> q(5, 2)) < 0);
}

TEST_CASE("rational canonical form") {
  const Rational r(BigInt(6), BigInt(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational::parse("10/4") == q(5, 2));
  CHECK(Rational::parse("10/4").str() == "5/2");
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK(Rational::parse("0/9").str() == "0");

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(-500, 500);
  for (int i = 0; i < 500; ++i) {
    const Rational x(BigInt(pick(rng)), BigInt(std::abs(pick(rng)) + 1));
    const Rational y(BigInt(pick(rng)), BigInt(std::abs(pick(rng)) + 1));
    for (const Rational& z : {x + y, x - y, x * y}) {
      CHECK(z.den() > 0);
      CHECK(gcd(abs(z.num()), z.den()) == 1);
    }
  }
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(q(1) / q(0), Error);
  try {
    (void)(q(1) / q(0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("3/"), ParseError);
}

TEST_CASE("floor and ceil") {
  CHECK(q(7, 2).floor() == 3);
  CHECK(q(-7, 2).floor() == -4);
  CHECK(q(7, 2).ceil() == 4);
  CHECK(q(6, 2).floor() == 3);
}

TEST_CASE("big values stay exact") {
  Rational x = q(1);
  for (int i = 0; i < 40; ++i) x *= q(1'000'003, 999'983);
  CHECK(x.num() > BigInt(std::numeric_limits<std::int64_t>::max()));
  Rational back = x;
  for (int i = 0; i < 40; ++i) back /= q(1'000'003, 999'983);
  CHECK(back == q(1));
}

TEST_CASE("cmp_rational_sqrt") {
  CHECK(cmp_rational_sqrt(q(3, 2), q(9, 4)) == Ordering::Equal);
  CHECK(cmp_rational_sqrt(q(-1), q(4)) == Ordering::Less);
  CHECK(cmp_rational_sqrt(q(5, 3), q(25, 9)) == Ordering::Equal);
  CHECK(cmp_rational_sqrt(q(-1), q(0)) == Ordering::Less);
  CHECK(cmp_rational_sqrt(q(0), q(0)) == Ordering::Equal);
  CHECK(cmp_rational_sqrt(q(1), q(2)) == Ordering::Less);
  CHECK_THROWS_AS(cmp_rational_sqrt(q(1), q(-1)), Error);
}

TEST_CASE("cmp_sqrt_combination examples") {
  CHECK(cmp_sqrt_combination(q(4), q(1), q(1)) == Ordering::Equal);
  CHECK(cmp_sqrt_combination(q(13, 2), q(2), q(2)) == Ordering::Less);
  CHECK(cmp_sqrt_combination(q(9), q(1), q(1)) == Ordering::Greater);
  CHECK(cmp_sqrt_combination(q(0), q(0), q(0)) == Ordering::Equal);
  CHECK_THROWS_AS(cmp_sqrt_combination(q(-1), q(0), q(0)), Error);
}

TEST_CASE("cmp_sqrt_combination properties") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, 60);
  std::uniform_int_distribution<int> den(1, 12);
  int decided_by_float = 0;
  for (int i = 0; i < 5000; ++i) {
    const Rational s(BigInt(pick(rng)), BigInt(den(rng)));
    const Rational t(BigInt(pick(rng)), BigInt(den(rng)));
    const Rational u(BigInt(pick(rng)), BigInt(den(rng)));
    const Ordering exact = cmp_sqrt_combination(s, t, u);
    CHECK(exact == cmp_sqrt_combination(s, u, t));

    const double diff = std::sqrt(s.to_double()) - std::sqrt(t.to_double()) - std::sqrt(u.to_double());
    if (std::abs(diff) > 1e-6) {
      ++decided_by_float;
      CHECK(exact == (diff > 0 ? Ordering::Greater : Ordering::Less));
    }
  }
  CHECK(decided_by_float > 4000);

  // (sqrt t + sqrt u)^2 = t + u + 2 sqrt(tu) is rational when tu is a square.
  for (int x = 0; x <= 12; ++x) {
    for (int y = 0; y <= 12; ++y) {
      const Rational t = q(x * x, 9), u = q(y * y, 4);
      const Rational s = t + u + q(2) * q(x, 3) * q(y, 2);
      CHECK(cmp_sqrt_combination(s, t, u) == Ordering::Equal);
    }
  }
}

TEST_CASE("PiRational rendering") {
  CHECK(PiRational(q(13, 2)).str() == "13/2·π");
  CHECK(PiRational(q(2)).str() == "2·π");
  CHECK(PiRational(q(13, 2)).decimal() == "20.4203522483");
  CHECK(PiRational(q(1)).render() == "1·π (3.14159265359)");
  CHECK(PiRational(q(1, 3)) < PiRational(q(1, 2)));
}
