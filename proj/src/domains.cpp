#include "caplab/domains.hpp"

#include <string>

#include "caplab/error.hpp"
#include "caplab/minkowski.hpp"

namespace caplab {

namespace {

Rational from_index(std::uint64_t k) { return Rational(BigInt(k), BigInt(1)); }

// Number of positive multiples of `step` that are <= t.
BigInt count_multiples(const Rational& t, const Rational& step) { return (t / step).floor(); }

}  // namespace

Ellipsoid Ellipsoid::make(Rational a, Rational b) {
  require_argument(a.sign() > 0 && b.sign() > 0,
                   "ellipsoid radii must be positive, got E(" + a.str() + "," + b.str() + ")");
  return Ellipsoid{std::move(a), std::move(b)};
}

Polydisk Polydisk::make(Rational a, Rational b) {
  require_argument(a.sign() > 0 && b.sign() > 0,
                   "polydisk radii must be positive, got P(" + a.str() + "," + b.str() + ")");
  return Polydisk{std::move(a), std::move(b)};
}

EllipsoidPair EllipsoidPair::make(Ellipsoid first, Ellipsoid second) {
  return EllipsoidPair{Ellipsoid::make(first.a, first.b), Ellipsoid::make(second.a, second.b), false};
}

EllipsoidPair EllipsoidPair::normalize() const {
  // c/a <= d/b  <=>  c*b <= a*d
  if (second.a * first.b <= first.a * second.b) return EllipsoidPair{first, second, true};
  return EllipsoidPair{second, first, true};
}

bool EllipsoidPair::proportional() const { return c() * b() == a() * d(); }

Ellipsoid EllipsoidPair::inner_ellipsoid() const { return Ellipsoid::make(a() + c(), b() + d()); }

bool operator==(const ProductWithBall& x, const ProductWithBall& y) {
  if (x.m != y.m || x.radius != y.radius) return false;
  if (!x.inner || !y.inner) return x.inner == y.inner;
  return *x.inner == *y.inner;
}

DomainSpec DomainSpec::ellipsoid(Rational a, Rational b) {
  return DomainSpec{Ellipsoid::make(std::move(a), std::move(b))};
}

DomainSpec DomainSpec::polydisk(Rational a, Rational b) {
  return DomainSpec{Polydisk::make(std::move(a), std::move(b))};
}

DomainSpec DomainSpec::sum(Ellipsoid first, Ellipsoid second) {
  return DomainSpec{EllipsoidPair::make(std::move(first), std::move(second))};
}

DomainSpec DomainSpec::product(DomainSpec inner, std::uint32_t m, Rational radius) {
  require_argument(!std::holds_alternative<ProductWithBall>(inner.shape),
                   "products with a ball may not be nested");
  require_argument(m >= 1, "ball factor dimension must be positive");
  require_argument(radius.sign() > 0, "ball radius must be positive, got " + radius.str());
  return DomainSpec{ProductWithBall{std::make_shared<const DomainSpec>(std::move(inner)), m, std::move(radius)}};
}

std::uint32_t DomainSpec::dimension() const {
  if (const auto* p = std::get_if<ProductWithBall>(&shape)) return p->inner->dimension() + 2 * p->m;
  return 4;
}

PiRational ellipsoid_capacity(std::uint64_t k, const Ellipsoid& e) {
  require(k >= 1, "capacity index k must be at least 1");
  const Rational sq_a = e.a.square();
  const Rational sq_b = e.b.square();
  const BigInt target(k);
  auto count = [&](const Rational& t) { return count_multiples(t, sq_a) + count_multiples(t, sq_b); };

  // The answer is the smallest candidate multiple t with count(t) >= k;
  // count is monotone so each family of candidates is searched by bisection.
  auto smallest_multiple = [&](const Rational& step) {
    std::uint64_t lo = 1;
    std::uint64_t hi = k;  // count(k * step) >= k
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (count(from_index(mid) * step) >= target) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return from_index(lo) * step;
  };

  return PiRational(min(smallest_multiple(sq_a), smallest_multiple(sq_b)));
}

PiRational polydisk_capacity(std::uint64_t k, const Polydisk& p) {
  require(k >= 1, "capacity index k must be at least 1");
  return PiRational(from_index(k) * min(p.a.square(), p.b.square()));
}

PiRational product_with_ball_capacity(std::uint64_t k, const DomainSpec& inner, std::uint32_t m,
                                      const Rational& radius) {
  require(m >= 1, "ball factor dimension must be positive");
  const PiRational inner_value = capacity(k, inner);
  if (radius.square() <= inner_value.coeff()) {
    throw Error(ErrorCode::Precondition,
                "product stabilization needs pi*R^2 > c_k(X): R^2 = " + radius.square().str() +
                    " but c_" + std::to_string(k) + "(X) = " + inner_value.str());
  }
  return inner_value;
}

PiRational capacity(std::uint64_t k, const DomainSpec& domain) {
  require(k >= 1, "capacity index k must be at least 1");
  return std::visit(
      [k](const auto& shape) -> PiRational {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Ellipsoid>) {
          return ellipsoid_capacity(k, shape);
        } else if constexpr (std::is_same_v<T, Polydisk>) {
          return polydisk_capacity(k, shape);
        } else if constexpr (std::is_same_v<T, EllipsoidPair>) {
          return sum_capacity(k, shape);
        } else {
          return product_with_ball_capacity(k, *shape.inner, shape.m, shape.radius);
        }
      },
      domain.shape);
}

DomainSpec scale_domain(const Rational& lambda, const DomainSpec& domain) {
  require(lambda.sign() > 0, "scale factor must be positive");
  return std::visit(
      [&lambda](const auto& shape) -> DomainSpec {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Ellipsoid>) {
          return DomainSpec{shape.scaled(lambda)};
        } else if constexpr (std::is_same_v<T, Polydisk>) {
          return DomainSpec{Polydisk::make(shape.a * lambda, shape.b * lambda)};
        } else if constexpr (std::is_same_v<T, EllipsoidPair>) {
          return DomainSpec{EllipsoidPair{shape.first.scaled(lambda), shape.second.scaled(lambda), shape.normalized}};
        } else {
          return DomainSpec::product(scale_domain(lambda, *shape.inner), shape.m, shape.radius * lambda);
        }
      },
      domain.shape);
}

}  // namespace caplab
