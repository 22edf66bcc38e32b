#pragma once

#include <cstdint>
#include <memory>
#include <variant>

#include "caplab/rational.hpp"

namespace caplab {

/// Symplectic ellipsoid E(a,b) = { |z1|^2/a^2 + |z2|^2/b^2 < 1 } in C^2.
struct Ellipsoid {
  Rational a;
  Rational b;

  static Ellipsoid make(Rational a, Rational b);
  Ellipsoid scaled(const Rational& lambda) const { return make(a * lambda, b * lambda); }
  friend bool operator==(const Ellipsoid&, const Ellipsoid&) = default;
};

/// Polydisk P(a,b): product of open disks of radii a and b.
struct Polydisk {
  Rational a;
  Rational b;

  static Polydisk make(Rational a, Rational b);
  friend bool operator==(const Polydisk&, const Polydisk&) = default;
};

/// Two ellipsoids whose Minkowski sum is analyzed.
///
/// A normalized pair satisfies c/a <= d/b where (a,b) are the radii of
/// `first` and (c,d) those of `second`; normalize() swaps the two ellipsoids
/// (never the axes) to get there.
struct EllipsoidPair {
  Ellipsoid first;
  Ellipsoid second;
  bool normalized = false;

  static EllipsoidPair make(Ellipsoid first, Ellipsoid second);
  EllipsoidPair normalize() const;

  const Rational& a() const { return first.a; }
  const Rational& b() const { return first.b; }
  const Rational& c() const { return second.a; }
  const Rational& d() const { return second.b; }

  /// c*b == a*d: the sum is the ellipsoid E(a+c, b+d).
  bool proportional() const;
  /// E(a+c, b+d), contained in the sum with equality iff proportional.
  Ellipsoid inner_ellipsoid() const;

  friend bool operator==(const EllipsoidPair&, const EllipsoidPair&) = default;
};

/// Exponent vector (v1, v2) of the Gutt-Hutchings minimum; k = v1 + v2.
struct IndexVector {
  std::uint64_t v1 = 0;
  std::uint64_t v2 = 0;

  std::uint64_t k() const { return v1 + v2; }
  friend bool operator==(const IndexVector&, const IndexVector&) = default;
};

struct DomainSpec;

/// X x B(R) where the ball factor has complex dimension m.
struct ProductWithBall {
  std::shared_ptr<const DomainSpec> inner;
  std::uint32_t m = 1;
  Rational radius;

  friend bool operator==(const ProductWithBall& x, const ProductWithBall& y);
};

struct DomainSpec {
  std::variant<Ellipsoid, Polydisk, EllipsoidPair, ProductWithBall> shape;

  static DomainSpec ellipsoid(Rational a, Rational b);
  static DomainSpec polydisk(Rational a, Rational b);
  static DomainSpec sum(Ellipsoid first, Ellipsoid second);
  static DomainSpec product(DomainSpec inner, std::uint32_t m, Rational radius);

  /// Real dimension of the ambient space.
  std::uint32_t dimension() const;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

/// k-th element (with multiplicity) of the merged sequence of positive
/// multiples of pi*a^2 and pi*b^2.
PiRational ellipsoid_capacity(std::uint64_t k, const Ellipsoid& e);

PiRational polydisk_capacity(std::uint64_t k, const Polydisk& p);

/// c_k(X x B(R)) = c_k(X) whenever pi*R^2 > c_k(X). Smaller radii raise a
/// precondition error; the general splitting formula is not evaluated here.
PiRational product_with_ball_capacity(std::uint64_t k, const DomainSpec& inner, std::uint32_t m,
                                      const Rational& radius);

PiRational capacity(std::uint64_t k, const DomainSpec& domain);

DomainSpec scale_domain(const Rational& lambda, const DomainSpec& domain);

}  // namespace caplab
