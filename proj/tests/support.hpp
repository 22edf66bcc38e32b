#pragma once

// Test-only generators and independent oracles. Nothing here calls the
// library's branch logic for the values it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "caplab/domains.hpp"

namespace caplab::testing {

inline Rational random_radius(std::mt19937_64& rng, int height = 20) {
  std::uniform_int_distribution<int> pick(1, height);
  return Rational(BigInt(pick(rng)), BigInt(pick(rng)));
}

inline Ellipsoid random_ellipsoid(std::mt19937_64& rng, int height = 20) {
  return Ellipsoid::make(random_radius(rng, height), random_radius(rng, height));
}

/// A normalized pair that is not proportional.
inline EllipsoidPair random_generic_pair(std::mt19937_64& rng, int height = 20) {
  for (;;) {
    const auto pair = EllipsoidPair::make(random_ellipsoid(rng, height), random_ellipsoid(rng, height)).normalize();
    if (!pair.proportional()) return pair;
  }
}

/// k-th element of the sorted multiset { i a^2 } u { j b^2 }, i, j = 1..k.
inline Rational sorted_multiples_oracle(std::uint64_t k, const Rational& a, const Rational& b) {
  std::vector<Rational> all;
  all.reserve(2 * k);
  for (std::uint64_t i = 1; i <= k; ++i) {
    const Rational n(BigInt(i), BigInt(1));
    all.push_back(n * a.square());
    all.push_back(n * b.square());
  }
  std::nth_element(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k - 1), all.end());
  return all[k - 1];
}

/// max over psi of pi (v1 g^2 + v2 h^2) by a dense uniform scan of the
/// aligned boundary map; no refinement, no closed forms.
inline double dense_scan_support(std::uint64_t v1, std::uint64_t v2, const EllipsoidPair& pair,
                                 std::size_t points = 400'000) {
  const double a = pair.a().to_double(), b = pair.b().to_double();
  const double c = pair.c().to_double(), d = pair.d().to_double();
  double best = 0.0;
  for (std::size_t i = 0; i <= points; ++i) {
    const double psi = std::numbers::pi / 2 * static_cast<double>(i) / static_cast<double>(points);
    const double cs = std::cos(psi), sn = std::sin(psi);
    const double f = std::sqrt(c * c / (a * a) * cs * cs + d * d / (b * b) * sn * sn);
    const double g = cs * (a + c * c / (a * f));
    const double h = sn * (b + d * d / (b * f));
    best = std::max(best, std::numbers::pi * (static_cast<double>(v1) * g * g + static_cast<double>(v2) * h * h));
  }
  return best;
}

/// Composite Simpson rule on [lo, hi] with n (even) panels.
template <typename Fn>
double simpson(Fn fn, double lo, double hi, std::size_t n = 20'000) {
  const double h = (hi - lo) / static_cast<double>(n);
  double sum = fn(lo) + fn(hi);
  for (std::size_t i = 1; i < n; ++i) sum += fn(lo + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

/// Mean width of a toric body in C^2 from the density sin(2 psi) of
/// psi = atan(|z2| / |z1|) for uniform points on S^3.
template <typename Support>
double mean_width_quadrature(Support support) {
  return simpson([&](double psi) { return support(std::cos(psi), std::sin(psi)) * std::sin(2 * psi); }, 0.0,
                 std::numbers::pi / 2);
}

inline Rational q(std::int64_t num, std::int64_t den = 1) { return Rational(BigInt(num), BigInt(den)); }

}  // namespace caplab::testing
