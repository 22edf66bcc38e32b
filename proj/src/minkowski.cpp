#include "caplab/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "caplab/error.hpp"

namespace caplab {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

struct Radii {
  double a, b, c, d;
};

Radii radii(const EllipsoidPair& pair) {
  return {pair.a().to_double(), pair.b().to_double(), pair.c().to_double(), pair.d().to_double()};
}

void require_generic(const EllipsoidPair& pair, const char* op) {
  require(pair.normalized, std::string(op) + ": pair must be normalized (c/a <= d/b)");
  require(!pair.proportional(),
          std::string(op) + ": proportional pair, the sum is the ellipsoid E(a+c,b+d)");
}

void require_angle(double psi) {
  require(psi >= 0.0 && psi <= kHalfPi, "psi must lie in [0, pi/2], got " + std::to_string(psi));
}

Rational from_index(std::uint64_t k) { return Rational(BigInt(k), BigInt(1)); }

// f0 = (v1 c^2 - v2 d^2) / (v2 b^2 - v1 a^2) when the denominator is negative
// and f0 lies in the open interval (c/a, d/b); otherwise the maximum of S is
// attained at an endpoint.
std::optional<Rational> interior_maximizer(const IndexVector& v, const EllipsoidPair& pair) {
  const Rational v1 = from_index(v.v1);
  const Rational v2 = from_index(v.v2);
  const Rational sq_a = pair.a().square(), sq_b = pair.b().square();
  const Rational sq_c = pair.c().square(), sq_d = pair.d().square();
  const Rational denom = v2 * sq_b - v1 * sq_a;
  if (denom.sign() >= 0) return std::nullopt;
  const Rational f0 = (v1 * sq_c - v2 * sq_d) / denom;
  if (cmp_rational_sqrt(f0, sq_c / sq_a) != Ordering::Greater) return std::nullopt;
  if (cmp_rational_sqrt(f0, sq_d / sq_b) != Ordering::Less) return std::nullopt;
  return f0;
}

Rational endpoint_norm(const IndexVector& v, const EllipsoidPair& pair) {
  return max(from_index(v.v1) * (pair.a() + pair.c()).square(),
             from_index(v.v2) * (pair.b() + pair.d()).square());
}

}  // namespace

double cy_f(double psi, const EllipsoidPair& pair) {
  const auto [a, b, c, d] = radii(pair);
  const double cs = std::cos(psi), sn = std::sin(psi);
  return std::sqrt((c * c) / (a * a) * cs * cs + (d * d) / (b * b) * sn * sn);
}

BoundaryPoint cy_boundary_point(double psi, const EllipsoidPair& pair) {
  require_generic(pair, "cy_boundary_point");
  require_angle(psi);
  if (psi == 0.0) return {(pair.a() + pair.c()).to_double(), 0.0, psi};
  if (psi == kHalfPi) return {0.0, (pair.b() + pair.d()).to_double(), psi};
  const auto [a, b, c, d] = radii(pair);
  const double f = cy_f(psi, pair);
  return {std::cos(psi) * (a + c * c / (a * f)), std::sin(psi) * (b + d * d / (b * f)), psi};
}

Eigen::VectorXd general_cy_map(const Eigen::MatrixXd& a1, const Eigen::MatrixXd& a2,
                               const Eigen::VectorXd& x) {
  const auto n = x.size();
  require_argument(n > 0 && a1.rows() == n && a1.cols() == n && a2.rows() == n && a2.cols() == n,
                   "general_cy_map: matrix and vector dimensions disagree");
  require(std::abs(x.norm() - 1.0) <= 1e-12, "general_cy_map: x must be a unit vector");
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(a1);
  require(lu.isInvertible(), "general_cy_map: A1 is singular");
  const Eigen::VectorXd y = a2.transpose() * lu.solve(x);
  const double norm = y.norm();
  require(norm > 0.0, "general_cy_map: A2^T A1^{-1} x vanishes");
  return a1 * x + a2 * (y / norm);
}

std::vector<OmegaSample> omega_curve(const EllipsoidPair& pair, std::size_t samples) {
  require_generic(pair, "omega_curve");
  require(samples >= 2, "omega_curve needs at least 2 samples");
  std::vector<OmegaSample> out;
  out.reserve(samples + 1);
  out.push_back({0.0, std::numbers::pi * (pair.a() + pair.c()).square().to_double(), 0.0});
  for (std::size_t i = 1; i < samples; ++i) {
    const double psi = kHalfPi * static_cast<double>(i) / static_cast<double>(samples);
    const auto p = cy_boundary_point(psi, pair);
    out.push_back({psi, std::numbers::pi * p.g * p.g, std::numbers::pi * p.h * p.h});
  }
  out.push_back({kHalfPi, 0.0, std::numbers::pi * (pair.b() + pair.d()).square().to_double()});
  return out;
}

double omega_slope(double psi, const EllipsoidPair& pair) {
  const auto [a, b, c, d] = radii(pair);
  const double f = cy_f(psi, pair);
  return -(b * b * f + d * d) / (a * a * f + c * c);
}

double cy_g_derivative(double psi, const EllipsoidPair& pair) {
  const auto [a, b, c, d] = radii(pair);
  const double f = cy_f(psi, pair);
  const double cs = std::cos(psi), sn = std::sin(psi);
  const double ratio_gap = (c * c) / (a * a) - (d * d) / (b * b);
  return -sn * (a + c * c / (a * f)) + cs * cs * sn * c * c / (a * f * f * f) * ratio_gap;
}

double omega_curvature(double psi, const EllipsoidPair& pair) {
  const auto [a, b, c, d] = radii(pair);
  const double f = cy_f(psi, pair);
  const double g = cy_boundary_point(psi, pair).g;
  const double ratio_gap = (c * c) / (a * a) - (d * d) / (b * b);
  const double denom = a * a * f + c * c;
  const double numerator = a * a * b * b * ratio_gap * ratio_gap * std::cos(psi) * std::sin(psi);
  return numerator / (2.0 * std::numbers::pi * g * cy_g_derivative(psi, pair) * f * denom * denom);
}

ConvexityReport convexity_check(const EllipsoidPair& pair, std::size_t grid) {
  require_generic(pair, "convexity_check");
  require(grid >= 1, "convexity_check needs a positive grid");
  const auto [a, b, c, d] = radii(pair);
  ConvexityReport report;
  report.worst_c1 = -INFINITY;
  report.worst_c2 = -INFINITY;
  report.ok = true;
  report.symbolic_ok = true;
  for (std::size_t i = 1; i <= grid; ++i) {
    const double psi = kHalfPi * static_cast<double>(i) / static_cast<double>(grid + 1);
    const double f = cy_f(psi, pair);
    const double c1 = omega_slope(psi, pair);
    const double c2 = omega_curvature(psi, pair);
    report.worst_c1 = std::max(report.worst_c1, c1);
    report.worst_c2 = std::max(report.worst_c2, c2);
    report.ok = report.ok && c1 < 0.0 && c2 < 0.0;
    // C' is minus a ratio of positive terms; C'' = (positive) / (g g') with g > 0.
    const bool slope_sign = (b * b * f + d * d) > 0.0 && (a * a * f + c * c) > 0.0;
    const bool g_decreasing = cy_g_derivative(psi, pair) < 0.0;
    report.symbolic_ok = report.symbolic_ok && slope_sign && g_decreasing;
    ++report.points;
  }
  report.ok = report.ok && report.symbolic_ok;
  return report;
}

PiRational support_norm(const IndexVector& v, const EllipsoidPair& pair) {
  require_generic(pair, "support_norm");
  require(v.k() >= 1, "support_norm: v = (0,0) has no dual norm");
  if (interior_maximizer(v, pair)) {
    const Rational v1 = from_index(v.v1);
    const Rational v2 = from_index(v.v2);
    const Rational sq_a = pair.a().square(), sq_b = pair.b().square();
    const Rational sq_c = pair.c().square(), sq_d = pair.d().square();
    const Rational numer = v1 * sq_c - v2 * sq_d;
    const Rational denom = v2 * sq_b - v1 * sq_a;
    return PiRational((sq_b * sq_c - sq_a * sq_d) * v1 * v2 * (numer.reciprocal() + denom.reciprocal()));
  }
  return PiRational(endpoint_norm(v, pair));
}

SumCapacity sum_capacity_detail(std::uint64_t k, const EllipsoidPair& pair) {
  require(k >= 1, "capacity index k must be at least 1");
  const EllipsoidPair p = pair.normalized ? pair : pair.normalize();
  const bool proportional = p.proportional();
  std::optional<SumCapacity> best;
  for (std::uint64_t v1 = 0; v1 <= k; ++v1) {
    const IndexVector v{v1, k - v1};
    // Proportional sums are ellipsoids, whose dual norm is the endpoint maximum.
    PiRational value = proportional ? PiRational(endpoint_norm(v, p)) : support_norm(v, p);
    if (!best || value < best->value) best = SumCapacity{std::move(value), v};
  }
  return *best;
}

PiRational sum_capacity(std::uint64_t k, const EllipsoidPair& pair) {
  return sum_capacity_detail(k, pair).value;
}

StrictnessReport strictness_check(std::uint64_t k, const EllipsoidPair& pair) {
  require(k >= 1, "capacity index k must be at least 1");
  const EllipsoidPair p = pair.normalized ? pair : pair.normalize();
  StrictnessReport report;
  report.c_inner = ellipsoid_capacity(k, p.inner_ellipsoid());
  report.c_sum = sum_capacity(k, p);
  report.strict = report.c_sum > report.c_inner;

  report.criterion_strict = true;
  for (std::uint64_t v1 = 0; v1 <= k; ++v1) {
    const IndexVector v{v1, k - v1};
    if (endpoint_norm(v, p) != report.c_inner.coeff()) continue;
    report.inner_argmins.push_back(v);
    if (p.proportional() || !interior_maximizer(v, p)) report.criterion_strict = false;
  }
  report.agrees = report.criterion_strict == report.strict;
  return report;
}

}  // namespace caplab
