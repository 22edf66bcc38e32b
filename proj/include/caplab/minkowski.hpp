#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "caplab/domains.hpp"

namespace caplab {

/// Radial coordinates of a boundary point of E(a,b) + E(c,d) in the two
/// complex planes; the angles theta1, theta2 are carried over unchanged.
struct BoundaryPoint {
  double g = 0.0;
  double h = 0.0;
  double psi = 0.0;
};

/// Point of the moment image (pi g^2, pi h^2) of the sum's boundary.
struct OmegaSample {
  double psi = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
};

/// f(psi) = sqrt((c/a)^2 cos^2 psi + (d/b)^2 sin^2 psi).
double cy_f(double psi, const EllipsoidPair& pair);

/// Aligned Chirikjian-Yan map:
///   g = cos(psi) (a + c^2/(a f)),  h = sin(psi) (b + d^2/(b f)).
BoundaryPoint cy_boundary_point(double psi, const EllipsoidPair& pair);

/// A1 x + A2 (A2^T A1^{-1} x / |A2^T A1^{-1} x|), a point on the boundary of
/// A1(B) + A2(B) for a unit vector x.
Eigen::VectorXd general_cy_map(const Eigen::MatrixXd& a1, const Eigen::MatrixXd& a2,
                               const Eigen::VectorXd& x);

/// samples + 1 points at uniformly spaced psi in [0, pi/2]. The endpoints are
/// computed from the exact radii.
std::vector<OmegaSample> omega_curve(const EllipsoidPair& pair, std::size_t samples);

/// Slope C'(pi g^2) = -(b^2 f + d^2)/(a^2 f + c^2) of the Omega boundary
/// viewed as the graph x2 = C(x1).
double omega_slope(double psi, const EllipsoidPair& pair);

/// g'(psi) of the aligned map.
double cy_g_derivative(double psi, const EllipsoidPair& pair);

/// C''(pi g^2) = a^2 b^2 (c^2/a^2 - d^2/b^2)^2 cos(psi) sin(psi)
///               / (2 pi g g' f (a^2 f + c^2)^2).
double omega_curvature(double psi, const EllipsoidPair& pair);

struct ConvexityReport {
  bool ok = false;
  double worst_c1 = 0.0;  // largest sampled C'
  double worst_c2 = 0.0;  // largest sampled C''
  std::size_t points = 0;
  bool symbolic_ok = false;  // -(b^2 f + d^2)/(a^2 f + c^2) < 0 and g' < 0 everywhere sampled
};

ConvexityReport convexity_check(const EllipsoidPair& pair, std::size_t grid);

/// Exact dual norm max{ <v, w> : w in Omega } of the moment image of a
/// normalized, non-proportional pair.
PiRational support_norm(const IndexVector& v, const EllipsoidPair& pair);

struct SumCapacity {
  PiRational value;
  IndexVector argmin;  // smallest v1 among minimizers
};

SumCapacity sum_capacity_detail(std::uint64_t k, const EllipsoidPair& pair);
PiRational sum_capacity(std::uint64_t k, const EllipsoidPair& pair);

struct StrictnessReport {
  bool strict = false;
  PiRational c_sum;
  PiRational c_inner;
  /// Interior-critical-point test applied to every minimizing vector of
  /// c_k(E(a+c, b+d)); strict containment holds iff it passes for all of them.
  bool criterion_strict = false;
  std::vector<IndexVector> inner_argmins;
  bool agrees = false;
};

StrictnessReport strictness_check(std::uint64_t k, const EllipsoidPair& pair);

}  // namespace caplab
