#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "caplab/domains.hpp"

namespace caplab {

// Floating-point cross-checks for the exact engine. Nothing here feeds back
// into exact results.

struct OracleConfig {
  std::size_t grid = 4096;
  std::size_t refine_iters = 80;
  double tol = 1e-9;

  void validate() const;
};

/// Maximizer of a function that is unimodal on [lo, hi].
double golden_section_maximize(const std::function<double(double)>& fn, double lo, double hi,
                               std::size_t iters);

/// Grid scan plus golden-section refinement of a smooth function on
/// [lo, hi]; returns the largest value seen.
double maximize_on_interval(const std::function<double(double)>& fn, double lo, double hi,
                            const OracleConfig& cfg);

/// max over psi in [0, pi/2] of pi v1 g(psi)^2 + pi v2 h(psi)^2.
double support_norm_numeric(const IndexVector& v, const EllipsoidPair& pair, const OracleConfig& cfg = {});

/// The same maximum taken over f in [c/a, d/b] via s_profile.
double support_norm_numeric_f(const IndexVector& v, const EllipsoidPair& pair, const OracleConfig& cfg = {});

/// The support objective after substituting f = f(psi):
///   S(f) = pi/(Q - P) [ v1 a^2 (Q - f^2)(1 + P/f)^2 + v2 b^2 (f^2 - P)(1 + Q/f)^2 ]
/// with P = c^2/a^2 and Q = d^2/b^2.
double s_profile(const IndexVector& v, const EllipsoidPair& pair, double f);

/// Closed form S'(f) = 2 pi (f^3 + PQ)(D f - N) / ((Q - P) f^3)
/// where D = v2 b^2 - v1 a^2 and N = v1 c^2 - v2 d^2.
double s_derivative(const IndexVector& v, const EllipsoidPair& pair, double f);

/// Five-point central difference of s_profile.
double s_derivative_fd(const IndexVector& v, const EllipsoidPair& pair, double f);

struct SignCheckReport {
  bool ok = false;
  std::size_t points = 0;
  std::size_t sign_mismatches = 0;
  std::size_t sign_changes = 0;  // of the closed form along the grid
  double max_excess = 0.0;       // max |fd - closed| / max(1e-6, 1e-6 |closed|)
  std::optional<double> f0;      // interior maximizer when it exists
  bool f0_is_max = true;
};

SignCheckReport s_derivative_signcheck(const IndexVector& v, const EllipsoidPair& pair,
                                       const OracleConfig& cfg = {});

/// Number of strict interior local maxima of the sampled psi-profile.
std::size_t interior_local_maxima(const IndexVector& v, const EllipsoidPair& pair,
                                  const OracleConfig& cfg = {});

/// Floating-point capacity computed without the exact branch logic: sorted
/// multiples for ellipsoids, the rectangle norm for polydisks and numeric
/// support norms for sums.
double capacity_numeric(std::uint64_t k, const DomainSpec& domain, const OracleConfig& cfg = {});

}  // namespace caplab
