#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "caplab/domains.hpp"

namespace caplab {

enum class Verdict { Violates, Satisfies, Equality };

const char* to_string(Verdict verdict);
Verdict verdict_from_string(const std::string& text);

/// Exact record of c_k(E1 + E2)^{1/2} versus c_k(E1)^{1/2} + c_k(E2)^{1/2}.
struct BMCertificate {
  std::uint64_t k = 0;
  Ellipsoid domain1;
  Ellipsoid domain2;
  PiRational c_sum;
  PiRational c1;
  PiRational c2;
  Verdict verdict = Verdict::Satisfies;
  Ordering comparison = Ordering::Equal;  // sqrt(c_sum) vs sqrt(c1) + sqrt(c2)

  friend bool operator==(const BMCertificate&, const BMCertificate&) = default;
};

/// (E(1 + 1/k, 1), E(1, 1 + 1/k)) for even k >= 2.
EllipsoidPair even_family(std::uint64_t k);
/// (E(1, 1), E(1 - 1/k, 1)) for odd k >= 3.
EllipsoidPair odd_family(std::uint64_t k);
/// even_family or odd_family by parity of k.
EllipsoidPair family_for(std::uint64_t k);

/// Expected capacity coefficient of the family sum: 2k + 2 + 1/k for even k,
/// ((k+1)/2)(2 - 1/k)^2 for odd k.
Rational family_expected_coeff(std::uint64_t k);

BMCertificate bm_check(std::uint64_t k, const Ellipsoid& e1, const Ellipsoid& e2);
BMCertificate bm_check(std::uint64_t k, const EllipsoidPair& pair);

/// Recomputes every value of the certificate from (k, domain1, domain2).
bool certificate_consistent(const BMCertificate& cert);

struct ReproductionRow {
  BMCertificate certificate;
  std::string family;  // "even" or "odd"
  Rational expected;
  bool matches = false;

  bool ok() const { return matches && certificate.verdict == Verdict::Violates; }
};

struct Reproduction {
  std::vector<ReproductionRow> rows;
  bool ok = false;
};

/// One certificate per k in [2, k_max] from the matching family.
Reproduction reproduce_theorem(std::uint64_t k_max, unsigned jobs = 0);

struct MeanWidthEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo mean width of a 4-dimensional ellipsoid or polydisk from
/// uniform points on S^3. Samples are drawn in fixed-size chunks with
/// per-chunk generators derived from the seed, so the estimate does not
/// depend on `jobs`.
MeanWidthEstimate mean_width_estimate(const DomainSpec& domain, std::uint64_t samples, std::uint64_t seed,
                                      unsigned jobs = 0);

/// Support function h_K(x) of a 4-dimensional ellipsoid or polydisk.
double support_function(const DomainSpec& domain, const double (&x)[4]);

struct CriterionReport {
  std::uint64_t k = 0;
  bool violating = false;
  Rational lhs;  // k / floor((k+1)/2)
  Rational rhs;  // 16/9
  PiRational polydisk_capacity;  // c_k(P(1,1)) = pi k
  PiRational ball_capacity;      // c_k(B^4(1)) = pi floor((k+1)/2)
  Rational normalized_coeff;     // pi * c_k(P(1,1)) / c_k(B^4(1)), as a multiple of pi
  Rational mean_width_bound;     // M(P(1,1))^2 = 16/9, as a multiple of pi
};

/// Decides k / floor((k+1)/2) > 16/9: the mean-width bound a
/// Brunn-Minkowski capacity must obey fails for the polydisk P(1,1).
CriterionReport ostrover_criterion(std::uint64_t k);

/// Exhaustive sweep over pairs E(a,b), E(c,d) with radii p/q, 1 <= p, q <=
/// height, for k in [k_min, k_max]. Pairs equal up to swapping or common
/// scaling are visited once. Returns the violating certificates in sweep
/// order.
std::vector<BMCertificate> search_violations(std::uint32_t height, std::uint64_t k_min, std::uint64_t k_max,
                                             unsigned jobs = 0);

/// Distinct rationals p/q with 1 <= p, q <= height, ascending.
std::vector<Rational> radii_of_height(std::uint32_t height);

}  // namespace caplab
