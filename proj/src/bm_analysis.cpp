#include "caplab/bm_analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <set>

#include "caplab/error.hpp"
#include "caplab/minkowski.hpp"
#include "caplab/parallel.hpp"

namespace caplab {

namespace {

Rational from_index(std::uint64_t k) { return Rational(BigInt(k), BigInt(1)); }

Verdict verdict_for(Ordering comparison) {
  switch (comparison) {
    case Ordering::Less: return Verdict::Violates;
    case Ordering::Equal: return Verdict::Equality;
    case Ordering::Greater: return Verdict::Satisfies;
  }
  return Verdict::Satisfies;
}

constexpr std::uint64_t kMeanWidthChunk = 1u << 14;

// Running mean and sum of squared deviations, merged in chunk order.
struct Moments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& other) {
    if (other.n == 0) return;
    const auto total = n + other.n;
    const double delta = other.mean - mean;
    mean += delta * static_cast<double>(other.n) / static_cast<double>(total);
    m2 += other.m2 + delta * delta * static_cast<double>(n) * static_cast<double>(other.n) / static_cast<double>(total);
    n = total;
  }
};

}  // namespace

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Violates: return "Violates";
    case Verdict::Satisfies: return "Satisfies";
    case Verdict::Equality: return "Equality";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& text) {
  if (text == "Violates") return Verdict::Violates;
  if (text == "Satisfies") return Verdict::Satisfies;
  if (text == "Equality") return Verdict::Equality;
  throw Error(ErrorCode::InvalidArgument, "unknown verdict '" + text + "'");
}

EllipsoidPair even_family(std::uint64_t k) {
  require(k >= 2 && k % 2 == 0, "even family needs an even k >= 2, got " + std::to_string(k));
  const Rational stretched = Rational(1) + from_index(k).reciprocal();
  return EllipsoidPair::make(Ellipsoid::make(stretched, 1), Ellipsoid::make(1, stretched));
}

EllipsoidPair odd_family(std::uint64_t k) {
  require(k >= 3 && k % 2 == 1, "odd family needs an odd k >= 3, got " + std::to_string(k));
  return EllipsoidPair::make(Ellipsoid::make(1, 1), Ellipsoid::make(Rational(1) - from_index(k).reciprocal(), 1));
}

EllipsoidPair family_for(std::uint64_t k) { return k % 2 == 0 ? even_family(k) : odd_family(k); }

Rational family_expected_coeff(std::uint64_t k) {
  const Rational kk = from_index(k);
  if (k % 2 == 0) return Rational(2) * kk + 2 + kk.reciprocal();
  return (kk + 1) / 2 * (Rational(2) - kk.reciprocal()).square();
}

BMCertificate bm_check(std::uint64_t k, const Ellipsoid& e1, const Ellipsoid& e2) {
  require(k >= 1, "capacity index k must be at least 1");
  BMCertificate cert;
  cert.k = k;
  cert.domain1 = Ellipsoid::make(e1.a, e1.b);
  cert.domain2 = Ellipsoid::make(e2.a, e2.b);
  cert.c_sum = sum_capacity(k, EllipsoidPair::make(cert.domain1, cert.domain2));
  cert.c1 = ellipsoid_capacity(k, cert.domain1);
  cert.c2 = ellipsoid_capacity(k, cert.domain2);
  // pi cancels: sqrt(pi s) vs sqrt(pi t) + sqrt(pi u).
  cert.comparison = cmp_sqrt_combination(cert.c_sum.coeff(), cert.c1.coeff(), cert.c2.coeff());
  cert.verdict = verdict_for(cert.comparison);
  return cert;
}

BMCertificate bm_check(std::uint64_t k, const EllipsoidPair& pair) { return bm_check(k, pair.first, pair.second); }

bool certificate_consistent(const BMCertificate& cert) {
  const BMCertificate fresh = bm_check(cert.k, cert.domain1, cert.domain2);
  return fresh.c_sum == cert.c_sum && fresh.c1 == cert.c1 && fresh.c2 == cert.c2 &&
         fresh.verdict == cert.verdict && fresh.comparison == cert.comparison;
}

Reproduction reproduce_theorem(std::uint64_t k_max, unsigned jobs) {
  require(k_max >= 2, "reproduce needs k_max >= 2");
  Reproduction out;
  out.rows.resize(k_max - 1);
  parallel_for(out.rows.size(), jobs, [&](std::size_t i) {
    const std::uint64_t k = i + 2;
    ReproductionRow row;
    row.family = k % 2 == 0 ? "even" : "odd";
    row.certificate = bm_check(k, family_for(k));
    row.expected = family_expected_coeff(k);
    row.matches = row.certificate.c_sum.coeff() == row.expected;
    out.rows[i] = std::move(row);
  });
  out.ok = std::all_of(out.rows.begin(), out.rows.end(), [](const auto& r) { return r.ok(); });
  return out;
}

double support_function(const DomainSpec& domain, const double (&x)[4]) {
  const double r1 = std::hypot(x[0], x[1]);
  const double r2 = std::hypot(x[2], x[3]);
  if (const auto* p = std::get_if<Polydisk>(&domain.shape)) {
    return p->a.to_double() * r1 + p->b.to_double() * r2;
  }
  if (const auto* e = std::get_if<Ellipsoid>(&domain.shape)) {
    // A round ball has constant support on the unit sphere.
    if (e->a == e->b) return e->a.to_double();
    const double a = e->a.to_double(), b = e->b.to_double();
    return std::sqrt(a * a * r1 * r1 + b * b * r2 * r2);
  }
  throw Error(ErrorCode::InvalidArgument, "mean width is available for ellipsoids and polydisks only");
}

MeanWidthEstimate mean_width_estimate(const DomainSpec& domain, std::uint64_t samples, std::uint64_t seed,
                                      unsigned jobs) {
  require(samples >= 100, "mean width needs at least 100 samples");
  require_argument(std::holds_alternative<Ellipsoid>(domain.shape) || std::holds_alternative<Polydisk>(domain.shape),
                   "mean width is available for ellipsoids and polydisks only");

  const std::uint64_t chunks = (samples + kMeanWidthChunk - 1) / kMeanWidthChunk;
  std::vector<Moments> partial(chunks);
  parallel_for(chunks, jobs, [&](std::size_t chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    std::mt19937_64 engine(seq);
    std::normal_distribution<double> normal;
    const std::uint64_t begin = chunk * kMeanWidthChunk;
    const std::uint64_t end = std::min(samples, begin + kMeanWidthChunk);
    Moments m;
    for (std::uint64_t i = begin; i < end; ++i) {
      double x[4];
      double norm2 = 0.0;
      do {
        norm2 = 0.0;
        for (double& xi : x) {
          xi = normal(engine);
          norm2 += xi * xi;
        }
      } while (norm2 == 0.0);
      const double inv = 1.0 / std::sqrt(norm2);
      for (double& xi : x) xi *= inv;
      m.add(support_function(domain, x));
    }
    partial[chunk] = m;
  });

  Moments total;
  for (const auto& m : partial) total.merge(m);
  MeanWidthEstimate est;
  est.mean = total.mean;
  est.samples = samples;
  est.seed = seed;
  const double variance = total.n > 1 ? total.m2 / static_cast<double>(total.n - 1) : 0.0;
  est.std_error = std::sqrt(variance / static_cast<double>(total.n));
  return est;
}

CriterionReport ostrover_criterion(std::uint64_t k) {
  require(k >= 1, "capacity index k must be at least 1");
  CriterionReport report;
  report.k = k;
  const Rational half = from_index((k + 1) / 2);
  report.lhs = from_index(k) / half;
  report.rhs = Rational(16) / 9;
  report.violating = report.lhs > report.rhs;
  report.polydisk_capacity = polydisk_capacity(k, Polydisk::make(1, 1));
  report.ball_capacity = ellipsoid_capacity(k, Ellipsoid::make(1, 1));
  report.normalized_coeff = report.polydisk_capacity.coeff() / report.ball_capacity.coeff();
  report.mean_width_bound = (Rational(4) / 3).square();
  return report;
}

std::vector<Rational> radii_of_height(std::uint32_t height) {
  std::set<Rational> values;
  for (std::uint32_t p = 1; p <= height; ++p) {
    for (std::uint32_t q = 1; q <= height; ++q) values.insert(Rational(BigInt(p), BigInt(q)));
  }
  return {values.begin(), values.end()};
}

std::vector<BMCertificate> search_violations(std::uint32_t height, std::uint64_t k_min, std::uint64_t k_max,
                                             unsigned jobs) {
  require(height >= 1, "search height must be positive");
  require(k_min >= 1 && k_min <= k_max, "search needs 1 <= k_min <= k_max");
  const auto radii = radii_of_height(height);

  std::vector<EllipsoidPair> pairs;
  std::set<std::array<Rational, 3>> seen;
  for (const auto& a : radii) {
    for (const auto& b : radii) {
      for (const auto& c : radii) {
        for (const auto& d : radii) {
          const std::array<Rational, 3> forward{b / a, c / a, d / a};
          const std::array<Rational, 3> swapped{d / c, a / c, b / c};
          if (!seen.insert(std::min(forward, swapped)).second) continue;
          pairs.push_back(EllipsoidPair::make(Ellipsoid::make(a, b), Ellipsoid::make(c, d)));
        }
      }
    }
  }

  const std::uint64_t span = k_max - k_min + 1;
  std::vector<std::optional<BMCertificate>> results(pairs.size() * span);
  parallel_for(results.size(), jobs, [&](std::size_t i) {
    auto cert = bm_check(k_min + i % span, pairs[i / span]);
    if (cert.verdict == Verdict::Violates) results[i] = std::move(cert);
  });

  std::vector<BMCertificate> out;
  for (auto& r : results) {
    if (r) out.push_back(std::move(*r));
  }
  return out;
}

}  // namespace caplab
