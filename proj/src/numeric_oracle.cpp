#include "caplab/numeric_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "caplab/error.hpp"

namespace caplab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

struct Geometry {
  double a, b, c, d;
  double v1, v2;

  double lo() const { return c / a; }
  double hi() const { return d / b; }
};

Geometry geometry(const IndexVector& v, const EllipsoidPair& pair, const char* op) {
  require(pair.normalized, std::string(op) + ": pair must be normalized (c/a <= d/b)");
  require(!pair.proportional(), std::string(op) + ": pair must not be proportional");
  require(v.k() >= 1, std::string(op) + ": v = (0,0) is not allowed");
  return {pair.a().to_double(), pair.b().to_double(), pair.c().to_double(), pair.d().to_double(),
          static_cast<double>(v.v1), static_cast<double>(v.v2)};
}

// pi v1 g^2 + pi v2 h^2 along the aligned boundary parameterization.
double psi_objective(const Geometry& s, double psi) {
  const double cs = std::cos(psi), sn = std::sin(psi);
  const double f = std::sqrt((s.c * s.c) / (s.a * s.a) * cs * cs + (s.d * s.d) / (s.b * s.b) * sn * sn);
  const double g = cs * (s.a + s.c * s.c / (s.a * f));
  const double h = sn * (s.b + s.d * s.d / (s.b * f));
  return kPi * (s.v1 * g * g + s.v2 * h * h);
}

template <typename T>
T s_value(const Geometry& s, T f) {
  const T a = s.a, b = s.b, c = s.c, d = s.d;
  const T p = (c * c) / (a * a);
  const T q = (d * d) / (b * b);
  const T first = T(s.v1) * a * a * (q - f * f) * (1 + p / f) * (1 + p / f);
  const T second = T(s.v2) * b * b * (f * f - p) * (1 + q / f) * (1 + q / f);
  return T(kPi) * (first + second) / (q - p);
}

double s_prime(const Geometry& s, double f) {
  const double p = (s.c * s.c) / (s.a * s.a);
  const double q = (s.d * s.d) / (s.b * s.b);
  const double denom = s.v2 * s.b * s.b - s.v1 * s.a * s.a;
  const double numer = s.v1 * s.c * s.c - s.v2 * s.d * s.d;
  return 2.0 * kPi * (f * f * f + p * q) * (denom * f - numer) / ((q - p) * f * f * f);
}

double s_prime_fd(const Geometry& s, double f) {
  const long double h = 1e-3L * f;
  const long double x = f;
  const long double d = (-s_value(s, x + 2 * h) + 8 * s_value(s, x + h) - 8 * s_value(s, x - h) +
                         s_value(s, x - 2 * h)) /
                        (12 * h);
  return static_cast<double>(d);
}

void require_in_range(const Geometry& s, double f) {
  const double slack = 1e-12 * s.hi();
  require(f >= s.lo() - slack && f <= s.hi() + slack,
          "s_profile: f must lie in [c/a, d/b], got " + std::to_string(f));
}

}  // namespace

void OracleConfig::validate() const {
  require_argument(grid >= 64, "oracle grid must be at least 64");
  require_argument(refine_iters >= 1, "oracle refinement needs at least one iteration");
  require_argument(tol > 0.0, "oracle tolerance must be positive");
}

double golden_section_maximize(const std::function<double(double)>& fn, double lo, double hi,
                               std::size_t iters) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = fn(x1), f2 = fn(x2);
  for (std::size_t i = 0; i < iters && hi - lo > 0.0; ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = fn(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = fn(x1);
    }
  }
  return f1 < f2 ? x2 : x1;
}

double maximize_on_interval(const std::function<double(double)>& fn, double lo, double hi,
                            const OracleConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.grid;
  auto at = [&](std::size_t i) {
    return i == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
  };
  std::size_t best = 0;
  double best_value = fn(lo);
  for (std::size_t i = 1; i <= n; ++i) {
    const double value = fn(at(i));
    if (value > best_value) {
      best_value = value;
      best = i;
    }
  }
  const double left = at(best == 0 ? 0 : best - 1);
  const double right = at(best == n ? n : best + 1);
  const double x = golden_section_maximize(fn, left, right, cfg.refine_iters);
  return std::max(best_value, fn(x));
}

double support_norm_numeric(const IndexVector& v, const EllipsoidPair& pair, const OracleConfig& cfg) {
  const Geometry s = geometry(v, pair, "support_norm_numeric");
  return maximize_on_interval([&s](double psi) { return psi_objective(s, psi); }, 0.0, kHalfPi, cfg);
}

double support_norm_numeric_f(const IndexVector& v, const EllipsoidPair& pair, const OracleConfig& cfg) {
  const Geometry s = geometry(v, pair, "support_norm_numeric_f");
  return maximize_on_interval([&s](double f) { return s_value(s, f); }, s.lo(), s.hi(), cfg);
}

double s_profile(const IndexVector& v, const EllipsoidPair& pair, double f) {
  const Geometry s = geometry(v, pair, "s_profile");
  require_in_range(s, f);
  return s_value(s, f);
}

double s_derivative(const IndexVector& v, const EllipsoidPair& pair, double f) {
  const Geometry s = geometry(v, pair, "s_derivative");
  require_in_range(s, f);
  return s_prime(s, f);
}

double s_derivative_fd(const IndexVector& v, const EllipsoidPair& pair, double f) {
  const Geometry s = geometry(v, pair, "s_derivative_fd");
  require_in_range(s, f);
  return s_prime_fd(s, f);
}

SignCheckReport s_derivative_signcheck(const IndexVector& v, const EllipsoidPair& pair,
                                       const OracleConfig& cfg) {
  cfg.validate();
  const Geometry s = geometry(v, pair, "s_derivative_signcheck");
  SignCheckReport report;
  int previous_sign = 0;
  for (std::size_t i = 1; i <= cfg.grid; ++i) {
    const double f = s.lo() + (s.hi() - s.lo()) * static_cast<double>(i) / static_cast<double>(cfg.grid + 1);
    const double closed = s_prime(s, f);
    const double fd = s_prime_fd(s, f);
    const double allowed = std::max(1e-6, 1e-6 * std::abs(closed));
    const double error = std::abs(fd - closed);
    report.max_excess = std::max(report.max_excess, error / allowed);
    const bool sign_differs = (fd > 0) != (closed > 0);
    if (error > allowed || (sign_differs && std::abs(closed) > allowed)) ++report.sign_mismatches;
    const int sign = closed > 0 ? 1 : (closed < 0 ? -1 : 0);
    if (sign != 0) {
      if (previous_sign != 0 && sign != previous_sign) ++report.sign_changes;
      previous_sign = sign;
    }
    ++report.points;
  }

  const double denom = s.v2 * s.b * s.b - s.v1 * s.a * s.a;
  const double numer = s.v1 * s.c * s.c - s.v2 * s.d * s.d;
  if (denom < 0.0 && numer / denom > s.lo() && numer / denom < s.hi()) {
    const long double f0 = numer / denom;
    const long double eps = 1e-4L * (s.hi() - s.lo());
    report.f0 = static_cast<double>(f0);
    const long double peak = s_value(s, f0);
    report.f0_is_max = peak >= s_value(s, std::max<long double>(f0 - eps, s.lo())) &&
                       peak >= s_value(s, std::min<long double>(f0 + eps, s.hi()));
  }
  report.ok = report.sign_mismatches == 0 && report.f0_is_max;
  return report;
}

std::size_t interior_local_maxima(const IndexVector& v, const EllipsoidPair& pair, const OracleConfig& cfg) {
  cfg.validate();
  const Geometry s = geometry(v, pair, "interior_local_maxima");
  std::vector<double> values(cfg.grid + 1);
  for (std::size_t i = 0; i <= cfg.grid; ++i) {
    values[i] = psi_objective(s, kHalfPi * static_cast<double>(i) / static_cast<double>(cfg.grid));
  }
  std::size_t count = 0;
  for (std::size_t i = 1; i < cfg.grid; ++i) {
    if (values[i] > values[i - 1] && values[i] > values[i + 1]) ++count;
  }
  return count;
}

double capacity_numeric(std::uint64_t k, const DomainSpec& domain, const OracleConfig& cfg) {
  require(k >= 1, "capacity index k must be at least 1");
  auto sorted_multiples = [k](double x, double y) {
    std::vector<double> all;
    all.reserve(2 * k);
    for (std::uint64_t i = 1; i <= k; ++i) {
      all.push_back(kPi * x * x * static_cast<double>(i));
      all.push_back(kPi * y * y * static_cast<double>(i));
    }
    std::nth_element(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k - 1), all.end());
    return all[k - 1];
  };
  return std::visit(
      [&](const auto& shape) -> double {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Ellipsoid>) {
          return sorted_multiples(shape.a.to_double(), shape.b.to_double());
        } else if constexpr (std::is_same_v<T, Polydisk>) {
          const double sa = shape.a.to_double() * shape.a.to_double();
          const double sb = shape.b.to_double() * shape.b.to_double();
          double best = INFINITY;
          for (std::uint64_t v1 = 0; v1 <= k; ++v1) {
            best = std::min(best, kPi * (static_cast<double>(v1) * sa + static_cast<double>(k - v1) * sb));
          }
          return best;
        } else if constexpr (std::is_same_v<T, EllipsoidPair>) {
          const EllipsoidPair p = shape.normalize();
          if (p.proportional()) {
            return sorted_multiples((p.a() + p.c()).to_double(), (p.b() + p.d()).to_double());
          }
          double best = INFINITY;
          for (std::uint64_t v1 = 0; v1 <= k; ++v1) {
            best = std::min(best, support_norm_numeric({v1, k - v1}, p, cfg));
          }
          return best;
        } else {
          return capacity_numeric(k, *shape.inner, cfg);
        }
      },
      domain.shape);
}

}  // namespace caplab
