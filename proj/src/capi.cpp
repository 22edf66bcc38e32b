#include "capacity_lab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "caplab/bm_analysis.hpp"
#include "caplab/error.hpp"
#include "caplab/literal.hpp"
#include "caplab/minkowski.hpp"
#include "caplab/numeric_oracle.hpp"
#include "caplab/parallel.hpp"
#include "caplab/report.hpp"

struct cl_domain {
  caplab::DomainSpec spec;
};

struct cl_certificate {
  caplab::BMCertificate cert;
};

namespace {

using namespace caplab;

thread_local std::string g_last_error;

struct Failure {
  cl_status status;
  std::string message;
};

cl_status fail(cl_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
cl_status guarded(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Failure& f) {
    return fail(f.status, f.message);
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::InvalidArgument: return fail(CL_ERR_INVALID_ARGUMENT, e.what());
      case ErrorCode::Parse: return fail(CL_ERR_PARSE, e.what());
      case ErrorCode::Precondition: return fail(CL_ERR_PRECONDITION, e.what());
      case ErrorCode::DivisionByZero: return fail(CL_ERR_DIVISION_BY_ZERO, e.what());
    }
    return fail(CL_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CL_ERR_INTERNAL, "unknown error");
  }
}

template <typename T>
void need(const T* p, const char* what) {
  if (p == nullptr) throw Failure{CL_ERR_INVALID_ARGUMENT, std::string(what) + " must not be NULL"};
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  if (out != nullptr) *out = copy_string(s);
}

cl_options options_or_default(const cl_options* options) {
  if (options != nullptr) return *options;
  cl_options o;
  cl_options_init(&o);
  return o;
}

OracleConfig oracle_config(const cl_options& o) {
  OracleConfig cfg;
  cfg.grid = o.grid;
  cfg.refine_iters = o.refine_iters;
  cfg.tol = o.tol;
  cfg.validate();
  return cfg;
}

Format to_format(cl_format format) {
  switch (format) {
    case CL_FORMAT_JSON: return Format::Json;
    case CL_FORMAT_CSV: return Format::Csv;
    case CL_FORMAT_TEXT: return Format::Text;
  }
  throw Failure{CL_ERR_INVALID_ARGUMENT, "unknown output format"};
}

const EllipsoidPair& sum_pair(const cl_domain* domain) {
  need(domain, "domain");
  const auto* pair = std::get_if<EllipsoidPair>(&domain->spec.shape);
  if (pair == nullptr) throw Failure{CL_ERR_INVALID_ARGUMENT, "expected a sum(E(a,b),E(c,d)) domain"};
  return *pair;
}

const Ellipsoid& ellipsoid_of(const cl_domain* domain, const char* what) {
  need(domain, what);
  const auto* e = std::get_if<Ellipsoid>(&domain->spec.shape);
  if (e == nullptr) throw Failure{CL_ERR_INVALID_ARGUMENT, std::string(what) + " must be an ellipsoid E(a,b)"};
  return *e;
}

bool all_ok(const std::vector<Verification>& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& x) { return x.ok; });
}

}  // namespace

extern "C" {

const char* cl_version(void) { return "1.0.0"; }

const char* cl_status_name(cl_status status) {
  switch (status) {
    case CL_OK: return "ok";
    case CL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CL_ERR_PARSE: return "parse error";
    case CL_ERR_PRECONDITION: return "precondition violated";
    case CL_ERR_DIVISION_BY_ZERO: return "division by zero";
    case CL_ERR_REPRODUCTION_FAILED: return "reproduction failed";
    case CL_ERR_VERIFICATION_FAILED: return "verification failed";
    case CL_ERR_CERTIFICATE_INVALID: return "certificate invalid";
    case CL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cl_last_error(void) { return g_last_error.c_str(); }

void cl_string_free(char* s) { std::free(s); }

void cl_options_init(cl_options* options) {
  if (options == nullptr) return;
  options->grid = 4096;
  options->refine_iters = 80;
  options->tol = 1e-9;
  options->seed = 42;
  options->jobs = 0;
  options->verify = 0;
}

cl_status cl_domain_parse(const char* literal, cl_domain** out) {
  return guarded([&] {
    need(literal, "literal");
    need(out, "out");
    *out = new cl_domain{parse_domain(literal)};
    return CL_OK;
  });
}

void cl_domain_free(cl_domain* domain) { delete domain; }

cl_status cl_domain_format(const cl_domain* domain, char** out) {
  return guarded([&] {
    need(domain, "domain");
    need(out, "out");
    emit(out, format_domain(domain->spec));
    return CL_OK;
  });
}

cl_status cl_domain_scale(const cl_domain* domain, const char* lambda, cl_domain** out) {
  return guarded([&] {
    need(domain, "domain");
    need(lambda, "lambda");
    need(out, "out");
    *out = new cl_domain{scale_domain(Rational::parse(lambda), domain->spec)};
    return CL_OK;
  });
}

cl_status cl_domain_dimension(const cl_domain* domain, uint32_t* out) {
  return guarded([&] {
    need(domain, "domain");
    need(out, "out");
    *out = domain->spec.dimension();
    return CL_OK;
  });
}

cl_status cl_family(uint64_t k, cl_domain** out) {
  return guarded([&] {
    need(out, "out");
    const EllipsoidPair pair = family_for(k);
    *out = new cl_domain{DomainSpec::sum(pair.first, pair.second)};
    return CL_OK;
  });
}

cl_status cl_capacity(const cl_domain* domain, uint64_t k, char** coeff_out) {
  return guarded([&] {
    need(domain, "domain");
    need(coeff_out, "coeff_out");
    emit(coeff_out, capacity(k, domain->spec).coeff().str());
    return CL_OK;
  });
}

cl_status cl_capacity_numeric(const cl_domain* domain, uint64_t k, const cl_options* options, double* out) {
  return guarded([&] {
    need(domain, "domain");
    need(out, "out");
    *out = capacity_numeric(k, domain->spec, oracle_config(options_or_default(options)));
    return CL_OK;
  });
}

cl_status cl_capacity_report(const cl_domain* domain, uint64_t k, const cl_options* options, cl_format format,
                             char** out) {
  return guarded([&] {
    need(domain, "domain");
    need(out, "out");
    const cl_options o = options_or_default(options);
    const PiRational value = capacity(k, domain->spec);
    std::optional<Verification> verification;
    if (o.verify) {
      verification = verify_value(value, capacity_numeric(k, domain->spec, oracle_config(o)), o.tol);
    }
    emit(out, render_capacity(k, domain->spec, value, verification, to_format(format)));
    if (verification && !verification->ok) {
      return fail(CL_ERR_VERIFICATION_FAILED, "numeric oracle disagrees with the exact capacity");
    }
    return CL_OK;
  });
}

cl_status cl_support_norm(const cl_domain* sum, uint64_t v1, uint64_t v2, char** coeff_out) {
  return guarded([&] {
    need(coeff_out, "coeff_out");
    emit(coeff_out, support_norm({v1, v2}, sum_pair(sum).normalize()).coeff().str());
    return CL_OK;
  });
}

cl_status cl_support_norm_numeric(const cl_domain* sum, uint64_t v1, uint64_t v2, const cl_options* options,
                                  double* out) {
  return guarded([&] {
    need(out, "out");
    *out = support_norm_numeric({v1, v2}, sum_pair(sum).normalize(), oracle_config(options_or_default(options)));
    return CL_OK;
  });
}

cl_status cl_convexity_check(const cl_domain* sum, uint32_t grid, int* ok, double* worst_c1, double* worst_c2) {
  return guarded([&] {
    const ConvexityReport report = convexity_check(sum_pair(sum).normalize(), grid);
    if (ok) *ok = report.ok ? 1 : 0;
    if (worst_c1) *worst_c1 = report.worst_c1;
    if (worst_c2) *worst_c2 = report.worst_c2;
    return CL_OK;
  });
}

cl_status cl_strictness_check(const cl_domain* sum, uint64_t k, int* strict, int* agrees) {
  return guarded([&] {
    const StrictnessReport report = strictness_check(k, sum_pair(sum));
    if (strict) *strict = report.strict ? 1 : 0;
    if (agrees) *agrees = report.agrees ? 1 : 0;
    return CL_OK;
  });
}

cl_status cl_omega(const cl_domain* sum, uint32_t samples, cl_format format, char** out) {
  return guarded([&] {
    need(out, "out");
    emit(out, render_omega(omega_curve(sum_pair(sum).normalize(), samples), to_format(format)));
    return CL_OK;
  });
}

cl_status cl_general_cy_map(size_t n, const double* a1, const double* a2, const double* x, double* out) {
  return guarded([&] {
    need(a1, "a1");
    need(a2, "a2");
    need(x, "x");
    need(out, "out");
    if (n == 0) throw Failure{CL_ERR_INVALID_ARGUMENT, "dimension must be positive"};
    using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const auto dim = static_cast<Eigen::Index>(n);
    const Eigen::MatrixXd m1 = Eigen::Map<const RowMajor>(a1, dim, dim);
    const Eigen::MatrixXd m2 = Eigen::Map<const RowMajor>(a2, dim, dim);
    const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(x, dim);
    Eigen::Map<Eigen::VectorXd>(out, dim) = general_cy_map(m1, m2, v);
    return CL_OK;
  });
}

cl_status cl_bm_check(uint64_t k, const cl_domain* first, const cl_domain* second, cl_certificate** out) {
  return guarded([&] {
    need(out, "out");
    const Ellipsoid& e1 = ellipsoid_of(first, "first domain");
    const Ellipsoid& e2 = ellipsoid_of(second, "second domain");
    *out = new cl_certificate{bm_check(k, e1, e2)};
    return CL_OK;
  });
}

void cl_certificate_free(cl_certificate* cert) { delete cert; }

cl_verdict cl_certificate_verdict(const cl_certificate* cert) {
  if (cert == nullptr) return CL_VERDICT_SATISFIES;
  switch (cert->cert.verdict) {
    case Verdict::Violates: return CL_VERDICT_VIOLATES;
    case Verdict::Equality: return CL_VERDICT_EQUALITY;
    case Verdict::Satisfies: return CL_VERDICT_SATISFIES;
  }
  return CL_VERDICT_SATISFIES;
}

uint64_t cl_certificate_k(const cl_certificate* cert) { return cert == nullptr ? 0 : cert->cert.k; }

cl_status cl_certificate_value(const cl_certificate* cert, int which, char** out) {
  return guarded([&] {
    need(cert, "cert");
    need(out, "out");
    switch (which) {
      case 0: emit(out, cert->cert.c_sum.coeff().str()); break;
      case 1: emit(out, cert->cert.c1.coeff().str()); break;
      case 2: emit(out, cert->cert.c2.coeff().str()); break;
      default: throw Failure{CL_ERR_INVALID_ARGUMENT, "which must be 0, 1 or 2"};
    }
    return CL_OK;
  });
}

cl_status cl_certificate_format(const cl_certificate* cert, const cl_options* options, cl_format format,
                                char** out) {
  return guarded([&] {
    need(cert, "cert");
    need(out, "out");
    const cl_options o = options_or_default(options);
    const BMCertificate& c = cert->cert;
    std::vector<Verification> verification;
    if (o.verify) {
      const OracleConfig cfg = oracle_config(o);
      verification.push_back(verify_value(c.c_sum, capacity_numeric(c.k, DomainSpec::sum(c.domain1, c.domain2), cfg), o.tol));
      verification.push_back(verify_value(c.c1, capacity_numeric(c.k, DomainSpec{c.domain1}, cfg), o.tol));
      verification.push_back(verify_value(c.c2, capacity_numeric(c.k, DomainSpec{c.domain2}, cfg), o.tol));
    }
    emit(out, render_certificate(c, verification, to_format(format)));
    if (!all_ok(verification)) return fail(CL_ERR_VERIFICATION_FAILED, "numeric oracle disagrees with the certificate");
    return CL_OK;
  });
}

cl_status cl_certificate_check_json(const char* json, size_t* total, size_t* valid, char** report) {
  return guarded([&] {
    need(json, "json");
    const CertificateCheck check = check_certificates_json(json);
    if (total) *total = check.total;
    if (valid) *valid = check.valid;
    std::string text = std::to_string(check.valid) + "/" + std::to_string(check.total) + " certificates re-validated\n";
    for (const auto& p : check.problems) text += p + "\n";
    emit(report, text);
    if (!check.ok()) return fail(CL_ERR_CERTIFICATE_INVALID, "certificate re-validation failed");
    return CL_OK;
  });
}

cl_status cl_reproduce(uint64_t k_max, const cl_options* options, cl_format format, char** out) {
  return guarded([&] {
    need(out, "out");
    const cl_options o = options_or_default(options);
    const Reproduction result = reproduce_theorem(k_max, o.jobs);
    std::vector<Verification> verification;
    if (o.verify) {
      const OracleConfig cfg = oracle_config(o);
      verification.resize(result.rows.size());
      parallel_for(result.rows.size(), o.jobs, [&](std::size_t i) {
        const auto& c = result.rows[i].certificate;
        verification[i] = verify_value(c.c_sum, capacity_numeric(c.k, DomainSpec::sum(c.domain1, c.domain2), cfg), o.tol);
      });
    }
    emit(out, render_reproduction(result, k_max, verification, to_format(format)));
    if (!result.ok) return fail(CL_ERR_REPRODUCTION_FAILED, "some k did not reproduce the counterexample");
    if (!all_ok(verification)) return fail(CL_ERR_VERIFICATION_FAILED, "numeric oracle disagrees with some row");
    return CL_OK;
  });
}

cl_status cl_search(uint32_t height, uint64_t k_min, uint64_t k_max, const cl_options* options, cl_format format,
                    size_t* found, char** out) {
  return guarded([&] {
    need(out, "out");
    const cl_options o = options_or_default(options);
    const auto certs = search_violations(height, k_min, k_max, o.jobs);
    if (found) *found = certs.size();
    emit(out, render_search(height, k_min, k_max, certs, to_format(format)));
    return CL_OK;
  });
}

cl_status cl_mean_width(const cl_domain* domain, uint64_t samples, const cl_options* options, double* mean,
                        double* std_error, cl_format format, char** out) {
  return guarded([&] {
    need(domain, "domain");
    const cl_options o = options_or_default(options);
    const MeanWidthEstimate est = mean_width_estimate(domain->spec, samples, o.seed, o.jobs);
    if (mean) *mean = est.mean;
    if (std_error) *std_error = est.std_error;
    emit(out, render_mean_width(domain->spec, est, to_format(format)));
    return CL_OK;
  });
}

cl_status cl_criterion(uint64_t k, int* violating) {
  return guarded([&] {
    need(violating, "violating");
    *violating = ostrover_criterion(k).violating ? 1 : 0;
    return CL_OK;
  });
}

cl_status cl_criterion_table(uint64_t k_min, uint64_t k_max, cl_format format, char** out) {
  return guarded([&] {
    need(out, "out");
    if (k_min < 1 || k_min > k_max) throw Failure{CL_ERR_INVALID_ARGUMENT, "need 1 <= k_min <= k_max"};
    std::vector<CriterionReport> reports;
    for (uint64_t k = k_min; k <= k_max; ++k) reports.push_back(ostrover_criterion(k));
    emit(out, render_criteria(reports, to_format(format)));
    return CL_OK;
  });
}

}  // extern "C"
