#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "caplab/bm_analysis.hpp"
#include "caplab/minkowski.hpp"

namespace caplab {

enum class Format { Json, Csv, Text };

Format parse_format(std::string_view name);

/// Exact value next to its floating-point cross-check.
struct Verification {
  double exact = 0.0;
  double numeric = 0.0;
  double rel_error = 0.0;
  bool ok = false;
};

Verification verify_value(const PiRational& exact, double numeric, double tol);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const BMCertificate& cert);
BMCertificate certificate_from_json(const nlohmann::json& j);

std::string render_capacity(std::uint64_t k, const DomainSpec& domain, const PiRational& value,
                            const std::optional<Verification>& verification, Format format);
std::string render_certificate(const BMCertificate& cert, const std::vector<Verification>& verification,
                               Format format);
std::string render_reproduction(const Reproduction& result, std::uint64_t k_max,
                                const std::vector<Verification>& verification, Format format);
std::string render_omega(const std::vector<OmegaSample>& curve, Format format);
std::string render_mean_width(const DomainSpec& domain, const MeanWidthEstimate& estimate, Format format);
std::string render_criteria(const std::vector<CriterionReport>& reports, Format format);
std::string render_search(std::uint32_t height, std::uint64_t k_min, std::uint64_t k_max,
                          const std::vector<BMCertificate>& found, Format format);

struct CertificateCheck {
  std::size_t total = 0;
  std::size_t valid = 0;
  std::vector<std::string> problems;

  bool ok() const { return total > 0 && valid == total; }
};

/// Accepts a single certificate, an array of certificates, or the JSON
/// output of `reproduce` / `search`, and recomputes each certificate.
CertificateCheck check_certificates_json(std::string_view text);

}  // namespace caplab
