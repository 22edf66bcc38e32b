#include "caplab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "caplab/error.hpp"
#include "caplab/literal.hpp"

namespace caplab {

namespace {

using nlohmann::json;

std::string fmt_double(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

json int_or_string(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>()).num();
  throw Error(ErrorCode::InvalidArgument, "expected an integer or an integer string, got " + j.dump());
}

json capacity_json(const PiRational& value) {
  json j = rational_to_json(value.coeff());
  j["exact"] = value.str();
  j["decimal"] = std::stod(value.decimal());
  return j;
}

json verification_json(const Verification& v) {
  return {{"exact", v.exact}, {"numeric", v.numeric}, {"rel_error", v.rel_error}, {"ok", v.ok}};
}

json verifications_json(const std::vector<Verification>& all) {
  json arr = json::array();
  for (const auto& v : all) arr.push_back(verification_json(v));
  return arr;
}

bool all_ok(const std::vector<Verification>& all) {
  return std::all_of(all.begin(), all.end(), [](const auto& v) { return v.ok; });
}

std::string certificate_csv_header() { return "k,domain1,domain2,c_sum,c1,c2,verdict\n"; }

std::string certificate_csv_row(const BMCertificate& cert) {
  return std::to_string(cert.k) + "," + format_ellipsoid(cert.domain1) + "," + format_ellipsoid(cert.domain2) + "," +
         cert.c_sum.coeff().str() + "," + cert.c1.coeff().str() + "," + cert.c2.coeff().str() + "," +
         to_string(cert.verdict) + "\n";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw Error(ErrorCode::InvalidArgument, "unknown output format '" + std::string(name) + "'");
}

Verification verify_value(const PiRational& exact, double numeric, double tol) {
  Verification v;
  v.exact = exact.to_double();
  v.numeric = numeric;
  const double scale = std::max(std::abs(v.exact), 1e-12);
  v.rel_error = std::abs(v.exact - numeric) / scale;
  v.ok = v.rel_error <= tol;
  return v;
}

json rational_to_json(const Rational& r) { return {{"num", int_or_string(r.num())}, {"den", int_or_string(r.den())}}; }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw Error(ErrorCode::InvalidArgument, "expected {num, den}, got " + j.dump());
  }
  return Rational(bigint_from_json(j.at("num")), bigint_from_json(j.at("den")));
}

json certificate_to_json(const BMCertificate& cert) {
  return {{"k", cert.k},
          {"domain1", format_ellipsoid(cert.domain1)},
          {"domain2", format_ellipsoid(cert.domain2)},
          {"c_sum", rational_to_json(cert.c_sum.coeff())},
          {"c1", rational_to_json(cert.c1.coeff())},
          {"c2", rational_to_json(cert.c2.coeff())},
          {"comparison", to_string(cert.comparison)},
          {"verdict", to_string(cert.verdict)}};
}

BMCertificate certificate_from_json(const json& j) {
  try {
    auto ellipsoid = [&](const char* key) {
      const DomainSpec d = parse_domain(j.at(key).get<std::string>());
      const auto* e = std::get_if<Ellipsoid>(&d.shape);
      if (!e) throw Error(ErrorCode::InvalidArgument, std::string(key) + " must be an ellipsoid");
      return *e;
    };
    BMCertificate cert;
    cert.k = j.at("k").get<std::uint64_t>();
    cert.domain1 = ellipsoid("domain1");
    cert.domain2 = ellipsoid("domain2");
    cert.c_sum = PiRational(rational_from_json(j.at("c_sum")));
    cert.c1 = PiRational(rational_from_json(j.at("c1")));
    cert.c2 = PiRational(rational_from_json(j.at("c2")));
    cert.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    // Older certificates may omit the ordering; it is implied by the verdict.
    const std::string cmp = j.value("comparison", "");
    cert.comparison = cmp == "Less"      ? Ordering::Less
                      : cmp == "Greater" ? Ordering::Greater
                      : cmp == "Equal"   ? Ordering::Equal
                      : cert.verdict == Verdict::Violates ? Ordering::Less
                      : cert.verdict == Verdict::Equality ? Ordering::Equal
                                                          : Ordering::Greater;
    return cert;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed certificate: ") + e.what());
  }
}

std::string render_capacity(std::uint64_t k, const DomainSpec& domain, const PiRational& value,
                            const std::optional<Verification>& verification, Format format) {
  const std::string literal = format_domain(domain);
  switch (format) {
    case Format::Json: {
      json j = {{"k", k}, {"domain", literal}, {"capacity", capacity_json(value)}};
      if (verification) j["verify"] = verification_json(*verification);
      return dump(j);
    }
    case Format::Csv: {
      std::string out = "k,domain,coeff,decimal";
      if (verification) out += ",numeric,rel_error,verified";
      out += "\n" + std::to_string(k) + ",\"" + literal + "\"," + value.coeff().str() + "," + value.decimal();
      if (verification) {
        out += "," + fmt_double(verification->numeric, 17) + "," + fmt_double(verification->rel_error, 3) + "," +
               (verification->ok ? "true" : "false");
      }
      return out + "\n";
    }
    case Format::Text: {
      std::string out = "c_" + std::to_string(k) + "(" + literal + ") = " + value.render() + "\n";
      if (verification) {
        out += "numeric check: " + fmt_double(verification->numeric, 12) + " (relative error " +
               fmt_double(verification->rel_error, 3) + ", " + (verification->ok ? "ok" : "FAILED") + ")\n";
      }
      return out;
    }
  }
  return {};
}

std::string render_certificate(const BMCertificate& cert, const std::vector<Verification>& verification,
                               Format format) {
  switch (format) {
    case Format::Json: {
      json j = certificate_to_json(cert);
      if (!verification.empty()) j["verify"] = verifications_json(verification);
      return dump(j);
    }
    case Format::Csv: return certificate_csv_header() + certificate_csv_row(cert);
    case Format::Text: {
      std::ostringstream out;
      out << "k:              " << cert.k << "\n"
          << "domain1:        " << format_ellipsoid(cert.domain1) << "\n"
          << "domain2:        " << format_ellipsoid(cert.domain2) << "\n"
          << "c_k(sum):       " << cert.c_sum.render() << "\n"
          << "c_k(domain1):   " << cert.c1.render() << "\n"
          << "c_k(domain2):   " << cert.c2.render() << "\n"
          << "sqrt(c_sum) vs sqrt(c1)+sqrt(c2): " << to_string(cert.comparison) << "\n"
          << "verdict:        " << to_string(cert.verdict) << "\n";
      if (!verification.empty()) out << "numeric check:  " << (all_ok(verification) ? "ok" : "FAILED") << "\n";
      return out.str();
    }
  }
  return {};
}

std::string render_reproduction(const Reproduction& result, std::uint64_t k_max,
                                const std::vector<Verification>& verification, Format format) {
  switch (format) {
    case Format::Json: {
      json rows = json::array();
      for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const auto& row = result.rows[i];
        json r = {{"k", row.certificate.k},
                  {"family", row.family},
                  {"expected", rational_to_json(row.expected)},
                  {"matches", row.matches},
                  {"certificate", certificate_to_json(row.certificate)}};
        if (i < verification.size()) r["verify"] = verification_json(verification[i]);
        rows.push_back(std::move(r));
      }
      return dump({{"k_max", k_max}, {"reproduced", result.ok}, {"rows", rows}});
    }
    case Format::Csv: {
      std::string out = "k,family,c_sum,c1,c2,verdict\n";
      for (const auto& row : result.rows) {
        const auto& c = row.certificate;
        out += std::to_string(c.k) + "," + row.family + "," + c.c_sum.coeff().str() + "," + c.c1.coeff().str() + "," +
               c.c2.coeff().str() + "," + to_string(c.verdict) + "\n";
      }
      return out;
    }
    case Format::Text: {
      std::ostringstream out;
      char line[256];
      std::snprintf(line, sizeof line, "%5s  %-5s  %-22s  %-10s  %-10s  %-9s  %s\n", "k", "fam", "c_sum/pi", "c1/pi",
                    "c2/pi", "verdict", "closed form");
      out << line;
      for (const auto& row : result.rows) {
        const auto& c = row.certificate;
        std::snprintf(line, sizeof line, "%5llu  %-5s  %-22s  %-10s  %-10s  %-9s  %s\n",
                      static_cast<unsigned long long>(c.k), row.family.c_str(), c.c_sum.coeff().str().c_str(),
                      c.c1.coeff().str().c_str(), c.c2.coeff().str().c_str(), to_string(c.verdict),
                      row.matches ? "match" : "MISMATCH");
        out << line;
      }
      out << (result.ok ? "reproduced: every k violates the Brunn-Minkowski inequality\n"
                        : "NOT reproduced: see rows above\n");
      if (!verification.empty()) out << "numeric check: " << (all_ok(verification) ? "ok" : "FAILED") << "\n";
      return out.str();
    }
  }
  return {};
}

std::string render_omega(const std::vector<OmegaSample>& curve, Format format) {
  if (format == Format::Json) {
    json arr = json::array();
    for (const auto& s : curve) arr.push_back({{"psi", s.psi}, {"x1", s.x1}, {"x2", s.x2}});
    return dump(arr);
  }
  std::string out = "psi,x1,x2\n";
  for (const auto& s : curve) {
    out += fmt_double(s.psi, 17) + "," + fmt_double(s.x1, 17) + "," + fmt_double(s.x2, 17) + "\n";
  }
  return out;
}

std::string render_mean_width(const DomainSpec& domain, const MeanWidthEstimate& est, Format format) {
  const std::string literal = format_domain(domain);
  switch (format) {
    case Format::Json:
      return dump({{"domain", literal},
                   {"mean", est.mean},
                   {"stderr", est.std_error},
                   {"samples", est.samples},
                   {"seed", est.seed}});
    case Format::Csv:
      return "domain,mean,stderr,samples,seed\n\"" + literal + "\"," + fmt_double(est.mean, 17) + "," +
             fmt_double(est.std_error, 17) + "," + std::to_string(est.samples) + "," + std::to_string(est.seed) + "\n";
    case Format::Text:
      return "M(" + literal + ") ~ " + fmt_double(est.mean, 12) + " +/- " + fmt_double(est.std_error, 3) + " (" +
             std::to_string(est.samples) + " samples, seed " + std::to_string(est.seed) + ")\n";
  }
  return {};
}

std::string render_criteria(const std::vector<CriterionReport>& reports, Format format) {
  switch (format) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : reports) {
        arr.push_back({{"k", r.k},
                       {"violating", r.violating},
                       {"lhs", rational_to_json(r.lhs)},
                       {"rhs", rational_to_json(r.rhs)},
                       {"c_k_polydisk", capacity_json(r.polydisk_capacity)},
                       {"c_k_ball", capacity_json(r.ball_capacity)},
                       {"normalized_polydisk", rational_to_json(r.normalized_coeff)},
                       {"mean_width_bound", rational_to_json(r.mean_width_bound)}});
      }
      return dump(arr);
    }
    case Format::Csv: {
      std::string out = "k,lhs,rhs,violating\n";
      for (const auto& r : reports) {
        out += std::to_string(r.k) + "," + r.lhs.str() + "," + r.rhs.str() + "," + (r.violating ? "true" : "false") + "\n";
      }
      return out;
    }
    case Format::Text: {
      std::string out;
      for (const auto& r : reports) {
        out += "k=" + std::to_string(r.k) + ": k/floor((k+1)/2) = " + r.lhs.str() + (r.violating ? " > " : " <= ") +
               r.rhs.str() + (r.violating ? "  (mean-width bound fails)\n" : "  (inconclusive)\n");
      }
      return out;
    }
  }
  return {};
}

std::string render_search(std::uint32_t height, std::uint64_t k_min, std::uint64_t k_max,
                          const std::vector<BMCertificate>& found, Format format) {
  switch (format) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& c : found) arr.push_back(certificate_to_json(c));
      return dump({{"height", height}, {"k_min", k_min}, {"k_max", k_max}, {"count", found.size()},
                   {"certificates", arr}});
    }
    case Format::Csv:
    case Format::Text: {
      std::string out = certificate_csv_header();
      for (const auto& c : found) out += certificate_csv_row(c);
      return out;
    }
  }
  return {};
}

CertificateCheck check_certificates_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("certificate file is not valid JSON: ") + e.what());
  }

  std::vector<json> items;
  if (doc.is_array()) {
    items.assign(doc.begin(), doc.end());
  } else if (doc.is_object() && doc.contains("rows")) {
    for (const auto& row : doc.at("rows")) items.push_back(row.at("certificate"));
  } else if (doc.is_object() && doc.contains("certificates")) {
    items.assign(doc.at("certificates").begin(), doc.at("certificates").end());
  } else {
    items.push_back(doc);
  }

  CertificateCheck check;
  for (const auto& item : items) {
    ++check.total;
    try {
      const BMCertificate cert = certificate_from_json(item);
      if (certificate_consistent(cert)) {
        ++check.valid;
      } else {
        check.problems.push_back("certificate " + std::to_string(check.total) + " (k=" + std::to_string(cert.k) +
                                 "): recomputed values differ");
      }
    } catch (const Error& e) {
      check.problems.push_back("certificate " + std::to_string(check.total) + ": " + e.what());
    }
  }
  return check;
}

}  // namespace caplab
