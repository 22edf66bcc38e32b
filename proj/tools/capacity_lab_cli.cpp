// capacity-lab: command-line front end over the capacity_lab C API.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "capacity_lab.h"

namespace {

constexpr std::uint64_t kMaxIndex = 1'000'000;

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitNotReproduced = 2,
  kExitVerificationFailed = 3,
  kExitCertificateInvalid = 4,
};

struct CommonOptions {
  std::string format = "json";
  bool verify = false;
  std::uint32_t grid = 4096;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  std::uint32_t jobs = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_flag("--verify", opts.verify, "Cross-check exact values with the numeric oracle");
  cmd->add_option("--grid", opts.grid, "Oracle grid size")->check(CLI::Range(64u, 1u << 24))->capture_default_str();
  cmd->add_option("--tol", opts.tol, "Relative tolerance for --verify")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", opts.seed, "Monte Carlo seed")->capture_default_str();
  cmd->add_option("--jobs", opts.jobs, "Worker threads (default: CAPACITY_LAB_JOBS or all cores)")
      ->check(CLI::Range(1u, 4096u));
}

cl_format to_format(const std::string& name) {
  if (name == "csv") return CL_FORMAT_CSV;
  if (name == "text") return CL_FORMAT_TEXT;
  return CL_FORMAT_JSON;
}

cl_options to_options(const CommonOptions& opts) {
  cl_options o;
  cl_options_init(&o);
  o.grid = opts.grid;
  o.tol = opts.tol;
  o.seed = opts.seed;
  o.verify = opts.verify ? 1 : 0;
  o.jobs = opts.jobs;
  if (o.jobs == 0) {
    if (const char* env = std::getenv("CAPACITY_LAB_JOBS")) {
      try {
        o.jobs = static_cast<std::uint32_t>(std::stoul(env));
      } catch (const std::exception&) {
        std::cerr << "warning: ignoring malformed CAPACITY_LAB_JOBS='" << env << "'\n";
      }
    }
  }
  return o;
}

struct DomainDeleter {
  void operator()(cl_domain* d) const { cl_domain_free(d); }
};
using DomainPtr = std::unique_ptr<cl_domain, DomainDeleter>;

struct CertificateDeleter {
  void operator()(cl_certificate* c) const { cl_certificate_free(c); }
};

struct StringDeleter {
  void operator()(char* s) const { cl_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

class Failed : public std::runtime_error {
 public:
  Failed(cl_status status, const std::string& what) : std::runtime_error(what), status(status) {}
  cl_status status;
};

void check(cl_status status) {
  if (status != CL_OK) throw Failed(status, cl_last_error());
}

DomainPtr parse(const std::string& literal) {
  cl_domain* d = nullptr;
  check(cl_domain_parse(literal.c_str(), &d));
  return DomainPtr(d);
}

int exit_code_for(cl_status status) {
  switch (status) {
    case CL_OK: return kExitOk;
    case CL_ERR_REPRODUCTION_FAILED: return kExitNotReproduced;
    case CL_ERR_VERIFICATION_FAILED: return kExitVerificationFailed;
    case CL_ERR_CERTIFICATE_INVALID: return kExitCertificateInvalid;
    default: return kExitError;
  }
}

// Prints the report (if any) and converts a data-level failure into its exit
// code; errors without output are raised as exceptions.
int finish(cl_status status, char* raw, std::ostream& out = std::cout) {
  StringPtr text(raw);
  if (text) out << text.get();
  if (status == CL_OK) return kExitOk;
  if (!text) throw Failed(status, cl_last_error());
  std::cerr << "capacity-lab: " << cl_last_error() << "\n";
  return exit_code_for(status);
}

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failed(CL_ERR_INVALID_ARGUMENT, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gutt-Hutchings capacities and symplectic Brunn-Minkowski certificates", "capacity-lab"};
  app.set_version_flag("--version", std::string(cl_version()));

  std::string certificate_path;
  app.add_option("--check-certificate", certificate_path,
                 "Re-validate the certificate(s) in a JSON file ('-' for stdin) and exit");
  app.require_subcommand(0, 1);

  CommonOptions opts;
  const auto index_range = CLI::Range(std::uint64_t{1}, kMaxIndex);

  std::uint64_t k = 0;
  std::string domain, domain2;

  auto* capacity_cmd = app.add_subcommand("capacity", "Capacity c_k of a domain literal");
  capacity_cmd->add_option("k", k, "Capacity index")->required()->check(index_range);
  capacity_cmd->add_option("domain", domain, "E(a,b) | P(a,b) | sum(E,E) | prod(D,m,R)")->required();
  add_common(capacity_cmd, opts);

  auto* bm_cmd = app.add_subcommand("bm-check", "Compare sqrt c_k(E1+E2) with sqrt c_k(E1) + sqrt c_k(E2)");
  bm_cmd->add_option("k", k, "Capacity index")->required()->check(index_range);
  bm_cmd->add_option("domain1", domain, "First ellipsoid E(a,b)")->required();
  bm_cmd->add_option("domain2", domain2, "Second ellipsoid E(c,d)")->required();
  add_common(bm_cmd, opts);

  std::uint64_t k_max = 0;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Certify the counterexample families for k = 2..k_max");
  reproduce_cmd->add_option("k_max", k_max, "Largest index")->required()->check(CLI::Range(std::uint64_t{2}, kMaxIndex));
  add_common(reproduce_cmd, opts);

  std::uint32_t omega_samples = 256;
  std::string out_path;
  auto* omega_cmd = app.add_subcommand("omega", "Moment-map image of the boundary of a sum of ellipsoids");
  omega_cmd->add_option("pair", domain, "sum(E(a,b),E(c,d))")->required();
  omega_cmd->add_option("--samples", omega_samples, "Number of psi intervals")
      ->check(CLI::Range(2u, 10'000'000u))
      ->capture_default_str();
  omega_cmd->add_option("--out", out_path, "Output file (default stdout)");
  add_common(omega_cmd, opts);

  std::uint64_t mw_samples = 1'000'000;
  auto* mw_cmd = app.add_subcommand("mean-width", "Monte Carlo mean width of E(a,b) or P(a,b)");
  mw_cmd->add_option("domain", domain, "E(a,b) or P(a,b)")->required();
  mw_cmd->add_option("--samples", mw_samples, "Number of sphere samples")
      ->check(CLI::Range(std::uint64_t{100}, std::uint64_t{1'000'000'000}))
      ->capture_default_str();
  add_common(mw_cmd, opts);

  std::uint64_t k_min = 1;
  std::uint64_t k_last = 0;
  auto* criterion_cmd = app.add_subcommand("criterion", "Polydisk mean-width criterion k/floor((k+1)/2) > 16/9");
  criterion_cmd->add_option("k_min", k_min, "First index")->required()->check(index_range);
  criterion_cmd->add_option("k_max", k_last, "Last index (default k_min)")->check(index_range);
  add_common(criterion_cmd, opts);

  std::uint32_t height = 3;
  auto* search_cmd = app.add_subcommand("search", "Sweep rational radii p/q (p, q <= height) for violations");
  search_cmd->add_option("height", height, "Bound on numerators and denominators")
      ->required()
      ->check(CLI::Range(1u, 12u));
  search_cmd->add_option("k_min", k_min, "First index")->required()->check(index_range);
  search_cmd->add_option("k_max", k_last, "Last index")->required()->check(index_range);
  add_common(search_cmd, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    const cl_options options = to_options(opts);
    const cl_format format = to_format(opts.format);
    char* text = nullptr;

    if (!certificate_path.empty()) {
      const std::string json = slurp(certificate_path);
      const cl_status status = cl_certificate_check_json(json.c_str(), nullptr, nullptr, &text);
      return finish(status, text);
    }

    if (*capacity_cmd) {
      const DomainPtr d = parse(domain);
      const cl_status status = cl_capacity_report(d.get(), k, &options, format, &text);
      return finish(status, text);
    }
    if (*bm_cmd) {
      const DomainPtr d1 = parse(domain);
      const DomainPtr d2 = parse(domain2);
      cl_certificate* raw = nullptr;
      check(cl_bm_check(k, d1.get(), d2.get(), &raw));
      const std::unique_ptr<cl_certificate, CertificateDeleter> cert(raw);
      const cl_status status = cl_certificate_format(cert.get(), &options, format, &text);
      return finish(status, text);
    }
    if (*reproduce_cmd) {
      const cl_status status = cl_reproduce(k_max, &options, format, &text);
      return finish(status, text);
    }
    if (*omega_cmd) {
      const DomainPtr d = parse(domain);
      const cl_status status = cl_omega(d.get(), omega_samples, format, &text);
      if (out_path.empty()) return finish(status, text);
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        cl_string_free(text);
        throw Failed(CL_ERR_INVALID_ARGUMENT, "cannot write '" + out_path + "'");
      }
      return finish(status, text, out);
    }
    if (*mw_cmd) {
      const DomainPtr d = parse(domain);
      const cl_status status = cl_mean_width(d.get(), mw_samples, &options, nullptr, nullptr, format, &text);
      return finish(status, text);
    }
    if (*criterion_cmd) {
      const std::uint64_t last = k_last == 0 ? k_min : k_last;
      const cl_status status = cl_criterion_table(k_min, last, format, &text);
      return finish(status, text);
    }
    if (*search_cmd) {
      const cl_status status = cl_search(height, k_min, k_last, &options, format, nullptr, &text);
      return finish(status, text);
    }
    std::cout << app.help();
    return kExitError;
  } catch (const Failed& e) {
    std::cerr << "capacity-lab: " << e.what() << "\n";
    return exit_code_for(e.status);
  }
}
