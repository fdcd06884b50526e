// pfq: certificate runner for Pfaffian quartic threefold computations.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 indeterminate,
// 3 usage or input error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pfq/certificates.hpp"
#include "pfq/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact certificates for Pfaffian representations of quartic threefolds"};
  app.set_version_flag("--version", pfq::kVersion);
  app.require_subcommand(1);

  pfq::CertificateConfig cfg;
  std::string out_path;
  std::uint64_t prime = 0;
  bool single_prime = false;

  for (const auto& name : pfq::certificate_names()) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " certificate");
    sub->add_option("--matrix", cfg.matrix, "skew matrix: builtin 'm0' or JSON file");
    sub->add_option("--poly", cfg.poly, "polynomial: builtin, file, or inline expression");
    sub->add_option("--ideal", cfg.ideal,
                    "ideal: builtin (pfaffian7, pfaffian7-p4, grass27, ci-quadrics) or JSON file");
    sub->add_option("--complex", cfg.complex_spec,
                    "twisted free complex: builtin (eacm, rodland, be-curve) or JSON file");
    sub->add_option("--prime", prime, "single working prime (default: 31991 then 104729)");
    sub->add_option("--seed", cfg.seed, "64-bit seed for all randomness in this run");
    sub->add_option("--tmax", cfg.tmax, "twist/table window bound");
    sub->add_option("--count", cfg.count, "number of sampled points");
    sub->add_option("--dim", cfg.scheme_dim, "scheme dimension for slice-degree on file ideals");
    sub->add_option("--out", out_path, "write the report JSON here instead of stdout");
    sub->add_option("--cache-dir", cfg.cache_dir, "Groebner basis cache directory");
    sub->add_option("--degree-cap", cfg.degree_cap,
                    "exploratory Groebner degree cap (results may be truncated)");
    sub->callback([&cfg, &single_prime, &prime, name] {
      cfg.name = name;
      single_prime = prime != 0;
    });
  }
  cfg.cache_dir = "./pfcache";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (single_prime) cfg.primes = {prime};
    pfq::CertificateReport rep = pfq::run_certificate(cfg);
    std::string text = rep.to_json().dump(2) + "\n";
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw pfq::Error("cannot write report to " + out_path);
      out << text;
    } else {
      std::cout << text;
    }
    return rep.exit_code();
  } catch (const pfq::Error& e) {
    std::cerr << "pfq: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "pfq: internal error: " << e.what() << "\n";
    return 3;
  }
}
