#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "pfq/certificates.hpp"

using namespace pfq;

namespace {

CertificateConfig base(const std::string& name) {
  CertificateConfig cfg;
  cfg.name = name;
  return cfg;
}

}  // namespace

TEST_CASE("every named certificate runs and passes on its defaults") {
  for (const auto& name : certificate_names()) {
    CertificateConfig cfg = base(name);
    if (name == "smoothness") cfg.poly = "f0";
    if (name == "curve-invariants" || name == "slice-degree") cfg.ideal = "pfaffian7";
    if (name == "resolution-cohomology") cfg.complex_spec = "rodland";
    if (name == "kernel-sample") cfg.count = 25;
    CertificateReport rep = run_certificate(cfg);
    INFO("certificate ", name);
    CHECK(rep.pass);
    CHECK(rep.exit_code() == 0);
    auto j = rep.to_json();
    CHECK(j.contains("payload"));
    CHECK(j.contains("version"));
    CHECK(j.contains("rng"));
    CHECK(j["certificate"] == name);
  }
}

TEST_CASE("failing and indeterminate exit codes") {
  CertificateConfig cfg = base("smoothness");
  cfg.poly = "x1^4";
  CertificateReport rep = run_certificate(cfg);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.indeterminate);
  CHECK(rep.exit_code() == 1);

  CHECK_THROWS_AS(run_certificate(base("no-such-certificate")), Error);
  CertificateConfig bad = base("smoothness");
  bad.poly = "f0";
  bad.primes = {31989};  // composite
  CHECK_THROWS_AS(run_certificate(bad), Error);
  CertificateConfig missing = base("smoothness");
  CHECK_THROWS_AS(run_certificate(missing), Error);
}

TEST_CASE("reports are reproducible for fixed prime and seed") {
  CertificateConfig cfg = base("kernel-sample");
  cfg.count = 15;
  cfg.seed = 99;
  auto a = run_certificate(cfg).payload.dump();
  auto b = run_certificate(cfg).payload.dump();
  CHECK(a == b);
  cfg.seed = 100;
  CHECK(run_certificate(cfg).payload.dump() != a);
}

TEST_CASE("pfaffian identity reports the observed sign") {
  CertificateReport rep = run_certificate(base("pfaffian-identity"));
  CHECK(rep.pass);
  CHECK(rep.payload["sign"].get<int>() == -1);
  CHECK(rep.payload["pfaffian_terms"].get<int>() == 20);
  CHECK(rep.payload["pfaffian_degree"].get<int>() == 4);
}

TEST_CASE("file inputs") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "pfq_cert_inputs";
  fs::create_directories(dir);

  {
    std::ofstream out(dir / "complex.json");
    out << R"({"ambient_dim": 4, "terms": [[{"twist": -5, "rank": 21}],
               [{"twist": -4, "rank": 48}], [{"twist": -3, "rank": 28}]]})";
  }
  CertificateConfig cc = base("resolution-cohomology");
  cc.complex_spec = (dir / "complex.json").string();
  cc.tmax = 0;
  CertificateReport rep = run_certificate(cc);
  CHECK(rep.pass);
  CHECK(rep.payload["all_forced"].get<bool>());
  CHECK(rep.payload["table"]["0"]["h"][2].get<std::string>() == "21");

  // wider windows hit honestly unforced negative twists: indeterminate
  cc.tmax = 3;
  CertificateReport wide = run_certificate(cc);
  CHECK_FALSE(wide.pass);
  CHECK(wide.indeterminate);
  CHECK(wide.exit_code() == 2);

  {
    std::ofstream out(dir / "ideal.json");
    out << R"({"vars": ["x1","x2","x3","x4","x5"],
               "gens": ["x1^2 - x2*x3", "x2^2 - x1*x4", "x3*x4 - x1*x5"]})";
  }
  CertificateConfig ci = base("curve-invariants");
  ci.ideal = (dir / "ideal.json").string();
  CertificateReport rep2 = run_certificate(ci);
  CHECK(rep2.pass);  // file ideals are report-only

  CertificateConfig sd = base("slice-degree");
  sd.ideal = (dir / "ideal.json").string();
  CHECK_THROWS_AS(run_certificate(sd), Error);  // file ideals need --dim

  // polynomials may come as JSON with their own variable list
  {
    std::ofstream out(dir / "poly.json");
    out << R"({"vars": ["u", "v", "w"], "poly": "u^4 + v^4 + w^4"})";
  }
  CertificateConfig sm = base("smoothness");
  sm.poly = (dir / "poly.json").string();
  CertificateReport rep3 = run_certificate(sm);
  CHECK(rep3.pass);

  fs::remove_all(dir);
}

TEST_CASE("smoothness certificate is indeterminate-aware at the report level") {
  // a quartic that is singular only at a non-rational-looking point may be
  // INDETERMINATE; the pipeline must map that to exit code 2, checked here
  // through the report plumbing with a synthetic flag
  CertificateReport rep;
  rep.pass = false;
  rep.indeterminate = true;
  CHECK(rep.exit_code() == 2);
}

TEST_CASE("ci-quartic certifies the construction end to end") {
  CertificateConfig cfg = base("ci-quartic");
  cfg.seed = 5;
  CertificateReport rep = run_certificate(cfg);
  CHECK(rep.pass);
  CHECK(rep.payload["decomposition_verified"].get<bool>());
  CHECK(rep.payload["veronese_quadric_rank"].get<int>() == 6);
  CHECK(rep.payload["curve"]["degree"].get<std::string>() == "8");
  CHECK(rep.payload["curve"]["arithmetic_genus"].get<std::string>() == "5");
}
