#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfq/arith.hpp"

namespace pfq {

// Flags of a single certificate run. String inputs name a builtin, a file
// path, or (for poly) an inline expression; resolution order is
// builtin, then file, then inline.
struct CertificateConfig {
  std::string name;
  std::string matrix = "m0";
  std::string poly;
  std::string ideal;
  std::string complex_spec;
  std::vector<std::uint64_t> primes = {kDefaultPrime, kSecondPrime};
  std::uint64_t seed = 1;
  int tmax = 20;
  int count = 200;
  int scheme_dim = -1;  // required for slice-degree on file ideals
  int degree_cap = 0;   // exploratory Groebner degree cap; 0 disables
  std::string cache_dir;
};

struct CertificateReport {
  std::string certificate;
  nlohmann::ordered_json payload;
  bool pass = false;
  bool indeterminate = false;
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> seeds;
  std::map<std::string, std::string> input_digests;
  long long runtime_ms = 0;

  int exit_code() const { return pass ? 0 : (indeterminate ? 2 : 1); }
  nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& certificate_names();

// Executes the named pipeline. Throws pfq::Error on unusable input
// (unknown certificate, unreadable file, bad prime); those map to exit
// code 3 at the CLI.
CertificateReport run_certificate(const CertificateConfig& config);

}  // namespace pfq
