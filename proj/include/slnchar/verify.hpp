#pragma once
#include <string>
#include <vector>

#include "slnchar/serialize.hpp"

namespace slnchar::verify {

struct SuiteResult {
  std::string suite;
  bool pass = true;
  long long checks = 0;
  std::vector<std::string> failures;  // first few only
  Json detail = Json::object();
  double seconds = 0;
  Json to_json() const;
};

// Registered suites: irr-count, census, kostka, bp-rescaling, lemma511-512,
// omega, unitarity, cuspidal-scalar, zE, nu-scalar.
const std::vector<std::string>& suite_names();

// params overrides the defaults of each suite (e.g. {"n": 2, "q": 3}).
// Throws InvalidArgument for an unknown suite.
SuiteResult run_suite(const std::string& name, const Json& params = Json::object());

// number of semistandard tableaux of shape λ and content μ, by direct filling
std::uint64_t brute_ssyt_count(const Partition& lambda, const Partition& mu);

}  // namespace slnchar::verify
