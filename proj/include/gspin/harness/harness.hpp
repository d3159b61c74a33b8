#ifndef GSPIN_HARNESS_HARNESS_HPP
#define GSPIN_HARNESS_HARNESS_HPP

#include "json.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gspin::harness {

using Json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SuiteConfig {
  std::string suite = "all";
  int n_lo = 2;
  int n_hi = 4;
  long prime = 3;
  int trials = 10;
  std::uint64_t seed = 1;
  int symbolic_max_n = 3;
  std::string report_path;  // empty: no file
};

// Suite names accepted by run, without "all".
const std::vector<std::string>& suite_names();
// Inclusive range of n supported by a suite.
std::pair<int, int> suite_guard(const std::string& suite);
// Parses "lo..hi" or a single integer.
std::pair<int, int> parse_n_range(const std::string& text);
// Throws ConfigError describing the first problem.
void validate(const SuiteConfig& config);

struct Failure {
  std::string operation;
  std::string inputs;
  std::string expected;
  std::string got;
  std::uint64_t seed = 0;
};

struct SuiteRecord {
  std::string suite;
  int n = 0;
  int trials = 0;
  int passed = 0;
  int failed = 0;
  std::vector<Failure> failures;
  std::vector<std::string> findings;
  Json facts = Json::object();
  double wall_time = 0.0;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<SuiteRecord> records;

  int total_failed() const;
};

// Runs the configured suites; validates the config first.
SuiteReport run(const SuiteConfig& config);
SuiteRecord run_suite(const std::string& suite, int n, const SuiteConfig& config);

Json to_json(const SuiteReport& report, bool with_wall_time = true);
// Throws ConfigError when the path cannot be written.
void write_report(const SuiteReport& report, const std::string& path);

}  // namespace gspin::harness

#endif
