#include "gspin/harness/harness.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
  using namespace gspin::harness;
  SuiteConfig config;
  std::string n_range = "2..4";

  CLI::App app{"Exact verification suites for the GSpin(2n+1) computations"};
  app.add_option("--suite", config.suite, "rootdata, weyl, so, dual, orbit, measure, bruhat, mellin or all")
      ->envname("VERIFY_SUITE")
      ->capture_default_str();
  app.add_option("--n", n_range, "n range as lo..hi or a single value")->envname("VERIFY_N")->capture_default_str();
  app.add_option("--trials", config.trials, "trials per (suite, n)")->envname("VERIFY_TRIALS")->capture_default_str();
  app.add_option("--seed", config.seed, "master seed")->envname("VERIFY_SEED")->capture_default_str();
  app.add_option("--prime", config.prime, "prime for valuation checks")->envname("VERIFY_PRIME")->capture_default_str();
  app.add_option("--symbolic-max-n", config.symbolic_max_n, "largest n for symbolic checks")
      ->envname("VERIFY_SYMBOLIC_MAX_N")
      ->capture_default_str();
  app.add_option("--report", config.report_path, "report path; the report goes to stdout when empty")
      ->envname("VERIFY_REPORT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  SuiteReport report;
  try {
    std::tie(config.n_lo, config.n_hi) = parse_n_range(n_range);
    report = run(config);
    if (config.report_path.empty())
      std::cout << to_json(report).dump(2) << '\n';
    else
      write_report(report, config.report_path);
  } catch (const ConfigError& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return 2;
  }

  int passed = 0, failed = 0;
  std::size_t findings = 0;
  for (const auto& r : report.records) {
    passed += r.passed;
    failed += r.failed;
    findings += r.findings.size();
  }
  std::cerr << "verify: " << report.records.size() << " records, " << passed << " passed, " << failed << " failed, "
            << findings << " findings\n";
  return failed == 0 ? 0 : 1;
}
