// bidisk: batch front end.
//
//   bidisk run <jobfile> [-o <out>] [--serial]
//   bidisk selftest [--kodaira-table <path>] [--serial]
//   bidisk --version
//
// Exit codes: 0 success, 1 a job or self-check failed, 2 parse/usage error.

#include "bidisk/jobs.hpp"
#include "bidisk/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int run_command(const std::string& job_path, const std::string& out_path, bool serial) {
  std::vector<bidisk::Job> jobs;
  try {
    jobs = bidisk::load_job_file(job_path);
  } catch (const bidisk::JobParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto reports =
      bidisk::run_jobs(jobs, serial ? bidisk::ExecutionPolicy::Serial : bidisk::ExecutionPolicy::Parallel);
  const std::string text = bidisk::render_report(reports);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
    out << text;
  }
  const std::size_t errors = bidisk::error_count(reports);
  if (errors != 0) std::cerr << errors << " job(s) failed\n";
  return errors == 0 ? kExitOk : kExitCheckFailed;
}

int selftest_command(const std::string& fixture, bool serial) {
  const auto checks =
      bidisk::run_selftest(fixture, serial ? bidisk::ExecutionPolicy::Serial : bidisk::ExecutionPolicy::Parallel);
  std::size_t failed = 0;
  for (const auto& c : checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    if (!c.passed) ++failed;
  }
  std::cout << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
  if (failed != 0) {
    std::cerr << "selftest failed:";
    for (const auto& c : checks)
      if (!c.passed) std::cerr << ' ' << c.name;
    std::cerr << '\n';
  }
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Special tensors, blow-ups, model surfaces and bidisk uniformization checks"};
  app.set_version_flag("--version", std::string("bidisk ") + BIDISK_VERSION);
  app.require_subcommand(1);

  std::string job_path;
  std::string out_path;
  bool serial = false;
  auto* run = app.add_subcommand("run", "Run a JSON job file and write the report");
  run->add_option("jobfile", job_path, "Job file")->required();
  run->add_option("-o,--output", out_path, "Report path (default: stdout)");
  run->add_flag("--serial", serial, "Run jobs on one thread");

  std::string fixture = bidisk::default_kodaira_fixture().string();
  auto* selftest = app.add_subcommand("selftest", "Run the built-in verification suite");
  selftest->add_option("--kodaira-table", fixture, "Kodaira fibre table fixture");
  selftest->add_flag("--serial", serial, "Run checks on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (run->parsed()) return run_command(job_path, out_path, serial);
  return selftest_command(fixture, serial);
}
