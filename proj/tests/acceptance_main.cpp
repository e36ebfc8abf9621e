// Prints one PASS/FAIL line per acceptance criterion. Criteria 1-9 run the
// library suites in process; criterion 10 runs the CLI self test end to end.
#include <array>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "CLI11.hpp"
#include "mvcoord/acceptance.hpp"

namespace {

  constexpr double SELFTEST_LIMIT_SECONDS = 180.0;

  std::string seconds(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << s << "s";
    return os.str();
  }

  bool report_suite(mvcoord::Suite const& s, mvcoord::SuiteContext const& ctx) {
    auto const r = mvcoord::run_suite(s, ctx);
    std::string detail;
    std::size_t failed = 0;
    for (auto const& c : r.checks) {
      if (!c.pass) {
        ++failed;
        if (detail.empty()) {
          detail = c.name + ": " + c.detail;
        }
      }
    }
    std::cout << (r.pass() ? "PASS" : "FAIL") << " criterion " << s.criterion
              << ": " << s.title << " [" << r.checks.size() - failed << "/"
              << r.checks.size() << " checks, " << seconds(r.seconds) << " of "
              << seconds(s.time_limit_seconds) << "]";
    if (!r.within_time) {
      std::cout << " over time";
    }
    if (!detail.empty()) {
      std::cout << " first failure " << detail;
    }
    std::cout << std::endl;
    return r.pass();
  }

  bool report_selftest() {
    std::string const cmd = std::string(MVCOORD_CLI) + " selftest 2>&1";
    auto const        start = std::chrono::steady_clock::now();
    FILE*             pipe  = popen(cmd.c_str(), "r");
    std::string       out;
    int               code = -1;
    if (pipe != nullptr) {
      std::array<char, 4096> buf{};
      while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
        out.append(buf.data(), n);
      }
      int const status = pclose(pipe);
      code             = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
    double const elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    bool const ok = code == 0 && elapsed < SELFTEST_LIMIT_SECONDS;
    std::cout << (ok ? "PASS" : "FAIL")
              << " criterion 10: selftest exits 0 within "
              << seconds(SELFTEST_LIMIT_SECONDS) << " [exit " << code << ", "
              << seconds(elapsed) << "]";
    if (code != 0) {
      std::istringstream lines(out);
      std::string        line;
      while (std::getline(lines, line)) {
        if (line.rfind("FAIL", 0) == 0) {
          std::cout << " failing suite \"" << line << "\"";
          break;
        }
      }
    }
    std::cout << std::endl;
    return ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App      app{"Acceptance criteria"};
  int           only = 0;
  std::uint64_t seed = mvcoord::DEFAULT_SEED;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")
      ->check(CLI::Range(1, 10));
  app.add_option("--seed", seed, "Seed for randomized checks");
  CLI11_PARSE(app, argc, argv);

  mvcoord::SuiteContext const ctx{seed, MVCOORD_FIXTURE_DIR};
  bool                        ok = true;
  for (auto const& s : mvcoord::acceptance_suites()) {
    if (only == 0 || only == s.criterion) {
      ok = report_suite(s, ctx) && ok;
    }
  }
  if (only == 0 || only == 10) {
    ok = report_selftest() && ok;
  }
  return ok ? 0 : 1;
}
