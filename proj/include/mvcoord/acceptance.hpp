#ifndef MVCOORD_ACCEPTANCE_HPP_
#define MVCOORD_ACCEPTANCE_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace mvcoord {

  // One named check inside a suite.
  struct CheckOutcome {
    std::string name;
    bool        pass = true;
    std::string detail;
  };

  struct SuiteContext {
    std::uint64_t seed = 0;
    // Directory holding the fixture files; empty means built-in fixtures.
    std::string fixture_dir;
  };

  // A suite of exhaustive or seeded checks covering one acceptance
  // criterion. `module` is the filter key used by the self test.
  struct Suite {
    int         criterion;
    std::string module;
    std::string title;
    double      time_limit_seconds;
    // Further modules exercised by the suite. They select it only when no
    // suite has that module.
    std::vector<std::string> related;
    std::function<std::vector<CheckOutcome>(SuiteContext const&)> run;
  };

  struct SuiteResult {
    Suite const*              suite = nullptr;
    std::vector<CheckOutcome> checks;
    double                    seconds = 0;
    bool                      within_time = true;

    bool pass() const;
  };

  std::vector<Suite> const& acceptance_suites();

  // The suites selected by a filter: all of them for an empty filter, those
  // with that criterion number or module, and failing that, those listing
  // the filter as a related module.
  std::vector<Suite const*> select_suites(std::string const& filter);
  SuiteResult run_suite(Suite const& s, SuiteContext const& ctx);

  // Runs every matching suite, printing one line per check and one line per
  // suite. Returns 0 if all pass, 1 otherwise.
  int run_selftest(std::string const&  filter,
                   SuiteContext const& ctx,
                   std::ostream&       out);

  inline constexpr std::uint64_t DEFAULT_SEED = 20240601;

}  // namespace mvcoord

#endif  // MVCOORD_ACCEPTANCE_HPP_
