#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "mvcoord/acceptance.hpp"

namespace {

  struct Run {
    int         code = -1;
    std::string out;
  };

  Run cli(std::string const& args) {
    std::string const cmd = std::string(MVCOORD_CLI) + " " + args + " 2>&1";
    Run               r;
    FILE*             pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
      r.out.append(buf.data(), n);
    }
    int const status = pclose(pipe);
    r.code           = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  std::string fixture(char const* name) {
    return std::string(MVCOORD_FIXTURE_DIR) + "/" + name;
  }

}  // namespace

TEST_CASE("prefix operations") {
  auto const u = cli("prefix uniformize aa+aba+b 3");
  CHECK(u.code == 0);
  CHECK(u.out == "aaa+aab+aba+baa+bab+bba+bbb\n");
  auto const m = cli("prefix measure aa+aba+b --json");
  CHECK(nlohmann::json::parse(m.out)["measure"] == "7/8");
  CHECK(cli("prefix measure a+ab").code == 1);
}

TEST_CASE("cuntz operations") {
  auto const r = cli("cuntz multiply 'a->b, b->a' 'a->b, b->a'");
  CHECK(r.code == 0);
  CHECK(r.out == "ε->ε\n");
}

TEST_CASE("quotient json feeds coordinatize") {
  auto const dir = std::filesystem::temp_directory_path() / "mvcoord_cli_test";
  std::filesystem::create_directories(dir);
  auto const q = cli("quotient 1,2 --json");
  REQUIRE(q.code == 0);
  std::ofstream(dir / "q.json") << q.out;
  auto const c = cli("coordinatize " + (dir / "q.json").string() + " --json");
  CHECK(c.code == 0);
  auto const j = nlohmann::json::parse(c.out);
  CHECK(j["signature"] == nlohmann::json::array({1, 2}));
  std::filesystem::remove_all(dir);
}

TEST_CASE("coordinatize fixtures") {
  auto const r = cli("coordinatize " + fixture("l4.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("signature  (3)") != std::string::npos);
}

TEST_CASE("interval report") {
  auto const r = cli("interval " + fixture("car.json") + " --level 3 --json");
  CHECK(r.code == 0);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["unit"] == nlohmann::json::array({8}));
  CHECK(j["interval_size"] == 9);
  CHECK(j["verified"] == true);
}

TEST_CASE("exit codes") {
  CHECK(cli("interval " + fixture("car.json") + " --level 9").code == 1);
  CHECK(cli("no-such-command").code == 1);
  CHECK(cli("coordinatize /nonexistent.json").code == 1);
}

TEST_CASE("selftest filter runs only the named suite") {
  auto const r = cli("selftest --filter effect_mv");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS 2 effect_mv") != std::string::npos);
  CHECK(r.out.find("partial_bijections") == std::string::npos);
  CHECK(r.out.find(" cli ") == std::string::npos);
}

TEST_CASE("suite selection") {
  auto criteria = [](std::string const& filter) {
    std::vector<int> out;
    for (auto const* s : mvcoord::select_suites(filter)) {
      out.push_back(s->criterion);
    }
    return out;
  };
  CHECK(criteria("").size() == 9);
  CHECK(criteria("cantor_prefix") == std::vector<int>{7});
  CHECK(criteria("semisimple") == std::vector<int>{4, 5});
  CHECK(criteria("bratteli_af") == std::vector<int>{5, 6, 9});
  CHECK(criteria("8") == std::vector<int>{8});
  CHECK(criteria("nothing").empty());
  CHECK(cli("selftest --filter nothing").code == 1);
}

TEST_CASE("a corrupted fixture is a named failure") {
  namespace fs   = std::filesystem;
  auto const dir = fs::temp_directory_path() / "mvcoord_bad_fixtures";
  fs::create_directories(dir);
  for (auto const& e : fs::directory_iterator(MVCOORD_FIXTURE_DIR)) {
    fs::copy_file(e.path(), dir / e.path().filename(),
                  fs::copy_options::overwrite_existing);
  }
  std::ofstream(dir / "l4.json") << "{\"elements\": [\"0\", \"1\"]";
  auto const r = cli("selftest --filter 3 --fixtures " + dir.string());
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL cli/coordinates of l4.json") != std::string::npos);
  fs::remove_all(dir);
}
