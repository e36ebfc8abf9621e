#include "mvcoord/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "acceptance_internal.hpp"

namespace mvcoord {

  namespace acceptance {

    CheckOutcome Check::outcome() const {
      std::string detail = _pass ? std::to_string(_cases) + " cases" : _detail;
      if (_pass && !_note.empty()) {
        detail += ", " + _note;
      }
      return {_name, _pass, detail};
    }

    std::vector<Signature> signatures_up_to(std::size_t max_total) {
      std::vector<Signature>   out;
      std::vector<std::size_t> parts;
      auto rec = [&](auto&& self, std::size_t rest) -> void {
        if (rest == 0) {
          out.emplace_back(parts);
          return;
        }
        for (std::size_t p = 1; p <= rest; ++p) {
          parts.push_back(p);
          self(self, rest - p);
          parts.pop_back();
        }
      };
      for (std::size_t t = 1; t <= max_total; ++t) {
        rec(rec, t);
      }
      return out;
    }

    std::vector<IntMatrix> matrices(std::size_t rows,
                                    std::size_t cols,
                                    Integer     max_entry) {
      std::vector<IntMatrix> out;
      IntMatrix              m(rows, cols);
      std::size_t const      cells = rows * cols;
      auto rec = [&](auto&& self, std::size_t cell) -> void {
        if (cell == cells) {
          if (!m.has_zero_row()) {
            out.push_back(m);
          }
          return;
        }
        for (Integer v = 0; v <= max_entry; ++v) {
          m(cell / cols, cell % cols) = v;
          self(self, cell + 1);
        }
      };
      rec(rec, 0);
      return out;
    }

    SemisimpleElement block_image(Signature const&         target,
                                  IntMatrix const&         mult,
                                  SemisimpleElement const& x) {
      std::vector<PartialBijection> parts;
      for (std::size_t i = 0; i < target.size(); ++i) {
        std::vector<Letter> images;
        for (std::size_t j = 0; j < x.parts().size(); ++j) {
          for (Integer c = 0; c < mult(i, j); ++c) {
            Letter const base = static_cast<Letter>(images.size());
            for (Letter l = 1; l <= x[j].degree(); ++l) {
              images.push_back(x[j](l) == UNDEFINED ? UNDEFINED
                                                    : base + x[j](l));
            }
          }
        }
        parts.push_back(PartialBijection::from_images(std::move(images)));
      }
      return SemisimpleElement(target, std::move(parts));
    }

    std::mt19937_64 make_rng(SuiteContext const& ctx, std::uint64_t stream) {
      std::seed_seq seq{ctx.seed, stream};
      return std::mt19937_64(seq);
    }

  }  // namespace acceptance

  bool SuiteResult::pass() const {
    if (!within_time) {
      return false;
    }
    for (auto const& c : checks) {
      if (!c.pass) {
        return false;
      }
    }
    return true;
  }

  std::vector<Suite> const& acceptance_suites() {
    using namespace acceptance;
    static std::vector<Suite> const suites = {
        {1, "partial_bijections",
         "inverse monoid laws, meets and joins, D and complements in I_n, n <= 4",
         10.0, {}, criterion1},
        {2, "effect_mv", "E(I_n)/D is the Lukasiewicz chain L_{n+1}, n <= 5",
         1.0, {}, criterion2},
        {3, "cli", "coordinatization of chain products and quotient round trips",
         10.0, {"effect_mv"}, criterion3},
        {4, "semisimple", "existence and injectivity of standard morphisms",
         30.0, {}, criterion4},
        {5, "semisimple", "composition of standard morphisms", 30.0,
         {"bratteli_af"}, criterion5},
        {6, "dimension_groups",
         "fixture diagrams: intertwining and level quotients as intervals", 30.0,
         {"bratteli_af"}, criterion6},
        {7, "cantor_prefix", "prefix code engine", 30.0, {}, criterion7},
        {8, "cuntz_gauge", "Cuntz and dyadic monoids", 60.0, {"cantor_prefix"},
         criterion8},
        {9, "graph_inverse", "graph inverse monoids against standard maps",
         30.0, {"bratteli_af"}, criterion9},
    };
    return suites;
  }

  std::vector<Suite const*> select_suites(std::string const& filter) {
    std::vector<Suite const*> direct, related;
    for (auto const& s : acceptance_suites()) {
      if (filter.empty() || filter == s.module
          || filter == std::to_string(s.criterion)) {
        direct.push_back(&s);
      } else if (std::find(s.related.begin(), s.related.end(), filter)
                 != s.related.end()) {
        related.push_back(&s);
      }
    }
    return direct.empty() ? related : direct;
  }

  SuiteResult run_suite(Suite const& s, SuiteContext const& ctx) {
    SuiteResult r;
    r.suite          = &s;
    auto const start = std::chrono::steady_clock::now();
    try {
      r.checks = s.run(ctx);
    } catch (std::exception const& e) {
      r.checks.push_back({"uncaught exception", false, e.what()});
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                              - start)
                    .count();
    r.within_time = r.seconds <= s.time_limit_seconds;
    return r;
  }

  int run_selftest(std::string const&  filter,
                   SuiteContext const& ctx,
                   std::ostream&       out) {
    auto const selected = select_suites(filter);
    if (selected.empty()) {
      out << "no suite matches filter \"" << filter << "\"\n";
      return 1;
    }
    bool ok = true;
    for (auto const* sp : selected) {
      auto const& s = *sp;
      auto const r = run_suite(s, ctx);
      for (auto const& c : r.checks) {
        out << "  " << (c.pass ? "ok   " : "FAIL ") << s.module << "/"
            << c.name << ": " << c.detail << "\n";
      }
      std::ostringstream time;
      time << std::fixed << std::setprecision(2) << r.seconds << "s of "
           << s.time_limit_seconds << "s";
      out << (r.pass() ? "PASS" : "FAIL") << " " << s.criterion << " "
          << s.module << " (" << time.str()
          << (r.within_time ? "" : ", over time") << "): " << s.title << "\n";
      ok = ok && r.pass();
    }
    return ok ? 0 : 1;
  }

}  // namespace mvcoord
