// Command-line front end: diagrams, level quotients, coordinatization,
// prefix codes, Cuntz elements and the self test.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mvcoord/acceptance.hpp"
#include "mvcoord/bratteli.hpp"
#include "mvcoord/cantor_prefix.hpp"
#include "mvcoord/coordinatize.hpp"
#include "mvcoord/cuntz_gauge.hpp"
#include "mvcoord/dimension_groups.hpp"
#include "mvcoord/effect_mv.hpp"
#include "mvcoord/io.hpp"
#include "mvcoord/quotient.hpp"

#ifndef MVCOORD_FIXTURE_DIR
#define MVCOORD_FIXTURE_DIR ""
#endif

using nlohmann::json;
using namespace mvcoord;

namespace {

  enum Exit { OK = 0, INVALID = 1, INTERNAL = 2 };

  struct Options {
    bool          as_json = false;
    std::size_t   level   = 0;
    std::size_t   alphabet = 2;
    std::string   file;
    std::string   filter;
    std::string   fixtures = MVCOORD_FIXTURE_DIR;
    std::uint64_t seed     = DEFAULT_SEED;
    std::string   op;
    std::vector<std::string> args;
  };

  std::string join_numbers(IntVector const& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out;
  }

  Signature parse_signature(std::string const& text) {
    std::vector<std::size_t> sizes;
    std::stringstream        ss(text);
    std::string              part;
    while (std::getline(ss, part, ',')) {
      std::size_t used = 0;
      unsigned long v  = 0;
      try {
        v = std::stoul(part, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used == 0 || used != part.size()) {
        throw std::invalid_argument("bad signature \"" + text
                                    + "\": expected sizes like 3 or 1,2");
      }
      sizes.push_back(v);
    }
    return Signature(sizes);
  }

  BratteliDiagram load_diagram(std::string const& path) {
    return parse_diagram_json(read_file(path));
  }

  void check_level(BratteliDiagram const& b, std::size_t level) {
    if (level > b.depth()) {
      throw std::invalid_argument("level " + std::to_string(level)
                                  + " is beyond the diagram depth "
                                  + std::to_string(b.depth()));
    }
  }

  int validate_diagram(Options const& o) {
    auto const b = load_diagram(o.file);
    if (o.as_json) {
      json j = {{"valid", true}, {"depth", b.depth()}};
      for (std::size_t l = 0; l <= b.depth(); ++l) {
        j["sizes"].push_back(b.size_vector(l));
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "valid diagram, depth " << b.depth() << "\n";
      for (std::size_t l = 0; l <= b.depth(); ++l) {
        std::cout << "  level " << l << ": sizes ("
                  << join_numbers(b.size_vector(l)) << ")\n";
      }
    }
    return OK;
  }

  int level_info(Options const& o) {
    auto const b = load_diagram(o.file);
    check_level(b, o.level);
    auto const sig = b.level_signature(o.level);
    SimplicialGroup const g(b.size_vector(o.level));
    if (o.as_json) {
      json j = {{"level", o.level},
                {"signature", sig.sizes()},
                {"letters", sig.total()},
                {"unit", g.unit()},
                {"interval_size", g.interval_size()}};
      if (o.level < b.depth()) {
        j["next"] = b.level_morphism(o.level).mult().to_rows();
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "level      " << o.level << "\n"
                << "signature  " << to_string(sig) << "\n"
                << "letters    " << sig.total() << "\n"
                << "unit       (" << join_numbers(g.unit()) << ")\n"
                << "|[0,u]|    " << g.interval_size() << "\n";
      if (o.level < b.depth()) {
        std::cout << "next       " << b.level_morphism(o.level).mult() << "\n";
      }
    }
    return OK;
  }

  int interval(Options const& o) {
    auto const b = load_diagram(o.file);
    check_level(b, o.level);
    auto const r = report_interval(b, o.level);
    if (o.as_json) {
      json j = {{"level", r.level},
                {"rank", r.rank},
                {"unit", r.unit},
                {"interval_size", r.interval_size},
                {"mode", r.mode},
                {"verified", r.verified}};
      if (r.verified) {
        j["witness"] = r.witness;
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "level      " << r.level << "\n"
                << "rank       " << r.rank << "\n"
                << "unit       (" << join_numbers(r.unit) << ")\n"
                << "|[0,u]|    " << r.interval_size << "\n"
                << "check      " << r.mode;
      if (r.mode != "skipped") {
        std::cout << (r.verified ? ", quotient isomorphic to [0,u]"
                                 : ", NOT isomorphic");
      }
      std::cout << "\n";
      if (r.verified) {
        std::cout << "witness    " << r.witness.size() << " classes matched\n";
      }
    }
    if (r.mode != "skipped" && !r.verified) {
      return INTERNAL;
    }
    return OK;
  }

  int quotient(Options const& o) {
    if (o.args.size() != 1) {
      throw std::invalid_argument("quotient takes one signature, e.g. 1,2");
    }
    auto const sig = parse_signature(o.args[0]);
    auto const q   = semisimple_quotient(sig);
    auto const m   = FiniteMvAlgebra::from_effect_algebra(q);
    if (o.as_json) {
      std::cout << emit_algebra_json(m);
    } else {
      std::cout << "E(" << to_string(sig) << ")/D has " << m.size()
                << " classes\n";
      for (std::size_t a = 0; a < m.size(); ++a) {
        std::cout << "  " << m.name(static_cast<Element>(a)) << "  complement "
                  << m.name(m.complement(static_cast<Element>(a))) << "\n";
      }
    }
    return OK;
  }

  int coordinatize_cmd(Options const& o) {
    auto file = parse_algebra_json(read_file(o.file));
    FiniteMvAlgebra const m
        = file.complement
              ? FiniteMvAlgebra(std::move(file.algebra), std::move(*file.complement))
              : FiniteMvAlgebra::from_effect_algebra(std::move(file.algebra));
    auto const r = coordinatize(m);
    if (o.as_json) {
      json w = json::object();
      for (std::size_t a = 0; a < r.witness.size(); ++a) {
        w[m.name(static_cast<Element>(a))] = r.quotient.name(r.witness[a]);
      }
      std::cout << json{{"chains", r.chains},
                        {"signature", r.signature.sizes()},
                        {"witness", w},
                        {"factorizations_tried", r.tried}}
                       .dump()
                << "\n";
    } else {
      std::cout << "chains     {";
      for (std::size_t i = 0; i < r.chains.size(); ++i) {
        std::cout << (i ? "," : "") << r.chains[i];
      }
      std::cout << "}\nsignature  " << to_string(r.signature) << "\nwitness\n";
      for (std::size_t a = 0; a < r.witness.size(); ++a) {
        std::cout << "  " << m.name(static_cast<Element>(a)) << " -> "
                  << r.quotient.name(r.witness[a]) << "\n";
      }
    }
    return OK;
  }

  void need_args(Options const& o, std::size_t n, char const* usage) {
    if (o.args.size() != n) {
      throw std::invalid_argument(std::string("usage: ") + usage);
    }
  }

  std::size_t parse_count(std::string const& s) {
    std::size_t used = 0;
    std::size_t v    = 0;
    try {
      v = std::stoul(s, &used);
    } catch (std::exception const&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) {
      throw std::invalid_argument("expected a non-negative integer, got \"" + s + "\"");
    }
    return v;
  }

  void print(Options const& o, std::string const& key, json const& value,
             std::string const& text) {
    if (o.as_json) {
      std::cout << json{{key, value}}.dump() << "\n";
    } else {
      std::cout << text << "\n";
    }
  }

  int prefix(Options const& o) {
    std::size_t const n    = o.alphabet;
    auto              code = [&](std::size_t i) { return parse_code(o.args.at(i), n); };
    if (o.op == "minimize") {
      need_args(o, 1, "prefix minimize CODE");
      auto const m = minimize(code(0));
      print(o, "code", to_string(m), to_string(m));
    } else if (o.op == "uniformize") {
      need_args(o, 2, "prefix uniformize CODE LENGTH");
      auto const u = uniformize(code(0), parse_count(o.args[1]));
      print(o, "code", to_string(u), to_string(u));
    } else if (o.op == "extend" || o.op == "reduce") {
      need_args(o, 3, "prefix extend|reduce CODE WORD DEPTH");
      auto const w = Word::parse(o.args[1], n);
      auto const r = parse_count(o.args[2]);
      auto const y = o.op == "extend" ? extend(code(0), w, r) : reduce(code(0), w, r);
      print(o, "code", to_string(y), to_string(y));
    } else if (o.op == "measure") {
      need_args(o, 1, "prefix measure CODE");
      auto const mu = bernoulli(code(0));
      print(o, "measure", to_string(mu), to_string(mu));
    } else if (o.op == "maximal") {
      need_args(o, 1, "prefix maximal CODE");
      bool const m = is_maximal(code(0));
      print(o, "maximal", m, m ? "maximal" : "not maximal");
    } else if (o.op == "equal") {
      need_args(o, 2, "prefix equal CODE CODE");
      bool const e = clopen_equal(code(0), code(1));
      print(o, "equal", e, e ? "equal" : "different");
    } else if (o.op == "complement") {
      need_args(o, 1, "prefix complement CODE");
      auto const c = clopen_complement(code(0));
      print(o, "code", to_string(c), to_string(c));
    } else {
      throw std::invalid_argument("unknown prefix operation \"" + o.op + "\"");
    }
    return OK;
  }

  int cuntz(Options const& o) {
    std::size_t const n = o.alphabet;
    auto elt = [&](std::size_t i) { return parse_cuntz(o.args.at(i), n); };
    auto show = [&](CuntzElement const& f) {
      print(o, "element", to_string(f), to_string(f));
    };
    if (o.op == "multiply") {
      need_args(o, 2, "cuntz multiply F G   (G first, then F)");
      show(cuntz_multiply(elt(0), elt(1)));
    } else if (o.op == "inverse") {
      need_args(o, 1, "cuntz inverse F");
      show(cuntz_inverse(elt(0)));
    } else if (o.op == "domain") {
      need_args(o, 1, "cuntz domain F");
      show(cuntz_domain(elt(0)));
    } else if (o.op == "range") {
      need_args(o, 1, "cuntz range F");
      show(cuntz_range(elt(0)));
    } else if (o.op == "meet") {
      need_args(o, 2, "cuntz meet F G");
      show(cuntz_meet(elt(0), elt(1)));
    } else if (o.op == "join") {
      need_args(o, 2, "cuntz join F G");
      auto const j = cuntz_join(elt(0), elt(1));
      if (!j) {
        throw std::invalid_argument("the elements are not compatible");
      }
      show(*j);
    } else if (o.op == "leq") {
      need_args(o, 2, "cuntz leq F G");
      bool const le = cuntz_leq(elt(0), elt(1));
      print(o, "leq", le, le ? "yes" : "no");
    } else if (o.op == "mean") {
      need_args(o, 1, "cuntz mean F");
      auto const mu = dyadic_mean(elt(0), Side::domain);
      print(o, "mean", to_string(mu), to_string(mu));
    } else if (o.op == "symmetric") {
      need_args(o, 1, "cuntz symmetric F --level L");
      auto const p = to_symmetric(elt(0), o.level);
      print(o, "partial_bijection", to_string(p), to_string(p));
    } else {
      throw std::invalid_argument("unknown cuntz operation \"" + o.op + "\"");
    }
    return OK;
  }

  int selftest(Options const& o) {
    SuiteContext const ctx{o.seed, o.fixtures};
    return run_selftest(o.filter, ctx, std::cout);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coordinatization of finite MV-algebras by inverse monoids"};
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* c) {
    c->add_flag("--json", o.as_json, "Machine-readable output");
  };
  auto add_level = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--level", o.level, "Diagram level");
    if (required) {
      opt->required();
    }
  };

  auto* vd = app.add_subcommand("validate-diagram", "Check a Bratteli diagram file");
  vd->add_option("file", o.file, "Diagram JSON")->required()->check(CLI::ExistingFile);
  add_json(vd);

  auto* li = app.add_subcommand("level-info", "Signature and order unit at a level");
  li->add_option("file", o.file, "Diagram JSON")->required()->check(CLI::ExistingFile);
  add_level(li, true);
  add_json(li);

  auto* iv = app.add_subcommand("interval", "Compare a level quotient with [0,u]");
  iv->add_option("file", o.file, "Diagram JSON")->required()->check(CLI::ExistingFile);
  add_level(iv, true);
  add_json(iv);

  auto* qu = app.add_subcommand("quotient", "E(S)/D of a semisimple monoid");
  qu->add_option("signature", o.args, "Sizes, e.g. 3 or 1,2")->required();
  add_json(qu);

  auto* co = app.add_subcommand("coordinatize", "Find a semisimple monoid for an MV-algebra");
  co->add_option("file", o.file, "MV-algebra JSON")->required()->check(CLI::ExistingFile);
  add_json(co);

  auto* pr = app.add_subcommand("prefix", "Prefix code operations");
  pr->add_option("op", o.op,
                 "minimize, uniformize, extend, reduce, measure, maximal, equal, complement")
      ->required();
  pr->add_option("args", o.args, "Codes like aa+aba+b, words, depths");
  pr->add_option("--alphabet", o.alphabet, "Alphabet size")->check(CLI::Range(2, 26));
  add_json(pr);

  auto* cu = app.add_subcommand("cuntz", "Cuntz monoid operations");
  cu->add_option("op", o.op,
                 "multiply, inverse, domain, range, meet, join, leq, mean, symmetric")
      ->required();
  cu->add_option("args", o.args, "Elements like \"aa->ab, ab->aa\"");
  cu->add_option("--alphabet", o.alphabet, "Alphabet size")->check(CLI::Range(2, 26));
  add_level(cu, false);
  add_json(cu);

  auto* st = app.add_subcommand("selftest", "Run the acceptance suites");
  st->add_option("--filter", o.filter, "Module name or criterion number");
  st->add_option("--seed", o.seed, "Seed for randomized checks");
  st->add_option("--fixtures", o.fixtures, "Fixture directory");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return INVALID;
  }

  try {
    if (*vd) return validate_diagram(o);
    if (*li) return level_info(o);
    if (*iv) return interval(o);
    if (*qu) return quotient(o);
    if (*co) return coordinatize_cmd(o);
    if (*pr) return prefix(o);
    if (*cu) return cuntz(o);
    if (*st) return selftest(o);
  } catch (MvValidationError const& e) {
    std::cerr << "invalid MV-algebra: " << e.what() << "\n";
    if (auto const& ax = e.failed_axiom(); ax && !ax->witness.empty()) {
      std::cerr << "counterexample:";
      for (auto w : ax->witness) {
        std::cerr << " " << w;
      }
      std::cerr << "\n";
    }
    return INVALID;
  } catch (CoordinatizeError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return INVALID;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return INVALID;
  } catch (std::out_of_range const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return INVALID;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return INTERNAL;
  }
  return INTERNAL;
}
