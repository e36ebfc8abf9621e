#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "acceptance_internal.hpp"
#include "mvcoord/bratteli.hpp"
#include "mvcoord/cantor_prefix.hpp"
#include "mvcoord/cuntz_gauge.hpp"
#include "mvcoord/dimension_groups.hpp"
#include "mvcoord/graph_inverse.hpp"
#include "mvcoord/quotient.hpp"

namespace mvcoord::acceptance {

  namespace {

    // Calls fn on every prefix code over the alphabet with words of length
    // at most max_len.
    void for_each_code(std::size_t                                   n,
                       std::size_t                                   max_len,
                       std::function<void(PrefixCode const&)> const& fn) {
      std::vector<Word> pending{Word(n)};
      std::vector<Word> chosen;
      auto rec = [&](auto&& self) -> void {
        if (pending.empty()) {
          fn(PrefixCode(n, chosen));
          return;
        }
        Word const w = pending.back();
        pending.pop_back();
        chosen.push_back(w);
        self(self);
        chosen.pop_back();
        if (w.length() < max_len) {
          for (std::size_t a = 0; a < n; ++a) {
            pending.push_back(w.append(static_cast<Word::Letter>(a)));
          }
          self(self);
          pending.resize(pending.size() - n);
        } else {
          self(self);
        }
        pending.push_back(w);
      };
      rec(rec);
    }

    std::vector<PrefixCode> codes(std::size_t n, std::size_t max_len) {
      std::vector<PrefixCode> out;
      for_each_code(n, max_len, [&](PrefixCode const& x) { out.push_back(x); });
      return out;
    }

    Rational measure_oracle(PrefixCode const& x) {
      Rational sum = 0;
      for (auto const& w : x.words()) {
        BigInt den = 1;
        for (std::size_t i = 0; i < w.length(); ++i) {
          den *= x.alphabet();
        }
        sum += Rational(1, den);
      }
      return sum;
    }

    bool has_prefix_in(Word const& w, PrefixCode const& x) {
      for (auto const& u : x.words()) {
        if (is_prefix(u, w)) {
          return true;
        }
      }
      return false;
    }

    // The words of the given length lying in the open set of x.
    std::set<Word> cylinder(PrefixCode const& x, std::size_t length) {
      std::set<Word> out;
      for (auto const& w : all_words(x.alphabet(), length)) {
        if (has_prefix_in(w, x)) {
          out.insert(w);
        }
      }
      return out;
    }

    // Every (u, r) with the whole block u A^r inside x.
    std::vector<std::pair<Word, std::size_t>> reductions(PrefixCode const& x) {
      std::set<std::pair<Word, std::size_t>> out;
      for (auto const& w : x.words()) {
        for (std::size_t k = 0; k < w.length(); ++k) {
          Word const        u = w.prefix(k);
          std::size_t const r = w.length() - k;
          bool              all = true;
          for (auto const& z : all_words(x.alphabet(), r)) {
            all = all && x.contains(u.concat(z));
          }
          if (all) {
            out.emplace(u, r);
          }
        }
      }
      return {out.begin(), out.end()};
    }

  }  // namespace

  std::vector<CheckOutcome> criterion7(SuiteContext const&) {
    std::vector<CheckOutcome> out;

    std::vector<PrefixCode> small = codes(2, 3);
    auto const              ternary = codes(3, 2);
    small.insert(small.end(), ternary.begin(), ternary.end());

    Check confluence("minimize is confluent over all reduction orders");
    std::size_t states = 0;
    for (auto const& x : small) {
      std::set<PrefixCode>    seen{x};
      std::set<PrefixCode>    terminal;
      std::vector<PrefixCode> stack{x};
      while (!stack.empty()) {
        PrefixCode const y = stack.back();
        stack.pop_back();
        auto const rs = reductions(y);
        if (rs.empty()) {
          terminal.insert(y);
        }
        for (auto const& [u, r] : rs) {
          auto z = reduce(y, u, r);
          if (seen.insert(z).second) {
            stack.push_back(std::move(z));
          }
        }
      }
      states += seen.size();
      auto const m = minimize(x);
      confluence.expect(x.size() <= 10 && terminal.size() == 1
                            && *terminal.begin() == m
                            && depth_one_reductions(m).empty()
                            && minimize(m) == m,
                        [&] { return "at " + to_string(x); });
      for (auto const& y : seen) {
        confluence.expect(y.weight() >= m.weight() && clopen_equal(x, y)
                              && minimize(y) == m,
                          [&] { return "state " + to_string(y); });
      }
    }
    confluence.note(std::to_string(small.size()) + " codes, "
                    + std::to_string(states) + " states");
    out.push_back(confluence.outcome());

    Check trips("extension and reduction round trips");
    for (auto const& x : small) {
      for (auto const& u : x.words()) {
        for (std::size_t r = 1; r <= 2; ++r) {
          auto const y = extend(x, u, r);
          trips.expect(reduce(y, u, r) == x && bernoulli(y) == bernoulli(x)
                           && clopen_equal(x, y)
                           && cylinder(y, 5) == cylinder(x, 5),
                       [&] {
                         return "extend " + to_string(x) + " at " + to_string(u);
                       });
        }
      }
      for (auto const& [u, r] : reductions(x)) {
        trips.expect(extend(reduce(x, u, r), u, r) == x, [&] {
          return "reduce " + to_string(x) + " at " + to_string(u);
        });
      }
    }
    out.push_back(trips.outcome());

    Check measure("measure at most 1, equal to 1 iff maximal");
    Check uniform("uniform codes of equal length and measure");
    std::map<std::pair<std::size_t, Rational>, std::size_t> uniform_sizes;
    auto sweep = [&](std::size_t n, std::size_t max_len) {
      for_each_code(n, max_len, [&](PrefixCode const& x) {
        auto const mu = bernoulli(x);
        bool       complete = !x.empty();
        for (auto const& w : all_words(n, x.length())) {
          if (!complete) {
            break;
          }
          complete = has_prefix_in(w, x);
        }
        measure.expect(mu == measure_oracle(x) && mu <= 1
                           && is_maximal(x) == (mu == 1)
                           && is_maximal_oracle(x) == complete
                           && complete == (mu == 1),
                       [&] { return "at " + to_string(x); });
        if (x.is_uniform() && !x.empty()) {
          auto [it, fresh] = uniform_sizes.emplace(
              std::make_pair(n * 100 + x.length(), mu), x.size());
          uniform.expect(fresh || it->second == x.size(),
                         [&] { return "at " + to_string(x); });
        }
      });
    };
    sweep(2, 4);
    sweep(3, 2);
    out.push_back(measure.outcome());
    out.push_back(uniform.outcome());

    Check sets("clopen operations against cylinder oracle");
    auto const short_codes = codes(2, 2);
    for (auto const& x : short_codes) {
      auto const cx = cylinder(x, 3);
      std::set<Word> not_x;
      for (auto const& w : all_words(2, 3)) {
        if (!cx.contains(w)) {
          not_x.insert(w);
        }
      }
      sets.expect(cylinder(clopen_complement(x), 3) == not_x,
                  [&] { return "complement of " + to_string(x); });
      for (auto const& y : short_codes) {
        auto const cy = cylinder(y, 3);
        std::set<Word> both;
        std::set_intersection(cx.begin(), cx.end(), cy.begin(), cy.end(),
                              std::inserter(both, both.begin()));
        sets.expect(clopen_equal(x, y) == (cx == cy)
                        && clopen_subset(x, y) == (both == cx)
                        && cylinder(clopen_intersection(x, y), 3) == both,
                    [&] { return "at " + to_string(x) + ", " + to_string(y); });
      }
    }
    out.push_back(sets.outcome());

    Check example("worked uniformization example");
    auto const x = parse_code("aa+aba+b", 2);
    auto const y = uniformize(x, 3);
    example.expect(y == parse_code("aaa+aab+aba+baa+bab+bba+bbb", 2)
                       && y.size() == 7 && y.is_uniform() && clopen_equal(x, y),
                   [&] { return "got " + to_string(y); });
    example.expect(uniformize(parse_code("a", 2), 2) == parse_code("aa+ab", 2));
    example.expect(minimize(parse_code("aa+ab+b", 2)) == PrefixCode::whole(2));
    out.push_back(example.outcome());
    return out;
  }

  namespace {

    using Row = CuntzElement::Row;

    std::optional<Word> act_rows(std::vector<Row> const& rows, Word const& w) {
      for (auto const& [x, y] : rows) {
        if (is_prefix(x, w)) {
          return y.concat(w.suffix_after(x.length()));
        }
      }
      return std::nullopt;
    }

    std::optional<Word> act(CuntzElement const& f, Word const& w) {
      return act_rows(f.rows(), w);
    }

    std::size_t row_length(std::vector<Row> const& rows) {
      std::size_t l = 0;
      for (auto const& [x, y] : rows) {
        l = std::max({l, x.length(), y.length()});
      }
      return l;
    }

    Word random_word_below(std::mt19937_64& rng, PrefixCode const& x) {
      std::uniform_int_distribution<std::size_t> pick(0, x.size() - 1);
      return x.words()[pick(rng)];
    }

    // A random code with words of length at most max_len.
    PrefixCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t max_len) {
      PrefixCode x = PrefixCode::whole(n);
      std::uniform_int_distribution<int> steps(1, 5);
      for (int s = steps(rng); s > 0; --s) {
        Word const u = random_word_below(rng, x);
        if (u.length() < max_len) {
          x = extend(x, u, 1);
        }
      }
      std::vector<Word> keep;
      std::bernoulli_distribution drop(0.25);
      for (auto const& w : x.words()) {
        if (!drop(rng)) {
          keep.push_back(w);
        }
      }
      return PrefixCode(n, keep);
    }

    std::vector<Row> random_rows(std::mt19937_64& rng,
                                 std::size_t      n,
                                 std::size_t      max_len) {
      auto xs = random_code(rng, n, max_len).words();
      auto ys = random_code(rng, n, max_len).words();
      std::shuffle(ys.begin(), ys.end(), rng);
      std::size_t const k = std::min(xs.size(), ys.size());
      std::shuffle(xs.begin(), xs.end(), rng);
      std::vector<Row> rows;
      for (std::size_t i = 0; i < k; ++i) {
        rows.emplace_back(xs[i], ys[i]);
      }
      return rows;
    }

    // Rows x -> pi(x) for a position-dependent letter permutation pi.
    std::vector<Row> random_gauge_rows(std::mt19937_64& rng,
                                       std::size_t      n,
                                       std::size_t      max_len) {
      std::vector<std::vector<Word::Letter>> perms(max_len);
      for (auto& p : perms) {
        for (std::size_t a = 0; a < n; ++a) {
          p.push_back(static_cast<Word::Letter>(a));
        }
        std::shuffle(p.begin(), p.end(), rng);
      }
      std::vector<Row> rows;
      auto const code = random_code(rng, n, max_len);
      for (auto const& x : code.words()) {
        std::vector<Word::Letter> ls;
        for (std::size_t i = 0; i < x.length(); ++i) {
          ls.push_back(perms[i][x[i]]);
        }
        rows.emplace_back(x, Word(n, ls));
      }
      return rows;
    }

    std::string show(CuntzElement const& f) {
      return "[" + to_string(f) + "]";
    }

    Letter colex_letter(Word const& w) {
      Letter l = 1;
      Letter p = 1;
      for (std::size_t i = 0; i < w.length(); ++i) {
        l += static_cast<Letter>(w[i]) * p;
        p *= static_cast<Letter>(w.alphabet());
      }
      return l;
    }

  }  // namespace

  std::vector<CheckOutcome> criterion8(SuiteContext const& ctx) {
    std::vector<CheckOutcome> out;
    auto rng = make_rng(ctx, 8);

    struct Sample {
      std::vector<Row> raw;
      CuntzElement     f;
    };
    std::vector<Sample> samples;
    for (std::size_t i = 0; i < 240; ++i) {
      std::size_t const n   = i < 200 ? 2 : 3;
      std::size_t const len = n == 2 ? 3 : 2;
      auto rows = i % 4 == 3 ? random_gauge_rows(rng, n, len)
                             : random_rows(rng, n, len);
      samples.push_back({rows, CuntzElement(n, rows)});
    }

    Check canon("canonical form is unique and faithful");
    Check laws("inverse semigroup laws");
    Check sem("products, meets and joins against the semantic oracle");
    Check gauge("gauge elements are closed under the operations");
    for (std::size_t i = 0; i < samples.size(); ++i) {
      auto const& [raw, f] = samples[i];
      auto const& g        = samples[(i + 1) % samples.size()].f;
      auto const& h        = samples[(i + 7) % samples.size()].f;
      if (g.alphabet() != f.alphabet() || h.alphabet() != f.alphabet()) {
        continue;
      }
      std::size_t const n = f.alphabet();
      std::size_t const L
          = row_length(raw) + row_length(g.rows()) + row_length(f.rows()) + 1;
      auto const words = all_words(n, L);

      canon.expect(CuntzElement(n, f.rows()) == f, [&] { return show(f); });
      for (auto const& w : words) {
        canon.expect(act(f, w) == act_rows(raw, w),
                     [&] { return show(f) + " at " + to_string(w); });
      }
      if (!f.is_zero()) {
        std::vector<Row> finer;
        for (std::size_t r = 0; r < f.rows().size(); ++r) {
          auto const& [x, y] = f.rows()[r];
          if (r == 0) {
            for (std::size_t a = 0; a < n; ++a) {
              auto const l = static_cast<Word::Letter>(a);
              finer.emplace_back(x.append(l), y.append(l));
            }
          } else {
            finer.emplace_back(x, y);
          }
        }
        canon.expect(CuntzElement(n, finer) == f,
                     [&] { return "refinement of " + show(f); });
      }

      auto const fi = cuntz_inverse(f);
      laws.expect(cuntz_multiply(cuntz_multiply(f, fi), f) == f
                      && cuntz_multiply(cuntz_multiply(fi, f), fi) == fi
                      && cuntz_inverse(fi) == f,
                  [&] { return "regularity at " + show(f); });
      laws.expect(cuntz_multiply(cuntz_multiply(f, g), h)
                      == cuntz_multiply(f, cuntz_multiply(g, h)),
                  [&] { return "associativity at " + show(f); });
      auto const e1 = cuntz_domain(f);
      auto const e2 = cuntz_range(g);
      laws.expect(e1 == cuntz_multiply(fi, f) && e1.is_idempotent()
                      && cuntz_multiply(e1, e2) == cuntz_multiply(e2, e1)
                      && cuntz_multiply(e1, e1) == e1,
                  [&] { return "idempotents at " + show(f); });
      laws.expect(clopen_equal(f.domain_code(), e1.domain_code())
                      && cuntz_leq(cuntz_meet(f, g), f)
                      && cuntz_leq(cuntz_meet(f, g), g),
                  [&] { return "order at " + show(f); });

      auto const fg       = cuntz_multiply(f, g);
      auto const fmg      = cuntz_meet(f, g);
      bool       agree    = true;
      bool       f_leq_g  = true;
      for (auto const& w : words) {
        auto const gw = act(g, w);
        auto const fw = act(f, w);
        sem.expect(act(fg, w) == (gw ? act(f, *gw) : std::nullopt),
                   [&] { return "product " + show(f) + show(g) + " at " + to_string(w); });
        auto const both = fw && gw && *fw == *gw ? fw : std::nullopt;
        sem.expect(act(fmg, w) == both,
                   [&] { return "meet " + show(f) + show(g) + " at " + to_string(w); });
        if (fw) {
          sem.expect(act(fi, *fw) == w,
                     [&] { return "inverse " + show(f) + " at " + to_string(w); });
          f_leq_g = f_leq_g && gw == fw;
        }
        if (fw && gw && *fw != *gw) {
          agree = false;
        }
      }
      auto const gi = cuntz_inverse(g);
      for (auto const& w : words) {
        auto const a = act(fi, w);
        auto const b = act(gi, w);
        if (a && b && *a != *b) {
          agree = false;
        }
      }
      sem.expect(cuntz_leq(f, g) == f_leq_g,
                 [&] { return "order " + show(f) + show(g); });
      sem.expect(cuntz_compatible(f, g) == agree,
                 [&] { return "compatibility " + show(f) + show(g); });
      auto const j = cuntz_join(f, g);
      sem.expect(j.has_value() == agree,
                 [&] { return "join exists " + show(f) + show(g); });
      if (j) {
        for (auto const& w : words) {
          auto const fw = act(f, w);
          sem.expect(act(*j, w) == (fw ? fw : act(g, w)),
                     [&] { return "join " + show(f) + show(g) + " at " + to_string(w); });
        }
      }

      if (is_gauge(f) && is_gauge(g)) {
        gauge.expect(is_gauge(fg) && is_gauge(fi) && is_gauge(fmg)
                         && (!j || is_gauge(*j)),
                     [&] { return "at " + show(f) + show(g); });
      }
    }
    out.push_back(canon.outcome());
    out.push_back(laws.outcome());
    out.push_back(sem.outcome());
    out.push_back(gauge.outcome());

    Check sym("levels 1-3 are the symmetric inverse monoids");
    Check car("refinement is the standard map of multiplicity 2");
    for (std::size_t level = 1; level <= 3; ++level) {
      std::size_t const size = std::size_t{1} << level;
      auto const        letters = all_words(2, level);
      StandardMorphism const doubling(Signature(std::vector<std::size_t>{size}), IntMatrix{{2}});
      for (auto const& w : letters) {
        sym.expect(word_to_letter(w) == colex_letter(w)
                       && letter_to_word(colex_letter(w), 2, level) == w,
                   [&] { return "letter of " + to_string(w); });
      }
      for_each_partial_bijection(size, [&](PartialBijection const& p) {
        auto const f = from_symmetric(p, 2, level);
        sym.expect(is_gauge(f) && to_symmetric(f, level) == p,
                   [&] { return "round trip at " + to_string(p); });
        if (level <= 2) {
          for (auto const& w : letters) {
            Letter const img = p(colex_letter(w));
            auto const   fw  = act(f, w);
            sym.expect(img == UNDEFINED ? !fw : fw && colex_letter(*fw) == img,
                       [&] { return "action of " + to_string(p); });
          }
        }
        auto const finer = to_symmetric(f, level + 1);
        car.expect(
            SemisimpleElement(Signature(std::vector<std::size_t>{2 * size}), {finer})
                == apply_standard(doubling, SemisimpleElement(Signature(std::vector<std::size_t>{size}), {p})),
            [&] { return "at " + to_string(p); });
      });
      if (level <= 2) {
        auto const all = enumerate(size);
        for (auto const& p : all) {
          auto const f = from_symmetric(p, 2, level);
          sym.expect(to_symmetric(cuntz_inverse(f), level) == inverse(p));
          for (auto const& q : all) {
            sym.expect(to_symmetric(cuntz_multiply(f, from_symmetric(q, 2, level)),
                                    level)
                           == compose(p, q),
                       [&] { return "product at " + to_string(p) + ", " + to_string(q); });
          }
        }
      } else {
        std::uniform_int_distribution<std::size_t> coin(0, 3);
        auto random_p = [&] {
          std::vector<Letter> images(size, UNDEFINED);
          std::vector<Letter> targets(size);
          for (std::size_t i = 0; i < size; ++i) {
            targets[i] = static_cast<Letter>(i + 1);
          }
          std::shuffle(targets.begin(), targets.end(), rng);
          for (std::size_t i = 0; i < size; ++i) {
            images[i] = coin(rng) == 0 ? UNDEFINED : targets[i];
          }
          return PartialBijection::from_images(images);
        };
        for (int s = 0; s < 20000; ++s) {
          auto const p = random_p();
          auto const q = random_p();
          sym.expect(to_symmetric(cuntz_multiply(from_symmetric(p, 2, level),
                                                 from_symmetric(q, 2, level)),
                                  level)
                         == compose(p, q),
                     [&] { return "product at " + to_string(p) + ", " + to_string(q); });
        }
      }
    }
    for (auto const& [raw, f] : samples) {
      if (f.alphabet() == 2 && is_gauge(f) && row_length(f.rows()) <= 3) {
        sym.expect(from_symmetric(to_symmetric(f, 3), 2, 3) == f,
                   [&] { return "onto at " + show(f); });
      }
    }
    out.push_back(sym.outcome());
    out.push_back(car.outcome());

    Check mean("dyadic mean on the level-3 truncation");
    DyadicLevelView const view(2, 3);
    auto const report = invariant_mean_check(view, [](CuntzElement const& e) {
      return dyadic_mean(e, Side::domain);
    });
    mean.expect(report.all(), [&] {
      return report.failures.empty() ? std::string("report flags")
                                     : report.failures.front();
    });
    std::vector<Rational> values = report.class_values;
    std::sort(values.begin(), values.end());
    std::vector<Rational> expected;
    for (int k = 0; k <= 8; ++k) {
      expected.push_back(dyadic_value(3, k));
    }
    mean.expect(values == expected, [&] {
      return std::to_string(values.size()) + " class values";
    });
    out.push_back(mean.outcome());
    return out;
  }

  namespace {

    std::vector<std::pair<std::string, BratteliDiagram>> graph_fixtures() {
      return {{"CAR", car_diagram(3)},
              {"two-vertex", two_vertex_diagram(3)},
              {"irregular", irregular_diagram()}};
    }

  }  // namespace

  std::vector<CheckOutcome> criterion9(SuiteContext const&) {
    std::vector<CheckOutcome> out;
    for (auto const& [name, b] : graph_fixtures()) {
      Check letters("path letters on " + name);
      for (std::size_t level = 0; level <= b.depth(); ++level) {
        auto const& sizes = b.size_vector(level);
        for (std::size_t v = 0; v < sizes.size(); ++v) {
          auto const ps = paths_to(b, level, v);
          letters.expect(ps.size() == static_cast<std::size_t>(sizes[v]),
                         [&] { return "count at level " + std::to_string(level); });
          for (std::size_t i = 0; i < ps.size(); ++i) {
            letters.expect(ps[i].length() == level
                               && ps[i].start() == std::make_pair(level, v)
                               && path_letter(b, ps[i]) == i + 1
                               && (i == 0 || ps[i - 1] != ps[i]),
                           [&] { return "path " + to_string(ps[i]); });
          }
        }
      }
      out.push_back(letters.outcome());

      Check square("epsilon commutes with the standard map on " + name);
      for (std::size_t level = 0; level < b.depth(); ++level) {
        auto const& sigma = b.level_morphism(level);
        for (auto const& x : enumerate(b.level_signature(level))) {
          auto const h = semisimple_to_homogeneous(b, level, x);
          square.expect(homogeneous_to_semisimple(b, level, h) == x,
                        [&] { return "round trip at " + to_string(x); });
          for (std::size_t i = 0; i < h.size(); ++i) {
            for (std::size_t k = i + 1; k < h.size(); ++k) {
              square.expect(gim_orthogonal(h[i], h[k]),
                            [&] { return "members of " + to_string(x); });
            }
          }
          auto const up = epsilon_level_map(b, level, h);
          square.expect(homogeneous_to_semisimple(b, level + 1, up)
                            == apply_standard(sigma, x),
                        [&] { return "at level " + std::to_string(level) + ": "
                                   + to_string(x); });
        }
      }
      out.push_back(square.outcome());

      Check covers("lengthened covers on " + name);
      auto const all = enumerate_gim(b);
      std::vector<PathPair> ids;
      for (auto const& p : all) {
        if (!p.is_zero() && gim_is_idempotent(p)) {
          ids.push_back(p);
        }
      }
      for (auto const& e : ids) {
        if (weight(e) >= b.depth()) {
          continue;
        }
        auto const cover = lengthen_cover(b, e);
        covers.expect(!cover.empty(), [&] { return "empty at " + to_string(e); });
        for (std::size_t i = 0; i < cover.size(); ++i) {
          covers.expect(gim_is_idempotent(cover[i]) && natural_leq_gim(cover[i], e)
                            && weight(cover[i]) == weight(e) + 1,
                        [&] { return to_string(cover[i]) + " under " + to_string(e); });
          for (std::size_t k = i + 1; k < cover.size(); ++k) {
            covers.expect(gim_orthogonal(cover[i], cover[k]),
                          [&] { return "members at " + to_string(e); });
          }
        }
        for (auto const& f : ids) {
          if (f == e || !natural_leq_gim(f, e)) {
            continue;
          }
          bool meets = false;
          for (auto const& c : cover) {
            meets = meets || !gim_multiply(f, c).is_zero();
          }
          covers.expect(meets, [&] {
            return to_string(f) + " misses the cover of " + to_string(e);
          });
        }
      }
      out.push_back(covers.outcome());
    }
    return out;
  }

}  // namespace mvcoord::acceptance
