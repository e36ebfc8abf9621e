#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "mvcoord/cantor_prefix.hpp"

using namespace mvcoord;

namespace {

  Word w(char const* text, std::size_t n = 2) {
    return Word::parse(text, n);
  }

  PrefixCode code(char const* text, std::size_t n = 2) {
    return parse_code(text, n);
  }

  // A random antichain: words of length <= max_len, filtered greedily.
  PrefixCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t max_len) {
    std::vector<Word> kept;
    std::uniform_int_distribution<std::size_t> len(1, max_len), letter(0, n - 1);
    std::uniform_int_distribution<std::size_t> count(1, 6);
    for (std::size_t k = count(rng); k > 0; --k) {
      std::vector<Word::Letter> letters(len(rng));
      for (auto& a : letters) {
        a = static_cast<Word::Letter>(letter(rng));
      }
      Word const cand(n, letters);
      bool clash = false;
      for (auto const& x : kept) {
        clash = clash || prefix_comparable(x, cand);
      }
      if (!clash) {
        kept.push_back(cand);
      }
    }
    return PrefixCode(n, kept);
  }

}  // namespace

TEST_CASE("words") {
  CHECK(is_prefix(w("a"), w("ab")));
  CHECK_FALSE(prefix_comparable(w("ab"), w("ba")));
  for (auto const& x : all_words(2, 3)) {
    CHECK(is_prefix(Word(2), x));
  }
  CHECK(to_string(Word(2)) == "ε");
  CHECK(w("_") == Word(2));
  CHECK(w("abc", 3).concat(w("a", 3)) == w("abca", 3));
  CHECK(w("abc", 3).suffix_after(1) == w("bc", 3));
  CHECK_THROWS_AS(w("c"), std::invalid_argument);
  CHECK(all_words(3, 2).size() == 9);
}

TEST_CASE("codes") {
  CHECK(max_of(2, {w("a"), w("ab"), w("b")}) == code("a+b"));
  CHECK_THROWS_AS(code("a+ab"), std::invalid_argument);
  CHECK(to_string(code("b+aa")) == "aa+b");
  CHECK(code("0").empty());
}

TEST_CASE("maximality and measure") {
  CHECK(is_maximal(code("a+b")));
  CHECK(is_maximal(code("aa+ab+b")));
  CHECK_FALSE(is_maximal(code("aa+b")));
  CHECK(bernoulli(code("aa+b")) == Rational(3, 4));
  CHECK(bernoulli(code("aa+aba+b")) == Rational(7, 8));
  CHECK(bernoulli(PrefixCode::whole(3)) == 1);
  CHECK(bernoulli(code("a+ca", 3)) == Rational(4, 9));
}

TEST_CASE("extension and reduction") {
  auto const x = extend(extend(code("aa+aba+b"), w("b"), 2), w("aa"), 1);
  CHECK(x == code("aaa+aab+aba+baa+bab+bba+bbb"));
  CHECK(reduce(code("aa+ab+b"), w("a"), 1) == code("a+b"));
  CHECK_THROWS_AS(reduce(code("aa+b"), w("a"), 1), std::invalid_argument);
  CHECK_THROWS_AS(extend(code("aa+b"), w("a"), 1), std::invalid_argument);
  CHECK(depth_one_reductions(code("aa+ab+ba+bb")) == std::vector<Word>{w("a"), w("b")});
}

TEST_CASE("uniformization") {
  CHECK(uniformize(code("a"), 2) == code("aa+ab"));
  CHECK(uniformize(code("aa+ab+ba"), 2) == code("aa+ab+ba"));
  CHECK(uniformize(code("aa+aba+b"), 3) == code("aaa+aab+aba+baa+bab+bba+bbb"));
  CHECK_THROWS(uniformize(code("aa+aba+b"), 2));
}

TEST_CASE("minimization") {
  CHECK(minimize(code("aa+ab+b")) == PrefixCode::whole(2));
  CHECK(minimize(code("aa+ab")) == code("a"));
  CHECK(minimize(code("aa+ba")) == code("aa+ba"));
  CHECK(minimize(code("aa+ab+ac+b", 3)) == code("a+b", 3));
}

TEST_CASE("clopen sets") {
  CHECK(clopen_equal(code("a"), code("aa+ab")));
  CHECK(clopen_subset(code("aa"), code("a")));
  CHECK_FALSE(clopen_subset(code("a"), code("aa")));
  CHECK(clopen_intersection(code("a"), code("aa+b")) == code("aa"));
  CHECK(clopen_complement(code("aa+b")) == code("ab"));
  CHECK(clopen_complement(PrefixCode::whole(2)).empty());
}

// Randomized laws on binary and ternary codes.
TEST_CASE("extension preserves the clopen set") {
  std::mt19937_64 rng(17);
  for (std::size_t n : {2u, 3u}) {
    for (int i = 0; i < 200; ++i) {
      auto const x = random_code(rng, n, 6);
      for (auto const& u : x.words()) {
        for (std::size_t r = 1; r <= 2; ++r) {
          auto const y = extend(x, u, r);
          CHECK(reduce(y, u, r) == x);
          CHECK(bernoulli(y) == bernoulli(x));
          CHECK(clopen_equal(x, y));
        }
      }
      CHECK(bernoulli(x) <= 1);
      CHECK(is_maximal(x) == is_maximal_oracle(x));
      auto const m = minimize(x);
      CHECK(clopen_equal(m, x));
      CHECK(depth_one_reductions(m).empty());
      CHECK(minimize(uniformize(x, x.length() + 1)) == m);
      auto const c = clopen_complement(x);
      CHECK(bernoulli(c) + bernoulli(x) == 1);
      CHECK(clopen_intersection(c, x).empty());
    }
  }
}
