#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "mvcoord/cuntz_gauge.hpp"
#include "mvcoord/dimension_groups.hpp"
#include "mvcoord/quotient.hpp"

using namespace mvcoord;

namespace {

  Word w(char const* text) {
    return Word::parse(text, 2);
  }

  CuntzElement cz(char const* text, std::size_t n = 2) {
    return parse_cuntz(text, n);
  }

}  // namespace

TEST_CASE("polycyclic relations") {
  auto const one = PolyElement::of(Word(2), Word(2));
  auto const a   = PolyElement::of(w("a"), Word(2));
  auto const b   = PolyElement::of(w("b"), Word(2));
  CHECK(poly_multiply(poly_inverse(a), a) == one);
  CHECK(poly_multiply(poly_inverse(a), b).is_zero());
  CHECK(poly_multiply(PolyElement::of(w("a"), w("b")),
                      PolyElement::of(w("ba"), w("a")))
        == PolyElement::of(w("aa"), w("a")));
}

TEST_CASE("multiplication") {
  auto const swap = cz("a->b, b->a");
  CHECK(cuntz_multiply(swap, swap) == CuntzElement::identity(2));
  CHECK(cuntz_multiply(swap, CuntzElement::identity(2)) == swap);
  CHECK(cuntz_multiply(cz("a->a"), cz("b->b")).is_zero());
  CHECK(to_string(CuntzElement::identity(2)) == "ε->ε");
  CHECK(cz("0").is_zero());
}

TEST_CASE("order, meets and joins") {
  CHECK(cuntz_leq(cz("aa->ba"), cz("a->b")));
  CHECK_FALSE(cuntz_leq(cz("a->b"), cz("aa->ba")));
  auto const j = cuntz_join(cz("a->b"), cz("b->a"));
  REQUIRE(j);
  CHECK(*j == cz("a->b, b->a"));
  CHECK(cuntz_meet(cz("a->a"), cz("a->b")).is_zero());
  CHECK_FALSE(cuntz_join(cz("a->a"), cz("a->b")));
}

TEST_CASE("gauge elements and units") {
  CHECK(is_gauge(cz("a->b, b->a")));
  CHECK(is_unit(cz("a->b, b->a")));
  CHECK_FALSE(is_gauge(cz("a->ba")));
  auto const collapsed = cz("aa->aa, ab->ab, b->b");
  CHECK(collapsed == CuntzElement::identity(2));
  CHECK(is_unit(collapsed));
  CHECK_THROWS_AS(cz("a->a, ab->b"), std::invalid_argument);
}

TEST_CASE("means") {
  CHECK(dyadic_mean(cz("a->b"), Side::domain) == Rational(1, 2));
  CHECK(dyadic_mean(CuntzElement::identity(2), Side::range) == 1);
  auto const f = cz("aa->ab, ab->aa");
  CHECK(dyadic_mean(f, Side::domain) == Rational(1, 2));
  CHECK(dyadic_mean(f, Side::range) == Rational(1, 2));
}

TEST_CASE("good witnesses") {
  auto const same = good_witness(parse_code("a", 2), PrefixCode::whole(2));
  REQUIRE(same);
  CHECK(same->target == parse_code("a", 2));
  CHECK(same->map == CuntzElement::idempotent(parse_code("a", 2)));

  auto const moved = good_witness(parse_code("a", 2), parse_code("b", 2));
  REQUIRE(moved);
  CHECK(clopen_equal(moved->target, parse_code("ba+bb", 2)));
  CHECK(moved->map == cz("aa->ba, ab->bb"));
  CHECK(is_gauge(moved->map));
  CHECK_FALSE(good_witness(PrefixCode::whole(2), parse_code("a", 2)));
}

TEST_CASE("symmetric images") {
  CHECK(to_symmetric(CuntzElement::identity(2), 1).is_identity());
  CHECK(to_symmetric(cz("a->b, b->a"), 1)
        == parse_partial_bijection("1->2,2->1", 2));
  CHECK_THROWS_AS(to_symmetric(cz("a->ba"), 2), std::invalid_argument);
  CHECK_THROWS_AS(to_symmetric(cz("aa->ab"), 1), std::invalid_argument);
  for (Letter j = 1; j <= 8; ++j) {
    CHECK(word_to_letter(letter_to_word(j, 2, 3)) == j);
  }
  // Refinement to level 2 doubles the block, as the map A |-> 2A does.
  auto const p2 = to_symmetric(cz("a->b"), 2);
  CHECK(p2 == parse_partial_bijection("1->2,3->4", 4));
}

// Round trips and homomorphism at level 2, exhaustively.
TEST_CASE("level two is I_4") {
  auto const all = enumerate(4);
  for (auto const& p : all) {
    auto const f = from_symmetric(p, 2, 2);
    CHECK(is_gauge(f));
    CHECK(to_symmetric(f, 2) == p);
    CHECK(to_symmetric(cuntz_inverse(f), 2) == inverse(p));
    for (auto const& q : all) {
      CHECK(to_symmetric(cuntz_multiply(f, from_symmetric(q, 2, 2)), 2) == p * q);
    }
  }
}

TEST_CASE("inverse semigroup laws on sample elements") {
  std::vector<CuntzElement> const xs = {
      cz("a->b, b->a"), cz("aa->b"), cz("a->ab, b->aa"), cz("ab->ba, ba->ab"),
      cz("aaa->b, ab->aab"), CuntzElement::identity(2), cz("0"), cz("a->a")};
  for (auto const& f : xs) {
    auto const fi = cuntz_inverse(f);
    CHECK(cuntz_multiply(cuntz_multiply(f, fi), f) == f);
    CHECK(cuntz_domain(f) == cuntz_multiply(fi, f));
    CHECK(cuntz_range(f) == cuntz_multiply(f, fi));
    for (auto const& g : xs) {
      auto const e = cuntz_domain(f);
      auto const h = cuntz_range(g);
      CHECK(cuntz_multiply(e, h) == cuntz_multiply(h, e));
      CHECK(cuntz_compatible(f, g) == cuntz_join(f, g).has_value());
      CHECK(cuntz_leq(cuntz_meet(f, g), f));
    }
  }
}

TEST_CASE("means on the level-two truncation") {
  DyadicLevelView const view(2, 2);
  auto const r = invariant_mean_check(
      view, std::function<Rational(CuntzElement const&)>(
                [](CuntzElement const& e) { return dyadic_mean(e, Side::domain); }));
  CHECK(r.all());
  std::vector<Rational> expected;
  for (int k = 0; k <= 4; ++k) {
    expected.push_back(dyadic_value(2, k));
  }
  auto values = r.class_values;
  std::sort(values.begin(), values.end());
  CHECK(values == expected);
}
