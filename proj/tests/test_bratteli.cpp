#include <memory>
#include <stdexcept>

#include "doctest.h"
#include "mvcoord/bratteli.hpp"
#include "mvcoord/dimension_groups.hpp"
#include "mvcoord/effect_mv.hpp"

using namespace mvcoord;

namespace {

  PartialBijection pb(char const* text, std::size_t n) {
    return parse_partial_bijection(text, n);
  }

  Signature sig(std::vector<std::size_t> sizes) {
    return Signature(std::move(sizes));
  }

}  // namespace

TEST_CASE("size vectors") {
  auto const car = car_diagram(3);
  CHECK(car.size_vector(0) == IntVector{1});
  CHECK(car.size_vector(1) == IntVector{2});
  CHECK(car.size_vector(2) == IntVector{4});
  CHECK(car.size_vector(3) == IntVector{8});

  BratteliDiagram const chain({1, 1}, {IntMatrix{{1}}, IntMatrix{{1}}});
  CHECK(chain.size_vector(2) == IntVector{1});

  auto const tv = two_vertex_diagram(2);
  CHECK(tv.size_vector(1) == IntVector{1, 1});
  CHECK(tv.size_vector(2) == IntVector{2, 2});
}

TEST_CASE("level signatures and morphisms") {
  auto const car = car_diagram(3);
  CHECK(car.level_signature(0) == sig({1}));
  CHECK(car.level_signature(2) == sig({4}));
  CHECK(car.level_morphism(2).mult() == IntMatrix{{2}});

  BratteliDiagram const pascal({2, 1}, {IntMatrix{{1}, {1}}, IntMatrix{{1, 1}}});
  CHECK(pascal.level_signature(2) == sig({2}));
}

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(BratteliDiagram({2}, {IntMatrix{{1}, {0}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(BratteliDiagram({1, 1}, {IntMatrix{{1}}, IntMatrix{{1, 1}}}),
                  std::invalid_argument);
}

TEST_CASE("pushing elements along the diagram") {
  auto const car = std::make_shared<BratteliDiagram const>(car_diagram(3));
  auto const id1 = AfElement::identity(car, 1);
  CHECK(push_to_level(id1, 2).value().is_identity());

  AfElement const x(car, 1, SemisimpleElement(sig({2}), {pb("1->2", 2)}));
  auto const      x2 = push_to_level(x, 2);
  CHECK(x2.value() == SemisimpleElement(sig({4}), {pb("1->2,3->4", 4)}));
  CHECK(push_to_level(x, 1).value() == x.value());
  CHECK(af_equal(x, push_to_level(x, 3)));
  CHECK(af_equal(af_multiply(x, AfElement::identity(car)), x));
  CHECK_THROWS_AS(push_to_level(x2, 1), std::invalid_argument);

  AfElement const e(car, 1, SemisimpleElement(sig({2}), {pb("1->1", 2)}));
  AfElement const f(car, 1, SemisimpleElement(sig({2}), {pb("2->2", 2)}));
  CHECK(af_meet(e, f).value().is_zero());
  auto const j = af_join(e, f);
  REQUIRE(j);
  CHECK(j->is_unit());
}

// The level maps are injective, so comparisons may happen at either level.
TEST_CASE("limit operations agree across levels") {
  auto const tv = std::make_shared<BratteliDiagram const>(two_vertex_diagram(2));
  auto const elems = enumerate(tv->level_signature(1));
  for (auto const& a : elems) {
    AfElement const x(tv, 1, a);
    for (auto const& b : elems) {
      AfElement const y(tv, 1, b);
      AfElement const y2 = push_to_level(y, 2);
      CHECK(af_equal(af_multiply(x, y2), af_multiply(x, y)));
      CHECK(af_natural_leq(x, y2) == af_natural_leq(x, y));
      CHECK(af_equal(af_meet(x, y2), af_meet(x, y)));
    }
    CHECK(af_equal(af_inverse(push_to_level(x, 2)), af_inverse(x)));
  }
}

TEST_CASE("pi mean") {
  SemisimpleElement const e(sig({3}), {pb("1->1,2->2", 3)});
  CHECK(pi_mean(e) == IntVector{2});
  CHECK(pi_mean(SemisimpleElement::identity(sig({2, 3}))) == IntVector{2, 3});
  CHECK(pi_mean(SemisimpleElement::zero(sig({2, 3}))) == IntVector{0, 0});
  CHECK_THROWS_AS(pi_mean(SemisimpleElement(sig({2}), {pb("1->2", 2)})),
                  std::invalid_argument);
}

TEST_CASE("intervals") {
  auto const l6 = interval_algebra(SimplicialGroup({5}));
  CHECK(mv_isomorphic(l6, lukasiewicz(5)));
  auto const g  = SimplicialGroup({1, 2});
  CHECK(g.interval_size() == 6);
  CHECK(mv_isomorphic(interval_algebra(g), product_of_chains({1, 2})));
  CHECK(mv_isomorphic(interval_algebra(SimplicialGroup({1, 1, 1})),
                      product_of_chains({1, 1, 1})));
  for (Element x = 0; x < g.interval_size(); ++x) {
    CHECK(interval_index(g, interval_element(g, x)) == x);
  }
}

TEST_CASE("intertwining") {
  CHECK(intertwine_check(car_diagram(2).level_morphism(1)));
  CHECK(intertwine_check(StandardMorphism::identity(sig({2, 1}))));
  for (auto const& b : {car_diagram(3), two_vertex_diagram(3), irregular_diagram()}) {
    for (std::size_t l = 0; l < b.depth(); ++l) {
      auto const& sigma = b.level_morphism(l);
      CHECK(intertwine_check(sigma));
      auto const beta = PositiveHom::from_standard(sigma);
      CHECK(beta.is_normalized());
      auto const r = interval_map_check(beta);
      CHECK(r.is_morphism());
    }
  }
}

TEST_CASE("interval maps need not be injective") {
  CHECK(interval_map_check(PositiveHom::from_standard(
                               car_diagram(2).level_morphism(1)))
            .injective);
  CHECK_FALSE(interval_map_check(PositiveHom::from_standard(
                                     two_vertex_diagram(2).level_morphism(1)))
                  .injective);
}

TEST_CASE("dyadic values") {
  CHECK(dyadic_value(3, 3) == Rational(3, 8));
  CHECK(dyadic_value(4, 0) == 0);
  CHECK(dyadic_value(4, 16) == 1);
  CHECK(dyadic_value(1, 1) == dyadic_value(2, 2));
  CHECK_THROWS_AS(dyadic_value(2, 5), std::out_of_range);
}

TEST_CASE("simplicial groups are Riesz and unperforated on small boxes") {
  CHECK(riesz_interpolation_check(1));
  CHECK(riesz_interpolation_check(2, 2));
  CHECK(unperforated_check(2));
}
