#include <stdexcept>

#include "doctest.h"
#include "mvcoord/coordinatize.hpp"
#include "mvcoord/io.hpp"
#include "mvcoord/quotient.hpp"

using namespace mvcoord;

TEST_CASE("factorizations") {
  CHECK(factorizations(1) == std::vector<std::vector<std::size_t>>{{}});
  CHECK(factorizations(12)
        == std::vector<std::vector<std::size_t>>{{12}, {2, 6}, {3, 4}, {2, 2, 3}});
  CHECK(factorizations(7) == std::vector<std::vector<std::size_t>>{{7}});
}

TEST_CASE("coordinatizing chain products") {
  auto const l4 = coordinatize(lukasiewicz(3));
  CHECK(l4.chains == std::vector<std::size_t>{4});
  CHECK(l4.signature.sizes() == std::vector<std::size_t>{3});
  CHECK(is_isomorphism(lukasiewicz(3).base(), l4.quotient, l4.witness));

  auto const p = coordinatize(product_of_chains({1, 2}));
  CHECK(p.chains == std::vector<std::size_t>{2, 3});
  CHECK(p.signature.sizes() == std::vector<std::size_t>{1, 2});

  CHECK(coordinatize(lukasiewicz(1)).signature.sizes()
        == std::vector<std::size_t>{1});

  auto const big = coordinatize(product_of_chains({1, 1, 2}));
  CHECK(big.chains == std::vector<std::size_t>{2, 2, 3});
}

TEST_CASE("interval reports") {
  auto const car = report_interval(car_diagram(3), 3);
  CHECK(car.unit == IntVector{8});
  CHECK(car.interval_size == 9);
  CHECK(car.verified);

  auto const tv = report_interval(two_vertex_diagram(2), 1);
  CHECK(tv.unit == IntVector{1, 1});
  CHECK(tv.interval_size == 4);
  CHECK(tv.verified);

  auto const root = report_interval(car_diagram(1), 0);
  CHECK(root.interval_size == 2);
  CHECK(root.verified);
  CHECK_THROWS_AS(report_interval(car_diagram(1), 2), std::out_of_range);
}

TEST_CASE("algebra files round trip byte for byte") {
  for (auto const& m : {lukasiewicz(3), product_of_chains({1, 2}), lukasiewicz(1)}) {
    auto const text = emit_algebra_json(m);
    auto const file = parse_algebra_json(text);
    CHECK(file.algebra == m.base());
    REQUIRE(file.complement);
    CHECK(*file.complement == m.complement_table());
    CHECK(emit_algebra_json(file.algebra, file.complement) == text);
  }
  CHECK_THROWS_AS(parse_algebra_json("{\"elements\": [\"0\"]}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_algebra_json("not json"), std::invalid_argument);
}

TEST_CASE("diagram files round trip byte for byte") {
  for (auto const& b : {car_diagram(3), two_vertex_diagram(3), irregular_diagram()}) {
    auto const text = emit_diagram_json(b);
    CHECK(parse_diagram_json(text) == b);
    CHECK(emit_diagram_json(parse_diagram_json(text)) == text);
  }
  CHECK_THROWS_AS(parse_diagram_json("{\"levels\": [1], \"mults\": [[[0]]]}"),
                  std::invalid_argument);
}

TEST_CASE("quotient tables survive the coordinatize round trip") {
  for (auto const& sizes : std::vector<std::vector<std::size_t>>{
           {2}, {1, 1}, {2, 1}, {1, 1, 1}, {3, 2}}) {
    Signature const s(sizes);
    auto const      q = semisimple_quotient(s);
    auto const      r = coordinatize(FiniteMvAlgebra::from_effect_algebra(q));
    CHECK(mv_isomorphic(semisimple_quotient(r.signature), q));
  }
}

TEST_CASE("invalid input is rejected with a counterexample") {
  PartialAlgebra::Table t = {{0, 1, 2}, {1, 2, 2}, {2, 2, std::nullopt}};
  PartialAlgebra const  bad({"0", "a", "1"}, t, 0, 2);
  try {
    FiniteMvAlgebra::from_effect_algebra(bad);
    FAIL("expected a validation error");
  } catch (MvValidationError const& e) {
    REQUIRE(e.failed_axiom());
    CHECK_FALSE(e.failed_axiom()->holds);
  }
}
