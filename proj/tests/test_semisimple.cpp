#include <stdexcept>

#include "doctest.h"
#include "mvcoord/semisimple.hpp"

using namespace mvcoord;

namespace {

  PartialBijection pb(char const* text, std::size_t n) {
    return parse_partial_bijection(text, n);
  }

  Signature sig(std::vector<std::size_t> sizes) {
    return Signature(std::move(sizes));
  }

}  // namespace

TEST_CASE("coordinatewise operations") {
  auto const s = sig({2, 1});
  CHECK((SemisimpleElement::identity(s) * SemisimpleElement::identity(s))
            .is_identity());
  SemisimpleElement const a(s, {pb("2->1", 2), PartialBijection(1)});
  SemisimpleElement const b(s, {pb("1->2", 2), PartialBijection(1)});
  auto const j = join(a, b);
  REQUIRE(j);
  CHECK(*j == SemisimpleElement(s, {pb("1->2,2->1", 2), PartialBijection(1)}));

  auto const t  = sig({1, 1});
  auto const e1 = SemisimpleElement::unit_idempotent(t, 0);
  auto const e2 = SemisimpleElement::unit_idempotent(t, 1);
  CHECK(compatible(e1, e2));
  CHECK(orthogonal(e1, e2));
  CHECK(e1.rank_vector() == IntVector{1, 0});
}

TEST_CASE("signature validation") {
  CHECK_THROWS_AS(Signature(std::vector<std::size_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(sig({1, 0}), std::invalid_argument);
  CHECK(sig({1, 2, 3}).total() == 6);
  CHECK(enumerate(sig({1, 2})).size() == 2 * 7);
}

TEST_CASE("standard morphisms lay out blocks in source order") {
  StandardMorphism const car(sig({2}), IntMatrix{{2}});
  CHECK(car.target() == sig({4}));
  SemisimpleElement const x(sig({2}), {pb("1->2", 2)});
  CHECK(apply_standard(car, x)
        == SemisimpleElement(sig({4}), {pb("1->2,3->4", 4)}));

  StandardMorphism const sum(sig({1, 2}), IntMatrix{{1, 1}});
  CHECK(sum.target() == sig({3}));
  SemisimpleElement const y(sig({1, 2}),
                            {PartialBijection::identity(1), pb("1->2", 2)});
  CHECK(apply_standard(sum, y)
        == SemisimpleElement(sig({3}), {pb("1->1,2->3", 3)}));
  CHECK(apply_standard(sum, SemisimpleElement::identity(sig({1, 2})))
            .is_identity());
}

TEST_CASE("composition multiplies matrices") {
  StandardMorphism const two(sig({2}), IntMatrix{{2}});
  StandardMorphism const four(sig({4}), IntMatrix{{2}});
  auto const c = compose_standard(four, two);
  CHECK(c.mult() == IntMatrix{{4}});
  CHECK(c.target() == sig({8}));
  CHECK(compose_standard(StandardMorphism::identity(sig({4})), two) == two);

  StandardMorphism const split(sig({1}), IntMatrix{{1}, {1}});
  StandardMorphism const merge(sig({1, 1}), IntMatrix{{1, 1}});
  auto const m = compose_standard(merge, split);
  CHECK(m.mult() == IntMatrix{{2}});
  for (auto const& x : enumerate(sig({1}))) {
    CHECK(apply_standard(m, x) == apply_standard(merge, apply_standard(split, x)));
  }
}

TEST_CASE("existence and injectivity") {
  CHECK(morphism_exists(2, 4));
  CHECK_FALSE(morphism_exists(2, 3));
  for (std::size_t m = 1; m <= 6; ++m) {
    CHECK(morphism_exists(m, m));
  }
  CHECK(is_injective_standard(StandardMorphism(sig({2}), IntMatrix{{2}})));
  CHECK_FALSE(is_injective_standard(
      StandardMorphism(sig({1, 2}), IntMatrix{{0, 1}})));
  CHECK(is_injective_standard(StandardMorphism(sig({1}), IntMatrix{{1}, {1}})));
  CHECK_THROWS_AS(StandardMorphism(sig({2}), sig({3}), IntMatrix{{1}}),
                  std::invalid_argument);
}

// apply_standard is a homomorphism of Boolean inverse monoids.
TEST_CASE("standard maps preserve the structure") {
  StandardMorphism const sigma(sig({1, 2}), IntMatrix{{1, 1}, {0, 2}});
  auto const all = enumerate(sigma.source());
  for (auto const& x : all) {
    auto const fx = apply_standard(sigma, x);
    CHECK(apply_standard(sigma, inverse(x)) == inverse(fx));
    CHECK(fx.is_idempotent() == x.is_idempotent());
    if (x.is_idempotent()) {
      CHECK(fx.rank_vector() == sigma.mult() * x.rank_vector());
    }
    for (auto const& y : all) {
      auto const fy = apply_standard(sigma, y);
      CHECK(apply_standard(sigma, x * y) == fx * fy);
      CHECK(apply_standard(sigma, meet(x, y)) == meet(fx, fy));
      CHECK(natural_leq(x, y) == natural_leq(fx, fy));
      if (auto const j = join(x, y)) {
        CHECK(apply_standard(sigma, *j) == join(fx, fy));
      }
    }
  }
}
