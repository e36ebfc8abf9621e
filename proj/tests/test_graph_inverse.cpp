#include <set>
#include <stdexcept>

#include "doctest.h"
#include "mvcoord/graph_inverse.hpp"

using namespace mvcoord;

namespace {

  PathPair idem(Path const& x) {
    return PathPair::of(x, x);
  }

}  // namespace

TEST_CASE("products of path pairs") {
  auto const car = car_diagram(3);
  auto const p2  = paths_to(car, 2, 0);
  REQUIRE(p2.size() == 4);
  auto const x = p2[0];
  auto const y = p2[1];
  auto const z = p2[2];
  CHECK(gim_multiply(idem(x), idem(x)) == idem(x));
  CHECK(gim_multiply(PathPair::of(x, y), PathPair::of(y, z)) == PathPair::of(x, z));
  CHECK(gim_multiply(PathPair::of(x, y), PathPair::of(z, x)).is_zero());
  CHECK(gim_is_idempotent(idem(x)));
  CHECK(weight(PathPair::of(x, y)) == 2);
  CHECK_THROWS(weight(PathPair::zero()));
}

TEST_CASE("order on path pairs") {
  auto const car = car_diagram(3);
  auto const p1  = paths_to(car, 1, 0);
  auto const cover = lengthen_cover(car, idem(p1[0]));
  REQUIRE(cover.size() == 2);
  for (auto const& c : cover) {
    CHECK(natural_leq_gim(c, idem(p1[0])));
    CHECK(weight(c) == 2);
  }
  CHECK(gim_orthogonal(cover[0], cover[1]));

  auto const all = enumerate_gim(car);
  for (auto const& p : all) {
    for (auto const& q : all) {
      if (!p.is_zero() && !q.is_zero() && p != q && natural_leq_gim(p, q)) {
        CHECK(weight(p) > weight(q));
      }
    }
  }
}

TEST_CASE("single incoming edge gives a singleton cover") {
  BratteliDiagram const chain({1, 1}, {IntMatrix{{1}}, IntMatrix{{1}}});
  auto const            root = idem(Path{});
  auto const            cover = lengthen_cover(chain, root);
  REQUIRE(cover.size() == 1);
  CHECK(weight(cover[0]) == 1);
  CHECK_THROWS_AS(lengthen_cover(chain, PathPair::zero()), std::invalid_argument);
}

TEST_CASE("path letters follow the enumeration") {
  for (auto const& b : {car_diagram(3), two_vertex_diagram(3), irregular_diagram()}) {
    for (std::size_t level = 0; level <= b.depth(); ++level) {
      for (std::size_t v = 0; v < b.vertex_count(level); ++v) {
        auto const ps = paths_to(b, level, v);
        CHECK(static_cast<Integer>(ps.size()) == b.size_vector(level)[v]);
        for (std::size_t i = 0; i < ps.size(); ++i) {
          CHECK(path_letter(b, ps[i]) == i + 1);
          CHECK(ps[i].start() == std::make_pair(level, v));
        }
      }
    }
  }
}

TEST_CASE("the root loop maps to the identity") {
  auto const car = car_diagram(2);
  Homogeneous const one = {idem(Path{})};
  auto const        h   = epsilon_level_map(car, 0, one);
  CHECK(h.size() == 2);
  CHECK(homogeneous_to_semisimple(car, 1, h).is_identity());
  CHECK_THROWS_AS(epsilon_level_map(car, 2, one), std::out_of_range);
}

// The edge-adjunction map agrees with the standard level map.
TEST_CASE("commuting square") {
  for (auto const& b : {car_diagram(3), two_vertex_diagram(2)}) {
    for (std::size_t level = 0; level < b.depth(); ++level) {
      for (auto const& x : enumerate(b.level_signature(level))) {
        auto const h = semisimple_to_homogeneous(b, level, x);
        CHECK(homogeneous_to_semisimple(b, level, h) == x);
        CHECK(homogeneous_to_semisimple(b, level + 1, epsilon_level_map(b, level, h))
              == apply_standard(b.level_morphism(level), x));
      }
    }
  }
}

TEST_CASE("idempotents with a common lower bound are comparable") {
  auto const b   = two_vertex_diagram(3);
  auto const all = enumerate_gim(b);
  std::vector<PathPair> ids;
  for (auto const& p : all) {
    if (!p.is_zero() && gim_is_idempotent(p)) {
      ids.push_back(p);
    }
  }
  for (auto const& e : ids) {
    for (auto const& f : ids) {
      if (!gim_multiply(e, f).is_zero()) {
        CHECK((natural_leq_gim(e, f) || natural_leq_gim(f, e)));
      }
    }
  }
}
