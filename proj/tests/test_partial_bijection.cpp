#include <set>
#include <stdexcept>

#include "doctest.h"
#include "mvcoord/partial_bijection.hpp"

using namespace mvcoord;

namespace {

  PartialBijection pb(char const* text, std::size_t n) {
    return parse_partial_bijection(text, n);
  }

}  // namespace

TEST_CASE("compose applies the right factor first") {
  CHECK(compose(pb("2->1", 3), pb("3->2", 3)) == pb("3->1", 3));
  CHECK(compose(PartialBijection::identity(2), pb("1->2", 2)) == pb("1->2", 2));
  CHECK(compose(pb("2->1", 2), pb("1->2", 2)) == pb("1->1", 2));
  CHECK(compose(pb("1->2", 2), pb("1->2", 2)).is_zero());
}

TEST_CASE("inverse, domain and range") {
  auto const f = pb("2->1", 2);
  CHECK(inverse(f) == pb("1->2", 2));
  CHECK(domain_idem(f) == pb("2->2", 2));
  CHECK(range_idem(f) == pb("1->1", 2));

  auto const id = PartialBijection::identity(3);
  CHECK(inverse(id) == id);
  CHECK(domain_idem(id) == id);
  CHECK(range_idem(id) == id);

  auto const swap = pb("1->2,2->1", 2);
  CHECK(inverse(swap) == swap);
  CHECK(domain_idem(swap).is_identity());
}

TEST_CASE("order, compatibility and orthogonality") {
  CHECK(orthogonal(pb("2->1", 2), pb("1->2", 2)));
  CHECK_FALSE(compatible(pb("1->1", 2), pb("2->1", 2)));
  for (auto const& a : enumerate(3)) {
    CHECK(natural_leq(a, a));
  }
  CHECK(natural_leq(pb("1->2", 3), pb("1->2,3->1", 3)));
  CHECK_FALSE(natural_leq(pb("1->2,3->1", 3), pb("1->2", 3)));
}

TEST_CASE("joins and meets") {
  auto const j = join(pb("2->1", 2), pb("1->2", 2));
  REQUIRE(j);
  CHECK(*j == pb("1->2,2->1", 2));
  CHECK_FALSE(join(pb("1->1", 2), pb("2->1", 2)));
  CHECK(meet(pb("1->1,2->2", 2), pb("1->1", 2)) == pb("1->1", 2));
}

TEST_CASE("rank, D and complements") {
  CHECK(pb("1->1,3->3", 3).rank() == 2);
  CHECK(d_related(pb("1->1", 2), pb("2->2", 2)));
  CHECK_FALSE(d_related(pb("1->1", 2), PartialBijection::identity(2)));
  CHECK(complement_idem(pb("1->1", 3)) == pb("2->2,3->3", 3));
}

TEST_CASE("rook matrices") {
  auto const m = to_rook(pb("1->2", 2));
  CHECK(m.entries() == std::vector<std::uint8_t>{0, 0, 1, 0});
  CHECK(to_rook(PartialBijection::identity(2))
        == RookMatrix(2, {1, 0, 0, 1}));
  CHECK_THROWS_AS(RookMatrix(2, {1, 1, 0, 0}), std::invalid_argument);
}

TEST_CASE("enumeration order and size") {
  CHECK(enumerate(3).size() == 34);
  for (std::size_t n = 0; n <= 5; ++n) {
    auto const all = enumerate(n);
    CHECK(all.size() == symmetric_inverse_monoid_order(n));
    CHECK(std::set<PartialBijection>(all.begin(), all.end()).size()
          == all.size());
    for (std::size_t i = 1; i < all.size(); ++i) {
      CHECK(all[i - 1].rank() <= all[i].rank());
    }
  }
  CHECK(idempotents(4).size() == 16);
  std::size_t count = 0;
  for_each_partial_bijection(4, [&](PartialBijection const&) { ++count; });
  CHECK(count == 209);
}

TEST_CASE("text round trip") {
  for (auto const& f : enumerate(3)) {
    CHECK(parse_partial_bijection(to_string(f), 3) == f);
  }
  CHECK(to_string(PartialBijection(2)) == "0");
  CHECK_THROWS_AS(parse_partial_bijection("1->1,2->1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_partial_bijection("3->1", 2), std::invalid_argument);
}

// Properties over all of I_3, checked against the rook representation.
TEST_CASE("rook map is a monoid isomorphism") {
  auto const all = enumerate(3);
  for (auto const& f : all) {
    CHECK(from_rook(to_rook(f)) == f);
    for (auto const& g : all) {
      CHECK(to_rook(f * g) == to_rook(f) * to_rook(g));
    }
  }
}

TEST_CASE("inverse semigroup laws") {
  auto const all = enumerate(3);
  for (auto const& a : all) {
    auto const ai = inverse(a);
    CHECK(a * ai * a == a);
    CHECK(ai * a * ai == ai);
    CHECK(domain_idem(a) == ai * a);
    CHECK(range_idem(a) == a * ai);
  }
  auto const ids = idempotents(3);
  for (auto const& e : ids) {
    for (auto const& f : ids) {
      CHECK(e * f == f * e);
    }
  }
}

TEST_CASE("compatible meets have the expected domains") {
  auto const all = enumerate(3);
  for (auto const& s : all) {
    for (auto const& t : all) {
      bool const dom = domain_idem(meet(s, t)) == domain_idem(s) * domain_idem(t);
      bool const ran = range_idem(meet(s, t)) == range_idem(s) * range_idem(t);
      CHECK(compatible(s, t) == (dom && ran));
    }
  }
}
