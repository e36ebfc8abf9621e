#include <algorithm>

#include "doctest.h"
#include "mvcoord/effect_mv.hpp"
#include "mvcoord/quotient.hpp"

using namespace mvcoord;

namespace {

  bool all_hold(std::vector<AxiomResult> const& results) {
    return std::all_of(results.begin(), results.end(),
                       [](AxiomResult const& r) { return r.holds; });
  }

  // L_{n+1} element named by its integer value.
  Element chain_element(FiniteMvAlgebra const& l, std::string const& value) {
    auto const& names = l.base().names();
    return static_cast<Element>(
        std::find(names.begin(), names.end(), value) - names.begin());
  }

}  // namespace

TEST_CASE("chains satisfy the axioms") {
  auto const l3 = lukasiewicz(2);
  CHECK(l3.size() == 3);
  CHECK(all_hold(axiom_check_all(l3.base())));
  auto const w = refinement_witness(l3.base(), 1, 1, 2, 0);
  REQUIRE(w);
  CHECK(*w == std::array<Element, 4>{1, 0, 1, 0});
}

TEST_CASE("E7 failure names its witness") {
  // 0, a, 1 with a (+) 1 defined.
  PartialAlgebra::Table t = {{0, 1, 2}, {1, 2, 2}, {2, 2, std::nullopt}};
  PartialAlgebra const  bad({"0", "a", "1"}, t, 0, 2);
  auto const            r = axiom_check(bad, Axiom::E7);
  CHECK_FALSE(r.holds);
  CHECK(r.witness == std::vector<Element>{1});
  CHECK_THROWS_AS(FiniteMvAlgebra::from_effect_algebra(bad), MvValidationError);
}

TEST_CASE("truncated sum and complement in L_6") {
  auto const l6 = lukasiewicz(5);
  auto const e  = [&](char const* v) { return chain_element(l6, v); };
  CHECK(l6.boxplus(e("3"), e("4")) == e("5"));
  CHECK(l6.boxplus(e("2"), e("2")) == e("4"));
  CHECK(l6.complement(e("2")) == e("3"));
}

TEST_CASE("products of chains") {
  CHECK(lukasiewicz(1).size() == 2);
  auto const p = product(lukasiewicz(1), lukasiewicz(2));
  CHECK(p.size() == 6);
  CHECK(all_hold(axiom_check_all(p.base())));
  CHECK(product_of_chains({1, 2}).base() == p.base());
  CHECK(chain_product_size({2, 3, 1}) == 24);
  CHECK(chain_product_table({1, 2}) == p.base());
}

TEST_CASE("isomorphism search") {
  auto const l3 = lukasiewicz(2);
  auto const id = mv_isomorphic(l3, l3);
  REQUIRE(id);
  CHECK(*id == std::vector<Element>{0, 1, 2});
  CHECK_FALSE(mv_isomorphic(product_of_chains({1, 1}), lukasiewicz(3)));
}

TEST_CASE("quotients of symmetric inverse monoids are chains") {
  auto const q2 = quotient_mv(SemisimpleView(Signature(std::vector<std::size_t>{2})));
  CHECK(q2.algebra.size() == 3);
  CHECK(q2.algebra == lukasiewicz(2).base());

  for (std::size_t n = 1; n <= 5; ++n) {
    auto const q = quotient_mv(SemisimpleView(Signature(std::vector<std::size_t>{n})));
    auto const m = FiniteMvAlgebra::from_effect_algebra(q.algebra);
    auto const l = lukasiewicz(n);
    auto const phi = mv_isomorphic(m, l);
    REQUIRE(phi);
    for (Element a = 0; a < m.size(); ++a) {
      CHECK((*phi)[a] == static_cast<Element>(q.representatives[a].rank_vector()[0]));
      CHECK((*phi)[m.complement(a)] == n - (*phi)[a]);
      for (Element b = 0; b < m.size(); ++b) {
        CHECK((*phi)[m.boxplus(a, b)] == std::min<Element>((*phi)[a] + (*phi)[b], n));
      }
    }
  }
}

TEST_CASE("quotient of a product") {
  auto const q = quotient_mv(SemisimpleView(Signature(std::vector<std::size_t>{1, 2})));
  CHECK(mv_isomorphic(q.algebra, product_of_chains({1, 2}).base()));
}

// Every small semisimple quotient is an MV-algebra ordered by rank vectors.
TEST_CASE("semisimple quotients pass the axioms") {
  for (auto const& sizes : std::vector<std::vector<std::size_t>>{
           {1}, {3}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {4}, {1, 3}}) {
    Signature const s(sizes);
    auto const      q = quotient_mv(SemisimpleView(s));
    CHECK(all_hold(axiom_check_all(q.algebra)));
    CHECK_FALSE(lattice_failure(q.algebra));
    CHECK(q.algebra == quotient_by_rank(s, true));
    for (Element a = 0; a < q.algebra.size(); ++a) {
      for (Element b = 0; b < q.algebra.size(); ++b) {
        auto const ra = q.representatives[a].rank_vector();
        auto const rb = q.representatives[b].rank_vector();
        bool below = true;
        for (std::size_t i = 0; i < ra.size(); ++i) {
          below = below && ra[i] <= rb[i];
        }
        CHECK(q.algebra.leq(a, b) == below);
      }
    }
  }
}

TEST_CASE("invariant means") {
  SemisimpleView const i3(Signature(std::vector<std::size_t>{3}));
  std::vector<Rational> const w = {Rational(1, 3)};
  auto const r = invariant_mean_check(
      i3, std::function<Rational(SemisimpleElement const&)>(
              [&](SemisimpleElement const& e) { return letter_mean(e, w); }));
  CHECK(r.all());

  SemisimpleView const i2(Signature(std::vector<std::size_t>{2}));
  auto const constant = invariant_mean_check(
      i2, std::function<Rational(SemisimpleElement const&)>(
              [](SemisimpleElement const&) { return Rational(1); }));
  CHECK_FALSE(constant.im3);
}

TEST_CASE("standard maps induce MV morphisms") {
  CHECK(induced_map_preserves_oplus(
      StandardMorphism(Signature(std::vector<std::size_t>{2}), IntMatrix{{2}})));
  CHECK(induced_map_preserves_oplus(StandardMorphism(
      Signature(std::vector<std::size_t>{1, 2}), IntMatrix{{1, 1}, {2, 0}})));
}
