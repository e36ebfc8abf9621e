#ifndef MVCOORD_EFFECT_MV_HPP_
#define MVCOORD_EFFECT_MV_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mvcoord {

  // Elements of a finite partial algebra are indices into its carrier.
  using Element = std::uint32_t;

  // A finite set with a partially defined binary operation (+), a zero and
  // optionally a top element 1. Undefined sums are std::nullopt.
  class PartialAlgebra {
   public:
    using Table = std::vector<std::vector<std::optional<Element>>>;

    PartialAlgebra() = default;
    // Throws std::invalid_argument if the table is not square over the
    // carrier or refers to elements outside it.
    PartialAlgebra(std::vector<std::string> names,
                   Table                    oplus,
                   Element                  zero,
                   std::optional<Element>   one);

    std::size_t size() const noexcept {
      return _names.size();
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::string const& name(Element a) const {
      return _names[a];
    }
    std::optional<Element> oplus(Element a, Element b) const {
      return _oplus[a][b];
    }
    bool defined(Element a, Element b) const {
      return _oplus[a][b].has_value();
    }
    Table const& table() const noexcept {
      return _oplus;
    }
    Element zero() const noexcept {
      return _zero;
    }
    std::optional<Element> one() const noexcept {
      return _one;
    }

    // a <= b iff b = a (+) c for some c.
    bool leq(Element a, Element b) const;

    bool operator==(PartialAlgebra const&) const = default;

   private:
    std::vector<std::string> _names;
    Table                    _oplus;
    Element                  _zero = 0;
    std::optional<Element>   _one;
  };

  enum class Axiom { E1 = 1, E2, E3, E4, E5, E6, E7, E8 };

  inline constexpr std::array<Axiom, 8> ALL_AXIOMS = {Axiom::E1,
                                                      Axiom::E2,
                                                      Axiom::E3,
                                                      Axiom::E4,
                                                      Axiom::E5,
                                                      Axiom::E6,
                                                      Axiom::E7,
                                                      Axiom::E8};

  std::string_view to_string(Axiom ax);

  // Outcome of an exhaustive axiom check. On failure, witness holds the
  // violating tuple of elements (in the order the axiom names them).
  struct AxiomResult {
    Axiom                axiom;
    bool                 holds = true;
    std::vector<Element> witness;
    std::string          detail;
  };

  // Throws std::invalid_argument for E7/E8 on an algebra without 1.
  AxiomResult              axiom_check(PartialAlgebra const& a, Axiom ax);
  std::vector<AxiomResult> axiom_check_all(PartialAlgebra const& a);

  // Smallest (c11, c12, c21, c22) in lexicographic order with
  // a1 = c11 (+) c12, a2 = c21 (+) c22, b1 = c11 (+) c21, b2 = c12 (+) c22.
  std::optional<std::array<Element, 4>>
  refinement_witness(PartialAlgebra const& a,
                     Element               a1,
                     Element               a2,
                     Element               b1,
                     Element               b2);

  // Order check for the effect-algebra order: std::nullopt if every pair has
  // a meet and a join, otherwise a pair lacking one.
  std::optional<std::pair<Element, Element>>
  lattice_failure(PartialAlgebra const& a);

  class MvValidationError : public std::invalid_argument {
   public:
    explicit MvValidationError(std::string const& what,
                               std::optional<AxiomResult> failed = {})
        : std::invalid_argument(what), _failed(std::move(failed)) {}

    std::optional<AxiomResult> const& failed_axiom() const noexcept {
      return _failed;
    }

   private:
    std::optional<AxiomResult> _failed;
  };

  // A finite MV-algebra presented by its partial (+) table: a lattice-ordered
  // effect algebra with the refinement property.
  class FiniteMvAlgebra {
   public:
    // Runs the full axiom suite; throws MvValidationError on any failure,
    // including a complement table that disagrees with E8.
    FiniteMvAlgebra(PartialAlgebra base, std::vector<Element> complement);
    // Complement derived from E8.
    static FiniteMvAlgebra from_effect_algebra(PartialAlgebra base);

    PartialAlgebra const& base() const noexcept {
      return _base;
    }
    std::size_t size() const noexcept {
      return _base.size();
    }
    Element zero() const noexcept {
      return _base.zero();
    }
    Element one() const noexcept {
      return *_base.one();
    }
    std::string const& name(Element a) const {
      return _base.name(a);
    }
    std::optional<Element> oplus(Element a, Element b) const {
      return _base.oplus(a, b);
    }
    Element complement(Element a) const {
      return _complement[a];
    }
    std::vector<Element> const& complement_table() const noexcept {
      return _complement;
    }

    bool leq(Element a, Element b) const {
      return _leq[a * size() + b] != 0;
    }
    Element meet(Element a, Element b) const {
      return _meet[a * size() + b];
    }
    Element join(Element a, Element b) const {
      return _join[a * size() + b];
    }
    // a [+] b = a (+) (a' /\ b); total.
    Element boxplus(Element a, Element b) const;

   private:
    PartialAlgebra            _base;
    std::vector<Element>      _complement;
    std::vector<std::uint8_t> _leq;
    std::vector<Element>      _meet;
    std::vector<Element>      _join;
  };

  // The Lukasiewicz chain L_{n+1} on {0, ..., n}: r (+) s = r + s when
  // r + s <= n, undefined otherwise.
  FiniteMvAlgebra lukasiewicz(std::size_t n);
  // Coordinatewise product; element (a, b) has index a * |B| + b.
  FiniteMvAlgebra product(FiniteMvAlgebra const& a, FiniteMvAlgebra const& b);
  FiniteMvAlgebra product_of_chains(std::vector<std::size_t> const& ns);

  // Unvalidated tables of L_{n1+1} x ... x L_{nk+1}, for carriers too large
  // for the cubic axiom sweep. Element indices are mixed radix with the
  // last coordinate fastest; names are "k" or "(k1,...,kr)".
  std::size_t          chain_product_size(std::vector<std::size_t> const& ns);
  PartialAlgebra       chain_product_table(std::vector<std::size_t> const& ns);
  std::vector<Element> chain_product_complement(std::vector<std::size_t> const& ns);

  // A bijection phi (phi[a] is the image of a) preserving 0, 1, definedness
  // of (+) and its values, or std::nullopt. The search is deterministic and
  // returns the first isomorphism in its search order.
  std::optional<std::vector<Element>> mv_isomorphic(PartialAlgebra const& a,
                                                    PartialAlgebra const& b);
  std::optional<std::vector<Element>> mv_isomorphic(FiniteMvAlgebra const& a,
                                                    FiniteMvAlgebra const& b);

  // True if phi is a bijection preserving 0, 1 and (+) in both directions.
  bool is_isomorphism(PartialAlgebra const&       a,
                      PartialAlgebra const&       b,
                      std::vector<Element> const& phi);

}  // namespace mvcoord

#endif  // MVCOORD_EFFECT_MV_HPP_
