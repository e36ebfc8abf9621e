#ifndef MVCOORD_CUNTZ_GAUGE_HPP_
#define MVCOORD_CUNTZ_GAUGE_HPP_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvcoord/cantor_prefix.hpp"
#include "mvcoord/partial_bijection.hpp"
#include "mvcoord/rational.hpp"

namespace mvcoord {

  // An element y x^{-1} of the polycyclic monoid, or zero. It acts on
  // infinite strings by xw |-> yw.
  struct PolyElement {
    std::optional<std::pair<Word, Word>> pair;  // (y, x)

    static PolyElement zero() {
      return {};
    }
    static PolyElement of(Word y, Word x) {
      return {std::make_pair(std::move(y), std::move(x))};
    }
    bool is_zero() const noexcept {
      return !pair.has_value();
    }
    bool operator==(PolyElement const&) const = default;
  };

  // Apply q then p.
  PolyElement   poly_multiply(PolyElement const& p, PolyElement const& q);
  PolyElement   poly_inverse(PolyElement const& p);
  std::string   to_string(PolyElement const& p);

  // A partial homeomorphism of Cantor space given by rows x_i -> y_i, each
  // acting as x_i w |-> y_i w. The x_i and the y_i form prefix codes. Kept in
  // canonical form: no full sibling block (u a, v a) for every letter a, rows
  // sorted by domain word. The empty row list is zero.
  class CuntzElement {
   public:
    using Row = std::pair<Word, Word>;

    explicit CuntzElement(std::size_t alphabet = 2) : _n(alphabet) {}
    // Validates and canonicalizes. Throws std::invalid_argument if either
    // side is not a prefix code.
    CuntzElement(std::size_t alphabet, std::vector<Row> rows);

    // Canonicalizes rows already known to form prefix codes on both sides,
    // skipping validation.
    static CuntzElement from_valid_rows(std::size_t alphabet, std::vector<Row> rows);

    static CuntzElement identity(std::size_t alphabet);
    static CuntzElement zero(std::size_t alphabet) {
      return CuntzElement(alphabet);
    }
    // Identity on the open set generated by x.
    static CuntzElement idempotent(PrefixCode const& x);

    std::size_t alphabet() const noexcept {
      return _n;
    }
    std::vector<Row> const& rows() const noexcept {
      return _rows;
    }
    bool is_zero() const noexcept {
      return _rows.empty();
    }
    bool is_idempotent() const;

    PrefixCode domain_code() const;
    PrefixCode range_code() const;

    // Image of a finite word with a prefix in the domain code.
    std::optional<Word> apply(Word const& w) const;

    bool operator==(CuntzElement const&) const = default;
    auto operator<=>(CuntzElement const& other) const {
      return _rows <=> other._rows;
    }

   private:
    std::size_t      _n;
    std::vector<Row> _rows;
  };

  // "aa->ab, ab->aa"; "0" is zero and "ε->ε" the identity.
  CuntzElement  parse_cuntz(std::string_view text, std::size_t alphabet);
  std::string   to_string(CuntzElement const& f);
  std::ostream& operator<<(std::ostream& os, CuntzElement const& f);

  // Apply g then f.
  CuntzElement cuntz_multiply(CuntzElement const& f, CuntzElement const& g);
  CuntzElement cuntz_inverse(CuntzElement const& f);
  CuntzElement cuntz_domain(CuntzElement const& f);
  CuntzElement cuntz_range(CuntzElement const& f);
  CuntzElement cuntz_meet(CuntzElement const& f, CuntzElement const& g);
  bool cuntz_compatible(CuntzElement const& f, CuntzElement const& g);
  bool cuntz_orthogonal(CuntzElement const& f, CuntzElement const& g);
  std::optional<CuntzElement> cuntz_join(CuntzElement const& f,
                                         CuntzElement const& g);
  bool cuntz_leq(CuntzElement const& f, CuntzElement const& g);

  // Every row preserves length.
  bool is_gauge(CuntzElement const& f);
  // Both codes are maximal.
  bool is_unit(CuntzElement const& f);

  enum class Side { domain, range };
  Rational dyadic_mean(CuntzElement const& f, Side which);

  // e' below f with the measure of e, and a gauge element from e to e'.
  struct GoodWitness {
    PrefixCode   target;
    CuntzElement map;
  };
  std::optional<GoodWitness> good_witness(PrefixCode const& e,
                                          PrefixCode const& f);

  // Letters 1..n^l of I_{n^l} are the words of length l ordered with the last
  // letter most significant, so that refining a level-l element matches the
  // standard map A |-> nA.
  Letter word_to_letter(Word const& w);
  Word   letter_to_word(Letter j, std::size_t alphabet, std::size_t level);

  // Throws std::invalid_argument for a non-gauge element or a row longer
  // than the level.
  PartialBijection to_symmetric(CuntzElement const& f, std::size_t level);
  CuntzElement     from_symmetric(PartialBijection const& p,
                                  std::size_t             alphabet,
                                  std::size_t             level);

  // Level-l elements of the n-adic monoid as a Boolean inverse monoid view.
  class DyadicLevelView {
   public:
    using value_type = CuntzElement;

    DyadicLevelView(std::size_t alphabet, std::size_t level);

    std::size_t alphabet() const noexcept {
      return _n;
    }
    std::size_t level() const noexcept {
      return _level;
    }

    std::vector<CuntzElement> idempotents() const;
    // Decided by constructing a gauge map between the domains at this level.
    bool d_related(CuntzElement const& a, CuntzElement const& b) const;
    // A gauge element with domain a and range b, if one exists at this level.
    std::optional<CuntzElement> d_witness(CuntzElement const& a,
                                          CuntzElement const& b) const;
    bool orthogonal(CuntzElement const& a, CuntzElement const& b) const {
      return cuntz_orthogonal(a, b);
    }
    bool leq(CuntzElement const& a, CuntzElement const& b) const {
      return cuntz_leq(a, b);
    }
    CuntzElement join(CuntzElement const& a, CuntzElement const& b) const;
    CuntzElement complement(CuntzElement const& e) const;
    CuntzElement identity() const {
      return CuntzElement::identity(_n);
    }
    CuntzElement zero() const {
      return CuntzElement::zero(_n);
    }
    CuntzElement domain_idem(CuntzElement const& a) const {
      return cuntz_domain(a);
    }
    CuntzElement range_idem(CuntzElement const& a) const {
      return cuntz_range(a);
    }
    void for_each_element(
        std::function<void(CuntzElement const&)> const& fn) const;
    std::string label(CuntzElement const& a) const {
      return to_string(a);
    }

   private:
    std::size_t _n;
    std::size_t _level;
  };

}  // namespace mvcoord

#endif  // MVCOORD_CUNTZ_GAUGE_HPP_
