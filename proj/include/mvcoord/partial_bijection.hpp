#ifndef MVCOORD_PARTIAL_BIJECTION_HPP_
#define MVCOORD_PARTIAL_BIJECTION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mvcoord {

  // Letters are 1-based; 0 in an image slot means "undefined".
  using Letter = std::uint32_t;

  inline constexpr Letter UNDEFINED = 0;

  // An element of the symmetric inverse monoid I_n: an injective partial map
  // on the letters 1..n, stored densely as the image of every letter.
  class PartialBijection {
   public:
    // The zero (empty) map of the given degree.
    explicit PartialBijection(std::size_t degree = 0);

    // images[j - 1] is the image of letter j, or UNDEFINED. Throws
    // std::invalid_argument if the map is not injective or out of range.
    static PartialBijection from_images(std::vector<Letter> images);
    static PartialBijection identity(std::size_t degree);
    static PartialBijection partial_identity(std::size_t                degree,
                                             std::vector<Letter> const& letters);
    // The matrix unit e_{ij}: domain {j}, image {i}.
    static PartialBijection matrix_unit(std::size_t degree, Letter i, Letter j);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    Letter operator()(Letter j) const {
      return _images[j - 1];
    }

    std::vector<Letter> const& images() const noexcept {
      return _images;
    }

    std::size_t         rank() const noexcept;
    std::vector<Letter> domain() const;
    std::vector<Letter> image() const;

    bool is_zero() const noexcept;
    bool is_idempotent() const noexcept;
    bool is_identity() const noexcept;
    bool is_permutation() const noexcept;

    bool operator==(PartialBijection const&) const = default;
    auto operator<=>(PartialBijection const&) const = default;

   private:
    std::vector<Letter> _images;
  };

  // Product "apply g, then f", so that to_rook(compose(f, g)) equals
  // to_rook(f) * to_rook(g).
  PartialBijection compose(PartialBijection const& f, PartialBijection const& g);
  PartialBijection operator*(PartialBijection const& f,
                             PartialBijection const& g);

  PartialBijection inverse(PartialBijection const& f);
  PartialBijection domain_idem(PartialBijection const& f);
  PartialBijection range_idem(PartialBijection const& f);

  bool natural_leq(PartialBijection const& a, PartialBijection const& b);
  bool compatible(PartialBijection const& a, PartialBijection const& b);
  bool orthogonal(PartialBijection const& a, PartialBijection const& b);

  PartialBijection meet(PartialBijection const& a, PartialBijection const& b);
  // Graph union; std::nullopt when a and b are not compatible.
  std::optional<PartialBijection> join(PartialBijection const& a,
                                       PartialBijection const& b);

  bool d_related(PartialBijection const& a, PartialBijection const& b);
  PartialBijection complement_idem(PartialBijection const& e);

  class RookMatrix {
   public:
    explicit RookMatrix(std::size_t degree = 0);
    // Throws std::invalid_argument unless entries are 0/1 with at most one 1
    // per row and per column.
    RookMatrix(std::size_t degree, std::vector<std::uint8_t> entries);

    std::size_t degree() const noexcept {
      return _degree;
    }
    std::uint8_t operator()(std::size_t i, std::size_t j) const {
      return _entries[(i - 1) * _degree + (j - 1)];
    }
    std::vector<std::uint8_t> const& entries() const noexcept {
      return _entries;
    }

    RookMatrix operator*(RookMatrix const& other) const;
    RookMatrix freshman(RookMatrix const& other) const;

    bool operator==(RookMatrix const&) const = default;

   private:
    std::size_t               _degree;
    std::vector<std::uint8_t> _entries;
  };

  RookMatrix       to_rook(PartialBijection const& f);
  PartialBijection from_rook(RookMatrix const& m);

  // All of I_n, ordered by rank, then by domain set, then by image tuple.
  std::vector<PartialBijection> enumerate(std::size_t n);
  std::vector<PartialBijection> idempotents(std::size_t n);
  // Calls f on every element of I_n in enumeration order without
  // materialising the whole monoid.
  void for_each_partial_bijection(
      std::size_t                                    n,
      std::function<void(PartialBijection const&)> const& f);
  std::uint64_t symmetric_inverse_monoid_order(std::size_t n);

  // Text form "j->i" comma-joined, e.g. "1->2,3->3"; the empty map is "0".
  std::string      to_string(PartialBijection const& f);
  PartialBijection parse_partial_bijection(std::string_view text,
                                           std::size_t      degree);

  std::ostream& operator<<(std::ostream& os, PartialBijection const& f);

}  // namespace mvcoord

template <>
struct std::hash<mvcoord::PartialBijection> {
  std::size_t operator()(mvcoord::PartialBijection const& f) const noexcept;
};

#endif  // MVCOORD_PARTIAL_BIJECTION_HPP_
