#ifndef MVCOORD_SEMISIMPLE_HPP_
#define MVCOORD_SEMISIMPLE_HPP_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mvcoord/matrix.hpp"
#include "mvcoord/partial_bijection.hpp"

namespace mvcoord {

  // The sizes (m(1), ..., m(k)) of the factors of I_{m(1)} x ... x I_{m(k)}.
  class Signature {
   public:
    Signature() = default;
    // Throws std::invalid_argument if empty or if any size is zero.
    explicit Signature(std::vector<std::size_t> sizes);
    explicit Signature(IntVector const& sizes);

    std::vector<std::size_t> const& sizes() const noexcept {
      return _sizes;
    }
    std::size_t size() const noexcept {
      return _sizes.size();
    }
    std::size_t operator[](std::size_t i) const {
      return _sizes[i];
    }
    std::size_t total() const noexcept;
    IntVector   as_vector() const;

    bool operator==(Signature const&) const = default;

   private:
    std::vector<std::size_t> _sizes;
  };

  std::string   to_string(Signature const& s);
  std::ostream& operator<<(std::ostream& os, Signature const& s);

  class SemisimpleElement {
   public:
    SemisimpleElement() = default;
    // Throws std::invalid_argument if the part degrees do not match.
    SemisimpleElement(Signature signature, std::vector<PartialBijection> parts);

    static SemisimpleElement identity(Signature const& s);
    static SemisimpleElement zero(Signature const& s);
    // The unit idempotent e_i: identity in coordinate i, zero elsewhere.
    static SemisimpleElement unit_idempotent(Signature const& s, std::size_t i);

    Signature const& signature() const noexcept {
      return _signature;
    }
    std::vector<PartialBijection> const& parts() const noexcept {
      return _parts;
    }
    PartialBijection const& operator[](std::size_t i) const {
      return _parts[i];
    }

    bool is_zero() const;
    bool is_idempotent() const;
    bool is_identity() const;
    bool is_unit() const;
    // Coordinatewise ranks (|e_1|, ..., |e_k|).
    IntVector rank_vector() const;

    bool operator==(SemisimpleElement const&) const = default;
    auto operator<=>(SemisimpleElement const& other) const {
      return _parts <=> other._parts;
    }

   private:
    Signature                     _signature;
    std::vector<PartialBijection> _parts;
  };

  // Lifts a binary I_n operation coordinatewise.
  SemisimpleElement elementwise(
      SemisimpleElement const& x,
      SemisimpleElement const& y,
      std::function<PartialBijection(PartialBijection const&,
                                     PartialBijection const&)> const& op);

  SemisimpleElement operator*(SemisimpleElement const& x,
                              SemisimpleElement const& y);
  SemisimpleElement inverse(SemisimpleElement const& x);
  SemisimpleElement domain_idem(SemisimpleElement const& x);
  SemisimpleElement range_idem(SemisimpleElement const& x);
  SemisimpleElement meet(SemisimpleElement const& x, SemisimpleElement const& y);
  std::optional<SemisimpleElement> join(SemisimpleElement const& x,
                                        SemisimpleElement const& y);
  bool natural_leq(SemisimpleElement const& x, SemisimpleElement const& y);
  bool compatible(SemisimpleElement const& x, SemisimpleElement const& y);
  bool orthogonal(SemisimpleElement const& x, SemisimpleElement const& y);
  bool d_related(SemisimpleElement const& x, SemisimpleElement const& y);
  SemisimpleElement complement_idem(SemisimpleElement const& e);

  // All elements, as the cartesian product of the factor enumerations (the
  // last coordinate varies fastest).
  std::vector<SemisimpleElement> enumerate(Signature const& s);
  std::vector<SemisimpleElement> idempotents(Signature const& s);

  std::string   to_string(SemisimpleElement const& x);
  std::ostream& operator<<(std::ostream& os, SemisimpleElement const& x);

  // A standard morphism I_{m(1)} x ... x I_{m(k)} -> I_{n(1)} x ... x I_{n(l)}
  // given by an l x k matrix of multiplicities with M m = n.
  class StandardMorphism {
   public:
    // Throws std::invalid_argument unless the matrix is non-negative, has the
    // right shape and satisfies the combinatorial conditions.
    StandardMorphism(Signature source, Signature target, IntMatrix mult);
    // Target signature computed as M m.
    StandardMorphism(Signature source, IntMatrix mult);

    static StandardMorphism identity(Signature const& s);

    Signature const& source() const noexcept {
      return _source;
    }
    Signature const& target() const noexcept {
      return _target;
    }
    IntMatrix const& mult() const noexcept {
      return _mult;
    }

    bool operator==(StandardMorphism const&) const = default;

   private:
    Signature _source;
    Signature _target;
    IntMatrix _mult;
  };

  // Coordinate i of the result is s_{i1} A_1 (+) ... (+) s_{ik} A_k: blocks in
  // source-index order, copies in order, letters within a block in source
  // order.
  SemisimpleElement apply_standard(StandardMorphism const&  sigma,
                                   SemisimpleElement const& x);
  // tau after sigma.
  StandardMorphism compose_standard(StandardMorphism const& tau,
                                    StandardMorphism const& sigma);
  bool morphism_exists(std::size_t m, std::size_t n);
  bool is_injective_standard(StandardMorphism const& sigma);

}  // namespace mvcoord

#endif  // MVCOORD_SEMISIMPLE_HPP_
