#ifndef MVCOORD_DIMENSION_GROUPS_HPP_
#define MVCOORD_DIMENSION_GROUPS_HPP_

#include <cstddef>

#include "mvcoord/effect_mv.hpp"
#include "mvcoord/matrix.hpp"
#include "mvcoord/rational.hpp"
#include "mvcoord/semisimple.hpp"

namespace mvcoord {

  // Z^r with the coordinatewise order and a strictly positive order unit.
  class SimplicialGroup {
   public:
    explicit SimplicialGroup(IntVector unit);

    std::size_t rank() const noexcept {
      return _unit.size();
    }
    IntVector const& unit() const noexcept {
      return _unit;
    }
    // Number of elements of [0, u].
    std::size_t interval_size() const;

    bool operator==(SimplicialGroup const&) const = default;

   private:
    IntVector _unit;
  };

  // A non-negative integer matrix between simplicial groups.
  class PositiveHom {
   public:
    PositiveHom(SimplicialGroup source, SimplicialGroup target, IntMatrix matrix);
    // The matrix of a standard morphism read as a map of rank vectors.
    static PositiveHom from_standard(StandardMorphism const& sigma);

    SimplicialGroup const& source() const noexcept {
      return _source;
    }
    SimplicialGroup const& target() const noexcept {
      return _target;
    }
    IntMatrix const& matrix() const noexcept {
      return _matrix;
    }
    // matrix * u_source == u_target.
    bool is_normalized() const;

    IntVector operator()(IntVector const& g) const {
      return _matrix * g;
    }

   private:
    SimplicialGroup _source;
    SimplicialGroup _target;
    IntMatrix       _matrix;
  };

  // Coordinatewise rank vector of an idempotent tuple. Throws
  // std::invalid_argument on a non-idempotent.
  IntVector pi_mean(SemisimpleElement const& e);

  // [0, u] with p (+) q = p + q when p + q <= u. Elements are indexed mixed
  // radix, last coordinate fastest. interval_table skips validation.
  PartialAlgebra  interval_table(SimplicialGroup const& g);
  FiniteMvAlgebra interval_algebra(SimplicialGroup const& g);
  IntVector       interval_element(SimplicialGroup const& g, Element x);
  Element         interval_index(SimplicialGroup const& g, IntVector const& p);

  // beta(pi(e)) == pi(sigma(e)) for every idempotent e of the source.
  bool intertwine_check(StandardMorphism const& sigma);

  // Outcome of checking that p |-> beta(p) is a morphism [0,u] -> [0,v].
  struct IntervalMapReport {
    bool into_interval   = true;
    bool preserves_units = true;
    bool preserves_oplus = true;
    bool injective       = true;

    bool is_morphism() const {
      return into_interval && preserves_units && preserves_oplus;
    }
  };
  IntervalMapReport interval_map_check(PositiveHom const& beta);

  // k / 2^level. Throws std::out_of_range if k > 2^level.
  Rational dyadic_value(std::size_t level, BigInt const& k);

  // Bounded verification over the box [-b, b]^r; not a proof.
  // Riesz interpolation: a1, a2 <= b1, b2 implies some c lies between.
  bool riesz_interpolation_check(std::size_t rank, int b = 3);
  // n g >= 0 for some 1 <= n <= max_multiple implies g >= 0.
  bool unperforated_check(std::size_t rank, int b = 3, int max_multiple = 4);

}  // namespace mvcoord

#endif  // MVCOORD_DIMENSION_GROUPS_HPP_
