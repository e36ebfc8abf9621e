#ifndef MVCOORD_BRATTELI_HPP_
#define MVCOORD_BRATTELI_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "mvcoord/matrix.hpp"
#include "mvcoord/semisimple.hpp"

namespace mvcoord {

  // A Bratteli diagram truncated at a finite depth d. Level 0 is the root;
  // levels 1..d have level_counts()[level - 1] vertices. mults()[i] is the
  // |V(i+1)| x |V(i)| multiplicity matrix, so mults()[0] is a single column.
  class BratteliDiagram {
   public:
    // Throws std::invalid_argument if shapes do not chain, or if some matrix
    // has a zero row or column.
    BratteliDiagram(std::vector<std::size_t> level_counts,
                    std::vector<IntMatrix>   mults);

    std::size_t depth() const noexcept {
      return _counts.size();
    }
    std::vector<std::size_t> const& level_counts() const noexcept {
      return _counts;
    }
    std::vector<IntMatrix> const& mults() const noexcept {
      return _mults;
    }
    std::size_t vertex_count(std::size_t level) const;

    // Number of root paths to each vertex of the level: s(0) = (1) and
    // s(i+1) = M_i s(i).
    IntVector const&        size_vector(std::size_t level) const;
    Signature               level_signature(std::size_t level) const;
    StandardMorphism const& level_morphism(std::size_t level) const;

    bool operator==(BratteliDiagram const& other) const {
      return _counts == other._counts && _mults == other._mults;
    }

   private:
    void check_level(std::size_t level) const;

    std::vector<std::size_t>      _counts;
    std::vector<IntMatrix>        _mults;
    std::vector<IntVector>        _sizes;
    std::vector<StandardMorphism> _morphisms;
  };

  // Fixture diagrams.
  BratteliDiagram car_diagram(std::size_t depth);
  // Two vertices at every level after the root, each joined to both vertices
  // of the previous level by one edge.
  BratteliDiagram two_vertex_diagram(std::size_t depth);
  BratteliDiagram irregular_diagram();

  // An element of the truncated direct limit: a level together with an
  // element of the semisimple monoid at that level.
  class AfElement {
   public:
    AfElement(std::shared_ptr<BratteliDiagram const> diagram,
              std::size_t                            level,
              SemisimpleElement                      value);

    static AfElement identity(std::shared_ptr<BratteliDiagram const> diagram,
                              std::size_t level = 0);
    static AfElement zero(std::shared_ptr<BratteliDiagram const> diagram,
                          std::size_t level = 0);

    std::shared_ptr<BratteliDiagram const> const& diagram() const noexcept {
      return _diagram;
    }
    std::size_t level() const noexcept {
      return _level;
    }
    SemisimpleElement const& value() const noexcept {
      return _value;
    }

    bool is_unit() const {
      return _value.is_unit();
    }

   private:
    std::shared_ptr<BratteliDiagram const> _diagram;
    std::size_t                            _level;
    SemisimpleElement                      _value;
  };

  // Throws std::invalid_argument if level < x.level() or beyond the depth.
  AfElement push_to_level(AfElement const& x, std::size_t level);

  bool      af_equal(AfElement const& x, AfElement const& y);
  AfElement af_multiply(AfElement const& x, AfElement const& y);
  AfElement af_inverse(AfElement const& x);
  AfElement af_meet(AfElement const& x, AfElement const& y);
  std::optional<AfElement> af_join(AfElement const& x, AfElement const& y);
  bool af_natural_leq(AfElement const& x, AfElement const& y);

}  // namespace mvcoord

#endif  // MVCOORD_BRATTELI_HPP_
