#include "mvcoord/bratteli.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mvcoord {

  BratteliDiagram::BratteliDiagram(std::vector<std::size_t> level_counts,
                                   std::vector<IntMatrix>   mults)
      : _counts(std::move(level_counts)), _mults(std::move(mults)) {
    if (_counts.size() != _mults.size()) {
      throw std::invalid_argument(
          "need exactly one multiplicity matrix per non-root level ("
          + std::to_string(_counts.size()) + " levels, "
          + std::to_string(_mults.size()) + " matrices)");
    }
    std::size_t previous = 1;
    for (std::size_t i = 0; i < _mults.size(); ++i) {
      auto const& m = _mults[i];
      if (_counts[i] == 0) {
        throw std::invalid_argument("level " + std::to_string(i + 1)
                                    + " has no vertices");
      }
      if (m.rows() != _counts[i] || m.cols() != previous) {
        throw std::invalid_argument(
            "matrix " + std::to_string(i) + " has shape "
            + std::to_string(m.rows()) + "x" + std::to_string(m.cols())
            + ", expected " + std::to_string(_counts[i]) + "x"
            + std::to_string(previous));
      }
      if (!m.is_nonnegative()) {
        throw std::invalid_argument("matrix " + std::to_string(i)
                                    + " has a negative entry");
      }
      if (m.has_zero_row()) {
        throw std::invalid_argument(
            "matrix " + std::to_string(i)
            + " has a zero row: some vertex is not the target of an edge");
      }
      if (m.has_zero_column()) {
        throw std::invalid_argument(
            "matrix " + std::to_string(i)
            + " has a zero column: some vertex is not the source of an edge");
      }
      previous = _counts[i];
    }

    _sizes.push_back(IntVector{1});
    for (auto const& m : _mults) {
      _sizes.push_back(m * _sizes.back());
    }
    for (std::size_t i = 0; i < _mults.size(); ++i) {
      _morphisms.emplace_back(
          Signature(_sizes[i]), Signature(_sizes[i + 1]), _mults[i]);
    }
  }

  void BratteliDiagram::check_level(std::size_t level) const {
    if (level > depth()) {
      throw std::out_of_range("level " + std::to_string(level)
                              + " exceeds depth " + std::to_string(depth()));
    }
  }

  std::size_t BratteliDiagram::vertex_count(std::size_t level) const {
    check_level(level);
    return level == 0 ? 1 : _counts[level - 1];
  }

  IntVector const& BratteliDiagram::size_vector(std::size_t level) const {
    check_level(level);
    return _sizes[level];
  }

  Signature BratteliDiagram::level_signature(std::size_t level) const {
    return Signature(size_vector(level));
  }

  StandardMorphism const&
  BratteliDiagram::level_morphism(std::size_t level) const {
    if (level >= depth()) {
      throw std::out_of_range("no level morphism out of level "
                              + std::to_string(level) + " at depth "
                              + std::to_string(depth()));
    }
    return _morphisms[level];
  }

  BratteliDiagram car_diagram(std::size_t depth) {
    return BratteliDiagram(std::vector<std::size_t>(depth, 1),
                           std::vector<IntMatrix>(depth, IntMatrix{{2}}));
  }

  BratteliDiagram two_vertex_diagram(std::size_t depth) {
    std::vector<IntMatrix> mults;
    for (std::size_t i = 0; i < depth; ++i) {
      mults.push_back(i == 0 ? IntMatrix{{1}, {1}} : IntMatrix{{1, 1}, {1, 1}});
    }
    return BratteliDiagram(std::vector<std::size_t>(depth, 2), std::move(mults));
  }

  BratteliDiagram irregular_diagram() {
    // sizes: (1) -> (1,2) -> (3,2) -> (5,4,3)
    return BratteliDiagram({2, 2, 3},
                           {IntMatrix{{1}, {2}},
                            IntMatrix{{1, 1}, {2, 0}},
                            IntMatrix{{1, 1}, {0, 2}, {1, 0}}});
  }

  ////////////////////////////////////////////////////////////////////////
  // AfElement
  ////////////////////////////////////////////////////////////////////////

  AfElement::AfElement(std::shared_ptr<BratteliDiagram const> diagram,
                       std::size_t                            level,
                       SemisimpleElement                      value)
      : _diagram(std::move(diagram)), _level(level), _value(std::move(value)) {
    if (!_diagram) {
      throw std::invalid_argument("AF element needs a diagram");
    }
    if (_value.signature() != _diagram->level_signature(_level)) {
      throw std::invalid_argument("value signature "
                                  + to_string(_value.signature())
                                  + " does not match level "
                                  + std::to_string(_level));
    }
  }

  AfElement AfElement::identity(std::shared_ptr<BratteliDiagram const> diagram,
                                std::size_t level) {
    auto s = diagram->level_signature(level);
    return AfElement(std::move(diagram), level, SemisimpleElement::identity(s));
  }

  AfElement AfElement::zero(std::shared_ptr<BratteliDiagram const> diagram,
                            std::size_t                            level) {
    auto s = diagram->level_signature(level);
    return AfElement(std::move(diagram), level, SemisimpleElement::zero(s));
  }

  AfElement push_to_level(AfElement const& x, std::size_t level) {
    if (level < x.level()) {
      throw std::invalid_argument("AF elements only move forward (from level "
                                  + std::to_string(x.level()) + " to "
                                  + std::to_string(level) + ")");
    }
    auto const&       b     = *x.diagram();
    SemisimpleElement value = x.value();
    for (std::size_t l = x.level(); l < level; ++l) {
      value = apply_standard(b.level_morphism(l), value);
    }
    return AfElement(x.diagram(), level, std::move(value));
  }

  namespace {
    std::pair<SemisimpleElement, SemisimpleElement>
    align(AfElement const& x, AfElement const& y) {
      if (x.diagram() != y.diagram() && !(*x.diagram() == *y.diagram())) {
        throw std::invalid_argument("AF elements live on different diagrams");
      }
      auto const level = std::max(x.level(), y.level());
      return {push_to_level(x, level).value(), push_to_level(y, level).value()};
    }
  }  // namespace

  bool af_equal(AfElement const& x, AfElement const& y) {
    auto [a, b] = align(x, y);
    return a == b;
  }

  AfElement af_multiply(AfElement const& x, AfElement const& y) {
    auto [a, b] = align(x, y);
    return AfElement(x.diagram(), std::max(x.level(), y.level()), a * b);
  }

  AfElement af_inverse(AfElement const& x) {
    return AfElement(x.diagram(), x.level(), inverse(x.value()));
  }

  AfElement af_meet(AfElement const& x, AfElement const& y) {
    auto [a, b] = align(x, y);
    return AfElement(x.diagram(), std::max(x.level(), y.level()), meet(a, b));
  }

  std::optional<AfElement> af_join(AfElement const& x, AfElement const& y) {
    auto [a, b] = align(x, y);
    auto j      = join(a, b);
    if (!j) {
      return std::nullopt;
    }
    return AfElement(x.diagram(), std::max(x.level(), y.level()), *j);
  }

  bool af_natural_leq(AfElement const& x, AfElement const& y) {
    auto [a, b] = align(x, y);
    return natural_leq(a, b);
  }

}  // namespace mvcoord
