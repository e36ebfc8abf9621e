#ifndef MVCOORD_GRAPH_INVERSE_HPP_
#define MVCOORD_GRAPH_INVERSE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvcoord/bratteli.hpp"
#include "mvcoord/semisimple.hpp"

namespace mvcoord {

  // An edge from vertex `source` at level `level - 1` to vertex `target` at
  // level `level`; `copy` distinguishes parallel edges. Vertex indices are
  // 0-based, the root is vertex 0 of level 0.
  struct Edge {
    std::size_t level;
    std::size_t target;
    std::size_t source;
    std::size_t copy;

    bool operator==(Edge const&) const = default;
    auto operator<=>(Edge const&) const = default;
  };

  // A path between the root and some vertex, stored root first: edges[0]
  // leaves the root and edges.back() ends at the start vertex. Reading the
  // edges backwards walks from the start vertex to the root.
  struct Path {
    std::vector<Edge> edges;

    std::size_t length() const noexcept {
      return edges.size();
    }
    // (level, vertex) of the far end; (0, 0) for the empty path.
    std::pair<std::size_t, std::size_t> start() const;

    bool operator==(Path const&) const = default;
    auto operator<=>(Path const&) const = default;
  };

  bool is_prefix(Path const& x, Path const& y);
  Path concat(Path const& x, Path const& z);
  std::string to_string(Path const& p);

  // x y^{-1} with x and y ending at the same vertex, or zero.
  struct PathPair {
    std::optional<std::pair<Path, Path>> pair;

    static PathPair zero() {
      return {};
    }
    // Throws std::invalid_argument if x and y start at different vertices.
    static PathPair of(Path x, Path y);

    bool is_zero() const noexcept {
      return !pair.has_value();
    }
    bool operator==(PathPair const&) const = default;
    auto operator<=>(PathPair const&) const = default;
  };

  std::string to_string(PathPair const& p);

  PathPair gim_multiply(PathPair const& p, PathPair const& q);
  PathPair gim_inverse(PathPair const& p);
  bool     gim_is_idempotent(PathPair const& p);
  bool     gim_orthogonal(PathPair const& p, PathPair const& q);
  bool     natural_leq_gim(PathPair const& p, PathPair const& q);
  // Path length of a non-zero element. Throws on zero.
  std::size_t weight(PathPair const& p);

  // All paths from the root to the vertex in letter order.
  std::vector<Path> paths_to(BratteliDiagram const& b,
                             std::size_t            level,
                             std::size_t            vertex);
  // 1-based letter of a path among paths_to its start vertex.
  Letter path_letter(BratteliDiagram const& b, Path const& p);

  // Every element of the truncated monoid up to the diagram depth, zero
  // first, then by weight.
  std::vector<PathPair> enumerate_gim(BratteliDiagram const& b);

  // {(x e)(x e)^{-1}} over the edges e from the start vertex of x to the
  // next level. Throws std::invalid_argument if e is not a non-zero
  // idempotent or starts at the deepest level.
  std::vector<PathPair> lengthen_cover(BratteliDiagram const& b,
                                       PathPair const&        e);

  // A set of pairwise orthogonal elements of equal weight, sorted.
  using Homogeneous = std::vector<PathPair>;

  SemisimpleElement homogeneous_to_semisimple(BratteliDiagram const& b,
                                              std::size_t            level,
                                              Homogeneous const&     h);
  Homogeneous semisimple_to_homogeneous(BratteliDiagram const&   b,
                                        std::size_t              level,
                                        SemisimpleElement const& x);

  // All one-step edge adjunctions (x e)(y e)^{-1} of each member. Throws
  // std::out_of_range if level is not below the depth.
  Homogeneous epsilon_level_map(BratteliDiagram const& b,
                                std::size_t            level,
                                Homogeneous const&     h);

}  // namespace mvcoord

#endif  // MVCOORD_GRAPH_INVERSE_HPP_
