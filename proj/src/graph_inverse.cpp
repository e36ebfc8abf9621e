#include "mvcoord/graph_inverse.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvcoord {

  std::pair<std::size_t, std::size_t> Path::start() const {
    if (edges.empty()) {
      return {0, 0};
    }
    return {edges.back().level, edges.back().target};
  }

  bool is_prefix(Path const& x, Path const& y) {
    return x.length() <= y.length()
        && std::equal(x.edges.begin(), x.edges.end(), y.edges.begin());
  }

  Path concat(Path const& x, Path const& z) {
    Path p = x;
    p.edges.insert(p.edges.end(), z.edges.begin(), z.edges.end());
    return p;
  }

  namespace {
    Path suffix_after(Path const& x, std::size_t k) {
      return Path{{x.edges.begin() + static_cast<std::ptrdiff_t>(k),
                   x.edges.end()}};
    }
  }  // namespace

  std::string to_string(Path const& p) {
    if (p.edges.empty()) {
      return "1";
    }
    std::string s;
    for (auto const& e : p.edges) {
      if (!s.empty()) {
        s += '.';
      }
      s += std::to_string(e.source) + ">" + std::to_string(e.target);
      if (e.copy != 0) {
        s += "#" + std::to_string(e.copy);
      }
    }
    return s;
  }

  PathPair PathPair::of(Path x, Path y) {
    if (x.start() != y.start()) {
      throw std::invalid_argument("paths " + to_string(x) + " and "
                                  + to_string(y)
                                  + " start at different vertices");
    }
    return {std::make_pair(std::move(x), std::move(y))};
  }

  std::string to_string(PathPair const& p) {
    if (p.is_zero()) {
      return "0";
    }
    return "(" + to_string(p.pair->first) + ")(" + to_string(p.pair->second)
         + ")^-1";
  }

  PathPair gim_multiply(PathPair const& p, PathPair const& q) {
    if (p.is_zero() || q.is_zero()) {
      return PathPair::zero();
    }
    auto const& [x, y] = *p.pair;
    auto const& [u, v] = *q.pair;
    if (is_prefix(y, u)) {
      return PathPair::of(concat(x, suffix_after(u, y.length())), v);
    }
    if (is_prefix(u, y)) {
      return PathPair::of(x, concat(v, suffix_after(y, u.length())));
    }
    return PathPair::zero();
  }

  PathPair gim_inverse(PathPair const& p) {
    if (p.is_zero()) {
      return p;
    }
    return PathPair::of(p.pair->second, p.pair->first);
  }

  bool gim_is_idempotent(PathPair const& p) {
    return p.is_zero() || p.pair->first == p.pair->second;
  }

  bool gim_orthogonal(PathPair const& p, PathPair const& q) {
    return gim_multiply(gim_inverse(p), q).is_zero()
        && gim_multiply(p, gim_inverse(q)).is_zero();
  }

  bool natural_leq_gim(PathPair const& p, PathPair const& q) {
    if (p.is_zero()) {
      return true;
    }
    if (q.is_zero()) {
      return false;
    }
    auto const& [x, y] = *p.pair;
    auto const& [u, v] = *q.pair;
    return is_prefix(u, x) && is_prefix(v, y)
        && suffix_after(x, u.length()) == suffix_after(y, v.length());
  }

  std::size_t weight(PathPair const& p) {
    if (p.is_zero()) {
      throw std::invalid_argument("zero has no weight");
    }
    return p.pair->first.length();
  }

  std::vector<Path> paths_to(BratteliDiagram const& b,
                             std::size_t            level,
                             std::size_t            vertex) {
    if (vertex >= b.vertex_count(level)) {
      throw std::out_of_range("no vertex " + std::to_string(vertex)
                              + " at level " + std::to_string(level));
    }
    if (level == 0) {
      return {Path{}};
    }
    auto const&       m = b.mults()[level - 1];
    std::vector<Path> out;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto const below = paths_to(b, level - 1, j);
      for (Integer c = 0; c < m(vertex, j); ++c) {
        Edge const e{level, vertex, j, static_cast<std::size_t>(c)};
        for (auto const& q : below) {
          Path p = q;
          p.edges.push_back(e);
          out.push_back(std::move(p));
        }
      }
    }
    return out;
  }

  Letter path_letter(BratteliDiagram const& b, Path const& p) {
    Letter letter = 1;
    for (auto const& e : p.edges) {
      auto const& m     = b.mults()[e.level - 1];
      auto const& sizes = b.size_vector(e.level - 1);
      if (e.target >= m.rows() || e.source >= m.cols()
          || static_cast<Integer>(e.copy) >= m(e.target, e.source)) {
        throw std::invalid_argument("path leaves the diagram");
      }
      Integer offset = 0;
      for (std::size_t j = 0; j < e.source; ++j) {
        offset += m(e.target, j) * sizes[j];
      }
      offset += static_cast<Integer>(e.copy) * sizes[e.source];
      letter += static_cast<Letter>(offset);
    }
    return letter;
  }

  std::vector<PathPair> enumerate_gim(BratteliDiagram const& b) {
    std::vector<PathPair> out{PathPair::zero()};
    for (std::size_t level = 0; level <= b.depth(); ++level) {
      for (std::size_t v = 0; v < b.vertex_count(level); ++v) {
        auto const paths = paths_to(b, level, v);
        for (auto const& x : paths) {
          for (auto const& y : paths) {
            out.push_back(PathPair::of(x, y));
          }
        }
      }
    }
    return out;
  }

  namespace {
    // Edge adjunctions (x e, y e) of a non-zero pair.
    std::vector<PathPair> adjunctions(BratteliDiagram const& b,
                                      PathPair const&        p) {
      auto const& [x, y]      = *p.pair;
      auto const [level, v]   = x.start();
      if (level >= b.depth()) {
        throw std::out_of_range("no level below " + std::to_string(level)
                                + " in a diagram of depth "
                                + std::to_string(b.depth()));
      }
      auto const&           m = b.mults()[level];
      std::vector<PathPair> out;
      for (std::size_t t = 0; t < m.rows(); ++t) {
        for (Integer c = 0; c < m(t, v); ++c) {
          Edge const e{level + 1, t, v, static_cast<std::size_t>(c)};
          Path       xe = x;
          Path       ye = y;
          xe.edges.push_back(e);
          ye.edges.push_back(e);
          out.push_back(PathPair::of(std::move(xe), std::move(ye)));
        }
      }
      return out;
    }
  }  // namespace

  std::vector<PathPair> lengthen_cover(BratteliDiagram const& b,
                                       PathPair const&        e) {
    if (e.is_zero() || !gim_is_idempotent(e)) {
      throw std::invalid_argument("lengthening needs a non-zero idempotent");
    }
    if (weight(e) >= b.depth()) {
      throw std::invalid_argument("the deepest level has no lengthening");
    }
    return adjunctions(b, e);
  }

  SemisimpleElement homogeneous_to_semisimple(BratteliDiagram const& b,
                                              std::size_t            level,
                                              Homogeneous const&     h) {
    auto const                       s = b.level_signature(level);
    std::vector<std::vector<Letter>> images;
    for (std::size_t v = 0; v < s.size(); ++v) {
      images.emplace_back(s[v], UNDEFINED);
    }
    for (auto const& p : h) {
      if (p.is_zero()) {
        continue;
      }
      auto const& [x, y] = *p.pair;
      auto const [l, v]  = x.start();
      if (l != level) {
        throw std::invalid_argument("element " + to_string(p)
                                    + " is not of weight "
                                    + std::to_string(level));
      }
      auto& slot = images[v][path_letter(b, y) - 1];
      if (slot != UNDEFINED) {
        throw std::invalid_argument("elements are not orthogonal");
      }
      slot = path_letter(b, x);
    }
    std::vector<PartialBijection> parts;
    for (auto& im : images) {
      parts.push_back(PartialBijection::from_images(std::move(im)));
    }
    return SemisimpleElement(s, std::move(parts));
  }

  Homogeneous semisimple_to_homogeneous(BratteliDiagram const&   b,
                                        std::size_t              level,
                                        SemisimpleElement const& x) {
    if (x.signature() != b.level_signature(level)) {
      throw std::invalid_argument("element does not live at level "
                                  + std::to_string(level));
    }
    Homogeneous h;
    for (std::size_t v = 0; v < x.signature().size(); ++v) {
      auto const paths = paths_to(b, level, v);
      auto const& f    = x[v];
      for (Letter j = 1; j <= f.degree(); ++j) {
        if (f(j) != UNDEFINED) {
          h.push_back(PathPair::of(paths[f(j) - 1], paths[j - 1]));
        }
      }
    }
    std::sort(h.begin(), h.end());
    return h;
  }

  Homogeneous epsilon_level_map(BratteliDiagram const& b,
                                std::size_t            level,
                                Homogeneous const&     h) {
    if (level >= b.depth()) {
      throw std::out_of_range("epsilon map needs level < depth");
    }
    Homogeneous out;
    for (auto const& p : h) {
      if (p.is_zero()) {
        continue;
      }
      if (weight(p) != level) {
        throw std::invalid_argument("element " + to_string(p)
                                    + " is not of weight "
                                    + std::to_string(level));
      }
      for (auto& q : adjunctions(b, p)) {
        out.push_back(std::move(q));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace mvcoord
