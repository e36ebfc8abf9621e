#include "mvcoord/dimension_groups.hpp"

#include <stdexcept>
#include <string>

namespace mvcoord {

  namespace {
    std::vector<std::size_t> as_chains(IntVector const& u) {
      return {u.begin(), u.end()};
    }

    bool leq(IntVector const& a, IntVector const& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  SimplicialGroup::SimplicialGroup(IntVector unit) : _unit(std::move(unit)) {
    if (_unit.empty()) {
      throw std::invalid_argument("a simplicial group needs rank >= 1");
    }
    for (auto x : _unit) {
      if (x <= 0) {
        throw std::invalid_argument("order unit must be strictly positive");
      }
    }
  }

  std::size_t SimplicialGroup::interval_size() const {
    return chain_product_size(as_chains(_unit));
  }

  PositiveHom::PositiveHom(SimplicialGroup source,
                           SimplicialGroup target,
                           IntMatrix       matrix)
      : _source(std::move(source)),
        _target(std::move(target)),
        _matrix(std::move(matrix)) {
    if (_matrix.rows() != _target.rank() || _matrix.cols() != _source.rank()) {
      throw std::invalid_argument("matrix shape does not match the groups");
    }
    if (!_matrix.is_nonnegative()) {
      throw std::invalid_argument("a positive homomorphism needs a "
                                  "non-negative matrix");
    }
  }

  PositiveHom PositiveHom::from_standard(StandardMorphism const& sigma) {
    return PositiveHom(SimplicialGroup(sigma.source().as_vector()),
                       SimplicialGroup(sigma.target().as_vector()),
                       sigma.mult());
  }

  bool PositiveHom::is_normalized() const {
    return _matrix * _source.unit() == _target.unit();
  }

  IntVector pi_mean(SemisimpleElement const& e) {
    if (!e.is_idempotent()) {
      throw std::invalid_argument("pi is defined on idempotents only, got "
                                  + to_string(e));
    }
    return e.rank_vector();
  }

  PartialAlgebra interval_table(SimplicialGroup const& g) {
    return chain_product_table(as_chains(g.unit()));
  }

  FiniteMvAlgebra interval_algebra(SimplicialGroup const& g) {
    return product_of_chains(as_chains(g.unit()));
  }

  IntVector interval_element(SimplicialGroup const& g, Element x) {
    IntVector p(g.rank());
    for (std::size_t i = g.rank(); i-- > 0;) {
      auto const radix = static_cast<Element>(g.unit()[i] + 1);
      p[i]             = x % radix;
      x /= radix;
    }
    return p;
  }

  Element interval_index(SimplicialGroup const& g, IntVector const& p) {
    if (p.size() != g.rank()) {
      throw std::invalid_argument("vector has the wrong rank");
    }
    Integer x = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0 || p[i] > g.unit()[i]) {
        throw std::out_of_range("vector lies outside [0,u]");
      }
      x = x * (g.unit()[i] + 1) + p[i];
    }
    return static_cast<Element>(x);
  }

  bool intertwine_check(StandardMorphism const& sigma) {
    auto const beta = PositiveHom::from_standard(sigma);
    for (auto const& e : idempotents(sigma.source())) {
      if (beta(pi_mean(e)) != pi_mean(apply_standard(sigma, e))) {
        return false;
      }
    }
    return true;
  }

  IntervalMapReport interval_map_check(PositiveHom const& beta) {
    IntervalMapReport r;
    auto const&       src = beta.source();
    auto const&       dst = beta.target();
    auto const        n   = static_cast<Element>(src.interval_size());
    IntVector const   zero(dst.rank(), 0);
    std::vector<IntVector> image(n);
    for (Element x = 0; x < n; ++x) {
      image[x] = beta(interval_element(src, x));
      r.into_interval = r.into_interval && leq(image[x], dst.unit());
    }
    r.preserves_units = image[0] == zero && image[n - 1] == dst.unit();
    for (Element x = 0; x < n && r.preserves_oplus; ++x) {
      auto const p = interval_element(src, x);
      for (Element y = 0; y < n; ++y) {
        auto const q = interval_element(src, y);
        IntVector  sum(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
          sum[i] = p[i] + q[i];
        }
        if (!leq(sum, src.unit())) {
          continue;
        }
        IntVector image_sum(dst.rank());
        for (std::size_t i = 0; i < dst.rank(); ++i) {
          image_sum[i] = image[x][i] + image[y][i];
        }
        if (!leq(image_sum, dst.unit()) || beta(sum) != image_sum) {
          r.preserves_oplus = false;
          break;
        }
      }
    }
    for (Element x = 0; x < n && r.injective; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (image[x] == image[y]) {
          r.injective = false;
          break;
        }
      }
    }
    return r;
  }

  Rational dyadic_value(std::size_t level, BigInt const& k) {
    BigInt const den = BigInt(1) << level;
    if (k < 0 || k > den) {
      throw std::out_of_range("dyadic numerator " + k.str() + " exceeds 2^"
                              + std::to_string(level));
    }
    return make_rational(k, den);
  }

  namespace {
    // Points of [-b, b]^r, mixed radix, with up/down sets as bitsets.
    struct Box {
      std::size_t                        points;
      std::size_t                        words;
      std::vector<IntVector>             coords;
      std::vector<std::vector<uint64_t>> up;
      std::vector<std::vector<uint64_t>> down;

      Box(std::size_t rank, int b) {
        if (b < 0) {
          throw std::invalid_argument("box radius must be non-negative");
        }
        auto const side = static_cast<std::size_t>(2 * b + 1);
        points          = 1;
        for (std::size_t i = 0; i < rank; ++i) {
          points *= side;
        }
        words = (points + 63) / 64;
        for (std::size_t x = 0; x < points; ++x) {
          IntVector   c(rank);
          std::size_t r = x;
          for (std::size_t i = rank; i-- > 0;) {
            c[i] = static_cast<Integer>(r % side) - b;
            r /= side;
          }
          coords.push_back(std::move(c));
        }
        up.assign(points, std::vector<uint64_t>(words, 0));
        down.assign(points, std::vector<uint64_t>(words, 0));
        for (std::size_t x = 0; x < points; ++x) {
          for (std::size_t y = 0; y < points; ++y) {
            if (leq(coords[x], coords[y])) {
              up[x][y / 64] |= uint64_t{1} << (y % 64);
              down[y][x / 64] |= uint64_t{1} << (x % 64);
            }
          }
        }
      }

      static bool has(std::vector<uint64_t> const& s, std::size_t y) {
        return ((s[y / 64] >> (y % 64)) & 1) != 0;
      }
    };
  }  // namespace

  bool riesz_interpolation_check(std::size_t rank, int b) {
    Box const             box(rank, b);
    std::vector<uint64_t> above(box.words);
    for (std::size_t a1 = 0; a1 < box.points; ++a1) {
      for (std::size_t a2 = 0; a2 < box.points; ++a2) {
        for (std::size_t w = 0; w < box.words; ++w) {
          above[w] = box.up[a1][w] & box.up[a2][w];
        }
        for (std::size_t b1 = 0; b1 < box.points; ++b1) {
          if (!Box::has(above, b1)) {
            continue;
          }
          for (std::size_t b2 = 0; b2 < box.points; ++b2) {
            if (!Box::has(above, b2)) {
              continue;
            }
            bool found = false;
            for (std::size_t w = 0; w < box.words && !found; ++w) {
              found = (above[w] & box.down[b1][w] & box.down[b2][w]) != 0;
            }
            if (!found) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool unperforated_check(std::size_t rank, int b, int max_multiple) {
    Box const       box(rank, b);
    IntVector const zero(rank, 0);
    for (auto const& g : box.coords) {
      for (int n = 1; n <= max_multiple; ++n) {
        IntVector ng(g);
        for (auto& x : ng) {
          x *= n;
        }
        if (leq(zero, ng) && !leq(zero, g)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace mvcoord
