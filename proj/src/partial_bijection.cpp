#include "mvcoord/partial_bijection.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mvcoord {

  namespace {
    void check_degrees(PartialBijection const& a, PartialBijection const& b) {
      if (a.degree() != b.degree()) {
        throw std::invalid_argument("partial bijections have different degrees ("
                                    + std::to_string(a.degree()) + " and "
                                    + std::to_string(b.degree()) + ")");
      }
    }
  }  // namespace

  PartialBijection::PartialBijection(std::size_t degree)
      : _images(degree, UNDEFINED) {}

  PartialBijection PartialBijection::from_images(std::vector<Letter> images) {
    std::size_t const n = images.size();
    std::vector<bool> seen(n + 1, false);
    for (Letter i : images) {
      if (i == UNDEFINED) {
        continue;
      }
      if (i > n) {
        throw std::invalid_argument("image " + std::to_string(i)
                                    + " exceeds degree " + std::to_string(n));
      }
      if (seen[i]) {
        throw std::invalid_argument("not injective: image "
                                    + std::to_string(i) + " repeated");
      }
      seen[i] = true;
    }
    PartialBijection f;
    f._images = std::move(images);
    return f;
  }

  PartialBijection PartialBijection::identity(std::size_t degree) {
    std::vector<Letter> images(degree);
    std::iota(images.begin(), images.end(), Letter(1));
    return from_images(std::move(images));
  }

  PartialBijection
  PartialBijection::partial_identity(std::size_t                degree,
                                     std::vector<Letter> const& letters) {
    std::vector<Letter> images(degree, UNDEFINED);
    for (Letter j : letters) {
      if (j == 0 || j > degree) {
        throw std::invalid_argument("letter out of range");
      }
      images[j - 1] = j;
    }
    return from_images(std::move(images));
  }

  PartialBijection PartialBijection::matrix_unit(std::size_t degree,
                                                 Letter      i,
                                                 Letter      j) {
    if (i == 0 || j == 0 || i > degree || j > degree) {
      throw std::invalid_argument("letter out of range");
    }
    std::vector<Letter> images(degree, UNDEFINED);
    images[j - 1] = i;
    return from_images(std::move(images));
  }

  std::size_t PartialBijection::rank() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        _images.begin(), _images.end(), [](Letter i) { return i != UNDEFINED; }));
  }

  std::vector<Letter> PartialBijection::domain() const {
    std::vector<Letter> out;
    for (std::size_t j = 0; j < _images.size(); ++j) {
      if (_images[j] != UNDEFINED) {
        out.push_back(static_cast<Letter>(j + 1));
      }
    }
    return out;
  }

  std::vector<Letter> PartialBijection::image() const {
    std::vector<Letter> out;
    for (Letter i : _images) {
      if (i != UNDEFINED) {
        out.push_back(i);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool PartialBijection::is_zero() const noexcept {
    return std::all_of(
        _images.begin(), _images.end(), [](Letter i) { return i == UNDEFINED; });
  }

  bool PartialBijection::is_idempotent() const noexcept {
    for (std::size_t j = 0; j < _images.size(); ++j) {
      if (_images[j] != UNDEFINED && _images[j] != j + 1) {
        return false;
      }
    }
    return true;
  }

  bool PartialBijection::is_identity() const noexcept {
    for (std::size_t j = 0; j < _images.size(); ++j) {
      if (_images[j] != j + 1) {
        return false;
      }
    }
    return true;
  }

  bool PartialBijection::is_permutation() const noexcept {
    return rank() == degree();
  }

  PartialBijection compose(PartialBijection const& f,
                           PartialBijection const& g) {
    check_degrees(f, g);
    std::vector<Letter> images(g.degree(), UNDEFINED);
    for (std::size_t j = 0; j < images.size(); ++j) {
      Letter const mid = g.images()[j];
      if (mid != UNDEFINED) {
        images[j] = f(mid);
      }
    }
    return PartialBijection::from_images(std::move(images));
  }

  PartialBijection operator*(PartialBijection const& f,
                             PartialBijection const& g) {
    return compose(f, g);
  }

  PartialBijection inverse(PartialBijection const& f) {
    std::vector<Letter> images(f.degree(), UNDEFINED);
    for (std::size_t j = 0; j < images.size(); ++j) {
      Letter const i = f.images()[j];
      if (i != UNDEFINED) {
        images[i - 1] = static_cast<Letter>(j + 1);
      }
    }
    return PartialBijection::from_images(std::move(images));
  }

  PartialBijection domain_idem(PartialBijection const& f) {
    return PartialBijection::partial_identity(f.degree(), f.domain());
  }

  PartialBijection range_idem(PartialBijection const& f) {
    return PartialBijection::partial_identity(f.degree(), f.image());
  }

  bool natural_leq(PartialBijection const& a, PartialBijection const& b) {
    check_degrees(a, b);
    for (std::size_t j = 0; j < a.degree(); ++j) {
      Letter const i = a.images()[j];
      if (i != UNDEFINED && b.images()[j] != i) {
        return false;
      }
    }
    return true;
  }

  bool compatible(PartialBijection const& a, PartialBijection const& b) {
    check_degrees(a, b);
    return (inverse(a) * b).is_idempotent() && (a * inverse(b)).is_idempotent();
  }

  bool orthogonal(PartialBijection const& a, PartialBijection const& b) {
    check_degrees(a, b);
    return (inverse(a) * b).is_zero() && (a * inverse(b)).is_zero();
  }

  PartialBijection meet(PartialBijection const& a, PartialBijection const& b) {
    check_degrees(a, b);
    std::vector<Letter> images(a.degree(), UNDEFINED);
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (a.images()[j] == b.images()[j]) {
        images[j] = a.images()[j];
      }
    }
    return PartialBijection::from_images(std::move(images));
  }

  std::optional<PartialBijection> join(PartialBijection const& a,
                                       PartialBijection const& b) {
    if (!compatible(a, b)) {
      return std::nullopt;
    }
    std::vector<Letter> images = a.images();
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (images[j] == UNDEFINED) {
        images[j] = b.images()[j];
      }
    }
    return PartialBijection::from_images(std::move(images));
  }

  bool d_related(PartialBijection const& a, PartialBijection const& b) {
    check_degrees(a, b);
    return a.rank() == b.rank();
  }

  PartialBijection complement_idem(PartialBijection const& e) {
    if (!e.is_idempotent()) {
      throw std::invalid_argument("complement_idem requires an idempotent, got "
                                  + to_string(e));
    }
    std::vector<Letter> images(e.degree(), UNDEFINED);
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (e.images()[j] == UNDEFINED) {
        images[j] = static_cast<Letter>(j + 1);
      }
    }
    return PartialBijection::from_images(std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // RookMatrix
  ////////////////////////////////////////////////////////////////////////

  RookMatrix::RookMatrix(std::size_t degree)
      : _degree(degree), _entries(degree * degree, 0) {}

  RookMatrix::RookMatrix(std::size_t degree, std::vector<std::uint8_t> entries)
      : _degree(degree), _entries(std::move(entries)) {
    if (_entries.size() != _degree * _degree) {
      throw std::invalid_argument("rook matrix has wrong number of entries");
    }
    std::vector<int> row_count(_degree, 0), col_count(_degree, 0);
    for (std::size_t i = 0; i < _degree; ++i) {
      for (std::size_t j = 0; j < _degree; ++j) {
        auto const x = _entries[i * _degree + j];
        if (x > 1) {
          throw std::invalid_argument("rook matrix entries must be 0 or 1");
        }
        row_count[i] += x;
        col_count[j] += x;
      }
    }
    for (std::size_t k = 0; k < _degree; ++k) {
      if (row_count[k] > 1 || col_count[k] > 1) {
        throw std::invalid_argument(
            "not a rook matrix: a row or column has more than one 1");
      }
    }
  }

  RookMatrix RookMatrix::operator*(RookMatrix const& other) const {
    if (other._degree != _degree) {
      throw std::invalid_argument("rook matrices have different degrees");
    }
    std::vector<std::uint8_t> out(_degree * _degree, 0);
    for (std::size_t i = 0; i < _degree; ++i) {
      for (std::size_t k = 0; k < _degree; ++k) {
        if (_entries[i * _degree + k] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < _degree; ++j) {
          out[i * _degree + j] += other._entries[k * _degree + j];
        }
      }
    }
    return RookMatrix(_degree, std::move(out));
  }

  RookMatrix RookMatrix::freshman(RookMatrix const& other) const {
    if (other._degree != _degree) {
      throw std::invalid_argument("rook matrices have different degrees");
    }
    std::vector<std::uint8_t> out(_entries.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = _entries[k] * other._entries[k];
    }
    return RookMatrix(_degree, std::move(out));
  }

  RookMatrix to_rook(PartialBijection const& f) {
    std::size_t const         n = f.degree();
    std::vector<std::uint8_t> entries(n * n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      Letter const i = f.images()[j];
      if (i != UNDEFINED) {
        entries[(i - 1) * n + j] = 1;
      }
    }
    return RookMatrix(n, std::move(entries));
  }

  PartialBijection from_rook(RookMatrix const& m) {
    std::size_t const   n = m.degree();
    std::vector<Letter> images(n, UNDEFINED);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        if (m(i, j) == 1) {
          images[j - 1] = static_cast<Letter>(i);
        }
      }
    }
    return PartialBijection::from_images(std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Visits injective tuples (i_1, ..., i_k) over 1..n in lexicographic
    // order.
    void for_each_injective_tuple(
        std::size_t                                     n,
        std::size_t                                     k,
        std::vector<Letter>&                            tuple,
        std::vector<bool>&                              used,
        std::function<void(std::vector<Letter> const&)> const& f) {
      if (tuple.size() == k) {
        f(tuple);
        return;
      }
      for (Letter i = 1; i <= n; ++i) {
        if (used[i]) {
          continue;
        }
        used[i] = true;
        tuple.push_back(i);
        for_each_injective_tuple(n, k, tuple, used, f);
        tuple.pop_back();
        used[i] = false;
      }
    }

    bool next_combination(std::vector<Letter>& c, std::size_t n) {
      std::size_t const k = c.size();
      for (std::size_t p = k; p-- > 0;) {
        if (c[p] < n - (k - 1 - p)) {
          ++c[p];
          for (std::size_t q = p + 1; q < k; ++q) {
            c[q] = c[q - 1] + 1;
          }
          return true;
        }
      }
      return false;
    }
  }  // namespace

  void for_each_partial_bijection(
      std::size_t                                         n,
      std::function<void(PartialBijection const&)> const& f) {
    std::vector<Letter> images(n, UNDEFINED);
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<Letter> dom(k);
      std::iota(dom.begin(), dom.end(), Letter(1));
      do {
        std::vector<Letter> tuple;
        std::vector<bool>   used(n + 1, false);
        for_each_injective_tuple(
            n, k, tuple, used, [&](std::vector<Letter> const& t) {
              std::fill(images.begin(), images.end(), UNDEFINED);
              for (std::size_t p = 0; p < k; ++p) {
                images[dom[p] - 1] = t[p];
              }
              f(PartialBijection::from_images(images));
            });
      } while (k > 0 && next_combination(dom, n));
    }
  }

  std::vector<PartialBijection> enumerate(std::size_t n) {
    std::vector<PartialBijection> out;
    out.reserve(symmetric_inverse_monoid_order(n));
    for_each_partial_bijection(
        n, [&out](PartialBijection const& f) { out.push_back(f); });
    return out;
  }

  std::vector<PartialBijection> idempotents(std::size_t n) {
    std::vector<PartialBijection> out;
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<Letter> dom(k);
      std::iota(dom.begin(), dom.end(), Letter(1));
      do {
        out.push_back(PartialBijection::partial_identity(n, dom));
      } while (k > 0 && next_combination(dom, n));
    }
    return out;
  }

  std::uint64_t symmetric_inverse_monoid_order(std::size_t n) {
    // sum_k C(n,k)^2 k!
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(n, k)
    std::uint64_t fact  = 1;  // k!
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) {
        binom = binom * (n - k + 1) / k;
        fact *= k;
      }
      total += binom * binom * fact;
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(PartialBijection const& f) {
    if (f.is_zero()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (std::size_t j = 0; j < f.degree(); ++j) {
      Letter const i = f.images()[j];
      if (i == UNDEFINED) {
        continue;
      }
      os << (first ? "" : ",") << (j + 1) << "->" << i;
      first = false;
    }
    return os.str();
  }

  namespace {
    std::string_view trim(std::string_view s) {
      auto const b = s.find_first_not_of(" \t\r\n");
      if (b == std::string_view::npos) {
        return {};
      }
      auto const e = s.find_last_not_of(" \t\r\n");
      return s.substr(b, e - b + 1);
    }

    Letter parse_letter(std::string_view s) {
      s            = trim(s);
      Letter value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("cannot parse letter '" + std::string(s)
                                    + "'");
      }
      return value;
    }
  }  // namespace

  PartialBijection parse_partial_bijection(std::string_view text,
                                           std::size_t      degree) {
    text = trim(text);
    std::vector<Letter> images(degree, UNDEFINED);
    if (text.empty() || text == "0") {
      return PartialBijection::from_images(std::move(images));
    }
    std::size_t start = 0;
    while (start <= text.size()) {
      auto       end   = text.find(',', start);
      auto const piece = text.substr(start, end == std::string_view::npos
                                                ? std::string_view::npos
                                                : end - start);
      auto const arrow = piece.find("->");
      if (arrow == std::string_view::npos) {
        throw std::invalid_argument("expected 'j->i' but got '"
                                    + std::string(piece) + "'");
      }
      Letter const j = parse_letter(piece.substr(0, arrow));
      Letter const i = parse_letter(piece.substr(arrow + 2));
      if (j == 0 || j > degree || i == 0 || i > degree) {
        throw std::invalid_argument("letter out of range in '"
                                    + std::string(piece) + "'");
      }
      if (images[j - 1] != UNDEFINED) {
        throw std::invalid_argument("letter " + std::to_string(j)
                                    + " mapped twice");
      }
      images[j - 1] = i;
      if (end == std::string_view::npos) {
        break;
      }
      start = end + 1;
    }
    return PartialBijection::from_images(std::move(images));
  }

  std::ostream& operator<<(std::ostream& os, PartialBijection const& f) {
    return os << '{' << to_string(f) << '}';
  }

}  // namespace mvcoord

std::size_t std::hash<mvcoord::PartialBijection>::operator()(
    mvcoord::PartialBijection const& f) const noexcept {
  std::size_t h = f.degree();
  for (auto i : f.images()) {
    h = h * 1000003u ^ i;
  }
  return h;
}
