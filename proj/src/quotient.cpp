#include "mvcoord/quotient.hpp"

#include <sstream>

namespace mvcoord {

  void SemisimpleView::for_each_element(
      std::function<void(value_type const&)> const& fn) const {
    std::vector<PartialBijection> parts(_s.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == _s.size()) {
        fn(SemisimpleElement(_s, parts));
        return;
      }
      for_each_partial_bijection(_s[i], [&](PartialBijection const& f) {
        parts[i] = f;
        rec(i + 1);
      });
    };
    rec(0);
  }

  std::string SemisimpleView::label(value_type const& a) const {
    auto const         v = a.rank_vector();
    std::ostringstream os;
    if (v.size() > 1) {
      os << '(';
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      os << (i == 0 ? "" : ",") << v[i];
    }
    if (v.size() > 1) {
      os << ')';
    }
    return os.str();
  }

  namespace {
    // Partial identity on the first k (or last k) letters of each component.
    SemisimpleElement block_idempotent(Signature const& s,
                                       std::vector<std::size_t> const& k,
                                       bool                            from_end) {
      std::vector<PartialBijection> parts;
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<Letter> images(s[i], UNDEFINED);
        for (std::size_t j = 0; j < k[i]; ++j) {
          auto const letter = from_end ? s[i] - j : j + 1;
          images[letter - 1] = static_cast<Letter>(letter);
        }
        parts.push_back(PartialBijection::from_images(std::move(images)));
      }
      return SemisimpleElement(s, std::move(parts));
    }

    std::vector<std::size_t> as_digits(IntVector const& v) {
      return {v.begin(), v.end()};
    }
  }  // namespace

  PartialAlgebra quotient_by_rank(Signature const& s, bool verify) {
    auto table = chain_product_table(s.sizes());
    if (!verify) {
      return table;
    }
    std::size_t const                     n = table.size();
    std::vector<std::vector<std::size_t>> digits(n);
    // Recover rank vectors from the mixed radix indices.
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::size_t> d(s.size());
      std::size_t              r = x;
      for (std::size_t i = s.size(); i-- > 0;) {
        d[i] = r % (s[i] + 1);
        r /= s[i] + 1;
      }
      digits[x] = std::move(d);
    }
    for (Element x = 0; x < n; ++x) {
      auto const e = block_idempotent(s, digits[x], false);
      for (Element y = 0; y < n; ++y) {
        bool fits = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
          fits = fits && digits[x][i] + digits[y][i] <= s[i];
        }
        if (fits != table.defined(x, y)) {
          throw std::logic_error("rank quotient disagrees with the "
                                 "pigeonhole bound");
        }
        if (!fits) {
          continue;
        }
        auto const f = block_idempotent(s, digits[y], true);
        auto const j = join(e, f);
        if (!orthogonal(e, f) || !j
            || as_digits(j->rank_vector()) != digits[*table.oplus(x, y)]) {
          throw std::logic_error("rank quotient sum " + table.name(x) + " (+) "
                                 + table.name(y)
                                 + " has no orthogonal representatives");
        }
      }
    }
    return table;
  }

  Rational letter_mean(SemisimpleElement const&     e,
                       std::vector<Rational> const& weights) {
    if (weights.size() != e.signature().size()) {
      throw std::invalid_argument("one weight per component is required");
    }
    auto const v = e.rank_vector();
    Rational   total(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      total += weights[i] * v[i];
    }
    return total;
  }

  bool induced_map_preserves_oplus(StandardMorphism const& sigma) {
    auto const src = quotient_by_rank(sigma.source());
    auto const dst = quotient_by_rank(sigma.target());
    auto const src_comp = chain_product_complement(sigma.source().sizes());
    auto const dst_comp = chain_product_complement(sigma.target().sizes());
    auto index = [](Signature const& s, IntVector const& v) {
      std::size_t x = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        x = x * (s[i] + 1) + static_cast<std::size_t>(v[i]);
      }
      return static_cast<Element>(x);
    };
    // phi[[e]] = [sigma(e)] read off block idempotents of each rank vector.
    std::vector<Element> phi(src.size());
    for (Element x = 0; x < src.size(); ++x) {
      std::vector<std::size_t> d(sigma.source().size());
      std::size_t              r = x;
      for (std::size_t i = d.size(); i-- > 0;) {
        d[i] = r % (sigma.source()[i] + 1);
        r /= sigma.source()[i] + 1;
      }
      auto const e = block_idempotent(sigma.source(), d, false);
      phi[x] = index(sigma.target(), apply_standard(sigma, e).rank_vector());
    }
    if (phi[src.zero()] != dst.zero() || phi[*src.one()] != *dst.one()) {
      return false;
    }
    for (Element x = 0; x < src.size(); ++x) {
      if (phi[src_comp[x]] != dst_comp[phi[x]]) {
        return false;
      }
      for (Element y = 0; y < src.size(); ++y) {
        auto const s = src.oplus(x, y);
        if (s && dst.oplus(phi[x], phi[y]) != phi[*s]) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace mvcoord
