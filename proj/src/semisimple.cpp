#include "mvcoord/semisimple.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mvcoord {

  Signature::Signature(std::vector<std::size_t> sizes)
      : _sizes(std::move(sizes)) {
    if (_sizes.empty()) {
      throw std::invalid_argument("a signature needs at least one factor");
    }
    for (auto m : _sizes) {
      if (m == 0) {
        throw std::invalid_argument("signature sizes must be positive");
      }
    }
  }

  namespace {
    std::vector<std::size_t> checked_sizes(IntVector const& v) {
      std::vector<std::size_t> out;
      for (auto x : v) {
        if (x <= 0) {
          throw std::invalid_argument("signature sizes must be positive");
        }
        out.push_back(static_cast<std::size_t>(x));
      }
      return out;
    }

    void check_signatures(SemisimpleElement const& x,
                          SemisimpleElement const& y) {
      if (x.signature() != y.signature()) {
        throw std::invalid_argument("signature mismatch: "
                                    + to_string(x.signature()) + " vs "
                                    + to_string(y.signature()));
      }
    }
  }  // namespace

  Signature::Signature(IntVector const& sizes)
      : Signature(checked_sizes(sizes)) {}

  std::size_t Signature::total() const noexcept {
    return std::accumulate(_sizes.begin(), _sizes.end(), std::size_t(0));
  }

  IntVector Signature::as_vector() const {
    return IntVector(_sizes.begin(), _sizes.end());
  }

  std::string to_string(Signature const& s) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < s.size(); ++i) {
      os << (i == 0 ? "" : ",") << s[i];
    }
    os << ')';
    return os.str();
  }

  std::ostream& operator<<(std::ostream& os, Signature const& s) {
    return os << to_string(s);
  }

  ////////////////////////////////////////////////////////////////////////
  // SemisimpleElement
  ////////////////////////////////////////////////////////////////////////

  SemisimpleElement::SemisimpleElement(Signature                     signature,
                                       std::vector<PartialBijection> parts)
      : _signature(std::move(signature)), _parts(std::move(parts)) {
    if (_parts.size() != _signature.size()) {
      throw std::invalid_argument("wrong number of coordinates for signature "
                                  + to_string(_signature));
    }
    for (std::size_t i = 0; i < _parts.size(); ++i) {
      if (_parts[i].degree() != _signature[i]) {
        throw std::invalid_argument("coordinate " + std::to_string(i + 1)
                                    + " has the wrong degree");
      }
    }
  }

  SemisimpleElement SemisimpleElement::identity(Signature const& s) {
    std::vector<PartialBijection> parts;
    for (auto m : s.sizes()) {
      parts.push_back(PartialBijection::identity(m));
    }
    return SemisimpleElement(s, std::move(parts));
  }

  SemisimpleElement SemisimpleElement::zero(Signature const& s) {
    std::vector<PartialBijection> parts;
    for (auto m : s.sizes()) {
      parts.emplace_back(m);
    }
    return SemisimpleElement(s, std::move(parts));
  }

  SemisimpleElement SemisimpleElement::unit_idempotent(Signature const& s,
                                                       std::size_t      i) {
    auto x      = zero(s);
    x._parts[i] = PartialBijection::identity(s[i]);
    return x;
  }

  bool SemisimpleElement::is_zero() const {
    for (auto const& p : _parts) {
      if (!p.is_zero()) {
        return false;
      }
    }
    return true;
  }

  bool SemisimpleElement::is_idempotent() const {
    for (auto const& p : _parts) {
      if (!p.is_idempotent()) {
        return false;
      }
    }
    return true;
  }

  bool SemisimpleElement::is_identity() const {
    for (auto const& p : _parts) {
      if (!p.is_identity()) {
        return false;
      }
    }
    return true;
  }

  bool SemisimpleElement::is_unit() const {
    for (auto const& p : _parts) {
      if (!p.is_permutation()) {
        return false;
      }
    }
    return true;
  }

  IntVector SemisimpleElement::rank_vector() const {
    IntVector out;
    for (auto const& p : _parts) {
      out.push_back(static_cast<Integer>(p.rank()));
    }
    return out;
  }

  SemisimpleElement elementwise(
      SemisimpleElement const& x,
      SemisimpleElement const& y,
      std::function<PartialBijection(PartialBijection const&,
                                     PartialBijection const&)> const& op) {
    check_signatures(x, y);
    std::vector<PartialBijection> parts;
    parts.reserve(x.parts().size());
    for (std::size_t i = 0; i < x.parts().size(); ++i) {
      parts.push_back(op(x[i], y[i]));
    }
    return SemisimpleElement(x.signature(), std::move(parts));
  }

  namespace {
    template <typename F>
    SemisimpleElement map_parts(SemisimpleElement const& x, F&& f) {
      std::vector<PartialBijection> parts;
      parts.reserve(x.parts().size());
      for (auto const& p : x.parts()) {
        parts.push_back(f(p));
      }
      return SemisimpleElement(x.signature(), std::move(parts));
    }

    template <typename F>
    bool all_parts(SemisimpleElement const& x,
                   SemisimpleElement const& y,
                   F&&                      pred) {
      check_signatures(x, y);
      for (std::size_t i = 0; i < x.parts().size(); ++i) {
        if (!pred(x[i], y[i])) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  SemisimpleElement operator*(SemisimpleElement const& x,
                              SemisimpleElement const& y) {
    return elementwise(x, y, [](auto const& a, auto const& b) {
      return compose(a, b);
    });
  }

  SemisimpleElement inverse(SemisimpleElement const& x) {
    return map_parts(x, [](auto const& p) { return inverse(p); });
  }

  SemisimpleElement domain_idem(SemisimpleElement const& x) {
    return map_parts(x, [](auto const& p) { return domain_idem(p); });
  }

  SemisimpleElement range_idem(SemisimpleElement const& x) {
    return map_parts(x, [](auto const& p) { return range_idem(p); });
  }

  SemisimpleElement complement_idem(SemisimpleElement const& e) {
    return map_parts(e, [](auto const& p) { return complement_idem(p); });
  }

  SemisimpleElement meet(SemisimpleElement const& x,
                         SemisimpleElement const& y) {
    return elementwise(
        x, y, [](auto const& a, auto const& b) { return meet(a, b); });
  }

  std::optional<SemisimpleElement> join(SemisimpleElement const& x,
                                        SemisimpleElement const& y) {
    check_signatures(x, y);
    std::vector<PartialBijection> parts;
    for (std::size_t i = 0; i < x.parts().size(); ++i) {
      auto j = join(x[i], y[i]);
      if (!j) {
        return std::nullopt;
      }
      parts.push_back(std::move(*j));
    }
    return SemisimpleElement(x.signature(), std::move(parts));
  }

  bool natural_leq(SemisimpleElement const& x, SemisimpleElement const& y) {
    return all_parts(
        x, y, [](auto const& a, auto const& b) { return natural_leq(a, b); });
  }

  bool compatible(SemisimpleElement const& x, SemisimpleElement const& y) {
    return all_parts(
        x, y, [](auto const& a, auto const& b) { return compatible(a, b); });
  }

  bool orthogonal(SemisimpleElement const& x, SemisimpleElement const& y) {
    return all_parts(
        x, y, [](auto const& a, auto const& b) { return orthogonal(a, b); });
  }

  bool d_related(SemisimpleElement const& x, SemisimpleElement const& y) {
    return all_parts(
        x, y, [](auto const& a, auto const& b) { return d_related(a, b); });
  }

  namespace {
    std::vector<SemisimpleElement>
    cartesian(Signature const&                                  s,
              std::vector<std::vector<PartialBijection>> const& factors) {
      std::vector<SemisimpleElement> out;
      std::vector<std::size_t>       idx(factors.size(), 0);
      while (true) {
        std::vector<PartialBijection> parts;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          parts.push_back(factors[i][idx[i]]);
        }
        out.emplace_back(s, std::move(parts));
        std::size_t p = factors.size();
        while (p > 0) {
          --p;
          if (++idx[p] < factors[p].size()) {
            break;
          }
          idx[p] = 0;
          if (p == 0) {
            return out;
          }
        }
      }
    }
  }  // namespace

  std::vector<SemisimpleElement> enumerate(Signature const& s) {
    std::vector<std::vector<PartialBijection>> factors;
    for (auto m : s.sizes()) {
      factors.push_back(enumerate(m));
    }
    return cartesian(s, factors);
  }

  std::vector<SemisimpleElement> idempotents(Signature const& s) {
    std::vector<std::vector<PartialBijection>> factors;
    for (auto m : s.sizes()) {
      factors.push_back(idempotents(m));
    }
    return cartesian(s, factors);
  }

  std::string to_string(SemisimpleElement const& x) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < x.parts().size(); ++i) {
      os << (i == 0 ? "" : "; ") << to_string(x[i]);
    }
    os << ')';
    return os.str();
  }

  std::ostream& operator<<(std::ostream& os, SemisimpleElement const& x) {
    return os << to_string(x);
  }

  ////////////////////////////////////////////////////////////////////////
  // StandardMorphism
  ////////////////////////////////////////////////////////////////////////

  StandardMorphism::StandardMorphism(Signature source,
                                     Signature target,
                                     IntMatrix mult)
      : _source(std::move(source)),
        _target(std::move(target)),
        _mult(std::move(mult)) {
    if (_mult.rows() != _target.size() || _mult.cols() != _source.size()) {
      throw std::invalid_argument("multiplicity matrix has shape "
                                  + std::to_string(_mult.rows()) + "x"
                                  + std::to_string(_mult.cols())
                                  + ", expected "
                                  + std::to_string(_target.size()) + "x"
                                  + std::to_string(_source.size()));
    }
    if (!_mult.is_nonnegative()) {
      throw std::invalid_argument("multiplicities must be non-negative");
    }
    if (_mult * _source.as_vector() != _target.as_vector()) {
      throw std::invalid_argument(
          "combinatorial conditions fail: M m != n for source "
          + to_string(_source) + " and target " + to_string(_target));
    }
  }

  StandardMorphism::StandardMorphism(Signature source, IntMatrix mult)
      : StandardMorphism(source, Signature(mult * source.as_vector()), mult) {}

  StandardMorphism StandardMorphism::identity(Signature const& s) {
    return StandardMorphism(s, s, IntMatrix::identity(s.size()));
  }

  SemisimpleElement apply_standard(StandardMorphism const&  sigma,
                                   SemisimpleElement const& x) {
    if (x.signature() != sigma.source()) {
      throw std::invalid_argument("element signature "
                                  + to_string(x.signature())
                                  + " does not match morphism source "
                                  + to_string(sigma.source()));
    }
    auto const&                   m = sigma.mult();
    std::vector<PartialBijection> parts;
    parts.reserve(sigma.target().size());
    for (std::size_t i = 0; i < sigma.target().size(); ++i) {
      std::vector<Letter> images(sigma.target()[i], UNDEFINED);
      Letter              offset = 0;
      for (std::size_t j = 0; j < sigma.source().size(); ++j) {
        auto const& block = x[j].images();
        for (Integer copy = 0; copy < m(i, j); ++copy) {
          for (std::size_t l = 0; l < block.size(); ++l) {
            if (block[l] != UNDEFINED) {
              images[offset + l] = offset + block[l];
            }
          }
          offset += static_cast<Letter>(block.size());
        }
      }
      parts.push_back(PartialBijection::from_images(std::move(images)));
    }
    return SemisimpleElement(sigma.target(), std::move(parts));
  }

  StandardMorphism compose_standard(StandardMorphism const& tau,
                                    StandardMorphism const& sigma) {
    if (sigma.target() != tau.source()) {
      throw std::invalid_argument("cannot compose: target "
                                  + to_string(sigma.target())
                                  + " is not source "
                                  + to_string(tau.source()));
    }
    return StandardMorphism(
        sigma.source(), tau.target(), tau.mult() * sigma.mult());
  }

  bool morphism_exists(std::size_t m, std::size_t n) {
    return m != 0 && n % m == 0;
  }

  bool is_injective_standard(StandardMorphism const& sigma) {
    return !sigma.mult().has_zero_column();
  }

}  // namespace mvcoord
