#include "mvcoord/effect_mv.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace mvcoord {

  PartialAlgebra::PartialAlgebra(std::vector<std::string> names,
                                 Table                    oplus,
                                 Element                  zero,
                                 std::optional<Element>   one)
      : _names(std::move(names)),
        _oplus(std::move(oplus)),
        _zero(zero),
        _one(one) {
    std::size_t const n = _names.size();
    if (n == 0) {
      throw std::invalid_argument("a partial algebra needs a non-empty carrier");
    }
    if (_oplus.size() != n) {
      throw std::invalid_argument("oplus table has " + std::to_string(_oplus.size())
                                  + " rows for " + std::to_string(n)
                                  + " elements");
    }
    for (auto const& row : _oplus) {
      if (row.size() != n) {
        throw std::invalid_argument("oplus table is not square");
      }
      for (auto const& entry : row) {
        if (entry && *entry >= n) {
          throw std::invalid_argument("oplus table leaves the carrier");
        }
      }
    }
    if (_zero >= n || (_one && *_one >= n)) {
      throw std::invalid_argument("zero or one is not in the carrier");
    }
  }

  bool PartialAlgebra::leq(Element a, Element b) const {
    for (Element c = 0; c < size(); ++c) {
      if (_oplus[a][c] == b) {
        return true;
      }
    }
    return false;
  }

  std::string_view to_string(Axiom ax) {
    static constexpr std::array<std::string_view, 8> names
        = {"E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8"};
    return names[static_cast<int>(ax) - 1];
  }

  namespace {
    using Decompositions = std::vector<std::vector<std::pair<Element, Element>>>;

    Decompositions decompositions(PartialAlgebra const& a) {
      Decompositions d(a.size());
      for (Element p = 0; p < a.size(); ++p) {
        for (Element q = 0; q < a.size(); ++q) {
          if (auto s = a.oplus(p, q)) {
            d[*s].emplace_back(p, q);
          }
        }
      }
      return d;
    }

    std::optional<std::array<Element, 4>>
    refine(PartialAlgebra const& a,
           Decompositions const& d,
           Element               a1,
           Element               a2,
           Element               b1,
           Element               b2) {
      for (auto [c11, c12] : d[a1]) {
        for (auto [c21, c22] : d[a2]) {
          if (a.oplus(c11, c21) == b1 && a.oplus(c12, c22) == b2) {
            return std::array<Element, 4>{c11, c12, c21, c22};
          }
        }
      }
      return std::nullopt;
    }

    AxiomResult fail(Axiom                ax,
                     std::vector<Element> witness,
                     std::string          detail) {
      return AxiomResult{ax, false, std::move(witness), std::move(detail)};
    }

    std::string show(PartialAlgebra const& a, std::optional<Element> x) {
      return x ? a.name(*x) : std::string("undefined");
    }

    Element require_one(PartialAlgebra const& a, Axiom ax) {
      if (!a.one()) {
        throw std::invalid_argument(std::string(to_string(ax))
                                    + " needs a top element 1");
      }
      return *a.one();
    }
  }  // namespace

  AxiomResult axiom_check(PartialAlgebra const& a, Axiom ax) {
    auto const n = static_cast<Element>(a.size());
    switch (ax) {
      case Axiom::E1:
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            if (a.oplus(x, y) != a.oplus(y, x)) {
              return fail(ax,
                          {x, y},
                          a.name(x) + " (+) " + a.name(y) + " = "
                              + show(a, a.oplus(x, y)) + " but reversed is "
                              + show(a, a.oplus(y, x)));
            }
          }
        }
        break;
      case Axiom::E2:
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            auto const xy = a.oplus(x, y);
            for (Element z = 0; z < n; ++z) {
              auto const yz  = a.oplus(y, z);
              auto const lhs = xy ? a.oplus(*xy, z) : std::nullopt;
              auto const rhs = yz ? a.oplus(x, *yz) : std::nullopt;
              if (lhs != rhs) {
                return fail(ax,
                            {x, y, z},
                            "(" + a.name(x) + " (+) " + a.name(y) + ") (+) "
                                + a.name(z) + " = " + show(a, lhs)
                                + " but the other bracketing is "
                                + show(a, rhs));
              }
            }
          }
        }
        break;
      case Axiom::E3:
        for (Element x = 0; x < n; ++x) {
          if (a.oplus(x, a.zero()) != x) {
            return fail(ax, {x}, a.name(x) + " (+) 0 is not " + a.name(x));
          }
        }
        break;
      case Axiom::E4: {
        auto const d = decompositions(a);
        for (Element s = 0; s < n; ++s) {
          for (auto [a1, a2] : d[s]) {
            for (auto [b1, b2] : d[s]) {
              if (!refine(a, d, a1, a2, b1, b2)) {
                return fail(ax,
                            {a1, a2, b1, b2},
                            "no refinement of " + a.name(a1) + " (+) "
                                + a.name(a2) + " = " + a.name(b1) + " (+) "
                                + a.name(b2));
              }
            }
          }
        }
        break;
      }
      case Axiom::E5:
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            if (a.oplus(x, y) == a.zero() && (x != a.zero() || y != a.zero())) {
              return fail(
                  ax, {x, y}, a.name(x) + " (+) " + a.name(y) + " = 0");
            }
          }
        }
        break;
      case Axiom::E6:
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            auto const xy = a.oplus(x, y);
            if (!xy) {
              continue;
            }
            for (Element z = y + 1; z < n; ++z) {
              if (a.oplus(x, z) == xy) {
                return fail(ax,
                            {x, y, z},
                            a.name(x) + " (+) " + a.name(y) + " = " + a.name(x)
                                + " (+) " + a.name(z));
              }
            }
          }
        }
        break;
      case Axiom::E7: {
        Element const one = require_one(a, ax);
        for (Element x = 0; x < n; ++x) {
          if (a.defined(x, one) != (x == a.zero())) {
            return fail(ax,
                        {x},
                        a.name(x) + " (+) 1 is "
                            + (a.defined(x, one) ? "defined" : "undefined"));
          }
        }
        break;
      }
      case Axiom::E8: {
        Element const one = require_one(a, ax);
        for (Element x = 0; x < n; ++x) {
          std::size_t count = 0;
          for (Element y = 0; y < n; ++y) {
            count += a.oplus(x, y) == one ? 1 : 0;
          }
          if (count != 1) {
            return fail(ax,
                        {x},
                        a.name(x) + " has " + std::to_string(count)
                            + " complements");
          }
        }
        break;
      }
    }
    return AxiomResult{ax, true, {}, {}};
  }

  std::vector<AxiomResult> axiom_check_all(PartialAlgebra const& a) {
    std::vector<AxiomResult> out;
    for (auto ax : ALL_AXIOMS) {
      out.push_back(axiom_check(a, ax));
    }
    return out;
  }

  std::optional<std::array<Element, 4>>
  refinement_witness(PartialAlgebra const& a,
                     Element               a1,
                     Element               a2,
                     Element               b1,
                     Element               b2) {
    return refine(a, decompositions(a), a1, a2, b1, b2);
  }

  namespace {
    std::vector<std::uint8_t> leq_matrix(PartialAlgebra const& a) {
      std::size_t const         n = a.size();
      std::vector<std::uint8_t> leq(n * n, 0);
      for (Element x = 0; x < n; ++x) {
        for (Element c = 0; c < n; ++c) {
          if (auto s = a.oplus(x, c)) {
            leq[x * n + *s] = 1;
          }
        }
      }
      return leq;
    }

    // Greatest element of {c : c <= x, c <= y} (or least upper bound when
    // upper is true); std::nullopt if it does not exist.
    std::optional<Element> bound(std::vector<std::uint8_t> const& leq,
                                 std::size_t                      n,
                                 Element                          x,
                                 Element                          y,
                                 bool                             upper) {
      auto le = [&](Element p, Element q) {
        return upper ? leq[q * n + p] != 0 : leq[p * n + q] != 0;
      };
      std::vector<Element> bounds;
      for (Element c = 0; c < n; ++c) {
        if (le(c, x) && le(c, y)) {
          bounds.push_back(c);
        }
      }
      for (Element g : bounds) {
        if (std::all_of(bounds.begin(), bounds.end(), [&](Element c) {
              return le(c, g);
            })) {
          return g;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  std::optional<std::pair<Element, Element>>
  lattice_failure(PartialAlgebra const& a) {
    auto const leq = leq_matrix(a);
    auto const n   = static_cast<Element>(a.size());
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (!bound(leq, n, x, y, false) || !bound(leq, n, x, y, true)) {
          return std::make_pair(x, y);
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteMvAlgebra
  ////////////////////////////////////////////////////////////////////////

  FiniteMvAlgebra::FiniteMvAlgebra(PartialAlgebra       base,
                                   std::vector<Element> complement)
      : _base(std::move(base)), _complement(std::move(complement)) {
    if (!_base.one()) {
      throw MvValidationError("an MV-algebra needs a top element 1");
    }
    for (auto const& r : axiom_check_all(_base)) {
      if (!r.holds) {
        throw MvValidationError(
            "axiom " + std::string(to_string(r.axiom)) + " fails: " + r.detail,
            r);
      }
    }
    std::size_t const n = _base.size();
    if (_complement.size() != n) {
      throw MvValidationError("complement table has the wrong length");
    }
    for (Element x = 0; x < n; ++x) {
      if (_complement[x] >= n || _base.oplus(x, _complement[x]) != _base.one()) {
        throw MvValidationError("complement of " + _base.name(x)
                                + " is not its orthosupplement");
      }
    }
    _leq = leq_matrix(_base);
    _meet.resize(n * n);
    _join.resize(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = x; y < n; ++y) {
        auto m = bound(_leq, n, x, y, false);
        auto j = bound(_leq, n, x, y, true);
        if (!m || !j) {
          throw MvValidationError("not lattice ordered: " + _base.name(x)
                                  + " and " + _base.name(y) + " lack a "
                                  + (m ? "join" : "meet"));
        }
        _meet[x * n + y] = _meet[y * n + x] = *m;
        _join[x * n + y] = _join[y * n + x] = *j;
      }
    }
  }

  FiniteMvAlgebra FiniteMvAlgebra::from_effect_algebra(PartialAlgebra base) {
    if (!base.one()) {
      throw MvValidationError("an MV-algebra needs a top element 1");
    }
    auto e8 = axiom_check(base, Axiom::E8);
    if (!e8.holds) {
      throw MvValidationError("axiom E8 fails: " + e8.detail, e8);
    }
    std::vector<Element> complement(base.size());
    for (Element x = 0; x < base.size(); ++x) {
      for (Element y = 0; y < base.size(); ++y) {
        if (base.oplus(x, y) == base.one()) {
          complement[x] = y;
        }
      }
    }
    return FiniteMvAlgebra(std::move(base), std::move(complement));
  }

  Element FiniteMvAlgebra::boxplus(Element a, Element b) const {
    auto s = oplus(a, meet(complement(a), b));
    if (!s) {
      throw std::logic_error("a (+) (a' /\\ b) undefined in an MV-algebra");
    }
    return *s;
  }

  FiniteMvAlgebra lukasiewicz(std::size_t n) {
    if (n == 0) {
      throw std::invalid_argument("a Lukasiewicz chain needs n >= 1");
    }
    return product_of_chains({n});
  }

  FiniteMvAlgebra product(FiniteMvAlgebra const& a, FiniteMvAlgebra const& b) {
    std::size_t const        nb = b.size();
    std::size_t const        n  = a.size() * nb;
    std::vector<std::string> names;
    for (Element x = 0; x < a.size(); ++x) {
      for (Element y = 0; y < nb; ++y) {
        names.push_back("(" + a.name(x) + "," + b.name(y) + ")");
      }
    }
    PartialAlgebra::Table table(n, std::vector<std::optional<Element>>(n));
    std::vector<Element>  complement(n);
    for (Element p = 0; p < n; ++p) {
      complement[p]
          = static_cast<Element>(a.complement(p / nb) * nb + b.complement(p % nb));
      for (Element q = 0; q < n; ++q) {
        auto s = a.oplus(p / nb, q / nb);
        auto t = b.oplus(p % nb, q % nb);
        if (s && t) {
          table[p][q] = static_cast<Element>(*s * nb + *t);
        }
      }
    }
    return FiniteMvAlgebra(
        PartialAlgebra(std::move(names),
                       std::move(table),
                       static_cast<Element>(a.zero() * nb + b.zero()),
                       static_cast<Element>(a.one() * nb + b.one())),
        std::move(complement));
  }

  namespace {
    void check_chains(std::vector<std::size_t> const& ns) {
      if (ns.empty()) {
        throw std::invalid_argument("need at least one chain");
      }
      for (auto k : ns) {
        if (k == 0) {
          throw std::invalid_argument("a Lukasiewicz chain needs n >= 1");
        }
      }
    }

    // Mixed radix digits of x, last coordinate fastest.
    std::vector<std::size_t> digits(std::vector<std::size_t> const& ns,
                                    std::size_t                     x) {
      std::vector<std::size_t> d(ns.size());
      for (std::size_t i = ns.size(); i-- > 0;) {
        d[i] = x % (ns[i] + 1);
        x /= ns[i] + 1;
      }
      return d;
    }

    Element index(std::vector<std::size_t> const& ns,
                  std::vector<std::size_t> const& d) {
      std::size_t x = 0;
      for (std::size_t i = 0; i < ns.size(); ++i) {
        x = x * (ns[i] + 1) + d[i];
      }
      return static_cast<Element>(x);
    }
  }  // namespace

  std::size_t chain_product_size(std::vector<std::size_t> const& ns) {
    std::size_t n = 1;
    for (auto k : ns) {
      n *= k + 1;
    }
    return n;
  }

  PartialAlgebra chain_product_table(std::vector<std::size_t> const& ns) {
    check_chains(ns);
    std::size_t const                     n = chain_product_size(ns);
    std::vector<std::vector<std::size_t>> all;
    std::vector<std::string>              names;
    for (std::size_t x = 0; x < n; ++x) {
      all.push_back(digits(ns, x));
      std::ostringstream os;
      if (ns.size() > 1) {
        os << '(';
      }
      for (std::size_t i = 0; i < ns.size(); ++i) {
        os << (i == 0 ? "" : ",") << all.back()[i];
      }
      if (ns.size() > 1) {
        os << ')';
      }
      names.push_back(os.str());
    }
    PartialAlgebra::Table    table(n, std::vector<std::optional<Element>>(n));
    std::vector<std::size_t> sum(ns.size());
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        bool ok = true;
        for (std::size_t i = 0; i < ns.size() && ok; ++i) {
          sum[i] = all[p][i] + all[q][i];
          ok     = sum[i] <= ns[i];
        }
        if (ok) {
          table[p][q] = index(ns, sum);
        }
      }
    }
    return PartialAlgebra(
        std::move(names), std::move(table), 0, static_cast<Element>(n - 1));
  }

  std::vector<Element>
  chain_product_complement(std::vector<std::size_t> const& ns) {
    check_chains(ns);
    std::size_t const    n = chain_product_size(ns);
    std::vector<Element> complement(n);
    for (std::size_t p = 0; p < n; ++p) {
      auto d = digits(ns, p);
      for (std::size_t i = 0; i < ns.size(); ++i) {
        d[i] = ns[i] - d[i];
      }
      complement[p] = index(ns, d);
    }
    return complement;
  }

  FiniteMvAlgebra product_of_chains(std::vector<std::size_t> const& ns) {
    return FiniteMvAlgebra(chain_product_table(ns),
                           chain_product_complement(ns));
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism search
  ////////////////////////////////////////////////////////////////////////

  bool is_isomorphism(PartialAlgebra const&       a,
                      PartialAlgebra const&       b,
                      std::vector<Element> const& phi) {
    std::size_t const n = a.size();
    if (b.size() != n || phi.size() != n) {
      return false;
    }
    std::vector<bool> hit(n, false);
    for (auto y : phi) {
      if (y >= n || hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    if (phi[a.zero()] != b.zero()) {
      return false;
    }
    if (a.one().has_value() != b.one().has_value()
        || (a.one() && phi[*a.one()] != *b.one())) {
      return false;
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        auto s = a.oplus(x, y);
        auto t = b.oplus(phi[x], phi[y]);
        if (s.has_value() != t.has_value() || (s && phi[*s] != *t)) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    struct Profile {
      std::size_t defined_count;
      std::size_t down_size;
      bool        is_zero;
      bool        is_one;
      auto operator<=>(Profile const&) const = default;
    };

    std::vector<Profile> profiles(PartialAlgebra const& a) {
      std::size_t const n = a.size();
      auto const        leq = leq_matrix(a);
      std::vector<Profile> out(n);
      for (Element x = 0; x < n; ++x) {
        Profile p{0, 0, x == a.zero(), a.one() == x};
        for (Element y = 0; y < n; ++y) {
          p.defined_count += a.defined(x, y) ? 1 : 0;
          p.down_size += leq[y * n + x];
        }
        out[x] = p;
      }
      return out;
    }

    // Elements of a in assignment order. Each entry is (element, p, q) where
    // element = p (+) q with p and q earlier in the order, or p = q = element
    // when the element must be chosen freely (zero, atoms, leftovers).
    std::vector<std::tuple<Element, Element, Element>>
    assignment_order(PartialAlgebra const& a, std::vector<Profile> const& prof) {
      std::size_t const n = a.size();
      std::vector<std::tuple<Element, Element, Element>> order;
      std::vector<bool> placed(n, false);
      auto              place = [&](Element x, Element p, Element q) {
        order.emplace_back(x, p, q);
        placed[x] = true;
      };
      place(a.zero(), a.zero(), a.zero());
      std::vector<Element> atoms;
      for (Element x = 0; x < n; ++x) {
        if (x != a.zero() && prof[x].down_size == 2) {
          atoms.push_back(x);
        }
      }
      for (auto x : atoms) {
        if (!placed[x]) {
          place(x, x, x);
        }
      }
      bool progress = true;
      while (progress) {
        progress = false;
        for (Element x = 0; x < n; ++x) {
          if (placed[x]) {
            continue;
          }
          for (auto p : atoms) {
            bool found = false;
            for (Element q = 0; q < n; ++q) {
              if (placed[q] && a.oplus(p, q) == x) {
                place(x, p, q);
                found    = true;
                progress = true;
                break;
              }
            }
            if (found) {
              break;
            }
          }
        }
      }
      for (Element x = 0; x < n; ++x) {
        if (!placed[x]) {
          place(x, x, x);
        }
      }
      return order;
    }

    class IsoSearch {
     public:
      IsoSearch(PartialAlgebra const& a, PartialAlgebra const& b)
          : _a(a),
            _b(b),
            _pa(profiles(a)),
            _pb(profiles(b)),
            _order(assignment_order(a, _pa)),
            _phi(a.size(), NONE),
            _used(b.size(), false),
            _assigned() {}

      std::optional<std::vector<Element>> run() {
        if (search(0)) {
          return _phi;
        }
        return std::nullopt;
      }

     private:
      static constexpr Element NONE = static_cast<Element>(-1);

      bool consistent(Element x, Element y) const {
        if (_used[y] || _pa[x] != _pb[y]) {
          return false;
        }
        for (Element z : _assigned) {
          Element const w = _phi[z];
          for (auto [p, q, r, s] : {std::tuple{x, z, y, w}, std::tuple{z, x, w, y}}) {
            auto u = _a.oplus(p, q);
            auto v = _b.oplus(r, s);
            if (u.has_value() != v.has_value()) {
              return false;
            }
            if (u && _phi[*u] != NONE && _phi[*u] != *v) {
              return false;
            }
            if (u && *u == x && *v != y) {
              return false;
            }
          }
        }
        auto u = _a.oplus(x, x);
        auto v = _b.oplus(y, y);
        if (u.has_value() != v.has_value()) {
          return false;
        }
        return true;
      }

      bool assign_and_recurse(std::size_t k, Element x, Element y) {
        _phi[x]  = y;
        _used[y] = true;
        _assigned.push_back(x);
        if (search(k + 1)) {
          return true;
        }
        _assigned.pop_back();
        _used[y] = false;
        _phi[x]  = NONE;
        return false;
      }

      bool search(std::size_t k) {
        if (k == _order.size()) {
          return is_isomorphism(_a, _b, _phi);
        }
        auto [x, p, q] = _order[k];
        if (p != x || q != x) {
          auto y = _b.oplus(_phi[p], _phi[q]);
          if (!y || !consistent(x, *y)) {
            return false;
          }
          return assign_and_recurse(k, x, *y);
        }
        for (Element y = 0; y < _b.size(); ++y) {
          if (consistent(x, y) && assign_and_recurse(k, x, y)) {
            return true;
          }
        }
        return false;
      }

      PartialAlgebra const&                              _a;
      PartialAlgebra const&                              _b;
      std::vector<Profile>                               _pa;
      std::vector<Profile>                               _pb;
      std::vector<std::tuple<Element, Element, Element>> _order;
      std::vector<Element>                               _phi;
      std::vector<bool>                                  _used;
      std::vector<Element>                               _assigned;
    };
  }  // namespace

  std::optional<std::vector<Element>> mv_isomorphic(PartialAlgebra const& a,
                                                    PartialAlgebra const& b) {
    if (a.size() != b.size() || a.one().has_value() != b.one().has_value()) {
      return std::nullopt;
    }
    auto pa = profiles(a);
    auto pb = profiles(b);
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) {
      return std::nullopt;
    }
    return IsoSearch(a, b).run();
  }

  std::optional<std::vector<Element>> mv_isomorphic(FiniteMvAlgebra const& a,
                                                    FiniteMvAlgebra const& b) {
    return mv_isomorphic(a.base(), b.base());
  }

}  // namespace mvcoord
