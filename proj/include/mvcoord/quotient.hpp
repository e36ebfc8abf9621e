#ifndef MVCOORD_QUOTIENT_HPP_
#define MVCOORD_QUOTIENT_HPP_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvcoord/effect_mv.hpp"
#include "mvcoord/rational.hpp"
#include "mvcoord/semisimple.hpp"

namespace mvcoord {

  // A finite Boolean inverse monoid exposed through enough operations to
  // build E(S)/D. Views own no state beyond what they need to enumerate.
  template <typename V>
  concept BooleanMonoidView = requires(V const&                      v,
                                       typename V::value_type const& a,
                                       typename V::value_type const& b) {
    typename V::value_type;
    { v.idempotents() } -> std::same_as<std::vector<typename V::value_type>>;
    { v.d_related(a, b) } -> std::same_as<bool>;
    { v.orthogonal(a, b) } -> std::same_as<bool>;
    { v.leq(a, b) } -> std::same_as<bool>;
    { v.join(a, b) } -> std::same_as<typename V::value_type>;
    { v.complement(a) } -> std::same_as<typename V::value_type>;
    { v.identity() } -> std::same_as<typename V::value_type>;
    { v.zero() } -> std::same_as<typename V::value_type>;
    { v.label(a) } -> std::same_as<std::string>;
  };

  // Views that can also sweep every element, with domain and range
  // idempotents, for the (IM2) check.
  template <typename V>
  concept ElementSweepView
      = BooleanMonoidView<V>
        && requires(V const& v, typename V::value_type const& a) {
             { v.domain_idem(a) } -> std::same_as<typename V::value_type>;
             { v.range_idem(a) } -> std::same_as<typename V::value_type>;
             v.for_each_element(
                 std::function<void(typename V::value_type const&)>{});
           };

  class FoulisError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  template <typename T>
  struct Quotient {
    PartialAlgebra algebra;
    // representatives[c] is the first idempotent (in view order) of class c.
    std::vector<T> representatives;
  };

  namespace detail {
    // Class index of each idempotent, classes numbered by first occurrence.
    template <BooleanMonoidView V>
    std::vector<std::size_t>
    d_classes(V const&                                     view,
              std::vector<typename V::value_type> const&   ids,
              std::vector<typename V::value_type>&         reps) {
      std::vector<std::size_t> cls(ids.size());
      for (std::size_t i = 0; i < ids.size(); ++i) {
        std::size_t c = 0;
        while (c < reps.size() && !view.d_related(reps[c], ids[i])) {
          ++c;
        }
        if (c == reps.size()) {
          reps.push_back(ids[i]);
        }
        cls[i] = c;
      }
      return cls;
    }

    // Position of each idempotent in the view's list.
    template <typename T>
    class IdempotentIndex {
     public:
      explicit IdempotentIndex(std::vector<T> const& ids) {
        for (std::size_t i = 0; i < ids.size(); ++i) {
          _pos.emplace(ids[i], i);
        }
      }
      std::size_t operator()(T const& x) const {
        auto it = _pos.find(x);
        if (it == _pos.end()) {
          throw std::logic_error("view operation left the idempotent set");
        }
        return it->second;
      }

     private:
      std::map<T, std::size_t> _pos;
    };
  }  // namespace detail

  // E(S)/D with [e] (+) [f] = [e' v f'] for orthogonal representatives.
  // Throws FoulisError if S is not completely semisimple, if D does not
  // preserve complementation, or if (+) is not well defined.
  template <BooleanMonoidView V>
  Quotient<typename V::value_type> quotient_mv(V const& view) {
    using T      = typename V::value_type;
    auto const ids = view.idempotents();
    std::vector<T> reps;
    auto const     cls = detail::d_classes(view, ids, reps);
    std::size_t const n = ids.size();
    detail::IdempotentIndex<T> const index_of(ids);

    std::vector<std::size_t> comp(n);
    for (std::size_t i = 0; i < n; ++i) {
      comp[i] = index_of(view.complement(ids[i]));
    }
    std::vector<std::optional<std::size_t>> comp_class(reps.size());
    for (std::size_t i = 0; i < n; ++i) {
      auto& c = comp_class[cls[i]];
      if (c && *c != cls[comp[i]]) {
        throw FoulisError("D does not preserve complementation at "
                          + view.label(ids[i]));
      }
      c = cls[comp[i]];
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && cls[i] == cls[j] && view.leq(ids[i], ids[j])) {
          throw FoulisError("not completely semisimple: "
                            + view.label(ids[i]) + " is D-related to a "
                            + "strictly larger idempotent");
        }
      }
    }

    std::size_t const     k = reps.size();
    PartialAlgebra::Table table(k, std::vector<std::optional<Element>>(k));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!view.orthogonal(ids[i], ids[j])) {
          continue;
        }
        auto const s = static_cast<Element>(
            cls[index_of(view.join(ids[i], ids[j]))]);
        auto& entry = table[cls[i]][cls[j]];
        if (entry && *entry != s) {
          throw FoulisError("(+) is not well defined on the classes of "
                            + view.label(ids[i]) + " and "
                            + view.label(ids[j]));
        }
        entry = s;
      }
    }

    std::vector<std::string> names;
    for (auto const& r : reps) {
      names.push_back(view.label(r));
    }
    auto const zero = static_cast<Element>(
        cls[index_of(view.zero())]);
    auto const one = static_cast<Element>(
        cls[index_of(view.identity())]);
    return {PartialAlgebra(std::move(names), std::move(table), zero, one),
            std::move(reps)};
  }

  // Outcome of checking a candidate invariant mean.
  struct InvariantMeanReport {
    bool im1        = true;
    bool im2        = true;
    bool im3        = true;
    bool good       = true;
    bool reflects_d = true;
    // The order on D-classes given by [e] <= [f] iff e D e' <= f is linear.
    bool linear_j_order = true;
    // The linear J-order agrees with the order of the mean values.
    bool j_order_matches_mean = true;
    // Mean value of each D-class, classes in first-occurrence order.
    std::vector<Rational>    class_values;
    std::vector<std::string> failures;

    bool all() const {
      return im1 && im2 && im3 && good && reflects_d && linear_j_order
          && j_order_matches_mean;
    }
  };

  template <BooleanMonoidView V>
  InvariantMeanReport invariant_mean_check(
      V const&                                                view,
      std::function<Rational(typename V::value_type const&)> const& mu) {
    using T = typename V::value_type;
    InvariantMeanReport r;
    auto note = [&r](bool& flag, std::string msg) {
      if (flag) {
        r.failures.push_back(std::move(msg));
      }
      flag = false;
    };

    auto const            ids = view.idempotents();
    std::size_t const     n   = ids.size();
    std::vector<Rational> m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = mu(ids[i]);
    }

    if (mu(view.identity()) != 1) {
      note(r.im1, "IM1: mean of 1 is " + to_string(mu(view.identity())));
    }
    if constexpr (ElementSweepView<V>) {
      view.for_each_element([&](T const& s) {
        if (r.im2 && mu(view.domain_idem(s)) != mu(view.range_idem(s))) {
          note(r.im2, "IM2: domain and range of " + view.label(s) + " differ");
        }
      });
    }
    std::vector<std::vector<std::size_t>> below(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (view.orthogonal(ids[i], ids[j])
            && mu(view.join(ids[i], ids[j])) != m[i] + m[j]) {
          note(r.im3,
               "IM3: not additive on " + view.label(ids[i]) + " and "
                   + view.label(ids[j]));
        }
        if (view.leq(ids[j], ids[i])) {
          below[i].push_back(j);
        }
      }
    }

    for (std::size_t f = 0; f < n; ++f) {
      std::set<Rational> values;
      for (auto j : below[f]) {
        values.insert(m[j]);
      }
      for (std::size_t e = 0; e < n; ++e) {
        if (m[e] <= m[f] && !values.contains(m[e])) {
          note(r.good,
               "good: nothing below " + view.label(ids[f]) + " has the mean of "
                   + view.label(ids[e]));
        }
      }
    }

    std::vector<T> reps;
    auto const     cls = detail::d_classes(view, ids, reps);
    detail::IdempotentIndex<T> const index_of(ids);
    std::map<Rational, std::size_t> by_value;
    r.class_values.assign(reps.size(), Rational(-1));
    for (std::size_t i = 0; i < n; ++i) {
      auto& v = r.class_values[cls[i]];
      if (v == -1) {
        v = m[i];
      } else if (v != m[i]) {
        note(r.im2, "IM2: D-related idempotents have different means");
      }
      auto [it, fresh] = by_value.emplace(m[i], cls[i]);
      if (!fresh && it->second != cls[i]) {
        note(r.reflects_d,
             "reflects D: " + view.label(ids[i]) + " has the mean of "
                 + view.label(reps[it->second]) + " but is not D-related");
      }
    }

    // [c] <= [d] iff some member of c lies below the representative of d.
    std::size_t const              k = reps.size();
    std::vector<std::vector<bool>> jle(k, std::vector<bool>(k, false));
    for (std::size_t d = 0; d < k; ++d) {
      std::size_t const f = index_of(reps[d]);
      for (auto j : below[f]) {
        jle[cls[j]][d] = true;
      }
    }
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t d = 0; d < k; ++d) {
        if (!jle[c][d] && !jle[d][c]) {
          note(r.linear_j_order,
               "J-order: " + view.label(reps[c]) + " and "
                   + view.label(reps[d]) + " are incomparable");
        }
        if (jle[c][d] != (r.class_values[c] <= r.class_values[d])) {
          note(r.j_order_matches_mean,
               "J-order disagrees with the mean on " + view.label(reps[c])
                   + " and " + view.label(reps[d]));
        }
      }
    }
    return r;
  }

  // The semisimple monoid I_{m(1)} x ... x I_{m(k)} as a view.
  class SemisimpleView {
   public:
    using value_type = SemisimpleElement;

    explicit SemisimpleView(Signature s) : _s(std::move(s)) {}

    Signature const& signature() const noexcept {
      return _s;
    }
    std::vector<SemisimpleElement> idempotents() const {
      return mvcoord::idempotents(_s);
    }
    bool d_related(value_type const& a, value_type const& b) const {
      return mvcoord::d_related(a, b);
    }
    bool orthogonal(value_type const& a, value_type const& b) const {
      return mvcoord::orthogonal(a, b);
    }
    bool leq(value_type const& a, value_type const& b) const {
      return natural_leq(a, b);
    }
    value_type join(value_type const& a, value_type const& b) const {
      auto j = mvcoord::join(a, b);
      if (!j) {
        throw std::logic_error("join of incompatible elements");
      }
      return *j;
    }
    value_type complement(value_type const& e) const {
      return complement_idem(e);
    }
    value_type identity() const {
      return SemisimpleElement::identity(_s);
    }
    value_type zero() const {
      return SemisimpleElement::zero(_s);
    }
    value_type domain_idem(value_type const& a) const {
      return mvcoord::domain_idem(a);
    }
    value_type range_idem(value_type const& a) const {
      return mvcoord::range_idem(a);
    }
    void for_each_element(
        std::function<void(value_type const&)> const& fn) const;
    // Rank vector, written as in product_of_chains.
    std::string label(value_type const& a) const;

   private:
    Signature _s;
  };

  // E(S)/D for a semisimple S computed from rank vectors: the classes are
  // the rank vectors 0 <= k <= m in lexicographic order and k (+) l is
  // defined iff k + l <= m. With verify set, every defined sum is checked
  // on explicit orthogonal representatives and every undefined one against
  // the pigeonhole bound.
  PartialAlgebra quotient_by_rank(Signature const& s, bool verify = false);

  // The uniform mean e |-> |e| / n on idempotents of I_n, and its product
  // analogue weighting coordinate i by w[i].
  Rational letter_mean(SemisimpleElement const& e,
                       std::vector<Rational> const& weights);

  // MV-homomorphism check for the map [e] |-> [sigma(e)] between rank
  // quotients: preserves 0, 1, definedness of (+), (+) and complement.
  bool induced_map_preserves_oplus(StandardMorphism const& sigma);

}  // namespace mvcoord

#endif  // MVCOORD_QUOTIENT_HPP_
