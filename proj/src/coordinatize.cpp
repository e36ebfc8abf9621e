#include "mvcoord/coordinatize.hpp"

#include <algorithm>

#include "mvcoord/dimension_groups.hpp"
#include "mvcoord/quotient.hpp"

namespace mvcoord {

  std::vector<std::vector<std::size_t>> factorizations(std::size_t n) {
    if (n == 0) {
      throw std::invalid_argument("cannot factor 0");
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              current;
    auto rec = [&](auto&& self, std::size_t rest, std::size_t min) -> void {
      if (rest == 1) {
        out.push_back(current);
        return;
      }
      for (std::size_t d = min; d <= rest; ++d) {
        if (rest % d == 0) {
          current.push_back(d);
          self(self, rest / d, d);
          current.pop_back();
        }
      }
    };
    rec(rec, n, 2);
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  }

  PartialAlgebra semisimple_quotient(Signature const& s) {
    if (s.total() <= EXPLICIT_LETTER_LIMIT) {
      return quotient_mv(SemisimpleView(s)).algebra;
    }
    return quotient_by_rank(s);
  }

  Coordinatization coordinatize(FiniteMvAlgebra const& m) {
    std::size_t tried = 0;
    for (auto const& f : factorizations(m.size())) {
      ++tried;
      std::vector<std::size_t> ns;
      for (auto k : f) {
        ns.push_back(k - 1);
      }
      if (f.empty()) {
        // The one-element algebra has 0 = 1 and is not an MV-algebra here.
        continue;
      }
      if (!mv_isomorphic(m.base(), chain_product_table(ns))) {
        continue;
      }
      Signature sig(ns);
      auto      q   = semisimple_quotient(sig);
      auto      phi = mv_isomorphic(m.base(), q);
      if (!phi) {
        throw CoordinatizeError("quotient of " + to_string(sig)
                                + " does not match its chain product");
      }
      return Coordinatization{f, std::move(sig), std::move(q), std::move(*phi), tried};
    }
    throw CoordinatizeError("no product of Lukasiewicz chains of order "
                            + std::to_string(m.size()) + " is isomorphic to "
                            + "the input (" + std::to_string(tried)
                            + " factorizations tried)");
  }

  IntervalReport report_interval(BratteliDiagram const& b, std::size_t level) {
    IntervalReport r;
    r.level = level;
    auto const sig = b.level_signature(level);
    SimplicialGroup const g(b.size_vector(level));
    r.rank          = g.rank();
    r.unit          = g.unit();
    r.interval_size = g.interval_size();
    if (sig.total() <= EXPLICIT_LETTER_LIMIT) {
      r.mode   = "explicit";
      auto q   = quotient_mv(SemisimpleView(sig)).algebra;
      auto phi = mv_isomorphic(q, interval_algebra(g).base());
      r.verified = phi.has_value();
      if (phi) {
        r.witness = std::move(*phi);
      }
    } else if (r.interval_size <= INTERVAL_TABLE_LIMIT) {
      r.mode = "tables";
      auto const q = quotient_by_rank(sig, r.interval_size <= 400);
      auto const t = interval_table(g);
      std::vector<Element> id(r.interval_size);
      for (std::size_t i = 0; i < id.size(); ++i) {
        id[i] = static_cast<Element>(i);
      }
      r.verified = is_isomorphism(q, t, id);
      if (r.verified) {
        r.witness = std::move(id);
      }
    } else {
      r.mode = "skipped";
    }
    return r;
  }

}  // namespace mvcoord
