#ifndef MVCOORD_COORDINATIZE_HPP_
#define MVCOORD_COORDINATIZE_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvcoord/bratteli.hpp"
#include "mvcoord/effect_mv.hpp"
#include "mvcoord/semisimple.hpp"

namespace mvcoord {

  // Multisets of integers >= 2 with product n, each sorted ascending, listed
  // by length and then lexicographically. n = 1 has only the empty multiset.
  std::vector<std::vector<std::size_t>> factorizations(std::size_t n);

  struct Coordinatization {
    // Chain sizes n_i + 1, ascending.
    std::vector<std::size_t> chains;
    // (n_1, ..., n_k): the quotient of I_{n_1} x ... x I_{n_k} is M.
    Signature signature;
    // The quotient E(S)/D that was matched.
    PartialAlgebra quotient;
    // witness[a] is the class of the quotient matched with element a of M.
    std::vector<Element> witness;
    // Factorizations tried before the match, for reporting.
    std::size_t tried = 0;
  };

  class CoordinatizeError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Throws CoordinatizeError if no product of chains matches.
  Coordinatization coordinatize(FiniteMvAlgebra const& m);

  // E(S)/D for a semisimple S: the exhaustive quotient over all idempotents
  // for small signatures, the rank-keyed one otherwise.
  PartialAlgebra semisimple_quotient(Signature const& s);

  struct IntervalReport {
    std::size_t level = 0;
    std::size_t rank  = 0;
    IntVector   unit;
    std::size_t interval_size = 0;
    // "explicit": exhaustive quotient matched by isomorphism search;
    // "tables": rank-keyed quotient compared entrywise with the interval;
    // "skipped": interval too large for table verification.
    std::string          mode;
    bool                 verified = false;
    std::vector<Element> witness;
  };

  IntervalReport report_interval(BratteliDiagram const& b, std::size_t level);

  // Largest interval verified entrywise.
  inline constexpr std::size_t INTERVAL_TABLE_LIMIT = 2000;
  // Largest level (total letters) for the exhaustive quotient.
  inline constexpr std::size_t EXPLICIT_LETTER_LIMIT = 8;

}  // namespace mvcoord

#endif  // MVCOORD_COORDINATIZE_HPP_
