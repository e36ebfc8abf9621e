#ifndef MVCOORD_CANTOR_PREFIX_HPP_
#define MVCOORD_CANTOR_PREFIX_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "mvcoord/rational.hpp"

namespace mvcoord {

  // A finite word over the alphabet {0, ..., n-1}. Letters print as
  // 'a', 'b', ...; the empty word prints as "ε".
  class Word {
   public:
    using Letter = std::uint8_t;
    // Short words stay inline; profiling showed allocation dominating.
    using Letters = boost::container::small_vector<Letter, 16>;

    Word() = default;
    explicit Word(std::size_t alphabet, std::vector<Letter> const& letters = {});
    Word(std::size_t alphabet, Letters letters);

    // Accepts "ε" or "_" for the empty word.
    static Word parse(std::string_view text, std::size_t alphabet);

    std::size_t alphabet() const noexcept {
      return _n;
    }
    Letters const& letters() const noexcept {
      return _letters;
    }
    std::size_t length() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    Letter back() const {
      return _letters.back();
    }

    Word append(Letter a) const;
    Word concat(Word const& z) const;
    // The first k letters.
    Word prefix(std::size_t k) const;
    // Everything after the first k letters.
    Word suffix_after(std::size_t k) const;

    bool operator==(Word const& other) const = default;
    // Lexicographic, a proper prefix first.
    auto operator<=>(Word const& other) const {
      return std::lexicographical_compare_three_way(
          _letters.begin(), _letters.end(), other._letters.begin(),
          other._letters.end());
    }

   private:
    std::size_t _n = 2;
    Letters     _letters;
  };

  std::string   to_string(Word const& w);
  std::ostream& operator<<(std::ostream& os, Word const& w);

  // x is a prefix of y.
  bool is_prefix(Word const& x, Word const& y);
  bool prefix_comparable(Word const& x, Word const& y);

  // All words of the given length in lexicographic order.
  std::vector<Word> all_words(std::size_t alphabet, std::size_t length);

  // A finite antichain under the prefix order, kept sorted. The empty code
  // generates the empty set; {ε} generates the whole space.
  class PrefixCode {
   public:
    explicit PrefixCode(std::size_t alphabet = 2) : _n(alphabet) {}
    // Throws std::invalid_argument if the words are not an antichain or mix
    // alphabets.
    PrefixCode(std::size_t alphabet, std::vector<Word> words);

    static PrefixCode whole(std::size_t alphabet) {
      return PrefixCode(alphabet, {Word(alphabet)});
    }

    std::size_t alphabet() const noexcept {
      return _n;
    }
    std::vector<Word> const& words() const noexcept {
      return _words;
    }
    std::size_t size() const noexcept {
      return _words.size();
    }
    bool empty() const noexcept {
      return _words.empty();
    }
    bool contains(Word const& w) const;
    // Maximum word length; 0 for the empty code.
    std::size_t length() const;
    std::size_t weight() const;
    bool        is_uniform() const;

    bool operator==(PrefixCode const&) const = default;
    auto operator<=>(PrefixCode const& other) const {
      return _words <=> other._words;
    }

   private:
    std::size_t       _n;
    std::vector<Word> _words;
  };

  // "aa+aba+b"; "0" is the empty code.
  PrefixCode    parse_code(std::string_view text, std::size_t alphabet);
  std::string   to_string(PrefixCode const& x);
  std::ostream& operator<<(std::ostream& os, PrefixCode const& x);

  // Shortest ancestors of a word set: the prefix code generating the same
  // open set.
  PrefixCode max_of(std::size_t alphabet, std::vector<Word> const& words);

  Rational bernoulli(PrefixCode const& x);
  // Bernoulli measure equal to 1.
  bool is_maximal(PrefixCode const& x);
  // Every word of length length(x) has a prefix in x.
  bool is_maximal_oracle(PrefixCode const& x);

  // Replace u by uA^r. Throws if u is not in x or r == 0.
  PrefixCode extend(PrefixCode const& x, Word const& u, std::size_t r);
  // Replace the block uA^r by u. Throws unless uA^r is contained in x.
  PrefixCode reduce(PrefixCode const& x, Word const& u, std::size_t r);
  // Words u with uA contained in x, in lexicographic order.
  std::vector<Word> depth_one_reductions(PrefixCode const& x);
  // The code of words of length r with a prefix in x. Throws if
  // r < length(x).
  PrefixCode uniformize(PrefixCode const& x, std::size_t r);
  // Apply depth-one reductions until none is left.
  PrefixCode minimize(PrefixCode const& x);

  bool clopen_equal(PrefixCode const& x, PrefixCode const& y);
  bool clopen_subset(PrefixCode const& x, PrefixCode const& y);
  PrefixCode clopen_intersection(PrefixCode const& x, PrefixCode const& y);
  // Complement within the whole space, as a code of uniform length.
  PrefixCode clopen_complement(PrefixCode const& x);

}  // namespace mvcoord

#endif  // MVCOORD_CANTOR_PREFIX_HPP_
