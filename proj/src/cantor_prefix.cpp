#include "mvcoord/cantor_prefix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace mvcoord {

  namespace {
    constexpr std::string_view EPSILON = "ε";

    void check_alphabet(std::size_t n) {
      if (n < 2 || n > 26) {
        throw std::invalid_argument("alphabet size must be between 2 and 26");
      }
    }

    void same_alphabet(std::size_t a, std::size_t b) {
      if (a != b) {
        throw std::invalid_argument("alphabet mismatch: " + std::to_string(a)
                                    + " vs " + std::to_string(b));
      }
    }
  }  // namespace

  Word::Word(std::size_t alphabet, std::vector<Letter> const& letters)
      : Word(alphabet, Letters(letters.begin(), letters.end())) {}

  Word::Word(std::size_t alphabet, Letters letters)
      : _n(alphabet), _letters(std::move(letters)) {
    check_alphabet(_n);
    for (auto a : _letters) {
      if (a >= _n) {
        throw std::invalid_argument("letter out of range for alphabet size "
                                    + std::to_string(_n));
      }
    }
  }

  Word Word::parse(std::string_view text, std::size_t alphabet) {
    if (text == EPSILON || text == "_") {
      return Word(alphabet);
    }
    if (text.empty()) {
      throw std::invalid_argument("empty word literal; write ε or _");
    }
    std::vector<Letter> letters;
    for (char c : text) {
      if (c < 'a' || c >= static_cast<char>('a' + alphabet)) {
        throw std::invalid_argument(std::string("bad letter '") + c
                                    + "' in word " + std::string(text));
      }
      letters.push_back(static_cast<Letter>(c - 'a'));
    }
    return Word(alphabet, std::move(letters));
  }

  Word Word::append(Letter a) const {
    auto letters = _letters;
    letters.push_back(a);
    return Word(_n, std::move(letters));
  }

  Word Word::concat(Word const& z) const {
    same_alphabet(_n, z._n);
    auto letters = _letters;
    letters.insert(letters.end(), z._letters.begin(), z._letters.end());
    return Word(_n, std::move(letters));
  }

  Word Word::prefix(std::size_t k) const {
    return Word(_n, Letters(_letters.begin(), _letters.begin() + std::min(k, length())));
  }

  Word Word::suffix_after(std::size_t k) const {
    return Word(_n, Letters(_letters.begin() + std::min(k, length()), _letters.end()));
  }

  std::string to_string(Word const& w) {
    if (w.empty()) {
      return std::string(EPSILON);
    }
    std::string s;
    for (auto a : w.letters()) {
      s.push_back(static_cast<char>('a' + a));
    }
    return s;
  }

  std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << to_string(w);
  }

  bool is_prefix(Word const& x, Word const& y) {
    same_alphabet(x.alphabet(), y.alphabet());
    return x.length() <= y.length()
        && std::equal(x.letters().begin(), x.letters().end(), y.letters().begin());
  }

  bool prefix_comparable(Word const& x, Word const& y) {
    return is_prefix(x, y) || is_prefix(y, x);
  }

  std::vector<Word> all_words(std::size_t alphabet, std::size_t length) {
    std::vector<Word> out{Word(alphabet)};
    for (std::size_t i = 0; i < length; ++i) {
      std::vector<Word> next;
      next.reserve(out.size() * alphabet);
      for (auto const& w : out) {
        for (std::size_t a = 0; a < alphabet; ++a) {
          next.push_back(w.append(static_cast<Word::Letter>(a)));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // PrefixCode
  ////////////////////////////////////////////////////////////////////////

  PrefixCode::PrefixCode(std::size_t alphabet, std::vector<Word> words)
      : _n(alphabet), _words(std::move(words)) {
    check_alphabet(_n);
    for (auto const& w : _words) {
      same_alphabet(_n, w.alphabet());
    }
    std::sort(_words.begin(), _words.end());
    // In lexicographic order a prefix sorts immediately before the words
    // extending it, so checking neighbours suffices.
    for (std::size_t i = 1; i < _words.size(); ++i) {
      if (is_prefix(_words[i - 1], _words[i])) {
        throw std::invalid_argument("not a prefix code: " + to_string(_words[i - 1])
                                    + " is a prefix of " + to_string(_words[i]));
      }
    }
  }

  bool PrefixCode::contains(Word const& w) const {
    return std::binary_search(_words.begin(), _words.end(), w);
  }

  std::size_t PrefixCode::length() const {
    std::size_t l = 0;
    for (auto const& w : _words) {
      l = std::max(l, w.length());
    }
    return l;
  }

  std::size_t PrefixCode::weight() const {
    std::size_t total = 0;
    for (auto const& w : _words) {
      total += w.length();
    }
    return total;
  }

  bool PrefixCode::is_uniform() const {
    return std::all_of(_words.begin(), _words.end(), [&](Word const& w) {
      return w.length() == _words.front().length();
    });
  }

  PrefixCode parse_code(std::string_view text, std::size_t alphabet) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
      }
      while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
      }
      return s;
    };
    text = trim(text);
    if (text == "0") {
      return PrefixCode(alphabet);
    }
    std::vector<Word> words;
    while (true) {
      auto const plus = text.find('+');
      words.push_back(Word::parse(trim(text.substr(0, plus)), alphabet));
      if (plus == std::string_view::npos) {
        break;
      }
      text.remove_prefix(plus + 1);
    }
    return PrefixCode(alphabet, std::move(words));
  }

  std::string to_string(PrefixCode const& x) {
    if (x.empty()) {
      return "0";
    }
    std::string s;
    for (auto const& w : x.words()) {
      if (!s.empty()) {
        s += '+';
      }
      s += to_string(w);
    }
    return s;
  }

  std::ostream& operator<<(std::ostream& os, PrefixCode const& x) {
    return os << to_string(x);
  }

  PrefixCode max_of(std::size_t alphabet, std::vector<Word> const& words) {
    auto sorted = words;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Word> kept;
    for (auto const& w : sorted) {
      if (kept.empty() || !is_prefix(kept.back(), w)) {
        kept.push_back(w);
      }
    }
    return PrefixCode(alphabet, std::move(kept));
  }

  Rational bernoulli(PrefixCode const& x) {
    // Sum n^(L - |w|) over n^L, normalised once.
    std::size_t const L = x.length();
    BigInt            num = 0;
    BigInt            den = 1;
    std::vector<BigInt> powers{1};
    for (std::size_t i = 0; i < L; ++i) {
      powers.push_back(powers.back() * x.alphabet());
    }
    den = powers[L];
    for (auto const& w : x.words()) {
      num += powers[L - w.length()];
    }
    return make_rational(num, den);
  }

  bool is_maximal(PrefixCode const& x) {
    return bernoulli(x) == 1;
  }

  bool is_maximal_oracle(PrefixCode const& x) {
    for (auto const& w : all_words(x.alphabet(), x.length())) {
      bool covered = false;
      for (auto const& u : x.words()) {
        covered = covered || is_prefix(u, w);
      }
      if (!covered) {
        return false;
      }
    }
    return true;
  }

  PrefixCode extend(PrefixCode const& x, Word const& u, std::size_t r) {
    if (r == 0) {
      throw std::invalid_argument("extension needs r >= 1");
    }
    if (!x.contains(u)) {
      throw std::invalid_argument("cannot extend " + to_string(u)
                                  + ": not in the code");
    }
    std::vector<Word> words;
    for (auto const& w : x.words()) {
      if (w != u) {
        words.push_back(w);
      }
    }
    for (auto const& z : all_words(x.alphabet(), r)) {
      words.push_back(u.concat(z));
    }
    return PrefixCode(x.alphabet(), std::move(words));
  }

  PrefixCode reduce(PrefixCode const& x, Word const& u, std::size_t r) {
    if (r == 0) {
      throw std::invalid_argument("reduction needs r >= 1");
    }
    auto const block = all_words(x.alphabet(), r);
    for (auto const& z : block) {
      if (!x.contains(u.concat(z))) {
        throw std::invalid_argument("cannot reduce to " + to_string(u)
                                    + ": the block is incomplete");
      }
    }
    std::vector<Word> words;
    for (auto const& w : x.words()) {
      if (!(w.length() == u.length() + r && is_prefix(u, w))) {
        words.push_back(w);
      }
    }
    words.push_back(u);
    return PrefixCode(x.alphabet(), std::move(words));
  }

  std::vector<Word> depth_one_reductions(PrefixCode const& x) {
    std::vector<Word> out;
    auto const&       words = x.words();
    std::size_t const n     = x.alphabet();
    // A full sibling block ua_0, ..., ua_{n-1} is contiguous in sorted order.
    for (std::size_t i = 0; i + n <= words.size(); ++i) {
      auto const& w = words[i];
      if (w.empty() || w.back() != 0) {
        continue;
      }
      Word const u    = w.prefix(w.length() - 1);
      bool       full = true;
      for (std::size_t a = 1; a < n && full; ++a) {
        full = words[i + a] == u.append(static_cast<Word::Letter>(a));
      }
      if (full) {
        out.push_back(u);
      }
    }
    return out;
  }

  PrefixCode uniformize(PrefixCode const& x, std::size_t r) {
    if (r < x.length()) {
      throw std::invalid_argument("cannot uniformize to length "
                                  + std::to_string(r) + " below the code length "
                                  + std::to_string(x.length()));
    }
    PrefixCode y = x;
    for (auto const& w : x.words()) {
      if (w.length() < r) {
        y = extend(y, w, r - w.length());
      }
    }
    return y;
  }

  PrefixCode minimize(PrefixCode const& x) {
    PrefixCode y = x;
    while (true) {
      auto const candidates = depth_one_reductions(y);
      if (candidates.empty()) {
        return y;
      }
      y = reduce(y, candidates.front(), 1);
    }
  }

  bool clopen_equal(PrefixCode const& x, PrefixCode const& y) {
    same_alphabet(x.alphabet(), y.alphabet());
    return minimize(x) == minimize(y);
  }

  bool clopen_subset(PrefixCode const& x, PrefixCode const& y) {
    same_alphabet(x.alphabet(), y.alphabet());
    auto const l  = std::max(x.length(), y.length());
    auto const ux = uniformize(x, l);
    auto const uy = uniformize(y, l);
    return std::includes(
        uy.words().begin(), uy.words().end(), ux.words().begin(), ux.words().end());
  }

  PrefixCode clopen_intersection(PrefixCode const& x, PrefixCode const& y) {
    same_alphabet(x.alphabet(), y.alphabet());
    std::vector<Word> words;
    for (auto const& u : x.words()) {
      for (auto const& v : y.words()) {
        if (is_prefix(u, v)) {
          words.push_back(v);
        } else if (is_prefix(v, u)) {
          words.push_back(u);
        }
      }
    }
    return PrefixCode(x.alphabet(), std::move(words));
  }

  PrefixCode clopen_complement(PrefixCode const& x) {
    auto const        l = x.length();
    auto const        u = uniformize(x, l);
    std::vector<Word> words;
    for (auto const& w : all_words(x.alphabet(), l)) {
      if (!u.contains(w)) {
        words.push_back(w);
      }
    }
    return PrefixCode(x.alphabet(), std::move(words));
  }

}  // namespace mvcoord
