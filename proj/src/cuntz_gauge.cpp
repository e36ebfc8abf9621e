#include "mvcoord/cuntz_gauge.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace mvcoord {

  ////////////////////////////////////////////////////////////////////////
  // Polycyclic monoid
  ////////////////////////////////////////////////////////////////////////

  PolyElement poly_multiply(PolyElement const& p, PolyElement const& q) {
    if (p.is_zero() || q.is_zero()) {
      return PolyElement::zero();
    }
    auto const& [y, x] = *p.pair;
    auto const& [v, u] = *q.pair;
    if (is_prefix(x, v)) {
      return PolyElement::of(y.concat(v.suffix_after(x.length())), u);
    }
    if (is_prefix(v, x)) {
      return PolyElement::of(y, u.concat(x.suffix_after(v.length())));
    }
    return PolyElement::zero();
  }

  PolyElement poly_inverse(PolyElement const& p) {
    if (p.is_zero()) {
      return p;
    }
    return PolyElement::of(p.pair->second, p.pair->first);
  }

  std::string to_string(PolyElement const& p) {
    if (p.is_zero()) {
      return "0";
    }
    return to_string(p.pair->first) + "·" + to_string(p.pair->second) + "⁻¹";
  }

  ////////////////////////////////////////////////////////////////////////
  // CuntzElement
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Row = CuntzElement::Row;

    // Rows sorted by domain word. A full sibling block is contiguous and
    // completes at the top of the stack, so one shift-reduce pass suffices.
    std::vector<Row> canonicalize(std::vector<Row> rows, std::size_t n) {
      std::sort(rows.begin(), rows.end());
      std::vector<Row> out;
      out.reserve(rows.size());
      for (auto& r : rows) {
        out.push_back(std::move(r));
        while (out.size() >= n) {
          auto const  base = out.size() - n;
          auto const& x0   = out[base].first;
          auto const& y0   = out[base].second;
          if (x0.empty() || y0.empty() || x0.back() != 0 || y0.back() != 0) {
            break;
          }
          Word const u    = x0.prefix(x0.length() - 1);
          Word const v    = y0.prefix(y0.length() - 1);
          bool       full = true;
          for (std::size_t a = 1; a < n && full; ++a) {
            auto const l = static_cast<Word::Letter>(a);
            full = out[base + a].first == u.append(l)
                && out[base + a].second == v.append(l);
          }
          if (!full) {
            break;
          }
          out.resize(base);
          out.emplace_back(u, v);
        }
      }
      return out;
    }
  }  // namespace

  CuntzElement::CuntzElement(std::size_t alphabet, std::vector<Row> rows)
      : _n(alphabet) {
    std::vector<Word> xs;
    std::vector<Word> ys;
    for (auto const& [x, y] : rows) {
      xs.push_back(x);
      ys.push_back(y);
    }
    // Throws if either side fails to be a prefix code.
    static_cast<void>(PrefixCode(alphabet, std::move(xs)));
    static_cast<void>(PrefixCode(alphabet, std::move(ys)));
    _rows = canonicalize(std::move(rows), _n);
  }

  CuntzElement CuntzElement::from_valid_rows(std::size_t      alphabet,
                                             std::vector<Row> rows) {
    CuntzElement f(alphabet);
    f._rows = canonicalize(std::move(rows), alphabet);
    return f;
  }

  CuntzElement CuntzElement::identity(std::size_t alphabet) {
    return CuntzElement(alphabet, {{Word(alphabet), Word(alphabet)}});
  }

  CuntzElement CuntzElement::idempotent(PrefixCode const& x) {
    std::vector<Row> rows;
    for (auto const& w : x.words()) {
      rows.emplace_back(w, w);
    }
    return CuntzElement(x.alphabet(), std::move(rows));
  }

  bool CuntzElement::is_idempotent() const {
    return std::all_of(_rows.begin(), _rows.end(), [](Row const& r) {
      return r.first == r.second;
    });
  }

  PrefixCode CuntzElement::domain_code() const {
    std::vector<Word> xs;
    for (auto const& r : _rows) {
      xs.push_back(r.first);
    }
    return PrefixCode(_n, std::move(xs));
  }

  PrefixCode CuntzElement::range_code() const {
    std::vector<Word> ys;
    for (auto const& r : _rows) {
      ys.push_back(r.second);
    }
    return PrefixCode(_n, std::move(ys));
  }

  std::optional<Word> CuntzElement::apply(Word const& w) const {
    for (auto const& [x, y] : _rows) {
      if (is_prefix(x, w)) {
        return y.concat(w.suffix_after(x.length()));
      }
    }
    return std::nullopt;
  }

  CuntzElement parse_cuntz(std::string_view text, std::size_t alphabet) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
      }
      return s;
    };
    text = trim(text);
    if (text == "0") {
      return CuntzElement::zero(alphabet);
    }
    std::vector<Row> rows;
    while (true) {
      auto const comma = text.find(',');
      auto const item  = trim(text.substr(0, comma));
      auto const arrow = item.find("->");
      if (arrow == std::string_view::npos) {
        throw std::invalid_argument("row '" + std::string(item)
                                    + "' lacks '->'");
      }
      rows.emplace_back(Word::parse(trim(item.substr(0, arrow)), alphabet),
                        Word::parse(trim(item.substr(arrow + 2)), alphabet));
      if (comma == std::string_view::npos) {
        break;
      }
      text.remove_prefix(comma + 1);
    }
    return CuntzElement(alphabet, std::move(rows));
  }

  std::string to_string(CuntzElement const& f) {
    if (f.is_zero()) {
      return "0";
    }
    std::string s;
    for (auto const& [x, y] : f.rows()) {
      if (!s.empty()) {
        s += ", ";
      }
      s += to_string(x) + "->" + to_string(y);
    }
    return s;
  }

  std::ostream& operator<<(std::ostream& os, CuntzElement const& f) {
    return os << to_string(f);
  }

  namespace {
    void same_alphabet(CuntzElement const& f, CuntzElement const& g) {
      if (f.alphabet() != g.alphabet()) {
        throw std::invalid_argument("Cuntz elements over different alphabets");
      }
    }
  }  // namespace

  CuntzElement cuntz_multiply(CuntzElement const& f, CuntzElement const& g) {
    same_alphabet(f, g);
    std::vector<Row> rows;
    for (auto const& [xf, yf] : f.rows()) {
      for (auto const& [xg, yg] : g.rows()) {
        auto const p = poly_multiply(PolyElement::of(yf, xf),
                                     PolyElement::of(yg, xg));
        if (!p.is_zero()) {
          rows.emplace_back(p.pair->second, p.pair->first);
        }
      }
    }
    return CuntzElement(f.alphabet(), std::move(rows));
  }

  CuntzElement cuntz_inverse(CuntzElement const& f) {
    std::vector<Row> rows;
    for (auto const& [x, y] : f.rows()) {
      rows.emplace_back(y, x);
    }
    return CuntzElement::from_valid_rows(f.alphabet(), std::move(rows));
  }

  CuntzElement cuntz_domain(CuntzElement const& f) {
    std::vector<Row> rows;
    rows.reserve(f.rows().size());
    for (auto const& r : f.rows()) {
      rows.emplace_back(r.first, r.first);
    }
    return CuntzElement::from_valid_rows(f.alphabet(), std::move(rows));
  }

  CuntzElement cuntz_range(CuntzElement const& f) {
    std::vector<Row> rows;
    rows.reserve(f.rows().size());
    for (auto const& r : f.rows()) {
      rows.emplace_back(r.second, r.second);
    }
    return CuntzElement::from_valid_rows(f.alphabet(), std::move(rows));
  }

  CuntzElement cuntz_meet(CuntzElement const& f, CuntzElement const& g) {
    same_alphabet(f, g);
    std::vector<Row> rows;
    for (auto const& [x1, y1] : f.rows()) {
      for (auto const& [x2, y2] : g.rows()) {
        if (is_prefix(x1, x2)) {
          if (y1.concat(x2.suffix_after(x1.length())) == y2) {
            rows.emplace_back(x2, y2);
          }
        } else if (is_prefix(x2, x1)) {
          if (y2.concat(x1.suffix_after(x2.length())) == y1) {
            rows.emplace_back(x1, y1);
          }
        }
      }
    }
    return CuntzElement(f.alphabet(), std::move(rows));
  }

  bool cuntz_compatible(CuntzElement const& f, CuntzElement const& g) {
    return cuntz_multiply(cuntz_inverse(f), g).is_idempotent()
        && cuntz_multiply(f, cuntz_inverse(g)).is_idempotent();
  }

  bool cuntz_orthogonal(CuntzElement const& f, CuntzElement const& g) {
    return cuntz_multiply(cuntz_inverse(f), g).is_zero()
        && cuntz_multiply(f, cuntz_inverse(g)).is_zero();
  }

  std::optional<CuntzElement> cuntz_join(CuntzElement const& f,
                                         CuntzElement const& g) {
    if (!cuntz_compatible(f, g)) {
      return std::nullopt;
    }
    std::vector<Row> all = f.rows();
    all.insert(all.end(), g.rows().begin(), g.rows().end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    // Compatible rows on nested cones agree, so drop the refinements.
    std::vector<Row> rows;
    for (auto const& r : all) {
      bool refined = false;
      for (auto const& s : all) {
        refined = refined
               || (s.first.length() < r.first.length()
                   && is_prefix(s.first, r.first));
      }
      if (!refined) {
        rows.push_back(r);
      }
    }
    return CuntzElement(f.alphabet(), std::move(rows));
  }

  bool cuntz_leq(CuntzElement const& f, CuntzElement const& g) {
    return cuntz_multiply(g, cuntz_domain(f)) == f;
  }

  bool is_gauge(CuntzElement const& f) {
    return std::all_of(f.rows().begin(), f.rows().end(), [](Row const& r) {
      return r.first.length() == r.second.length();
    });
  }

  bool is_unit(CuntzElement const& f) {
    return is_maximal(f.domain_code()) && is_maximal(f.range_code());
  }

  Rational dyadic_mean(CuntzElement const& f, Side which) {
    std::size_t L = 0;
    for (auto const& r : f.rows()) {
      L = std::max(L, (which == Side::domain ? r.first : r.second).length());
    }
    BigInt den = 1;
    for (std::size_t i = 0; i < L; ++i) {
      den *= f.alphabet();
    }
    BigInt num = 0;
    for (auto const& r : f.rows()) {
      auto const len = (which == Side::domain ? r.first : r.second).length();
      BigInt     p   = 1;
      for (std::size_t i = len; i < L; ++i) {
        p *= f.alphabet();
      }
      num += p;
    }
    return make_rational(num, den);
  }

  std::optional<GoodWitness> good_witness(PrefixCode const& e,
                                          PrefixCode const& f) {
    if (e.alphabet() != f.alphabet()) {
      throw std::invalid_argument("prefix codes over different alphabets");
    }
    if (bernoulli(e) > bernoulli(f)) {
      return std::nullopt;
    }
    auto const l  = std::max(e.length(), f.length());
    auto const ue = uniformize(e, l);
    auto const uf = uniformize(f, l);
    std::vector<Word> picked(uf.words().begin(),
                             uf.words().begin()
                                 + static_cast<std::ptrdiff_t>(ue.size()));
    std::vector<Row>  rows;
    for (std::size_t i = 0; i < ue.size(); ++i) {
      rows.emplace_back(ue.words()[i], picked[i]);
    }
    return GoodWitness{PrefixCode(e.alphabet(), std::move(picked)),
                       CuntzElement(e.alphabet(), std::move(rows))};
  }

  ////////////////////////////////////////////////////////////////////////
  // Levels
  ////////////////////////////////////////////////////////////////////////

  Letter word_to_letter(Word const& w) {
    Letter      j     = 0;
    std::size_t place = 1;
    for (std::size_t i = 0; i < w.length(); ++i) {
      j += static_cast<Letter>(w[i] * place);
      place *= w.alphabet();
    }
    return j + 1;
  }

  Word letter_to_word(Letter j, std::size_t alphabet, std::size_t level) {
    std::vector<Word::Letter> letters(level);
    std::size_t               r = j - 1;
    for (std::size_t i = 0; i < level; ++i) {
      letters[i] = static_cast<Word::Letter>(r % alphabet);
      r /= alphabet;
    }
    if (r != 0) {
      throw std::out_of_range("letter exceeds the level");
    }
    return Word(alphabet, std::move(letters));
  }

  namespace {
    std::size_t power(std::size_t n, std::size_t l) {
      std::size_t p = 1;
      for (std::size_t i = 0; i < l; ++i) {
        p *= n;
      }
      return p;
    }
  }  // namespace

  PartialBijection to_symmetric(CuntzElement const& f, std::size_t level) {
    if (!is_gauge(f)) {
      throw std::invalid_argument("only gauge elements live at a level: "
                                  + to_string(f));
    }
    std::size_t const   n = f.alphabet();
    std::vector<Letter> images(power(n, level), UNDEFINED);
    for (auto const& [x, y] : f.rows()) {
      if (x.length() > level) {
        throw std::invalid_argument("row " + to_string(x) + "->" + to_string(y)
                                    + " is longer than level "
                                    + std::to_string(level));
      }
      for (auto const& z : all_words(n, level - x.length())) {
        images[word_to_letter(x.concat(z)) - 1] = word_to_letter(y.concat(z));
      }
    }
    return PartialBijection::from_images(std::move(images));
  }

  CuntzElement from_symmetric(PartialBijection const& p,
                              std::size_t             alphabet,
                              std::size_t             level) {
    if (p.degree() != power(alphabet, level)) {
      throw std::invalid_argument("degree does not match alphabet^level");
    }
    std::vector<Row> rows;
    for (Letter j = 1; j <= p.degree(); ++j) {
      if (p(j) != UNDEFINED) {
        rows.emplace_back(letter_to_word(j, alphabet, level),
                          letter_to_word(p(j), alphabet, level));
      }
    }
    // Distinct words of one length always form prefix codes.
    return CuntzElement::from_valid_rows(alphabet, std::move(rows));
  }

  ////////////////////////////////////////////////////////////////////////
  // DyadicLevelView
  ////////////////////////////////////////////////////////////////////////

  DyadicLevelView::DyadicLevelView(std::size_t alphabet, std::size_t level)
      : _n(alphabet), _level(level) {
    if (alphabet < 2) {
      throw std::invalid_argument("alphabet size must be at least 2");
    }
  }

  std::vector<CuntzElement> DyadicLevelView::idempotents() const {
    std::vector<CuntzElement> out;
    for (auto const& p : mvcoord::idempotents(power(_n, _level))) {
      out.push_back(from_symmetric(p, _n, _level));
    }
    return out;
  }

  std::optional<CuntzElement>
  DyadicLevelView::d_witness(CuntzElement const& a, CuntzElement const& b) const {
    auto const ua = uniformize(a.domain_code(), _level);
    auto const ub = uniformize(b.domain_code(), _level);
    if (ua.size() != ub.size()) {
      return std::nullopt;
    }
    std::vector<Row> rows;
    for (std::size_t i = 0; i < ua.size(); ++i) {
      rows.emplace_back(ua.words()[i], ub.words()[i]);
    }
    return CuntzElement(_n, std::move(rows));
  }

  bool DyadicLevelView::d_related(CuntzElement const& a,
                                  CuntzElement const& b) const {
    auto const w = d_witness(cuntz_domain(a), cuntz_domain(b));
    return w && cuntz_domain(*w) == cuntz_domain(a)
        && cuntz_range(*w) == cuntz_domain(b);
  }

  CuntzElement DyadicLevelView::join(CuntzElement const& a,
                                     CuntzElement const& b) const {
    auto j = cuntz_join(a, b);
    if (!j) {
      throw std::logic_error("join of incompatible elements");
    }
    return *j;
  }

  CuntzElement DyadicLevelView::complement(CuntzElement const& e) const {
    return CuntzElement::idempotent(
        clopen_complement(uniformize(e.domain_code(), _level)));
  }

  void DyadicLevelView::for_each_element(
      std::function<void(CuntzElement const&)> const& fn) const {
    for_each_partial_bijection(power(_n, _level),
                               [&](PartialBijection const& p) {
                                 fn(from_symmetric(p, _n, _level));
                               });
  }

}  // namespace mvcoord
