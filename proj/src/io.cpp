#include "mvcoord/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mvcoord {

  namespace {
    using nlohmann::json;

    json parse(std::string_view text) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
      }
    }

    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw std::invalid_argument(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    Element element(json const& j, std::size_t n, char const* what) {
      if (!j.is_number_unsigned() || j.get<std::uint64_t>() >= n) {
        throw std::invalid_argument(std::string("bad element index in ") + what);
      }
      return j.get<Element>();
    }

    std::string quoted(std::string const& s) {
      return json(s).dump(-1, ' ', false);
    }

    template <typename T, typename F>
    std::string list(std::vector<T> const& xs, F&& show) {
      std::string out = "[";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : ",") + show(xs[i]);
      }
      return out + "]";
    }
  }  // namespace

  AlgebraFile parse_algebra_json(std::string_view text) {
    auto const j     = parse(text);
    auto const& elts = field(j, "elements");
    if (!elts.is_array() || elts.empty()) {
      throw std::invalid_argument("\"elements\" must be a non-empty array");
    }
    std::vector<std::string> names;
    for (auto const& e : elts) {
      if (!e.is_string()) {
        throw std::invalid_argument("element names must be strings");
      }
      names.push_back(e.get<std::string>());
    }
    std::size_t const n     = names.size();
    auto const&       table = field(j, "oplus");
    if (!table.is_array() || table.size() != n) {
      throw std::invalid_argument("\"oplus\" must have one row per element");
    }
    PartialAlgebra::Table oplus;
    for (auto const& row : table) {
      if (!row.is_array() || row.size() != n) {
        throw std::invalid_argument("\"oplus\" rows must have one entry per "
                                    "element");
      }
      std::vector<std::optional<Element>> r;
      for (auto const& entry : row) {
        if (entry.is_null()) {
          r.emplace_back();
        } else {
          r.emplace_back(element(entry, n, "oplus"));
        }
      }
      oplus.push_back(std::move(r));
    }
    std::optional<Element> one;
    if (j.contains("one") && !j.at("one").is_null()) {
      one = element(j.at("one"), n, "one");
    }
    AlgebraFile out{PartialAlgebra(std::move(names),
                                   std::move(oplus),
                                   element(field(j, "zero"), n, "zero"),
                                   one),
                    std::nullopt};
    if (j.contains("complement")) {
      auto const& c = j.at("complement");
      if (!c.is_array() || c.size() != n) {
        throw std::invalid_argument("\"complement\" must have one entry per "
                                    "element");
      }
      std::vector<Element> comp;
      for (auto const& x : c) {
        comp.push_back(element(x, n, "complement"));
      }
      out.complement = std::move(comp);
    }
    return out;
  }

  std::string emit_algebra_json(PartialAlgebra const&                      a,
                                std::optional<std::vector<Element>> const& complement) {
    std::ostringstream os;
    os << "{\n  \"elements\": " << list(a.names(), quoted) << ",\n";
    os << "  \"zero\": " << a.zero() << ",\n";
    if (a.one()) {
      os << "  \"one\": " << *a.one() << ",\n";
    }
    os << "  \"oplus\": [\n";
    for (std::size_t i = 0; i < a.size(); ++i) {
      os << "    " << list(a.table()[i], [](std::optional<Element> const& e) {
        return e ? std::to_string(*e) : std::string("null");
      }) << (i + 1 < a.size() ? ",\n" : "\n");
    }
    os << "  ]";
    if (complement) {
      os << ",\n  \"complement\": " << list(*complement, [](Element e) {
        return std::to_string(e);
      });
    }
    os << "\n}\n";
    return os.str();
  }

  std::string emit_algebra_json(FiniteMvAlgebra const& m) {
    return emit_algebra_json(m.base(), m.complement_table());
  }

  BratteliDiagram parse_diagram_json(std::string_view text) {
    auto const  j      = parse(text);
    auto const& levels = field(j, "levels");
    auto const& mults  = field(j, "mults");
    if (!levels.is_array() || !mults.is_array()) {
      throw std::invalid_argument("\"levels\" and \"mults\" must be arrays");
    }
    std::vector<std::size_t> counts;
    for (auto const& c : levels) {
      if (!c.is_number_unsigned()) {
        throw std::invalid_argument("level counts must be non-negative "
                                    "integers");
      }
      counts.push_back(c.get<std::size_t>());
    }
    std::vector<IntMatrix> ms;
    for (auto const& m : mults) {
      if (!m.is_array() || m.empty()) {
        throw std::invalid_argument("each matrix must be a non-empty array of "
                                    "rows");
      }
      std::vector<IntVector> rows;
      for (auto const& row : m) {
        if (!row.is_array() || row.size() != m.front().size()) {
          throw std::invalid_argument("matrix rows must have equal length");
        }
        IntVector r;
        for (auto const& x : row) {
          if (!x.is_number_integer()) {
            throw std::invalid_argument("matrix entries must be integers");
          }
          r.push_back(x.get<Integer>());
        }
        rows.push_back(std::move(r));
      }
      ms.push_back(IntMatrix::from_rows(rows));
    }
    return BratteliDiagram(std::move(counts), std::move(ms));
  }

  std::string emit_diagram_json(BratteliDiagram const& b) {
    auto num = [](auto x) { return std::to_string(x); };
    std::ostringstream os;
    os << "{\n  \"levels\": " << list(b.level_counts(), num) << ",\n";
    os << "  \"mults\": [\n";
    for (std::size_t i = 0; i < b.mults().size(); ++i) {
      os << "    " << list(b.mults()[i].to_rows(), [&](IntVector const& r) {
        return list(r, num);
      }) << (i + 1 < b.mults().size() ? ",\n" : "\n");
    }
    os << "  ]\n}\n";
    return os.str();
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::invalid_argument("cannot open " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

}  // namespace mvcoord
