#ifndef MVCOORD_IO_HPP_
#define MVCOORD_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvcoord/bratteli.hpp"
#include "mvcoord/effect_mv.hpp"

namespace mvcoord {

  // {"elements": [...], "zero": i, "one": j, "oplus": [[k or null]],
  //  "complement": [k]}. "one" and "complement" may be absent.
  struct AlgebraFile {
    PartialAlgebra                      algebra;
    std::optional<std::vector<Element>> complement;
  };

  // Throws std::invalid_argument on malformed input.
  AlgebraFile parse_algebra_json(std::string_view text);
  // Canonical layout: one key per line, one oplus row per line.
  std::string emit_algebra_json(PartialAlgebra const&                      a,
                                std::optional<std::vector<Element>> const& complement);
  std::string emit_algebra_json(FiniteMvAlgebra const& m);

  // {"levels": [c1, ...], "mults": [M_0, M_1, ...]}.
  BratteliDiagram parse_diagram_json(std::string_view text);
  std::string     emit_diagram_json(BratteliDiagram const& b);

  std::string read_file(std::string const& path);

}  // namespace mvcoord

#endif  // MVCOORD_IO_HPP_
