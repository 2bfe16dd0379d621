#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcds/graph.hpp"

namespace mcds::io {

// graph6 ---------------------------------------------------------------------

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// line terminators are accepted. Throws ParseError with the byte offset of
/// the offending character.
[[nodiscard]] Graph parse_graph6(std::string_view line);

/// Encodes `g` in graph6 (short order form for n <= 62, extended forms above).
[[nodiscard]] std::string emit_graph6(const Graph& g);

struct Graph6Record {
  std::size_t line_number = 0;  // 1-based
  std::string text;
};

/// Sequential reader over a graph6 stream. Blank lines are skipped; parsing
/// is left to the caller so that malformed lines can be reported and skipped.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}

  [[nodiscard]] std::optional<Graph6Record> next();
  [[nodiscard]] bool failed() const { return in_.bad(); }

 private:
  std::istream& in_;
  std::size_t line_number_ = 0;
};

// Edge list --------------------------------------------------------------------

/// "n m" header followed by m lines "u v". Throws ParseError carrying the
/// 1-based line number.
[[nodiscard]] Graph parse_edge_list(std::string_view text);
[[nodiscard]] std::string emit_edge_list(const Graph& g);

// DOT ------------------------------------------------------------------------

/// Graphviz source. When labels are given they name the nodes.
[[nodiscard]] std::string emit_dot(const Graph& g, std::optional<std::span<const std::string>> labels = std::nullopt,
                                   std::string_view name = "G");

// Format detection -----------------------------------------------------------

enum class Format { kGraph6, kEdgeList };

/// Decides by the shape of the first non-blank line. Throws ParseError when
/// neither format matches.
[[nodiscard]] Format detect_format(std::string_view text);

/// Reads every graph in `text` (one per line for graph6, one for edge lists).
[[nodiscard]] std::vector<Graph> read_graphs(std::string_view text, std::optional<Format> format = std::nullopt);

}  // namespace mcds::io
