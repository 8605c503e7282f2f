#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "totdom/graph.hpp"

namespace totdom {

/// graph6 parse failure; `offset` is the 0-based byte position of the problem.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Largest order representable with the single-byte graph6 header.
inline constexpr std::size_t kGraph6MaxOrder = 62;

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// Decodes one graph6 string (no trailing newline). A leading ">>graph6<<" is skipped.
/// Orders above 62 (multi-byte headers) are rejected.
Graph graph6_decode(std::string_view text);

/// Encodes a graph of order <= 62.
std::string graph6_encode(const Graph& g);

/// One line of a graph6 stream.
struct Graph6Line {
  std::size_t line_number = 0;  // 1-based
  std::string text;
};

/// Reads every line of a graph6 stream, stripping a ">>graph6<<" prefix and any
/// trailing '\r'. Blank and header-only lines come back with empty text.
std::vector<Graph6Line> read_graph6_lines(std::istream& in);

}  // namespace totdom
