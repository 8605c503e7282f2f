#include "totdom/graph6.hpp"

namespace totdom {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::size_t packed_length(std::size_t n) { return (n * (n - (n > 0 ? 1 : 0)) / 2 + 5) / 6; }

}  // namespace

Graph graph6_decode(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    base = kGraph6Header.size();
    text.remove_prefix(base);
  }
  if (text.empty()) throw Graph6Error("empty graph6 string", base);

  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kMaxByte) throw Graph6Error("byte " + std::to_string(c) + " outside 63..126", base + i);
  }
  const int head = static_cast<unsigned char>(text[0]);
  if (head == kMaxByte) throw Graph6Error("multi-byte order header (order > 62) is not supported", base);
  const auto n = static_cast<std::size_t>(head - kBias);

  const std::size_t need = packed_length(n);
  if (text.size() < 1 + need) throw Graph6Error("truncated adjacency data", base + text.size());
  if (text.size() > 1 + need) throw Graph6Error("trailing bytes after adjacency data", base + 1 + need);

  std::vector<Bitset> rows(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int chunk = static_cast<unsigned char>(text[1 + bit / 6]) - kBias;
      if ((chunk >> (5 - bit % 6)) & 1) {
        rows[i].set(j);
        rows[j].set(i);
      }
    }
  }
  // Padding bits must be zero for the string to be canonical graph6.
  if (need > 0) {
    const std::size_t used = bit - (need - 1) * 6;
    const int last = static_cast<unsigned char>(text[need]) - kBias;
    if (used < 6 && (last & ((1 << (6 - used)) - 1)) != 0)
      throw Graph6Error("nonzero padding bits", base + need);
  }
  return Graph::from_rows(std::move(rows));
}

std::string graph6_encode(const Graph& g) {
  const auto n = g.order();
  if (n > kGraph6MaxOrder)
    throw GraphError("graph6 encoding supports order <= 62, got " + std::to_string(n));
  std::string out;
  out.reserve(1 + packed_length(n));
  out.push_back(static_cast<char>(n + kBias));
  int chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph6Line> read_graph6_lines(std::istream& in) {
  std::vector<Graph6Line> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.starts_with(kGraph6Header)) line.erase(0, kGraph6Header.size());
    out.push_back({number, line});
  }
  return out;
}

}  // namespace totdom
