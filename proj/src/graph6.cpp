#include "og4/graph6.hpp"

#include <stdexcept>

namespace og4 {

std::string to_graph6(const UGraph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::invalid_argument("to_graph6: graph too large");
  }
  int bits = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      bits = (bits << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(bits + 63));
        bits = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((bits << (6 - nbits)) + 63));
  return out;
}

UGraph from_graph6(const std::string& s) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) throw std::invalid_argument("from_graph6: truncated input");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("from_graph6: invalid byte");
    return c - 63;
  };
  int n;
  int first = next();
  if (first == 63) {  // byte 126: 4-byte order form
    int a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = first;
  }
  if (n < 1) throw std::invalid_argument("from_graph6: empty graph");
  std::vector<std::pair<int, int>> edges;
  int bits = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        bits = next();
        nbits = 6;
      }
      if (bits & (1 << (nbits - 1))) edges.emplace_back(i, j);
      --nbits;
    }
  if (pos != s.size()) throw std::invalid_argument("from_graph6: trailing bytes");
  return UGraph::build(n, edges);
}

}  // namespace og4
