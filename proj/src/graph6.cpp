#include "dspectra/graph6.hpp"

#include <stdexcept>
#include <string>

namespace dspectra {

namespace {

constexpr int kBias = 63;
constexpr int kG6MaxOrder = 62;
constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void parse_fail(size_t offset, const std::string& what) {
  throw std::invalid_argument("graph6 parse error at byte offset " +
                              std::to_string(offset) + ": " + what);
}

}  // namespace

std::string_view strip_graph6_header(std::string_view line) {
  if (line.substr(0, kHeader.size()) == kHeader)
    line.remove_prefix(kHeader.size());
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool is_graph6_noise(std::string_view line) {
  line = strip_graph6_header(line);
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

Graph parse_graph6(std::string_view line) {
  line = strip_graph6_header(line);
  if (line.empty()) throw std::invalid_argument("graph6 parse error: empty line");

  const unsigned char n_byte = static_cast<unsigned char>(line[0]);
  if (n_byte == 126)
    throw std::invalid_argument(
        "graph6 long form (order > 62) is not supported");
  if (n_byte < kBias || n_byte > 126)
    parse_fail(0, "invalid length byte");
  const int n = n_byte - kBias;
  if (n == 0) parse_fail(0, "order 0 graph is not supported");

  const int bits = n * (n - 1) / 2;
  const size_t body = (bits + 5) / 6;
  if (line.size() < 1 + body)
    parse_fail(line.size(),
               "truncated bit field (need " + std::to_string(body) +
                   " body bytes, got " + std::to_string(line.size() - 1) + ")");
  if (line.size() > 1 + body)
    parse_fail(1 + body, "trailing data after bit field");

  Graph g(n);
  int bit = 0;
  for (size_t i = 1; i < line.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < kBias || c > 126) parse_fail(i, "non-printable character");
    const int group = c - kBias;
    for (int b = 5; b >= 0 && bit < bits; --b, ++bit) {
      if ((group >> b) & 1) {
        // invert pair_bit_index: column-major upper triangle
        int v = 1;
        while (pair_bit_index(0, v + 1) <= bit) ++v;
        int u = bit - pair_bit_index(0, v);
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kG6MaxOrder)
    throw std::invalid_argument(
        "graph6 short form supports order <= 62, got " + std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  const int bits = n * (n - 1) / 2;
  int group = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (bits % 6 != 0) {
    group <<= 6 - filled;  // zero padding
    out.push_back(static_cast<char>(group + kBias));
  }
  return out;
}

}  // namespace dspectra
