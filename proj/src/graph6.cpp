#include "factorlab/graph6.hpp"

#include <cctype>
#include <cstdint>

#include "factorlab/error.hpp"

namespace factorlab {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int sextet(std::string_view s, std::size_t at) {
  if (at >= s.size()) throw ParseError("graph6: unexpected end of input", at);
  int c = static_cast<unsigned char>(s[at]);
  if (c < kBias || c > 126) throw ParseError("graph6: character out of range", at);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t pos = 0;
  if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }

  // Order prefix: N(n) is one byte for n <= 62, else '~' and three bytes.
  if (pos >= line.size()) throw ParseError("graph6: missing order prefix", pos);
  long long n = 0;
  if (line[pos] != '~') {
    n = sextet(line, pos);
    pos += 1;
  } else {
    if (pos + 1 < line.size() && line[pos + 1] == '~') {
      throw ParseError("graph6: order exceeds supported maximum", pos);
    }
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | sextet(line, pos + k);
    if (n < 63) throw ParseError("graph6: non-canonical long order prefix", pos);
    pos += 4;
  }
  if (n > kMaxVertices) {
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxVertices),
                     pos);
  }

  const long long pairs = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
  if (line.size() - pos != body) {
    throw ParseError("graph6: expected " + std::to_string(body) + " data bytes, found " +
                         std::to_string(line.size() - pos),
                     line.size() < pos + body ? line.size() : pos + body);
  }

  Graph g(static_cast<int>(n));
  long long bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      std::size_t at = pos + static_cast<std::size_t>(bit / 6);
      int value = sextet(line, at);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    std::size_t at = pos + static_cast<std::size_t>(bit / 6);
    int value = sextet(line, at);
    int pad_mask = (1 << (6 - bit % 6)) - 1;
    if (value & pad_mask) throw ParseError("graph6: nonzero padding bits", at);
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + kBias);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) {
      out += static_cast<char>(((n >> shift) & 63) + kBias);
    }
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + kBias);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + kBias);
  return out;
}

Graph parse_graph_text(const std::string& text) {
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw ParseError("empty graph input", 0);
  std::size_t eol = text.find('\n', start);
  std::string first = text.substr(start, eol == std::string::npos ? std::string::npos
                                                                  : eol - start);
  bool numeric = !first.empty();
  for (char c : first) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && !std::isspace(static_cast<unsigned char>(c))) {
      numeric = false;
    }
  }
  // A graph6 line never contains whitespace, so "n m" identifies an edge list.
  if (numeric && first.find_first_of(" \t") != std::string::npos) {
    return parse_edge_list(text);
  }
  while (!first.empty() && (first.back() == '\r' || first.back() == ' ')) first.pop_back();
  return parse_graph6(first);
}

}  // namespace factorlab
