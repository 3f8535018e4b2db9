#pragma once

#include <cstddef>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arckernel/graph.hpp"

namespace arckernel {

/// Largest order representable with the 4-byte graph6 header.
inline constexpr int kGraph6MaxOrder = 258047;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::string_view unit = "byte offset")
      : std::runtime_error(what + " at " + std::string{unit} + " " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 record. An optional ">>graph6<<" prefix and trailing
/// line terminators are ignored. Padding bits in the final byte must be zero.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 record", base);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto ch = static_cast<unsigned char>(text[i]);
    if (ch < 63 || ch > 126)
      throw ParseError("graph6 byte " + std::to_string(ch) + " outside [63,126]", base + i);
  }
  auto val = [&](std::size_t i) { return static_cast<unsigned>(static_cast<unsigned char>(text[i])) - 63u; };

  std::size_t pos = 0;
  long n = 0;
  if (val(0) < 63) {
    n = val(0);
    pos = 1;
  } else {
    if (text.size() < 4) throw ParseError("truncated graph6 size header", base + text.size());
    if (val(1) == 63) throw ParseError("graph6 orders above 258047 are not supported", base + 1);
    n = (long{val(1)} << 12) | (long{val(2)} << 6) | long{val(3)};
    if (n < 63) throw ParseError("non-canonical graph6 size header", base);
    pos = 4;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  const std::size_t have = text.size() - pos;
  if (have < need) throw ParseError("truncated graph6 payload", base + text.size());
  if (have > need) throw ParseError("graph6 payload longer than expected", base + pos + need);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const unsigned byte = val(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1u) edges.push_back({i, j});
    }
  if (need > 0 && k % 6 != 0) {
    const unsigned pad_mask = (1u << (6 - k % 6)) - 1u;
    if (val(pos + need - 1) & pad_mask)
      throw ParseError("nonzero graph6 padding bits", base + pos + need - 1);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string to_graph6(const Graph& g) {
  const int n = g.n();
  if (n > kGraph6MaxOrder)
    throw std::invalid_argument("order " + std::to_string(n) + " exceeds graph6 maximum");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0)) / 2;
  std::vector<unsigned> payload((bits + 5) / 6, 0u);
  for (const auto& e : g.edges()) {
    // column-major upper triangle: x(i,j) at position j(j-1)/2 + i
    const std::size_t k = static_cast<std::size_t>(e.v) * (e.v - 1) / 2 + e.u;
    payload[k / 6] |= 1u << (5 - k % 6);
  }
  for (unsigned p : payload) out.push_back(static_cast<char>(63 + p));
  return out;
}

/// Plain edge list: "n m" header, then m lines "u v" (0-indexed).
inline Graph parse_edge_list(std::istream& in) {
  long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list header must be 'n m'", 0, "record");
  std::vector<Edge> edges;
  for (long k = 0; k < m; ++k) {
    long u = 0, v = 0;
    if (!(in >> u >> v))
      throw ParseError("edge list ended after " + std::to_string(k) + " of " + std::to_string(m) +
                           " edges",
                       static_cast<std::size_t>(k + 1), "record");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  std::string extra;
  if (in >> extra) throw ParseError("trailing data after edge list", static_cast<std::size_t>(m + 1), "record");
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0, "record");
  }
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace arckernel
