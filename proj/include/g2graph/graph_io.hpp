#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "g2graph/graph.hpp"

namespace g2graph {

/// graph6 encoding (upper triangle, column by column, six bits per byte).
inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 0x3F) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 0x3F) + 63));
    out.push_back(static_cast<char>((n & 0x3F) + 63));
  }
  unsigned acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits != 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

/// Parses one graph6 line. Accepts an optional ">>graph6<<" header and
/// trailing whitespace. Throws std::invalid_argument on malformed input.
inline Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  auto value = [&](std::size_t pos) -> int {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range at offset " + std::to_string(pos));
    return c - 63;
  };

  std::size_t pos = 0;
  int n = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() < 4) throw std::invalid_argument("graph6: truncated size field");
    if (static_cast<unsigned char>(text[1]) == 126) throw std::invalid_argument("graph6: graph too large");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  } else {
    n = value(0);
    pos = 1;
  }
  if (n > kMaxVertices) throw std::invalid_argument("graph6: " + std::to_string(n) + " vertices exceeds 64");

  const std::size_t pair_bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t body = (pair_bits + 5) / 6;
  if (text.size() - pos != body) {
    throw std::invalid_argument("graph6: expected " + std::to_string(body) + " data bytes, got " +
                                std::to_string(text.size() - pos));
  }

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = value(pos + k / 6);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  // padding bits must be zero
  if (k % 6 != 0) {
    const int last = value(pos + body - 1);
    if ((last & ((1 << (6 - static_cast<int>(k % 6))) - 1)) != 0) {
      throw std::invalid_argument("graph6: nonzero padding bits");
    }
  }
  return g;
}

inline nlohmann::json to_json(const Graph& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < g.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < g.order(); ++j) row.push_back(g.adjacent(i, j) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return {{"n", g.order()}, {"edges", g.edge_count()}, {"adjacency", std::move(rows)}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
  return Graph::from_adjacency(j.at("adjacency").get<std::vector<std::vector<int>>>());
}

}  // namespace g2graph
