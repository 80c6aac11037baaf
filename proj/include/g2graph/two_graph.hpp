#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "g2graph/graph.hpp"

namespace g2graph {

using Triple = std::array<std::uint8_t, 3>;  // strictly increasing

/// A point count and a sorted list of 3-subsets.
struct TwoGraph {
  int n = 0;
  std::vector<Triple> triples;

  friend bool operator==(const TwoGraph&, const TwoGraph&) = default;
};

/// Triples of vertices spanning an odd number (1 or 3) of edges.
inline TwoGraph associated_two_graph(const Graph& g) {
  TwoGraph t{g.order(), {}};
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const int edges = int{g.adjacent(a, b)} + int{g.adjacent(a, c)} + int{g.adjacent(b, c)};
        if (edges % 2 == 1) {
          t.triples.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c)});
        }
      }
  return t;
}

namespace detail {
inline std::size_t triple_slot(int n, int a, int b, int c) {
  return (static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)) *
             static_cast<std::size_t>(n) +
         static_cast<std::size_t>(c);
}
}  // namespace detail

/// Every 4-subset contains an even number of triples. Exhaustive.
inline bool satisfies_even_axiom(const TwoGraph& t) {
  const int n = t.n;
  std::vector<bool> member(static_cast<std::size_t>(n) * n * n, false);
  for (const auto& tr : t.triples) member[detail::triple_slot(n, tr[0], tr[1], tr[2])] = true;
  auto in = [&](int a, int b, int c) { return member[detail::triple_slot(n, a, b, c)] ? 1 : 0; };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          if ((in(a, b, c) + in(a, b, d) + in(a, c, d) + in(b, c, d)) % 2 != 0) return false;
        }
  return true;
}

/// The common number of triples through each pair, if constant.
inline std::optional<int> is_regular(const TwoGraph& t) {
  const int n = t.n;
  if (n < 2) return 0;
  std::vector<int> through(static_cast<std::size_t>(n) * n, 0);
  for (const auto& tr : t.triples) {
    for (int x = 0; x < 3; ++x)
      for (int y = x + 1; y < 3; ++y) ++through[static_cast<std::size_t>(tr[x]) * n + tr[y]];
  }
  const int lambda = through[1];
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (through[static_cast<std::size_t>(a) * n + b] != lambda) return std::nullopt;
  return lambda;
}

/// A set y with switch_graph(g1, y) == g2 on the same labelled vertex set, if
/// one exists. Vertex 0 is never in the returned set.
inline std::optional<VertexSet> switching_witness(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order()) throw std::invalid_argument("switching_witness: vertex counts differ");
  const int n = g1.order();
  VertexSet y;
  // s2(0, j) = d0 dj s1(0, j) with d0 = +1: dj = -1 iff the pair changed.
  for (int j = 1; j < n; ++j)
    if (g1.adjacent(0, j) != g2.adjacent(0, j)) y.insert(j);
  for (int u = 1; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const bool flipped = y.contains(u) != y.contains(v);
      if ((g1.adjacent(u, v) != g2.adjacent(u, v)) != flipped) return std::nullopt;
    }
  return y;
}

}  // namespace g2graph
