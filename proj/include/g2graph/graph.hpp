#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace g2graph {

inline constexpr int kMaxVertices = 64;

/// Subset of {0, ..., 63} stored as a bit mask.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  static VertexSet from_indices(std::span<const int> vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  /// {0, ..., n-1}.
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  void insert(int v) {
    check(v);
    bits_ |= std::uint64_t{1} << v;
  }
  void erase(int v) {
    check(v);
    bits_ &= ~(std::uint64_t{1} << v);
  }

  /// Complement inside {0, ..., n-1}.
  constexpr VertexSet complement(int n) const { return VertexSet(~bits_ & full(n).bits_); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
  static void check(int v) {
    if (v < 0 || v >= kMaxVertices) throw std::out_of_range("VertexSet: vertex out of range");
  }

  std::uint64_t bits_ = 0;
};

/// Undirected loopless graph on vertices 0..n-1, n <= 64, one word per row.
class Graph {
public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
      throw std::invalid_argument("Graph: vertex count " + std::to_string(n) + " outside 0..64");
    }
    rows_.assign(static_cast<std::size_t>(n), 0);
  }

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  /// Builds from a row-major 0/1 matrix; rejects asymmetric input or loops.
  static Graph from_adjacency(const std::vector<std::vector<int>>& a) {
    Graph g(static_cast<int>(a.size()));
    for (int i = 0; i < g.n_; ++i) {
      if (static_cast<int>(a[i].size()) != g.n_) throw std::invalid_argument("adjacency matrix is not square");
      for (int j = 0; j < g.n_; ++j) {
        int x = a[i][j];
        if ((x != 0 && x != 1) || x != a[j][i] || (i == j && x != 0)) {
          throw std::invalid_argument("adjacency matrix must be symmetric 0/1 with zero diagonal");
        }
        if (x) g.rows_[i] |= std::uint64_t{1} << j;
      }
    }
    return g;
  }

  static Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.rows_[i] = VertexSet::full(n).bits() & ~(std::uint64_t{1} << i);
    return g;
  }

  static Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
  }

  int order() const { return n_; }

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbours(int v) const { return VertexSet(rows_[v]); }
  std::uint64_t row(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (auto r : rows_) total += static_cast<std::size_t>(std::popcount(r));
    return total / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  void add_edge(int u, int v) { set_edge(u, v, true); }
  void remove_edge(int u, int v) { set_edge(u, v, false); }
  void toggle_edge(int u, int v) { set_edge(u, v, !adjacent(u, v)); }

  void set_edge(int u, int v, bool present) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    const auto bu = std::uint64_t{1} << u;
    const auto bv = std::uint64_t{1} << v;
    if (present) {
      rows_[u] |= bv;
      rows_[v] |= bu;
    } else {
      rows_[u] &= ~bv;
      rows_[v] &= ~bu;
    }
  }

  /// Graph with vertex v renamed to image[v].
  Graph relabel(std::span<const int> image) const {
    if (static_cast<int>(image.size()) != n_) throw std::invalid_argument("relabel: size mismatch");
    Graph out(n_);
    for (auto [u, v] : edges()) out.add_edge(image[u], image[v]);
    if (out.edge_count() != edge_count()) throw std::invalid_argument("relabel: image is not a permutation");
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  }

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

inline Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out = Graph::complete(n);
  for (auto [u, v] : g.edges()) out.remove_edge(u, v);
  return out;
}

/// Seidel switching: flips every pair with exactly one end in y.
inline Graph switch_graph(const Graph& g, VertexSet y) {
  const int n = g.order();
  if ((y.bits() & ~VertexSet::full(n).bits()) != 0) {
    throw std::invalid_argument("switch_graph: switching set is not a subset of the vertex set");
  }
  Graph out(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool cross = y.contains(u) != y.contains(v);
      if (g.adjacent(u, v) != cross) out.add_edge(u, v);
    }
  }
  return out;
}

}  // namespace g2graph
