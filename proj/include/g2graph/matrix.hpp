#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "g2graph/graph.hpp"

namespace g2graph {

/// Dense square integer matrix for exact identity checks at graph scale.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(int n, std::int64_t fill = 0)
      : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMatrix ones(int n) { return IntMatrix(n, 1); }

  int size() const { return n_; }

  std::int64_t& operator()(int i, int j) { return data_[index(i, j)]; }
  std::int64_t operator()(int i, int j) const { return data_[index(i, j)]; }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    same_size(a, b);
    IntMatrix out(a.n_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
    return out;
  }
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    same_size(a, b);
    IntMatrix out(a.n_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
    return out;
  }
  friend IntMatrix operator*(std::int64_t c, const IntMatrix& a) {
    IntMatrix out(a.n_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = c * a.data_[k];
    return out;
  }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    same_size(a, b);
    const int n = a.n_;
    IntMatrix out(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const auto aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }
  static void same_size(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  }

  int n_ = 0;
  std::vector<std::int64_t> data_;
};

/// Space-separated rows, one per line.
inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (j != 0) os << ' ';
      const auto x = m(i, j);
      if (x >= 0) os << ' ';
      os << x;
    }
    os << '\n';
  }
  return os;
}

inline IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) a(i, j) = g.adjacent(i, j) ? 1 : 0;
  return a;
}

/// 0 on the diagonal, -1 for edges, +1 for non-edges.
inline IntMatrix seidel_matrix(const Graph& g) {
  IntMatrix s(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) s(i, j) = i == j ? 0 : (g.adjacent(i, j) ? -1 : 1);
  return s;
}

/// Diagonal +-1 matrix with -1 exactly on the members of y.
inline IntMatrix switching_diagonal(int n, VertexSet y) {
  IntMatrix d(n);
  for (int i = 0; i < n; ++i) d(i, i) = y.contains(i) ? -1 : 1;
  return d;
}

}  // namespace g2graph
