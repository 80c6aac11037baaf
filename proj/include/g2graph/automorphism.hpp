#pragma once

// Automorphism group of a small graph by individualization-refinement.
//
// A first path of the search tree fixes a base b_0, b_1, ... (each b_d is the
// least vertex of the first largest non-singleton cell). Working from the
// deepest level up, for every other vertex c of the target cell at level d we
// look for an automorphism fixing b_0..b_{d-1} and sending b_d to c. The
// witnesses found generate Aut(G), and |Aut(G)| is the product over levels of
// |orbit of b_d under the stabilizer of b_0..b_{d-1}|. With pruning, vertices
// already known to lie in that orbit are skipped.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "g2graph/graph.hpp"
#include "g2graph/perm_group.hpp"

namespace g2graph {

struct AutSearchOptions {
  bool prune = true;
};

struct AutSearchStats {
  std::vector<int> base;
  std::vector<std::uint64_t> orbit_lengths;  // per base level
  std::uint64_t search_order = 1;            // product of orbit_lengths
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

struct AutomorphismResult {
  PermGroup group;
  AutSearchStats stats;
};

namespace detail {

/// Ordered partition of the vertex set, one bit mask per cell.
using Cells = std::vector<std::uint64_t>;

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

/// Equitable refinement by neighbour counts into the current cells. Returns a
/// hash of the split history; it depends only on isomorphism-invariant data,
/// so nodes related by an automorphism produce equal hashes.
inline std::uint64_t refine(const Graph& g, Cells& cells) {
  std::uint64_t trace = 0;
  std::vector<std::pair<std::vector<int>, int>> keyed;
  for (;;) {
    const std::size_t k = cells.size();
    Cells next;
    next.reserve(static_cast<std::size_t>(g.order()));
    for (std::size_t ci = 0; ci < k; ++ci) {
      keyed.clear();
      for (std::uint64_t b = cells[ci]; b != 0; b &= b - 1) {
        const int v = std::countr_zero(b);
        std::vector<int> key(k);
        for (std::size_t t = 0; t < k; ++t) key[t] = std::popcount(g.row(v) & cells[t]);
        keyed.emplace_back(std::move(key), v);
      }
      std::sort(keyed.begin(), keyed.end());
      std::size_t start = 0;
      while (start < keyed.size()) {
        std::size_t end = start;
        std::uint64_t mask = 0;
        while (end < keyed.size() && keyed[end].first == keyed[start].first) {
          mask |= std::uint64_t{1} << keyed[end].second;
          ++end;
        }
        trace = mix(trace, ci);
        trace = mix(trace, end - start);
        for (int x : keyed[start].first) trace = mix(trace, static_cast<std::uint64_t>(x));
        next.push_back(mask);
        start = end;
      }
    }
    trace = mix(trace, next.size());
    const bool stable = next.size() == k;
    cells = std::move(next);
    if (stable) return trace;
  }
}

inline void individualize(Cells& cells, std::size_t target, int v) {
  const std::uint64_t bit = std::uint64_t{1} << v;
  cells[target] &= ~bit;
  cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(target), bit);
}

inline bool discrete(const Cells& cells, int n) { return static_cast<int>(cells.size()) == n; }

/// First largest non-singleton cell.
inline std::size_t target_cell(const Cells& cells) {
  std::size_t best = cells.size();
  int best_size = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int s = std::popcount(cells[i]);
    if (s > best_size) {
      best = i;
      best_size = s;
    }
  }
  return best;
}

class AutomorphismSearch {
public:
  AutomorphismSearch(const Graph& g, AutSearchOptions options) : g_(g), options_(options), n_(g.order()) {}

  AutomorphismResult run() {
    build_first_path();
    const std::size_t depth = base_.size();
    stats_.base = base_;
    stats_.orbit_lengths.assign(depth, 1);

    for (std::size_t level = depth; level-- > 0;) {
      const Node& node = path_[level];
      const int b = base_[level];
      std::uint64_t found = 0;
      std::vector<bool> in_orbit = orbit_mask(level, b);
      for (std::uint64_t bits = node.cells[node.target]; bits != 0; bits &= bits - 1) {
        const int c = std::countr_zero(bits);
        if (c == b) continue;
        if (options_.prune && in_orbit[static_cast<std::size_t>(c)]) continue;
        if (auto w = find_witness(level, c)) {
          gens_.push_back(std::move(*w));
          ++found;
          if (options_.prune) in_orbit = orbit_mask(level, b);
        }
      }
      std::uint64_t length = found + 1;
      if (options_.prune) length = static_cast<std::uint64_t>(std::count(in_orbit.begin(), in_orbit.end(), true));
      stats_.orbit_lengths[level] = length;
      if (__builtin_mul_overflow(stats_.search_order, length, &stats_.search_order)) {
        throw std::overflow_error("automorphism group order exceeds 64 bits");
      }
    }

    PermGroup group(n_, gens_);
    if (group.order() != stats_.search_order) {
      throw std::logic_error("automorphism search: orbit product and stabilizer chain order disagree");
    }
    return {std::move(group), stats_};
  }

private:
  struct Node {
    Cells cells;
    std::uint64_t trace = 0;
    std::size_t target = 0;
  };

  void build_first_path() {
    Cells cells;
    if (n_ > 0) cells.push_back(VertexSet::full(n_).bits());
    std::uint64_t trace = refine(g_, cells);
    for (;;) {
      Node node{cells, trace, target_cell(cells)};
      path_.push_back(node);
      if (discrete(cells, n_)) break;
      const int v = std::countr_zero(cells[node.target]);
      base_.push_back(v);
      individualize(cells, node.target, v);
      trace = refine(g_, cells);
    }
    for (std::uint64_t c : path_.back().cells) leaf_.push_back(std::countr_zero(c));
  }

  /// Orbit of b under the known generators fixing base_[0..level-1].
  std::vector<bool> orbit_mask(std::size_t level, int b) const {
    std::vector<Permutation> fixing;
    for (const auto& p : gens_) {
      bool fixes = true;
      for (std::size_t i = 0; i < level && fixes; ++i) fixes = p(base_[i]) == base_[i];
      if (fixes) fixing.push_back(p);
    }
    std::vector<bool> mask(static_cast<std::size_t>(n_), false);
    std::vector<int> queue{b};
    mask[static_cast<std::size_t>(b)] = true;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& p : fixing) {
        const int y = p(queue[k]);
        if (!mask[static_cast<std::size_t>(y)]) {
          mask[static_cast<std::size_t>(y)] = true;
          queue.push_back(y);
        }
      }
    return mask;
  }

  std::optional<Permutation> find_witness(std::size_t level, int c) {
    Cells cells = path_[level].cells;
    individualize(cells, path_[level].target, c);
    return descend(level + 1, std::move(cells));
  }

  std::optional<Permutation> descend(std::size_t depth, Cells cells) {
    ++stats_.nodes;
    const Node& left = path_[depth];
    const std::uint64_t trace = refine(g_, cells);
    if (trace != left.trace || cells.size() != left.cells.size()) return std::nullopt;

    if (discrete(cells, n_)) {
      ++stats_.leaves;
      std::vector<int> images(static_cast<std::size_t>(n_));
      for (std::size_t i = 0; i < cells.size(); ++i) {
        images[static_cast<std::size_t>(leaf_[i])] = std::countr_zero(cells[i]);
      }
      Permutation p(std::move(images));
      if (is_automorphism(g_, p)) return p;
      return std::nullopt;
    }

    for (std::uint64_t bits = cells[left.target]; bits != 0; bits &= bits - 1) {
      Cells child = cells;
      individualize(child, left.target, std::countr_zero(bits));
      if (auto p = descend(depth + 1, std::move(child))) return p;
    }
    return std::nullopt;
  }

  const Graph& g_;
  AutSearchOptions options_;
  int n_;
  std::vector<Node> path_;
  std::vector<int> base_;
  std::vector<int> leaf_;
  std::vector<Permutation> gens_;
  AutSearchStats stats_;
};

}  // namespace detail

/// Generators, exact order, and search statistics for Aut(g). Every returned
/// generator has been checked to preserve adjacency.
inline AutomorphismResult automorphism_search(const Graph& g, AutSearchOptions options = {}) {
  return detail::AutomorphismSearch(g, options).run();
}

inline PermGroup automorphism_group(const Graph& g, AutSearchOptions options = {}) {
  return automorphism_search(g, options).group;
}

}  // namespace g2graph
