#pragma once

// The 36-vertex construction: orthogonality graph on V1 under the trace form,
// the scan for switching sets made of six projective points, and the
// structural checks on the switched graph and its complement.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "g2graph/geometry.hpp"
#include "g2graph/graph.hpp"
#include "g2graph/srg.hpp"

namespace g2graph {

/// V1 with its projective points and the graph Gamma on it.
struct Construction {
  std::vector<GeoVector> v1;
  std::vector<ProjPoint> points;      // 12 points, ordered by representative
  std::vector<std::size_t> point_of;  // vertex -> point index
  Graph gamma;
};

/// Gamma: vertices V1, u ~ v iff s(u, v) = 0.
inline Graph build_gamma(const std::vector<GeoVector>& v1) {
  const int n = static_cast<int>(v1.size());
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (alternating(v1[u], v1[v]).is_zero()) g.add_edge(u, v);
  return g;
}

inline Graph build_gamma() { return build_gamma(enumerate_v1()); }

inline Construction build_construction() {
  Construction c;
  c.v1 = enumerate_v1();
  c.points = proj_points(c.v1);
  c.point_of = point_index_of(c.points, c.v1.size());
  c.gamma = build_gamma(c.v1);
  return c;
}

inline constexpr int kSwitchPoints = 6;

struct SwitchCandidate {
  std::size_t index = 0;                     // position in lexicographic enumeration
  std::array<int, kSwitchPoints> point_classes{};  // ascending point indices
  VertexSet vertex_set;                      // union of the six points (18 vectors)
  bool regular_21 = false;
  std::optional<SrgParams> result_params;

  bool valid() const { return result_params == SrgParams{36, 21, 12, 12}; }
};

struct SwitchScan {
  std::vector<SwitchCandidate> candidates;  // all C(12,6), in enumeration order
  std::vector<std::size_t> valid;           // indices of candidates giving srg(36,21,12,12)

  /// Lexicographically least valid candidate.
  const SwitchCandidate& canonical() const {
    if (valid.empty()) throw std::runtime_error("switch scan found no valid switching set");
    return candidates[valid.front()];
  }
};

inline VertexSet vertices_of_points(const Construction& c, std::span<const int> points) {
  VertexSet s;
  for (int p : points)
    for (std::size_t idx : c.points.at(static_cast<std::size_t>(p)).indices) s.insert(static_cast<int>(idx));
  return s;
}

inline std::vector<std::array<int, kSwitchPoints>> six_subsets(int count) {
  std::vector<std::array<int, kSwitchPoints>> out;
  std::array<int, kSwitchPoints> pick{};
  for (int i = 0; i < kSwitchPoints; ++i) pick[static_cast<std::size_t>(i)] = i;
  if (count < kSwitchPoints) return out;
  for (;;) {
    out.push_back(pick);
    int i = kSwitchPoints - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == count - kSwitchPoints + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < kSwitchPoints; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

/// Switches Gamma by every union of six projective points and records the
/// result. Candidates are independent; `threads` workers fill disjoint
/// slots, so the output does not depend on the thread count.
inline SwitchScan find_switch_sets(const Construction& c, unsigned threads = 1) {
  const auto subsets = six_subsets(static_cast<int>(c.points.size()));
  SwitchScan scan;
  scan.candidates.resize(subsets.size());

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      SwitchCandidate& cand = scan.candidates[i];
      cand.index = i;
      cand.point_classes = subsets[i];
      cand.vertex_set = vertices_of_points(c, subsets[i]);
      const Graph switched = switch_graph(c.gamma, cand.vertex_set);
      cand.regular_21 = true;
      for (int v = 0; v < switched.order(); ++v) cand.regular_21 = cand.regular_21 && switched.degree(v) == 21;
      cand.result_params = check_srg(switched);
    }
  };

  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(subsets.size())));
  if (threads == 1) {
    work(0, subsets.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (subsets.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < subsets.size(); begin += chunk) {
      pool.emplace_back(work, begin, std::min(subsets.size(), begin + chunk));
    }
  }

  for (const auto& cand : scan.candidates)
    if (cand.valid()) scan.valid.push_back(cand.index);
  return scan;
}

/// Per-vertex neighbour counts in the switched graph, split by side.
struct NeighbourSplit {
  std::vector<int> same_side;   // neighbours on the vertex's own side
  std::vector<int> cross_side;  // neighbours on the other side
  // same-side neighbours are exactly the vectors x != u with h(x,u) in {0,1},
  // cross-side neighbours exactly those with h(x,u) in {w,W}
  bool described_by_form = true;
};

inline NeighbourSplit neighbour_split(const Construction& c, VertexSet w, const Graph& switched) {
  const int n = switched.order();
  NeighbourSplit out;
  out.same_side.assign(static_cast<std::size_t>(n), 0);
  out.cross_side.assign(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int x = 0; x < n; ++x) {
      if (x == u) continue;
      const bool same = w.contains(u) == w.contains(x);
      const Gf4 h = hermitian(c.v1[static_cast<std::size_t>(x)], c.v1[static_cast<std::size_t>(u)]);
      const bool predicted = same ? trace(h).is_zero() : !trace(h).is_zero();
      if (switched.adjacent(u, x)) ++(same ? out.same_side : out.cross_side)[static_cast<std::size_t>(u)];
      if (switched.adjacent(u, x) != predicted) out.described_by_form = false;
    }
  }
  return out;
}

/// Edge types of the complement of the switched graph:
///   t1: both ends in W, h(u,v) in {w, W}
///   t2: both ends outside W, h(u,v) in {w, W}
///   t3: one end on each side, h(u,v) = 1
struct EdgeTally {
  int t1 = 0;
  int t2 = 0;
  int t3 = 0;
  std::vector<std::pair<int, int>> violations;

  int total() const { return t1 + t2 + t3 + static_cast<int>(violations.size()); }
};

inline EdgeTally classify_complement_edges(const Construction& c, const Graph& switched, VertexSet w) {
  const Graph comp = complement(switched);
  EdgeTally tally;
  for (auto [u, v] : comp.edges()) {
    const Gf4 h = hermitian(c.v1[static_cast<std::size_t>(u)], c.v1[static_cast<std::size_t>(v)]);
    const bool omega_type = h == Gf4::omega() || h == Gf4::omega_bar();
    const bool in_u = w.contains(u);
    const bool in_v = w.contains(v);
    if (in_u && in_v && omega_type) {
      ++tally.t1;
    } else if (!in_u && !in_v && omega_type) {
      ++tally.t2;
    } else if (in_u != in_v && h == Gf4::one()) {
      ++tally.t3;
    } else {
      tally.violations.emplace_back(u, v);
    }
  }
  return tally;
}

}  // namespace g2graph
