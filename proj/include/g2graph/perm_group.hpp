#pragma once

// Permutations of {0, ..., n-1} and permutation groups given by generators.
//
// Products compose left to right: (a * b)(x) = b(a(x)).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "g2graph/graph.hpp"

namespace g2graph {

class Permutation {
public:
  Permutation() = default;

  /// Throws std::invalid_argument unless images is a bijection on 0..n-1.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)]) {
        throw std::invalid_argument("Permutation: images do not form a bijection");
      }
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  static Permutation identity(int n) {
    Permutation p;
    p.images_.resize(static_cast<std::size_t>(n));
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (int i = 0; i < size(); ++i) p.images_[static_cast<std::size_t>(images_[i])] = i;
    return p;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Permutation: degree mismatch");
    Permutation p;
    p.images_.resize(a.images_.size());
    for (int i = 0; i < a.size(); ++i) p.images_[static_cast<std::size_t>(i)] = b(a(i));
    return p;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Disjoint cycles, 1-cycles omitted, e.g. "(0 1 2)(3 4)"; "()" for identity.
  std::string cycle_notation() const {
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (int i = 0; i < size(); ++i) {
      if (done[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
      out += '(';
      for (int x = i; !done[static_cast<std::size_t>(x)]; x = (*this)(x)) {
        done[static_cast<std::size_t>(x)] = true;
        if (x != i) out += ' ';
        out += std::to_string(x);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

private:
  std::vector<int> images_;
};

/// True iff p maps edges to edges and non-edges to non-edges.
inline bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) return false;
  return true;
}

/// Orbit partition of {0..n-1} under the group generated by gens. Orbits are
/// listed by least element, each sorted.
inline std::vector<std::vector<int>> orbits_of(int n, std::span<const Permutation> gens) {
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (label[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> orbit{start};
    label[static_cast<std::size_t>(start)] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& g : gens) {
        const int y = g(orbit[k]);
        if (label[static_cast<std::size_t>(y)] < 0) {
          label[static_cast<std::size_t>(y)] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

/// Base and strong generating set built by the deterministic Schreier-Sims
/// algorithm. Transversals store explicit coset representatives, which is
/// fine for degree <= 64.
class StabilizerChain {
public:
  struct Level {
    int base_point = 0;
    // transversal[x] maps base_point to x, for x in the basic orbit
    std::vector<std::optional<Permutation>> transversal;
    std::vector<int> orbit;
  };

  /// `base_prefix` fixes the first base points; more are added as needed.
  StabilizerChain(int n, std::span<const Permutation> gens, std::span<const int> base_prefix = {}) : n_(n) {
    for (int b : base_prefix) {
      if (b < 0 || b >= n) throw std::invalid_argument("StabilizerChain: base point out of range");
      push_level(b);
    }
    for (const auto& g : gens) {
      if (g.size() != n) throw std::invalid_argument("StabilizerChain: generator degree mismatch");
      if (!g.is_identity()) strong_.push_back(g);
    }
    if (!strong_.empty() && levels_.empty()) push_level(first_moved(strong_.front()));
    build();
  }

  int degree() const { return n_; }
  const std::vector<Level>& levels() const { return levels_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }

  std::vector<int> base() const {
    std::vector<int> b;
    for (const auto& l : levels_) b.push_back(l.base_point);
    return b;
  }

  /// Product of basic orbit lengths; throws std::overflow_error past 2^64.
  std::uint64_t order() const {
    std::uint64_t total = 1;
    for (const auto& l : levels_) {
      if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(l.orbit.size()), &total)) {
        throw std::overflow_error("group order exceeds 64 bits");
      }
    }
    return total;
  }

  bool contains(const Permutation& g) const {
    if (g.size() != n_) return false;
    auto [residue, depth] = sift(g, 0);
    return depth == levels_.size() && residue.is_identity();
  }

  /// Strong generators fixing the first `depth` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t depth) const {
    std::vector<Permutation> out;
    for (const auto& g : strong_)
      if (fixes_prefix(g, depth)) out.push_back(g);
    return out;
  }

private:
  static int first_moved(const Permutation& g) {
    for (int i = 0; i < g.size(); ++i)
      if (g(i) != i) return i;
    return -1;
  }

  void push_level(int b) {
    Level l;
    l.base_point = b;
    levels_.push_back(std::move(l));
  }

  bool fixes_prefix(const Permutation& g, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i)
      if (g(levels_[i].base_point) != levels_[i].base_point) return false;
    return true;
  }

  void rebuild_orbit(std::size_t i) {
    Level& l = levels_[i];
    const auto gens = stabilizer_generators(i);
    l.transversal.assign(static_cast<std::size_t>(n_), std::nullopt);
    l.transversal[static_cast<std::size_t>(l.base_point)] = Permutation::identity(n_);
    l.orbit = {l.base_point};
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      const int x = l.orbit[k];
      for (const auto& g : gens) {
        const int y = g(x);
        if (!l.transversal[static_cast<std::size_t>(y)]) {
          l.transversal[static_cast<std::size_t>(y)] = *l.transversal[static_cast<std::size_t>(x)] * g;
          l.orbit.push_back(y);
        }
      }
    }
  }

  /// Strips g through levels from `start`; returns the residue and the level
  /// where stripping stopped (levels_.size() if it passed all of them).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start) const {
    for (std::size_t i = start; i < levels_.size(); ++i) {
      const int x = g(levels_[i].base_point);
      const auto& u = levels_[i].transversal[static_cast<std::size_t>(x)];
      if (!u) return {std::move(g), i};
      g = g * u->inverse();
    }
    return {std::move(g), levels_.size()};
  }

  // Works from the deepest level up; whenever a Schreier generator fails to
  // sift, its residue becomes a new strong generator and work resumes at the
  // level where it stopped.
  void build() {
    if (levels_.empty()) return;
    for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_orbit(i);
    std::size_t i = levels_.size();
    while (i > 0) {
      const std::size_t level = i - 1;
      bool extended = false;
      const auto gens = stabilizer_generators(level);
      const Level& l = levels_[level];
      for (std::size_t k = 0; k < l.orbit.size() && !extended; ++k) {
        const int x = l.orbit[k];
        const Permutation& ux = *l.transversal[static_cast<std::size_t>(x)];
        for (const auto& s : gens) {
          const Permutation schreier = ux * s * levels_[level].transversal[static_cast<std::size_t>(s(x))]->inverse();
          auto [residue, depth] = sift(schreier, level + 1);
          if (depth == levels_.size() && residue.is_identity()) continue;
          if (depth == levels_.size()) push_level(first_moved(residue));
          strong_.push_back(std::move(residue));
          for (std::size_t j = 0; j <= depth; ++j) rebuild_orbit(j);
          i = depth + 1;
          extended = true;
          break;
        }
      }
      if (!extended) --i;
    }
  }

  int n_ = 0;
  std::vector<Level> levels_;
  std::vector<Permutation> strong_;
};

/// Permutation group on {0..n-1} given by generators, with its exact order.
class PermGroup {
public:
  explicit PermGroup(int n, std::vector<Permutation> generators = {})
      : n_(n), generators_(std::move(generators)), chain_(n, generators_) {}

  int degree() const { return n_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const StabilizerChain& chain() const { return chain_; }
  std::uint64_t order() const { return chain_.order(); }
  bool contains(const Permutation& p) const { return chain_.contains(p); }

  std::vector<std::vector<int>> orbits() const { return orbits_of(n_, generators_); }
  bool is_transitive() const { return n_ == 0 || orbits().size() == 1; }

  /// Generators of the stabilizer of `point`.
  std::vector<Permutation> point_stabilizer(int point) const {
    const int prefix[] = {point};
    StabilizerChain c(n_, generators_, prefix);
    return c.stabilizer_generators(1);
  }

  /// The symmetric group on n points.
  static PermGroup symmetric(int n) {
    std::vector<Permutation> gens;
    if (n >= 2) {
      std::vector<int> t(static_cast<std::size_t>(n));
      std::iota(t.begin(), t.end(), 0);
      std::swap(t[0], t[1]);
      gens.emplace_back(t);
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % n;
      gens.emplace_back(c);
    }
    return PermGroup(n, std::move(gens));
  }

private:
  int n_ = 0;
  std::vector<Permutation> generators_;
  StabilizerChain chain_;
};

struct RankInfo {
  int rank = 0;
  std::vector<int> subdegrees;  // ascending
  std::vector<std::vector<int>> suborbits;  // orbits of the stabilizer of point 0
  bool suborbits_match_neighbourhood = false;  // rank 3 with suborbits {0}, N(0), non-N(0)
};

/// Rank and subdegrees of a transitive group; the graph is used only to
/// compare the suborbits of vertex 0 with its neighbourhood.
inline RankInfo rank_and_subdegrees(const PermGroup& group, const Graph& g) {
  if (group.degree() != g.order()) throw std::invalid_argument("rank_and_subdegrees: degree mismatch");
  if (!group.is_transitive()) throw std::invalid_argument("rank_and_subdegrees: group is not transitive");
  RankInfo info;
  const auto stab = group.point_stabilizer(0);
  info.suborbits = orbits_of(group.degree(), stab);
  info.rank = static_cast<int>(info.suborbits.size());
  for (const auto& o : info.suborbits) info.subdegrees.push_back(static_cast<int>(o.size()));
  std::sort(info.subdegrees.begin(), info.subdegrees.end());

  if (info.rank == 3) {
    const auto nbrs = g.neighbours(0).to_vector();
    const auto non = (g.neighbours(0) | VertexSet{0}).complement(g.order()).to_vector();
    int matched = 0;
    for (const auto& o : info.suborbits)
      if (o == std::vector<int>{0} || o == nbrs || o == non) ++matched;
    info.suborbits_match_neighbourhood = matched == 3;
  }
  return info;
}

}  // namespace g2graph
