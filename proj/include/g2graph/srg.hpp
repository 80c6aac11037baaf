#pragma once

#include <bit>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "g2graph/graph.hpp"
#include "g2graph/matrix.hpp"

namespace g2graph {

struct SrgParams {
  int n = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;

  /// k(k - lambda - 1) = (n - k - 1) mu.
  constexpr bool feasible() const { return k * (k - lambda - 1) == (n - k - 1) * mu; }

  friend constexpr bool operator==(const SrgParams&, const SrgParams&) = default;
};

inline std::string to_string(const SrgParams& p) {
  return "srg(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) + "," +
         std::to_string(p.mu) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const SrgParams& p) { return os << to_string(p); }

/// Parameters of the complement of an srg(n, k, lambda, mu).
constexpr SrgParams complement_params(const SrgParams& p) {
  return {p.n, p.n - p.k - 1, p.n - 2 * p.k + p.mu - 2, p.n - 2 * p.k + p.lambda};
}

enum class SrgStatus {
  strongly_regular,
  trivial,       // complete, null, or fewer than 2 vertices
  not_regular,
  not_strongly_regular,  // regular, but lambda or mu varies
};

constexpr std::string_view to_string(SrgStatus s) {
  switch (s) {
    case SrgStatus::strongly_regular: return "strongly regular";
    case SrgStatus::trivial: return "complete or null";
    case SrgStatus::not_regular: return "not regular";
    case SrgStatus::not_strongly_regular: return "regular but not strongly regular";
  }
  return "?";
}

struct SrgCheck {
  SrgStatus status = SrgStatus::trivial;
  std::optional<SrgParams> params;
};

/// Evaluates A^2 = kI + lambda A + mu (J - I - A) and AJ = JA = kJ exactly.
inline bool satisfies_srg_identity(const Graph& g, const SrgParams& p) {
  const int n = g.order();
  if (p.n != n) return false;
  const IntMatrix a = adjacency_matrix(g);
  const IntMatrix i = IntMatrix::identity(n);
  const IntMatrix j = IntMatrix::ones(n);
  const bool quadratic = a * a == p.k * i + p.lambda * a + p.mu * (j - i - a);
  const bool row_sums = a * j == p.k * j && j * a == p.k * j;
  return quadratic && row_sums;
}

/// Strong-regularity test by common-neighbour counting, confirmed by the
/// matrix identity. Throws std::logic_error if the two routes disagree.
inline SrgCheck check_srg_detailed(const Graph& g) {
  const int n = g.order();
  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  if (n < 2 || g.edge_count() == 0 || g.edge_count() == pairs) return {SrgStatus::trivial, std::nullopt};

  const int k = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != k) return {SrgStatus::not_regular, std::nullopt};

  int lambda = -1;
  int mu = -1;
  bool constant = true;
  for (int u = 0; u < n && constant; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int common = std::popcount(g.row(u) & g.row(v));
      int& slot = g.adjacent(u, v) ? lambda : mu;
      if (slot < 0) slot = common;
      if (slot != common) {
        constant = false;
        break;
      }
    }
  }

  // lambda and mu hold the first observed counts; if counting found them
  // non-constant the identity must fail for them too.
  const SrgParams candidate{n, k, lambda, mu};
  if (constant != satisfies_srg_identity(g, candidate)) {
    throw std::logic_error("check_srg: pair counting and matrix identity disagree");
  }
  if (!constant) return {SrgStatus::not_strongly_regular, std::nullopt};
  return {SrgStatus::strongly_regular, candidate};
}

inline std::optional<SrgParams> check_srg(const Graph& g) { return check_srg_detailed(g).params; }

}  // namespace g2graph
