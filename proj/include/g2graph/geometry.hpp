#pragma once

// The unitary geometry on GF(4)^3 with the standard hermitian form
// h(x, y) = sum_i x_i * conj(y_i), and its trace form s = h + conj(h).

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2graph/gf4.hpp"

namespace g2graph {

using GeoVector = std::array<Gf4, 3>;

inline constexpr GeoVector kZeroVector{};

constexpr GeoVector scale(Gf4 a, const GeoVector& x) { return {a * x[0], a * x[1], a * x[2]}; }

constexpr GeoVector operator+(const GeoVector& x, const GeoVector& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}

constexpr bool is_zero(const GeoVector& x) { return x == kZeroVector; }

/// Hermitian form with identity Gram matrix: linear in x, conjugate-linear in y.
constexpr Gf4 hermitian(const GeoVector& x, const GeoVector& y) {
  return x[0] * conj(y[0]) + x[1] * conj(y[1]) + x[2] * conj(y[2]);
}

/// Alternating GF(2)-bilinear form s(x, y) = h(x, y) + h(y, x) = trace(h(x, y)).
constexpr Gf4 alternating(const GeoVector& x, const GeoVector& y) {
  return trace(hermitian(x, y));
}

inline std::string to_string(const GeoVector& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i != 0) out += ',';
    out += to_string(x[i]);
  }
  out += ')';
  return out;
}

/// All 64 vectors in lexicographic order of coordinate codes.
inline std::vector<GeoVector> all_vectors() {
  std::vector<GeoVector> out;
  out.reserve(64);
  for (Gf4 a : kGf4Elements)
    for (Gf4 b : kGf4Elements)
      for (Gf4 c : kGf4Elements) out.push_back({a, b, c});
  return out;
}

/// V1 = {x : h(x, x) = 1}, lexicographic. This order is the vertex order of
/// every graph built on V1.
inline std::vector<GeoVector> enumerate_v1() {
  std::vector<GeoVector> out;
  for (const auto& x : all_vectors()) {
    if (hermitian(x, x) == Gf4::one()) out.push_back(x);
  }
  return out;
}

/// Scales x so that its first nonzero coordinate is 1.
inline GeoVector normalize(const GeoVector& x) {
  for (Gf4 c : x) {
    if (!c.is_zero()) return scale(inverse(c), x);
  }
  throw std::invalid_argument("normalize: zero vector has no projective point");
}

/// A projective point {x, wx, Wx}.
struct ProjPoint {
  GeoVector representative;        // first nonzero coordinate is 1
  std::array<GeoVector, 3> members;  // representative, w*rep, W*rep
  std::array<std::size_t, 3> indices;  // positions of members in the input list

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// Groups a scalar-closed vector list into projective points. Points are
/// ordered by representative; `indices` refer to positions in `vectors`.
inline std::vector<ProjPoint> proj_points(std::span<const GeoVector> vectors) {
  auto position = [&](const GeoVector& v) -> std::size_t {
    auto it = std::find(vectors.begin(), vectors.end(), v);
    if (it == vectors.end()) {
      throw std::invalid_argument("proj_points: input is not closed under scalar multiplication (missing " +
                                  to_string(v) + ")");
    }
    return static_cast<std::size_t>(it - vectors.begin());
  };

  std::vector<GeoVector> reps;
  for (const auto& v : vectors) {
    if (is_zero(v)) throw std::invalid_argument("proj_points: zero vector in input");
    reps.push_back(normalize(v));
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

  std::vector<ProjPoint> out;
  out.reserve(reps.size());
  std::size_t covered = 0;
  for (const auto& rep : reps) {
    ProjPoint p;
    p.representative = rep;
    p.members = {rep, scale(Gf4::omega(), rep), scale(Gf4::omega_bar(), rep)};
    for (std::size_t i = 0; i < 3; ++i) p.indices[i] = position(p.members[i]);
    covered += 3;
    out.push_back(p);
  }
  if (covered != vectors.size()) {
    throw std::invalid_argument("proj_points: input contains duplicate vectors");
  }
  return out;
}

/// For each vector index, the index of its projective point in `points`.
inline std::vector<std::size_t> point_index_of(std::span<const ProjPoint> points, std::size_t vector_count) {
  std::vector<std::size_t> out(vector_count, points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t idx : points[p].indices) out.at(idx) = p;
  }
  return out;
}

}  // namespace g2graph
