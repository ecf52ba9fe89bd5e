// analysis.hpp
// Probability distributions and the comparison metrics behind the
// figure-level checks: marginals, variances, rotated-frame variances and
// max-abs-difference.

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qwalk/engine.hpp"
#include "qwalk/grover.hpp"
#include "qwalk/lattice.hpp"

namespace qwalk {

// Probabilities below this are clamped to zero (dropped from the sparse
// map) to keep golden-file comparisons stable.
inline constexpr double probability_floor = 1e-15;

struct Distribution {
  int dim = 0;
  std::unordered_map<Position, double, PositionHash> p;

  double total() const {
    double t = 0.0;
    for (const auto& [pos, prob] : sorted_entries()) t += prob;
    return t;
  }

  std::vector<std::pair<Position, double>> sorted_entries() const {
    std::vector<std::pair<Position, double>> v(p.begin(), p.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  double at(const Position& pos) const {
    auto it = p.find(pos);
    return it == p.end() ? 0.0 : it->second;
  }
};

inline Distribution distribution(const SpinorField& state, int dim) {
  Distribution d;
  d.dim = dim;
  d.p.reserve(state.amp.size());
  for (const auto& [pos, s] : state.amp) {
    const double prob = s.norm2();
    if (prob >= probability_floor) d.p.emplace(pos, prob);
  }
  return d;
}

inline Distribution distribution(const GroverField& state) {
  Distribution d;
  d.dim = 2;
  d.p.reserve(state.amp.size());
  for (const auto& [pos, s] : state.amp) {
    const double prob = s.norm2();
    if (prob >= probability_floor) d.p.emplace(pos, prob);
  }
  return d;
}

// Sums probability over all coordinates except the kept one; the result is
// one-dimensional with the kept coordinate in slot 0.
inline Distribution marginal(const Distribution& d, int axis_index) {
  if (axis_index < 0 || axis_index >= d.dim)
    throw std::invalid_argument("marginal: axis index out of range");
  Distribution m;
  m.dim = 1;
  for (const auto& [pos, prob] : d.p) {
    Position key{};
    key.c[0] = pos.c[axis_index];
    m.p[key] += prob;
  }
  return m;
}

inline double mean(const Distribution& d) {
  if (d.dim != 1) throw std::invalid_argument("mean: 1D distribution required");
  double m = 0.0;
  for (const auto& [pos, prob] : d.p) m += prob * pos.c[0];
  return m;
}

inline double variance(const Distribution& d) {
  if (d.dim != 1)
    throw std::invalid_argument("variance: 1D distribution required");
  double m1 = 0.0, m2 = 0.0;
  for (const auto& [pos, prob] : d.p) {
    m1 += prob * pos.c[0];
    m2 += prob * pos.c[0] * pos.c[0];
  }
  return m2 - m1 * m1;
}

inline double max_abs_diff(const Distribution& a, const Distribution& b) {
  double m = 0.0;
  for (const auto& [pos, prob] : a.p)
    m = std::max(m, std::abs(prob - b.at(pos)));
  for (const auto& [pos, prob] : b.p)
    m = std::max(m, std::abs(prob - a.at(pos)));
  return m;
}

// Variances of the diagonal and anti-diagonal marginals of a 2D
// distribution, i.e. along u = (x+z)/sqrt(2) and v = (x-z)/sqrt(2). The
// sums run over the integer combinations; the 1/sqrt(2) scaling is applied
// analytically at the end.
struct DiagonalVariances {
  double diag = 0.0;
  double antidiag = 0.0;
};

inline DiagonalVariances diagonal_variances(const Distribution& d) {
  if (d.dim != 2)
    throw std::invalid_argument("diagonal_variances: 2D distribution required");
  double su = 0.0, suu = 0.0, sv = 0.0, svv = 0.0;
  for (const auto& [pos, prob] : d.p) {
    const double u = pos.c[0] + pos.c[1];
    const double v = pos.c[0] - pos.c[1];
    su += prob * u;
    suu += prob * u * u;
    sv += prob * v;
    svv += prob * v * v;
  }
  return {(suu - su * su) / 2.0, (svv - sv * sv) / 2.0};
}

// Image of a triangular-lattice distribution under a signed permutation of
// the net move counts.
inline Distribution transform_triangular(const Distribution& d,
                                         const NetMap& map) {
  Distribution out;
  out.dim = d.dim;
  out.p.reserve(d.p.size());
  for (const auto& [pos, prob] : d.p)
    out.p[tri_position(map.apply(tri_net_counts(pos)))] += prob;
  return out;
}

// Net maps relating two triangular-lattice distributions:
// all maps s with b(s(pos)) = a(pos) on the union support.
inline std::vector<NetMap> relating_net_maps(const Distribution& a,
                                             const Distribution& b,
                                             double tol) {
  std::vector<NetMap> found;
  for (const auto& map : hexagonal_net_maps())
    if (max_abs_diff(transform_triangular(a, map), b) <= tol)
      found.push_back(map);
  return found;
}

}  // namespace qwalk
