// reference_walk.hpp
// Self-contained reference evolution used as an independent oracle against
// the engine. Everything is spelled out locally: Pauli eigenvectors, the
// coin as its eigenbasis outer-product sum, and the displacement tables.
// Shares nothing with the library but std::complex.

#pragma once

#include <array>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

namespace refwalk {

using C = std::complex<double>;
using Vec2 = std::array<C, 2>;
using Mat2 = std::array<std::array<C, 2>, 2>;
using Pos = std::array<int, 3>;

struct Entry {
  Vec2 v{C{}, C{}};
};

using State = std::map<Pos, Vec2>;

inline Vec2 eig_plus(char axis) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (axis) {
    case 'x': return {C{r}, C{r}};
    case 'y': return {C{r}, C{0, r}};
    case 'z': return {C{1}, C{0}};
  }
  throw std::invalid_argument("axis");
}

inline Vec2 eig_minus(char axis) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (axis) {
    case 'x': return {C{r}, C{-r}};
    case 'y': return {C{r}, C{0, -r}};
    case 'z': return {C{0}, C{1}};
  }
  throw std::invalid_argument("axis");
}

inline Mat2 outer(const Vec2& a, const Vec2& b) {
  Mat2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m[i][j] = a[i] * std::conj(b[j]);
  return m;
}

inline Mat2 add(const Mat2& a, const Mat2& b) {
  Mat2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m[i][j] = a[i][j] + b[i][j];
  return m;
}

inline Mat2 scale(C c, const Mat2& a) {
  Mat2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m[i][j] = c * a[i][j];
  return m;
}

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 m{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return m;
}

inline Vec2 apply(const Mat2& m, const Vec2& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

// Coin built as c|+><+| + s|+><-| - s|-><+| + c|-><->| over the axis basis.
inline Mat2 coin(char axis, double theta) {
  const Vec2 p = eig_plus(axis), m = eig_minus(axis);
  Mat2 r = scale(std::cos(theta), outer(p, p));
  r = add(r, scale(std::sin(theta), outer(p, m)));
  r = add(r, scale(-std::sin(theta), outer(m, p)));
  r = add(r, scale(std::cos(theta), outer(m, m)));
  return r;
}

// Plus-eigenstate displacements, straight from the shift definitions.
inline Pos plus_disp(const std::string& lattice, char axis) {
  if (lattice == "line") {
    if (axis == 'z') return {-1, 0, 0};
  } else if (lattice == "square") {
    if (axis == 'z') return {0, -1, 0};
    if (axis == 'x') return {-1, 0, 0};
  } else if (lattice == "cubic") {
    if (axis == 'z') return {0, 0, -1};
    if (axis == 'x') return {-1, 0, 0};
    if (axis == 'y') return {0, -1, 0};
  } else if (lattice == "triangular" || lattice == "kagome") {
    if (axis == 'z') return {1, -1, -2};
    if (axis == 'x') return {-2, -1, 1};
    if (axis == 'y') return {1, -2, -1};
  }
  throw std::invalid_argument("plus_disp: " + lattice + "/" + axis);
}

inline std::vector<char> ordering(const std::string& lattice) {
  if (lattice == "line") return {'z'};
  if (lattice == "square") return {'z', 'x'};
  if (lattice == "cubic") return {'z', 'x', 'y'};
  if (lattice == "triangular") return {'z', 'y', 'x'};
  if (lattice == "kagome") return {'y', 'z', 'x'};
  throw std::invalid_argument("ordering: " + lattice);
}

inline Pos shifted(Pos p, const Pos& d, int sign) {
  for (int i = 0; i < 3; ++i) p[i] += sign * d[i];
  return p;
}

inline State substep(const State& s, const std::string& lattice, char axis,
                     double theta) {
  const Mat2 b = coin(axis, theta);
  const Mat2 scatter_p = mul(outer(eig_plus(axis), eig_plus(axis)), b);
  const Mat2 scatter_m = mul(outer(eig_minus(axis), eig_minus(axis)), b);
  const Pos d = plus_disp(lattice, axis);
  State out;
  for (const auto& [p, v] : s) {
    const Vec2 vp = apply(scatter_p, v);
    const Vec2 vm = apply(scatter_m, v);
    auto& tp = out[shifted(p, d, +1)];
    tp[0] += vp[0];
    tp[1] += vp[1];
    auto& tm = out[shifted(p, d, -1)];
    tm[0] += vm[0];
    tm[1] += vm[1];
  }
  return out;
}

inline State step(const State& s, const std::string& lattice,
                  const std::map<char, double>& thetas) {
  State cur = s;
  for (char axis : ordering(lattice)) cur = substep(cur, lattice, axis, thetas.at(axis));
  return cur;
}

inline State evolve(const std::string& lattice, const Vec2& spin, int steps,
                    const std::map<char, double>& thetas) {
  State s;
  s[{0, 0, 0}] = spin;
  for (int t = 0; t < steps; ++t) s = step(s, lattice, thetas);
  return s;
}

inline double norm2(const State& s) {
  double n = 0.0;
  for (const auto& [p, v] : s) n += std::norm(v[0]) + std::norm(v[1]);
  return n;
}

inline C dot(const State& a, const State& b) {
  C r{};
  for (const auto& [p, v] : a) {
    auto it = b.find(p);
    if (it == b.end()) continue;
    r += std::conj(v[0]) * it->second[0] + std::conj(v[1]) * it->second[1];
  }
  return r;
}

// Orthonormality defect of the one-step evolution restricted to basis
// states on `domain`: max |<col_i, col_j> - delta_ij|.
inline double one_step_gram_defect(const std::string& lattice, double theta,
                                   const std::vector<Pos>& domain) {
  std::map<char, double> thetas{{'x', theta}, {'y', theta}, {'z', theta}};
  std::vector<State> cols;
  cols.reserve(domain.size() * 2);
  for (const auto& p : domain)
    for (int spin = 0; spin < 2; ++spin) {
      State s;
      Vec2 v{C{}, C{}};
      v[spin] = C{1};
      s[p] = v;
      cols.push_back(step(s, lattice, thetas));
    }
  double defect = 0.0;
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i; j < cols.size(); ++j) {
      const C g = dot(cols[i], cols[j]);
      const double want = i == j ? 1.0 : 0.0;
      defect = std::max(defect, std::abs(g - C{want}));
    }
  return defect;
}

// All positions reachable from the origin in at most `steps` full steps.
inline std::vector<Pos> reachable(const std::string& lattice, int steps) {
  std::map<Pos, bool> seen;
  std::vector<Pos> frontier{{0, 0, 0}};
  seen[{0, 0, 0}] = true;
  const auto axes = ordering(lattice);
  for (int t = 0; t < steps; ++t) {
    std::vector<Pos> next;
    for (const auto& p : frontier) {
      // one full step: one +/- choice per axis
      std::vector<Pos> partial{p};
      for (char a : axes) {
        const Pos d = plus_disp(lattice, a);
        std::vector<Pos> grown;
        grown.reserve(partial.size() * 2);
        for (const auto& q : partial) {
          grown.push_back(shifted(q, d, +1));
          grown.push_back(shifted(q, d, -1));
        }
        partial = std::move(grown);
      }
      for (const auto& q : partial)
        if (!seen[q]) {
          seen[q] = true;
          next.push_back(q);
        }
    }
    frontier = std::move(next);
  }
  std::vector<Pos> out;
  out.reserve(seen.size());
  for (const auto& [p, v] : seen)
    if (v) out.push_back(p);
  return out;
}

}  // namespace refwalk
