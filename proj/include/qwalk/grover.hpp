// grover.hpp
// Four-state Grover walk on the square lattice, used as the equivalence
// baseline for the coinless two-state square walk.

#pragma once

#include <algorithm>
#include <array>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qwalk/lattice.hpp"
#include "qwalk/spinor.hpp"

namespace qwalk {

// Amplitudes on the basis |down>, |up>, |left>, |right>.
struct Spinor4 {
  std::array<Complex, 4> a{};

  double norm2() const {
    double n = 0.0;
    for (const auto& c : a) n += std::norm(c);
    return n;
  }

  bool is_zero() const {
    for (const auto& c : a)
      if (c != Complex{0.0, 0.0}) return false;
    return true;
  }

  Spinor4& operator+=(const Spinor4& o) {
    for (int i = 0; i < 4; ++i) a[i] += o.a[i];
    return *this;
  }
};

struct GroverField {
  std::unordered_map<Position, Spinor4, PositionHash> amp;

  void add(const Position& p, const Spinor4& s) {
    if (s.is_zero()) return;
    amp[p] += s;
  }

  std::vector<std::pair<Position, Spinor4>> sorted_entries() const {
    std::vector<std::pair<Position, Spinor4>> v(amp.begin(), amp.end());
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  }

  double norm2() const {
    double n = 0.0;
    for (const auto& [p, s] : sorted_entries()) n += s.norm2();
    return n;
  }
};

// Diffusion coin: -1/2 on the diagonal, +1/2 elsewhere. Hermitian,
// unitary, squares to the identity.
inline std::array<std::array<Complex, 4>, 4> grover_coin() {
  std::array<std::array<Complex, 4>, 4> g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g[i][j] = Complex{i == j ? -0.5 : 0.5};
  return g;
}

// 1/2 [ |down> - |up> - |left> + |right> ] at the origin.
inline GroverField grover_initial_state() {
  GroverField f;
  f.add(Position{}, Spinor4{{Complex{0.5}, Complex{-0.5}, Complex{-0.5},
                             Complex{0.5}}});
  return f;
}

// Coin followed by the diagonal shift:
//   down -> (x-1, z-1), up -> (x-1, z+1), left -> (x+1, z-1),
//   right -> (x+1, z+1).
inline GroverField grover_step(const GroverField& state) {
  static const auto g = grover_coin();
  static constexpr std::array<std::array<std::int32_t, 2>, 4> shift{
      {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}};
  GroverField out;
  out.amp.reserve(state.amp.size() * 2);
  for (const auto& [p, s] : state.sorted_entries()) {
    Spinor4 after;
    for (int i = 0; i < 4; ++i) {
      Complex acc{};
      for (int j = 0; j < 4; ++j) acc += g[i][j] * s.a[j];
      after.a[i] = acc;
    }
    for (int i = 0; i < 4; ++i) {
      if (after.a[i] == Complex{0.0, 0.0}) continue;
      Position q = p;
      q.c[0] += shift[i][0];
      q.c[1] += shift[i][1];
      Spinor4 piece;
      piece.a[i] = after.a[i];
      out.add(q, piece);
    }
  }
  return out;
}

inline GroverField grover_evolve_field(int steps) {
  if (steps < 0) throw std::invalid_argument("steps must be non-negative");
  GroverField f = grover_initial_state();
  for (int t = 0; t < steps; ++t) f = grover_step(f);
  return f;
}

}  // namespace qwalk
