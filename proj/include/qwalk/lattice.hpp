// lattice.hpp
// Position labels, per-axis displacement rules for each supported lattice,
// and kagome site-type bookkeeping.
//
// Square and cubic lattices use plain orthogonal integer coordinates
// ((x,z) and (x,y,z)). Triangular and kagome lattices use redundant
// three-integer labels: a move along a main axis shifts that label by two
// units and the other two labels by one unit each.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalk/spinor.hpp"

namespace qwalk {

// Lattice site label. Unused trailing coordinates stay zero; the owning
// LatticeSpec fixes how many are meaningful.
struct Position {
  std::array<std::int32_t, 3> c{0, 0, 0};

  auto operator<=>(const Position&) const = default;
};

using Displacement = Position;

inline Position operator+(Position p, const Displacement& d) {
  for (int i = 0; i < 3; ++i) p.c[i] += d.c[i];
  return p;
}

inline Displacement operator-(Displacement d) {
  for (auto& v : d.c) v = -v;
  return d;
}

struct PositionHash {
  std::size_t operator()(const Position& p) const {
    // splitmix64 over the packed coordinates
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < 3; ++i) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.c[i]));
      h *= 0xbf58476d1ce4e5b9ULL;
      h ^= h >> 27;
    }
    return static_cast<std::size_t>(h * 0x94d049bb133111ebULL);
  }
};

enum class LatticeKind { Line, Square, Cubic, Triangular, Kagome };

inline std::string lattice_name(LatticeKind k) {
  switch (k) {
    case LatticeKind::Line: return "line";
    case LatticeKind::Square: return "square";
    case LatticeKind::Cubic: return "cubic";
    case LatticeKind::Triangular: return "triangular";
    case LatticeKind::Kagome: return "kagome";
  }
  return "?";
}

// Static description of a lattice: dimensionality, the displacement of the
// plus translational eigenstate on each active axis (minus is the exact
// negation), and the default order in which sub-steps are applied.
struct LatticeSpec {
  LatticeKind kind;
  int dim;
  std::vector<PauliAxis> ordering;       // applied first-to-last
  std::array<Displacement, 3> plus_disp;  // indexed by PauliAxis

  bool has_axis(PauliAxis a) const {
    for (auto ax : ordering)
      if (ax == a) return true;
    return false;
  }

  Displacement displacement(PauliAxis axis, int sign) const {
    if (!has_axis(axis))
      throw std::invalid_argument("displacement: axis not active for " +
                                  lattice_name(kind));
    const auto& d = plus_disp[static_cast<int>(axis)];
    return sign >= 0 ? d : -d;
  }
};

inline LatticeSpec lattice_spec(LatticeKind kind) {
  LatticeSpec s;
  s.kind = kind;
  auto set = [&s](PauliAxis a, std::int32_t x, std::int32_t y,
                  std::int32_t z) {
    s.plus_disp[static_cast<int>(a)] = Displacement{{x, y, z}};
  };
  switch (kind) {
    case LatticeKind::Line:
      s.dim = 1;
      s.ordering = {PauliAxis::Z};
      set(PauliAxis::Z, -1, 0, 0);
      break;
    case LatticeKind::Square:
      // coordinates (x, z)
      s.dim = 2;
      s.ordering = {PauliAxis::Z, PauliAxis::X};
      set(PauliAxis::Z, 0, -1, 0);
      set(PauliAxis::X, -1, 0, 0);
      break;
    case LatticeKind::Cubic:
      s.dim = 3;
      s.ordering = {PauliAxis::Z, PauliAxis::X, PauliAxis::Y};
      set(PauliAxis::Z, 0, 0, -1);
      set(PauliAxis::X, -1, 0, 0);
      set(PauliAxis::Y, 0, -1, 0);
      break;
    case LatticeKind::Triangular:
    case LatticeKind::Kagome:
      s.dim = 3;
      s.ordering = kind == LatticeKind::Triangular
                       ? std::vector<PauliAxis>{PauliAxis::Z, PauliAxis::Y,
                                                PauliAxis::X}
                       : std::vector<PauliAxis>{PauliAxis::Y, PauliAxis::Z,
                                                PauliAxis::X};
      set(PauliAxis::Z, 1, -1, -2);
      set(PauliAxis::X, -2, -1, 1);
      set(PauliAxis::Y, 1, -2, -1);
      break;
    default:
      throw std::invalid_argument("lattice_spec: unknown kind");
  }
  return s;
}

// ---------------------------------------------------------------------------
// Triangular / kagome label arithmetic.
//
// The three plus displacements are linearly independent, so every reachable
// label decomposes uniquely into net move counts (n_x, n_y, n_z) along the
// three axes. Site-type classification and the lattice symmetry maps both
// work in that count space.

struct NetCounts {
  std::array<std::int64_t, 3> n{0, 0, 0};  // indexed by PauliAxis
};

// Solves  n_x*d_x + n_y*d_y + n_z*d_z = p  exactly. Throws if p is not an
// integer combination (i.e. not a point of the walked lattice).
inline NetCounts tri_net_counts(const Position& p) {
  // Columns of M are the plus displacements for X, Y, Z; det(M) = -6.
  // Cramer via the adjugate keeps everything in exact integers.
  static constexpr std::int64_t det = -6;
  static constexpr std::int64_t M[3][3] = {
      {-2, 1, 1},   // x components of d_X, d_Y, d_Z
      {-1, -2, -1},  // y components
      {1, -1, -2},   // z components
  };
  auto cof = [](int r0, int c0, int r1, int c1) {
    return M[r0][c0] * M[r1][c1] - M[r0][c1] * M[r1][c0];
  };
  const std::int64_t A[3][3] = {
      {cof(1, 1, 2, 2), -cof(0, 1, 2, 2), cof(0, 1, 1, 2)},
      {-cof(1, 0, 2, 2), cof(0, 0, 2, 2), -cof(0, 0, 1, 2)},
      {cof(1, 0, 2, 1), -cof(0, 0, 2, 1), cof(0, 0, 1, 1)},
  };
  NetCounts out;
  for (int i = 0; i < 3; ++i) {
    std::int64_t v = 0;
    for (int j = 0; j < 3; ++j) v += A[i][j] * p.c[j];
    if (v % det != 0)
      throw std::invalid_argument(
          "tri_net_counts: position is not a lattice point");
    out.n[i] = v / det;
  }
  return out;
}

inline Position tri_position(const NetCounts& n) {
  const auto spec = lattice_spec(LatticeKind::Triangular);
  Position p;
  for (auto axis : all_axes) {
    const auto& d = spec.plus_disp[static_cast<int>(axis)];
    for (int i = 0; i < 3; ++i)
      p.c[i] += static_cast<std::int32_t>(n.n[static_cast<int>(axis)]) * d.c[i];
  }
  return p;
}

// Signed permutation of the net move counts: n -> sign * perm(n).
// The twelve of them realize the full hexagonal point group (identity,
// rotations, axis mirrors, inversion and its compositions).
struct NetMap {
  std::array<int, 3> perm{0, 1, 2};  // output axis i takes input axis perm[i]
  int sign = 1;

  NetCounts apply(const NetCounts& n) const {
    NetCounts r;
    for (int i = 0; i < 3; ++i) r.n[i] = sign * n.n[perm[i]];
    return r;
  }

  std::string name() const {
    static constexpr const char* ax = "xyz";
    std::string s = sign > 0 ? "(" : "-(";
    for (int i = 0; i < 3; ++i) s += ax[perm[i]];
    s += ")";
    return s;
  }
};

inline const std::vector<NetMap>& hexagonal_net_maps() {
  static const std::vector<NetMap> maps = [] {
    std::vector<NetMap> v;
    const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2},
                                                   {0, 2, 1},
                                                   {1, 0, 2},
                                                   {1, 2, 0},
                                                   {2, 0, 1},
                                                   {2, 1, 0}}};
    for (int sign : {1, -1})
      for (const auto& p : perms) v.push_back(NetMap{p, sign});
    return v;
  }();
  return maps;
}

// ---------------------------------------------------------------------------
// Kagome site types.
//
// Each kagome site carries two of the three propagation axes:
//   o: {X, Z}   p: {X, Y}   q: {Y, Z}
// A move along an axis lands on the other type sharing that axis, so the
// type of any reachable site follows from the origin type and the parity of
// the net move counts.

enum class KagomeSiteType { O, P, Q };

inline char kagome_type_name(KagomeSiteType t) {
  switch (t) {
    case KagomeSiteType::O: return 'o';
    case KagomeSiteType::P: return 'p';
    case KagomeSiteType::Q: return 'q';
  }
  return '?';
}

inline std::array<PauliAxis, 2> kagome_type_axes(KagomeSiteType t) {
  switch (t) {
    case KagomeSiteType::O: return {PauliAxis::X, PauliAxis::Z};
    case KagomeSiteType::P: return {PauliAxis::X, PauliAxis::Y};
    case KagomeSiteType::Q: return {PauliAxis::Y, PauliAxis::Z};
  }
  throw std::invalid_argument("kagome_type_axes: bad type");
}

inline bool kagome_type_has_axis(KagomeSiteType t, PauliAxis a) {
  const auto axes = kagome_type_axes(t);
  return axes[0] == a || axes[1] == a;
}

// Type reached by one move along `axis`. The move must be available at the
// current type.
inline KagomeSiteType kagome_type_after_move(KagomeSiteType t, PauliAxis axis) {
  if (!kagome_type_has_axis(t, axis))
    throw std::invalid_argument(
        std::string("kagome: axis ") + axis_name(axis) +
        " does not exist at site type " + kagome_type_name(t));
  // The two types sharing an axis swap; the third is untouched.
  switch (axis) {
    case PauliAxis::X:
      return t == KagomeSiteType::O ? KagomeSiteType::P : KagomeSiteType::O;
    case PauliAxis::Y:
      return t == KagomeSiteType::P ? KagomeSiteType::Q : KagomeSiteType::P;
    case PauliAxis::Z:
      return t == KagomeSiteType::O ? KagomeSiteType::Q : KagomeSiteType::O;
  }
  throw std::invalid_argument("kagome_type_after_move: bad axis");
}

// Parity encoding: a type is identified with the parity class of its net
// move counts relative to a type-p origin. Classes are two-bit vectors
// (n_x + n_z, n_y + n_z) mod 2; class (0,0) is not a kagome site.
inline KagomeSiteType kagome_site_type(const Position& relative,
                                       KagomeSiteType origin_type) {
  const NetCounts n = tri_net_counts(relative);
  const int bx = static_cast<int>((n.n[0] + n.n[2]) & 1);  // n_x + n_z
  const int by = static_cast<int>((n.n[1] + n.n[2]) & 1);  // n_y + n_z
  // An X move flips bx, a Y move flips by, a Z move flips both, matching
  // the type toggles X: o<->p, Y: p<->q, Z: o<->q. Types therefore sit on
  // a two-bit parity plane with one class left over for lattice vertices.
  auto code_of = [](KagomeSiteType t) -> std::array<int, 2> {
    switch (t) {
      case KagomeSiteType::P: return {0, 0};
      case KagomeSiteType::O: return {1, 0};
      case KagomeSiteType::Q: return {0, 1};
    }
    return {0, 0};
  };
  const auto oc = code_of(origin_type);
  const int cx = (oc[0] + bx) & 1;
  const int cy = (oc[1] + by) & 1;
  if (cx == 0 && cy == 0) return KagomeSiteType::P;
  if (cx == 1 && cy == 0) return KagomeSiteType::O;
  if (cx == 0 && cy == 1) return KagomeSiteType::Q;
  throw std::invalid_argument(
      "kagome_site_type: position is a lattice vertex, not a kagome site");
}

inline std::array<PauliAxis, 2> kagome_site_axes(const Position& relative,
                                                 KagomeSiteType origin_type) {
  return kagome_type_axes(kagome_site_type(relative, origin_type));
}

// Default sub-step ordering for a kagome walk started on a site of the
// given type: begin with the available axis of highest Pauli index, then
// follow the axes forced by the type sequence. A type-p origin yields
// (Y, Z, X).
inline std::vector<PauliAxis> kagome_default_ordering(KagomeSiteType origin) {
  const auto avail = kagome_type_axes(origin);
  PauliAxis first = avail[0];
  if (static_cast<int>(avail[1]) > static_cast<int>(first)) first = avail[1];
  std::vector<PauliAxis> order{first};
  KagomeSiteType t = kagome_type_after_move(origin, first);
  while (order.size() < 3) {
    const auto axes = kagome_type_axes(t);
    for (auto a : axes) {
      bool used = false;
      for (auto u : order) used |= (u == a);
      if (!used) {
        order.push_back(a);
        t = kagome_type_after_move(t, a);
        break;
      }
    }
  }
  return order;
}

// Checks that an ordering can be executed from the given origin type,
// i.e. each sub-step's axis exists at the site type current at that point.
inline void validate_kagome_ordering(const std::vector<PauliAxis>& ordering,
                                     KagomeSiteType origin) {
  KagomeSiteType t = origin;
  for (auto a : ordering) t = kagome_type_after_move(t, a);
}

}  // namespace qwalk
