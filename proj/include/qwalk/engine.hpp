// engine.hpp
// Sparse state representation and step evolution of the two-state walk.
//
// A sub-step applies the coin for one axis, splits each site's spinor into
// the plus/minus translational eigencomponents of that axis and routes them
// to the two neighbouring sites. Sources are processed in sorted order so
// amplitude accumulation, and hence every output, is bit-reproducible.

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qwalk/lattice.hpp"
#include "qwalk/spinor.hpp"

namespace qwalk {

struct SpinorField {
  std::unordered_map<Position, Spinor2, PositionHash> amp;

  void add(const Position& p, const Spinor2& s) {
    if (s.is_zero()) return;
    amp[p] += s;
  }

  std::vector<std::pair<Position, Spinor2>> sorted_entries() const {
    std::vector<std::pair<Position, Spinor2>> v(amp.begin(), amp.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  double norm2() const {
    // Summed in sorted order for run-to-run reproducibility.
    double n = 0.0;
    for (const auto& [p, s] : sorted_entries()) n += s.norm2();
    return n;
  }
};

struct WalkConfig {
  LatticeSpec lattice;
  int steps = 0;
  std::array<double, 3> thetas{0.0, 0.0, 0.0};  // indexed by PauliAxis
  Spinor2 initial_spin{Complex{1.0}, Complex{0.0}};
  Position initial_position{};
  KagomeSiteType origin_type = KagomeSiteType::P;  // kagome only
  std::vector<PauliAxis> ordering_override;        // empty = lattice default

  double theta(PauliAxis a) const { return thetas[static_cast<int>(a)]; }

  std::vector<PauliAxis> effective_ordering() const {
    if (!ordering_override.empty()) return ordering_override;
    if (lattice.kind == LatticeKind::Kagome)
      return kagome_default_ordering(origin_type);
    return lattice.ordering;
  }
};

// Presets for the internal state. delta/eta parametrize
// cos(delta/2)|down> + e^{i eta} sin(delta/2)|up>.
inline Spinor2 spin_down() { return {Complex{1.0}, {}}; }
inline Spinor2 spin_up() { return {{}, Complex{1.0}}; }
inline Spinor2 spin_delta_eta(double delta, double eta) {
  return {Complex{std::cos(delta / 2.0)},
          std::polar(std::sin(delta / 2.0), eta)};
}
inline Spinor2 spin_plus_i() {
  constexpr double r = 0.70710678118654752440;
  return {Complex{r}, Complex{0.0, r}};
}

inline void validate(const WalkConfig& config) {
  if (config.steps < 0)
    throw std::invalid_argument("steps must be non-negative");
  if (!config.initial_spin.finite())
    throw std::invalid_argument("initial spin must be finite");
  if (std::abs(config.initial_spin.norm2() - 1.0) > 1e-9)
    throw std::invalid_argument("initial spin must be normalized");
  const auto ordering = config.effective_ordering();
  if (ordering.empty()) throw std::invalid_argument("empty sub-step ordering");
  for (auto a : ordering) {
    if (!config.lattice.has_axis(a))
      throw std::invalid_argument(std::string("axis ") + axis_name(a) +
                                  " not active for " +
                                  lattice_name(config.lattice.kind));
    if (!std::isfinite(config.theta(a)))
      throw std::invalid_argument("theta must be finite");
  }
  // Orderings must list each active axis exactly once.
  if (ordering.size() != config.lattice.ordering.size())
    throw std::invalid_argument("ordering must list each active axis once");
  for (auto a : config.lattice.ordering) {
    int count = 0;
    for (auto b : ordering) count += (a == b);
    if (count != 1)
      throw std::invalid_argument("ordering must list each active axis once");
  }
  if (config.lattice.kind == LatticeKind::Kagome)
    validate_kagome_ordering(ordering, config.origin_type);
}

inline SpinorField initial_state(const WalkConfig& config) {
  validate(config);
  SpinorField f;
  f.add(config.initial_position, config.initial_spin);
  return f;
}

// One coined shift along a single axis. For each occupied site the
// after-coin spinor is resolved into the axis eigencomponents; the plus
// component lands at p + d(axis,+), the minus component at p + d(axis,-).
inline SpinorField apply_substep(const SpinorField& state, PauliAxis axis,
                                 double theta, const LatticeSpec& lattice) {
  if (!lattice.has_axis(axis))
    throw std::invalid_argument(std::string("apply_substep: axis ") +
                                axis_name(axis) + " not active for " +
                                lattice_name(lattice.kind));
  const EigenBasis basis = pauli_eigenbasis(axis);
  const Matrix2 coin = coin_operator(axis, theta);
  const Matrix2 scatter_plus = outer(basis.plus, basis.plus) * coin;
  const Matrix2 scatter_minus = outer(basis.minus, basis.minus) * coin;
  const Displacement d_plus = lattice.displacement(axis, +1);
  const Displacement d_minus = lattice.displacement(axis, -1);

  SpinorField out;
  out.amp.reserve(state.amp.size() * 2);
  for (const auto& [p, s] : state.sorted_entries()) {
    out.add(p + d_plus, scatter_plus * s);
    out.add(p + d_minus, scatter_minus * s);
  }
  return out;
}

// One complete walk step: sub-steps in the configured ordering. On the
// kagome lattice every occupied site shares one site type per sub-step, so
// a single representative is checked against axis availability.
inline SpinorField step(const SpinorField& state, const WalkConfig& config) {
  SpinorField current = state;
  for (auto axis : config.effective_ordering()) {
    if (config.lattice.kind == LatticeKind::Kagome && !current.amp.empty()) {
      const Position rep = current.amp.begin()->first;
      Position rel = rep;
      for (int i = 0; i < 3; ++i) rel.c[i] -= config.initial_position.c[i];
      const KagomeSiteType t = kagome_site_type(rel, config.origin_type);
      if (!kagome_type_has_axis(t, axis))
        throw std::invalid_argument(
            std::string("kagome: axis ") + axis_name(axis) +
            " does not exist at current site type " + kagome_type_name(t));
    }
    current = apply_substep(current, axis, config.theta(axis), config.lattice);
  }
  return current;
}

inline SpinorField evolve(const WalkConfig& config) {
  SpinorField f = initial_state(config);
  for (int t = 0; t < config.steps; ++t) f = step(f, config);
  return f;
}

}  // namespace qwalk
