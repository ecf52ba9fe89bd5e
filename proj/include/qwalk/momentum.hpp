// momentum.hpp
// Momentum-space form of the walk: one-step 2x2 matrices at fixed
// quasi-momentum, their eigen-decomposition, the effective Hamiltonians
// generating them, and the triangular-lattice commutation report.
//
// Branch conventions: sqrt of a negative real is +i sqrt|.|, and the
// eigenphase w = arccos(cos(theta) cos(k)) lies in [0, pi] so that
// exp(-iH) reproduces the walk matrix exactly. Effective Hamiltonians are
// defined modulo 2 pi in eigenphase.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalk/spinor.hpp"

namespace qwalk {

class DegeneracyError : public std::domain_error {
 public:
  explicit DegeneracyError(const std::string& what)
      : std::domain_error(what) {}
};

// |cos^2(theta) cos^2(k) - 1| below this means the two walk eigenvalues
// collide and the spectral construction is excluded.
inline constexpr double degeneracy_guard = 1e-9;

inline double degeneracy_margin(double theta, double k) {
  const double c = std::cos(theta) * std::cos(k);
  return std::abs(c * c - 1.0);
}

// One-step walk matrix at quasi-momentum k: exp(-ik) on the plus
// translational eigenprojector, exp(+ik) on the minus one, times the coin.
inline Matrix2 walk_momentum_matrix(PauliAxis axis, double theta, double k) {
  const EigenBasis b = pauli_eigenbasis(axis);
  const Matrix2 coin = coin_operator(axis, theta);
  const Complex forward = std::polar(1.0, -k);
  const Complex backward = std::polar(1.0, k);
  return forward * (outer(b.plus, b.plus) * coin) +
         backward * (outer(b.minus, b.minus) * coin);
}

struct EigenSystem {
  Complex lambda_minus;
  Complex lambda_plus;
  Matrix2 v;      // columns are the eigenvectors for lambda_minus, lambda_plus
  Matrix2 v_inv;
};

// Spectral data of the sigma_z-axis walk matrix:
//   lambda_-+ = cos(theta) cos(k) -+ sqrt(cos^2 theta cos^2 k - 1).
// For sin(theta) away from zero V and its inverse take the standard
// rational closed form; at sin(theta) = 0 the matrix is already diagonal
// and the eigenvector matrix degenerates to a (possibly swapped) identity.
inline EigenSystem eigensystem(double theta, double k) {
  if (degeneracy_margin(theta, k) < degeneracy_guard)
    throw DegeneracyError("eigensystem: degenerate (theta, k) point");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double ck = std::cos(k);
  const Complex sq{0.0, std::sqrt(1.0 - c * c * ck * ck)};  // +i sqrt|.|
  EigenSystem e;
  e.lambda_minus = Complex{c * ck} - sq;
  e.lambda_plus = Complex{c * ck} + sq;

  if (std::abs(s) > 1e-12) {
    const Complex eik = std::polar(1.0, k);
    const Complex denom = s * eik;
    const Complex a = (c * eik - e.lambda_minus) / denom;
    const Complex b = (c * eik - e.lambda_plus) / denom;
    e.v = mat2(a, b, Complex{1.0}, Complex{1.0});
    const Complex half = 1.0 / (2.0 * sq);
    e.v_inv = mat2(half * denom, half * (e.lambda_plus - c * eik),
                   -half * denom, half * (c * eik - e.lambda_minus));
  } else {
    // Diagonal walk matrix diag(c e^{-ik}, c e^{+ik}); pair each printed
    // eigenvalue with the matching diagonal slot.
    const Complex a00 = c * std::polar(1.0, -k);
    if (std::abs(e.lambda_minus - a00) <= std::abs(e.lambda_plus - a00)) {
      e.v = Matrix2::identity();
    } else {
      e.v = mat2(Complex{}, Complex{1.0}, Complex{1.0}, Complex{});
    }
    e.v_inv = e.v;  // both identity and the swap are involutions
  }
  return e;
}

// Effective Hamiltonian for one coined shift, in its closed form
//   w/sin(w) [ cos(t) sin(k) s_ax + sin(t) sin(k) s_b - sin(t) cos(k) s_c ]
// with w = arccos(cos t cos k) and the Pauli combination fixed per axis.
inline Matrix2 hamiltonian_matrix(PauliAxis axis, double theta, double k) {
  if (degeneracy_margin(theta, k) < degeneracy_guard)
    throw DegeneracyError("hamiltonian_matrix: degenerate (theta, k) point");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double ck = std::cos(k);
  const double sk = std::sin(k);
  double arg = c * ck;
  arg = std::max(-1.0, std::min(1.0, arg));
  const double w = std::acos(arg);
  const double f = w / std::sqrt(1.0 - arg * arg);

  const Complex dz{f * c * sk};  // coefficient on the axis' own Pauli matrix
  const double ds = f * s * sk;
  const double dc = f * s * ck;
  switch (axis) {
    case PauliAxis::Z:
      // c sk sz + s sk sx - s ck sy
      return mat2(dz, Complex{ds, dc}, Complex{ds, -dc}, -dz);
    case PauliAxis::X:
      // c sk sx + s sk sz + s ck sy
      return mat2(Complex{ds}, Complex{f * c * sk, -dc},
                  Complex{f * c * sk, dc}, Complex{-ds});
    case PauliAxis::Y:
      // c sk sy + s sk sz - s ck sx
      return mat2(Complex{ds}, Complex{-dc, -f * c * sk},
                  Complex{-dc, f * c * sk}, Complex{-ds});
  }
  throw std::invalid_argument("hamiltonian_matrix: bad axis");
}

// Zero-angle reduction: H(axis, 0, k) = k * sigma_axis exactly.
inline Matrix2 theta0_hamiltonian(PauliAxis axis, double k) {
  return Complex{k} * pauli_matrix(axis);
}

// Matrix exponential of a 2x2 via spectral decomposition; exact nilpotent
// correction when the eigenvalues coincide (Cayley-Hamilton).
inline Matrix2 expm(const Matrix2& m) {
  const Complex tr = m.trace();
  const Complex disc = std::sqrt(tr * tr - 4.0 * m.det());
  const Complex mu1 = (tr + disc) / 2.0;
  const Complex mu2 = (tr - disc) / 2.0;
  const Matrix2 id = Matrix2::identity();
  if (std::abs(mu1 - mu2) < 1e-12) {
    const Complex mu = tr / 2.0;
    return std::exp(mu) * (id + (m - mu * id));
  }
  // e^M = e^{mu1} P1 + e^{mu2} P2 with Pj = (M - mu_other I)/(mu_j - mu_other)
  const Complex inv = 1.0 / (mu1 - mu2);
  const Matrix2 p1 = inv * (m - mu2 * id);
  const Matrix2 p2 = (-inv) * (m - mu1 * id);
  return std::exp(mu1) * p1 + std::exp(mu2) * p2;
}

inline Matrix2 commutator(const Matrix2& a, const Matrix2& b) {
  return a * b - b * a;
}

// Combined momenta of the triangular shifts, read additively from the
// redundant coordinate labels.
struct TriMomenta {
  double k1;  // X axis
  double k2;  // Y axis
  double k3;  // Z axis

  double axis(PauliAxis a) const {
    switch (a) {
      case PauliAxis::X: return k1;
      case PauliAxis::Y: return k2;
      case PauliAxis::Z: return k3;
    }
    return 0.0;
  }
};

inline TriMomenta triangular_momenta(double kx, double ky, double kz) {
  return {2.0 * kx + ky - kz, -kx + 2.0 * ky + kz, -kx + ky + 2.0 * kz};
}

// One-step triangular walk matrix in momentum space: the sigma_x sub-step
// matrix applied last, the sigma_z one first.
inline Matrix2 triangular_walk_matrix(double theta_x, double theta_y,
                                      double theta_z, const TriMomenta& km) {
  return walk_momentum_matrix(PauliAxis::X, theta_x, km.k1) *
         walk_momentum_matrix(PauliAxis::Y, theta_y, km.k2) *
         walk_momentum_matrix(PauliAxis::Z, theta_z, km.k3);
}

// Measured (not asserted) commutation data for the three per-axis
// triangular Hamiltonians over a momentum grid, plus the residual of
// exp(-i sum H) against the exact one-step matrix.
struct CommutatorReport {
  double theta = 0.0;
  int grid_points_per_axis = 0;
  int total_points = 0;
  int evaluated = 0;
  int skipped_degenerate = 0;
  double max_commutator_norm = 0.0;
  double mean_commutator_norm = 0.0;
  double max_exp_residual = 0.0;
  double mean_exp_residual = 0.0;
};

inline CommutatorReport triangular_commutator_report(
    double theta, int grid_points_per_axis = 5,
    double guard = degeneracy_guard) {
  CommutatorReport rep;
  rep.theta = theta;
  rep.grid_points_per_axis = grid_points_per_axis;
  const int n = grid_points_per_axis;
  if (n < 1) throw std::invalid_argument("grid needs at least one point");
  std::vector<double> ks(n);
  for (int i = 0; i < n; ++i)
    ks[i] = -M_PI + 2.0 * M_PI * static_cast<double>(i) / n;

  double comm_sum = 0.0, res_sum = 0.0;
  for (double kx : ks)
    for (double ky : ks)
      for (double kz : ks) {
        ++rep.total_points;
        const TriMomenta km = triangular_momenta(kx, ky, kz);
        bool degenerate = false;
        for (auto axis : all_axes)
          degenerate |= degeneracy_margin(theta, km.axis(axis)) < guard;
        if (degenerate) {
          ++rep.skipped_degenerate;
          continue;
        }
        try {
          const Matrix2 hx = hamiltonian_matrix(PauliAxis::X, theta, km.k1);
          const Matrix2 hy = hamiltonian_matrix(PauliAxis::Y, theta, km.k2);
          const Matrix2 hz = hamiltonian_matrix(PauliAxis::Z, theta, km.k3);
          double local_max = 0.0;
          for (const auto& c : {commutator(hx, hy), commutator(hx, hz),
                                commutator(hy, hz)})
            local_max = std::max(local_max, c.frobenius_norm());
          const Matrix2 hsum = hx + hy + hz;
          const Matrix2 w = triangular_walk_matrix(theta, theta, theta, km);
          const double res =
              (expm(Complex{0.0, -1.0} * hsum) - w).frobenius_norm();
          ++rep.evaluated;
          comm_sum += local_max;
          res_sum += res;
          rep.max_commutator_norm =
              std::max(rep.max_commutator_norm, local_max);
          rep.max_exp_residual = std::max(rep.max_exp_residual, res);
        } catch (const DegeneracyError&) {
          // requested guard was below the library's own; count it skipped
          ++rep.skipped_degenerate;
        }
      }
  if (rep.evaluated > 0) {
    rep.mean_commutator_norm = comm_sum / rep.evaluated;
    rep.mean_exp_residual = res_sum / rep.evaluated;
  }
  return rep;
}

}  // namespace qwalk
