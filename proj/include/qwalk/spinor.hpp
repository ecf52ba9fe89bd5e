// spinor.hpp
// Two-component complex spinors, 2x2 matrices, Pauli operators and their
// eigenbases, and the one-parameter coin rotation defined over each basis.
//
// Everything is expressed in the sigma_z eigenbasis {down, up}; the other
// Pauli bases appear only through pauli_eigenbasis().

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace qwalk {

using Complex = std::complex<double>;

// Coin-space quantization axes. X, Y, Z correspond to sigma_x, sigma_y,
// sigma_z respectively.
enum class PauliAxis { X, Y, Z };

inline constexpr std::array<PauliAxis, 3> all_axes{PauliAxis::X, PauliAxis::Y,
                                                   PauliAxis::Z};

inline char axis_name(PauliAxis a) {
  switch (a) {
    case PauliAxis::X: return 'x';
    case PauliAxis::Y: return 'y';
    case PauliAxis::Z: return 'z';
  }
  return '?';
}

// Two complex amplitudes on the internal basis |down>, |up>.
struct Spinor2 {
  Complex down{0.0, 0.0};
  Complex up{0.0, 0.0};

  double norm2() const { return std::norm(down) + std::norm(up); }

  bool is_zero() const {
    return down == Complex{0.0, 0.0} && up == Complex{0.0, 0.0};
  }

  bool finite() const {
    return std::isfinite(down.real()) && std::isfinite(down.imag()) &&
           std::isfinite(up.real()) && std::isfinite(up.imag());
  }

  Spinor2& operator+=(const Spinor2& o) {
    down += o.down;
    up += o.up;
    return *this;
  }
};

inline Spinor2 operator*(Complex c, const Spinor2& s) {
  return {c * s.down, c * s.up};
}

inline Spinor2 operator+(Spinor2 a, const Spinor2& b) { return a += b; }

inline Spinor2 operator-(const Spinor2& a, const Spinor2& b) {
  return {a.down - b.down, a.up - b.up};
}

// <a|b>
inline Complex inner(const Spinor2& a, const Spinor2& b) {
  return std::conj(a.down) * b.down + std::conj(a.up) * b.up;
}

// Row-major 2x2 complex matrix in the sigma_z basis.
struct Matrix2 {
  std::array<Complex, 4> m{};  // [row * 2 + col]

  Complex& operator()(int r, int c) { return m[r * 2 + c]; }
  const Complex& operator()(int r, int c) const { return m[r * 2 + c]; }

  static Matrix2 identity();
  static Matrix2 zero() { return {}; }

  Matrix2 adjoint() const {
    return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]),
             std::conj(m[3])}};
  }

  Complex trace() const { return m[0] + m[3]; }
  Complex det() const { return m[0] * m[3] - m[1] * m[2]; }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& e : m) s += std::norm(e);
    return std::sqrt(s);
  }
};

inline Matrix2 mat2(Complex m00, Complex m01, Complex m10, Complex m11) {
  Matrix2 r;
  r.m = {m00, m01, m10, m11};
  return r;
}

inline Matrix2 Matrix2::identity() {
  return mat2(Complex{1.0}, Complex{}, Complex{}, Complex{1.0});
}

inline Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

inline Spinor2 operator*(const Matrix2& a, const Spinor2& s) {
  return {a.m[0] * s.down + a.m[1] * s.up, a.m[2] * s.down + a.m[3] * s.up};
}

inline Matrix2 operator*(Complex c, const Matrix2& a) {
  Matrix2 r = a;
  for (auto& e : r.m) e *= c;
  return r;
}

inline Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

inline Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

// |a><b|
inline Matrix2 outer(const Spinor2& a, const Spinor2& b) {
  return mat2(a.down * std::conj(b.down), a.down * std::conj(b.up),
              a.up * std::conj(b.down), a.up * std::conj(b.up));
}

inline Matrix2 pauli_matrix(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X:
      return mat2(Complex{}, Complex{1.0}, Complex{1.0}, Complex{});
    case PauliAxis::Y:
      return mat2(Complex{}, Complex{0.0, -1.0}, Complex{0.0, 1.0},
                  Complex{});
    case PauliAxis::Z:
      return mat2(Complex{1.0}, Complex{}, Complex{}, Complex{-1.0});
  }
  throw std::invalid_argument("pauli_matrix: bad axis");
}

// Normalized +1 / -1 eigenvectors of one Pauli operator. These are the
// translational eigenstates of the walk: the plus member moves forward
// along its axis, the minus member backward.
struct EigenBasis {
  Spinor2 plus;
  Spinor2 minus;
};

inline EigenBasis pauli_eigenbasis(PauliAxis axis) {
  constexpr double r = 0.70710678118654752440;  // 1/sqrt(2)
  EigenBasis b;
  switch (axis) {
    case PauliAxis::X:
      b.plus = Spinor2{Complex{r}, Complex{r}};
      b.minus = Spinor2{Complex{r}, Complex{-r}};
      return b;
    case PauliAxis::Y:
      b.plus = Spinor2{Complex{r}, Complex{0.0, r}};
      b.minus = Spinor2{Complex{r}, Complex{0.0, -r}};
      return b;
    case PauliAxis::Z:
      b.plus = Spinor2{Complex{1.0}, Complex{}};
      b.minus = Spinor2{Complex{}, Complex{1.0}};
      return b;
  }
  throw std::invalid_argument("pauli_eigenbasis: bad axis");
}

// One-parameter coin rotation over the eigenbasis of the given axis:
//   cos(t)|+><+| + sin(t)|+><-| - sin(t)|-><+| + cos(t)|-><-|.
// Closed forms in the sigma_z basis; the outer-product sum is kept as an
// independent route in the tests.
inline Matrix2 coin_operator(PauliAxis axis, double theta) {
  if (!std::isfinite(theta))
    throw std::invalid_argument("coin_operator: theta must be finite");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  switch (axis) {
    case PauliAxis::Z:
      return mat2(Complex{c}, Complex{s}, Complex{-s}, Complex{c});
    case PauliAxis::X:
      return mat2(Complex{c}, Complex{-s}, Complex{s}, Complex{c});
    case PauliAxis::Y:
      return mat2(Complex{c}, Complex{0.0, s}, Complex{0.0, s}, Complex{c});
  }
  throw std::invalid_argument("coin_operator: bad axis");
}

}  // namespace qwalk
