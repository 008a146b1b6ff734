#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace diracnl {

using Complex = std::complex<double>;

/// Dense complex 4x4 matrix, row-major. Value type; all arithmetic is
/// plain element/row-column work on the fixed 4x4 size.
class Matrix4C {
public:
  Matrix4C() : a_{} {}

  static Matrix4C identity() {
    Matrix4C m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }
  static Matrix4C zero() { return Matrix4C{}; }

  Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(4 * i + j)]; }
  const Complex& operator()(int i, int j) const { return a_[static_cast<std::size_t>(4 * i + j)]; }

  Matrix4C operator+(const Matrix4C& o) const {
    Matrix4C r;
    for (std::size_t k = 0; k < 16; ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }
  Matrix4C operator-(const Matrix4C& o) const {
    Matrix4C r;
    for (std::size_t k = 0; k < 16; ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }
  Matrix4C operator*(const Matrix4C& o) const {
    Matrix4C r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Complex s = 0.0;
        for (int k = 0; k < 4; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }
  friend Matrix4C operator*(Complex c, const Matrix4C& m) {
    Matrix4C r;
    for (std::size_t k = 0; k < 16; ++k) r.a_[k] = c * m.a_[k];
    return r;
  }
  friend Matrix4C operator*(double c, const Matrix4C& m) { return Complex(c) * m; }

  Matrix4C adjoint() const {
    Matrix4C r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  /// max_ij |a_ij|
  double max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  /// max_ij |a_ij - b_ij|
  double max_abs_diff(const Matrix4C& o) const { return (*this - o).max_abs(); }

  bool is_hermitian(double tol = 1e-12) const { return max_abs_diff(adjoint()) <= tol; }
  bool is_unitary(double tol = 1e-12) const {
    return ((*this) * adjoint()).max_abs_diff(identity()) <= tol;
  }

private:
  std::array<Complex, 16> a_;
};

/// Momentum in units of mc (natural units: hbar = m = c = 1, so the
/// Compton wavelength is 1 and energies come out in units of mc^2).
struct Momentum3 {
  double px = 0.0;
  double py = 0.0;
  double pz = 0.0;

  double norm_sq() const { return px * px + py * py + pz * pz; }
  double norm() const { return std::sqrt(norm_sq()); }
  /// E_p = sqrt(1 + p^2)
  double energy() const { return std::sqrt(1.0 + norm_sq()); }
};

/// Four complex spinor amplitudes.
struct FourSpinor {
  std::array<Complex, 4> c{};

  Complex& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const Complex& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  double norm_sq() const {
    double s = 0.0;
    for (const auto& v : c) s += std::norm(v);
    return s;
  }
};

} // namespace diracnl
