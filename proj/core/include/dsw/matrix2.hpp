#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace dsw {

using cplx = std::complex<double>;

// Dense complex 2x2 matrix, the working type for all parametrix algebra.
struct Matrix2 {
  cplx m11{0.0}, m12{0.0}, m21{0.0}, m22{0.0};

  static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  static Matrix2 diag(cplx d1, cplx d2) { return {d1, 0.0, 0.0, d2}; }

  // exp(c * sigma3) = diag(e^c, e^-c)
  static Matrix2 exp_sigma3(cplx c) { return diag(std::exp(c), std::exp(-c)); }

  cplx det() const { return m11 * m22 - m12 * m21; }

  cplx trace() const { return m11 + m22; }

  // sigma1 * M * sigma1: swaps rows and columns simultaneously.
  Matrix2 sigma1_conj() const { return {m22, m21, m12, m11}; }

  Matrix2 inverse() const {
    const cplx d = det();
    return {m22 / d, -m12 / d, -m21 / d, m11 / d};
  }

  double max_abs() const {
    return std::max(std::max(std::abs(m11), std::abs(m12)),
                    std::max(std::abs(m21), std::abs(m22)));
  }

  Matrix2& operator+=(const Matrix2& o) {
    m11 += o.m11;
    m12 += o.m12;
    m21 += o.m21;
    m22 += o.m22;
    return *this;
  }

  Matrix2& operator-=(const Matrix2& o) {
    m11 -= o.m11;
    m12 -= o.m12;
    m21 -= o.m21;
    m22 -= o.m22;
    return *this;
  }
};

inline Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

inline Matrix2 operator*(cplx s, const Matrix2& a) {
  return {s * a.m11, s * a.m12, s * a.m21, s * a.m22};
}

inline Matrix2 operator+(Matrix2 a, const Matrix2& b) { return a += b; }

inline Matrix2 operator-(Matrix2 a, const Matrix2& b) { return a -= b; }

// Largest entrywise deviation, the residual measure used by the jump tests.
inline double max_abs_diff(const Matrix2& a, const Matrix2& b) {
  return (a - b).max_abs();
}

}  // namespace dsw
