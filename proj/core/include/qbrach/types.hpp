// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qbrach {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector2 = Eigen::Vector2cd;
using Vector3c = Eigen::Vector3cd;
using Vector4 = Eigen::Vector4cd;

inline constexpr Complex kImag{0.0, 1.0};

// All operations reject NaN/Inf on entry rather than propagating them.
template <typename Derived>
bool is_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  return true;
}

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Ray fidelity |<a|b>|^2 / (|a|^2 |b|^2); states compare as rays, not vectors.
inline double fidelity(const Vector2& a, const Vector2& b) {
  const double na = a.squaredNorm(), nb = b.squaredNorm();
  return std::norm(a.dot(b)) / (na * nb);
}

inline double fidelity(const Vector4& a, const Vector4& b) {
  const double na = a.squaredNorm(), nb = b.squaredNorm();
  return std::norm(a.dot(b)) / (na * nb);
}

}  // namespace qbrach
