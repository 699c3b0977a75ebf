// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0

#include "qbrach/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "qbrach/config.hpp"

namespace qbrach {

namespace {

void require_finite_2(const Matrix2& m, const char* op) {
  if (!is_finite(m))
    throw std::invalid_argument(std::string(op) + ": non-finite matrix entry");
}

// sin(w)/w on the principal sheet; series below |w| ~ 1e-4 where the direct
// quotient loses digits.
Complex sinc(Complex w) {
  if (std::abs(w) < 1e-4) {
    const Complex w2 = w * w;
    return 1.0 - w2 / 6.0 + w2 * w2 / 120.0;
  }
  return std::sin(w) / w;
}

}  // namespace

const Matrix2& pauli(int k) {
  static const std::array<Matrix2, 3> sigma = [] {
    std::array<Matrix2, 3> s;
    s[0] << 0, 1, 1, 0;
    s[1] << 0, Complex(0, -1), Complex(0, 1), 0;
    s[2] << 1, 0, 0, -1;
    return s;
  }();
  if (k < 1 || k > 3) throw std::out_of_range("pauli: index must be 1, 2 or 3");
  return sigma[static_cast<std::size_t>(k - 1)];
}

Matrix2 PauliDecomposition::reconstruct() const {
  Matrix2 m = trace_part * Matrix2::Identity();
  for (int k = 0; k < 3; ++k) m += vector_part(k) * pauli(k + 1);
  return m;
}

PauliDecomposition pauli_decompose(const Matrix2& m) {
  require_finite_2(m, "pauli_decompose");
  PauliDecomposition d;
  d.trace_part = 0.5 * (m(0, 0) + m(1, 1));
  d.vector_part(0) = 0.5 * (m(0, 1) + m(1, 0));
  d.vector_part(1) = 0.5 * kImag * (m(0, 1) - m(1, 0));
  d.vector_part(2) = 0.5 * (m(0, 0) - m(1, 1));
  return d;
}

Matrix2 mat_exp2(const Matrix2& m, double t) {
  require_finite_2(m, "mat_exp2");
  if (!std::isfinite(t)) throw std::invalid_argument("mat_exp2: non-finite t");

  const double tau = t / hbar();
  const auto d = pauli_decompose(m);
  // Bilinear square, no conjugation: the PT family has a complex unit vector.
  const Complex cdotc = d.vector_part(0) * d.vector_part(0) +
                        d.vector_part(1) * d.vector_part(1) +
                        d.vector_part(2) * d.vector_part(2);
  const Complex w = std::sqrt(cdotc) * tau;
  const Complex phase = std::exp(-kImag * d.trace_part * tau);
  const Matrix2 csigma = m - d.trace_part * Matrix2::Identity();
  return phase * (std::cos(w) * Matrix2::Identity() -
                  kImag * tau * sinc(w) * csigma);
}

Matrix4 mat_exp4(const Matrix4& m, double t) {
  if (!is_finite(m) || !std::isfinite(t))
    throw std::invalid_argument("mat_exp4: non-finite input");

  const double tau = t / hbar();
  const double scale = std::max(1.0, m.norm());
  if ((m - m.adjoint()).norm() <= 1e-12 * scale) {
    Eigen::SelfAdjointEigenSolver<Matrix4> es(m);
    Vector4 phases;
    for (int k = 0; k < 4; ++k)
      phases(k) = std::exp(-kImag * es.eigenvalues()(k) * tau);
    return es.eigenvectors() * phases.asDiagonal() *
           es.eigenvectors().adjoint();
  }
  const Matrix4 a = -kImag * tau * m;
  return a.exp();
}

Eigensystem2 eig2(const Matrix2& m) {
  require_finite_2(m, "eig2");

  const Complex mean = 0.5 * (m(0, 0) + m(1, 1));
  const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const Complex root = std::sqrt(mean * mean - det);
  Complex lam[2] = {mean - root, mean + root};
  auto before = [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  };
  if (before(lam[1], lam[0])) std::swap(lam[0], lam[1]);

  Eigensystem2 out;
  const double scale = m.norm();
  // tolerance relative to the matrix norm; the quadratic itself is exact
  out.degenerate = std::abs(lam[1] - lam[0]) <= 1e-12 * scale;

  for (int i = 0; i < 2; ++i) {
    out.values[i] = lam[i];
    // (M - lam) annihilates both row candidates exactly; take the bigger one.
    const Vector2 a(m(0, 1), lam[i] - m(0, 0));
    const Vector2 b(lam[i] - m(1, 1), m(1, 0));
    Vector2 v = a.norm() >= b.norm() ? a : b;
    if (v.norm() <= 1e-14 * scale) {
      // scalar matrix: fall back to the canonical basis
      v = i == 0 ? Vector2(1, 0) : Vector2(0, 1);
    }
    out.vectors[i] = v.normalized();
  }
  return out;
}

}  // namespace qbrach
