// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0

#include "qbrach/pt.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qbrach/config.hpp"
#include "qbrach/error.hpp"
#include "qbrach/linalg.hpp"

namespace qbrach {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

void require_unbroken(const PTParams& p, const char* op) {
  if (!std::isfinite(p.r) || !std::isfinite(p.s) || !std::isfinite(p.theta))
    throw std::invalid_argument(std::string(op) + ": non-finite parameter");
  const double scale = std::max({p.s * p.s, p.r * p.r, 1.0e-300});
  const double d = p.discriminant();
  if (std::abs(d) <= 1e-12 * scale)
    throw Error(ErrorCode::BrokenPT,
                std::string(op) + ": H is defective at the exceptional point",
                "EXCEPTIONAL");
  if (d < 0.0)
    throw Error(ErrorCode::BrokenPT,
                std::string(op) + ": PT symmetry is broken (s^2 <= r^2 sin^2 theta)");
}

Matrix2 PTParams::to_matrix() const {
  Matrix2 m;
  m << r * std::exp(kImag * theta), s, s, r * std::exp(-kImag * theta);
  return m;
}

double PTParams::discriminant() const {
  const double rs = r * std::sin(theta);
  return s * s - rs * rs;
}

bool PTParams::unbroken() const {
  const double scale = std::max({s * s, r * r, 1.0e-300});
  return discriminant() > 1e-12 * scale;
}

double PTParams::alpha() const { return std::asin(r * std::sin(theta) / s); }

double PTParams::omega() const {
  return 2.0 * std::sqrt(std::max(0.0, discriminant()));
}

Matrix2 parity() {
  Matrix2 p;
  p << 0, 1, 1, 0;
  return p;
}

PTEigensystem pt_eigensystem(const PTParams& p) {
  require_unbroken(p, "pt_eigensystem");
  const double a = p.alpha();
  const double root = std::sqrt(p.discriminant());
  const Complex half_a = kImag * (a / 2.0);

  PTEigensystem out;
  out.alpha = a;
  out.e_plus = p.r * std::cos(p.theta) + root;
  out.e_minus = p.r * std::cos(p.theta) - root;
  // (e^{i a/2}, e^{-i a/2}) carries eigenvalue r cos(theta) + s cos(alpha),
  // which is E+ for s > 0 and E- for s < 0.
  const Vector2 sym(std::exp(half_a), std::exp(-half_a));
  const Vector2 anti(kImag * std::exp(-half_a), -kImag * std::exp(half_a));
  if (p.s >= 0.0) {
    out.v_plus = sym;
    out.v_minus = anti;
  } else {
    out.v_plus = anti;
    out.v_minus = sym;
  }
  return out;
}

CPTFrame c_operator(const PTParams& p) {
  require_unbroken(p, "c_operator");
  const double a = p.alpha();
  Matrix2 c;
  c << kImag * std::sin(a), 1, 1, -kImag * std::sin(a);
  c /= std::cos(a);
  return CPTFrame{c, parity(), a};
}

Complex cpt_inner(const Vector2& a, const Vector2& b, const CPTFrame& frame) {
  const Vector2 w = frame.c * (frame.p * a.conjugate());
  return w(0) * b(0) + w(1) * b(1);
}

Vector2 pt_evolve(const PTParams& p, const Vector2& psi, double t) {
  require_unbroken(p, "pt_evolve");
  return mat_exp2(p.to_matrix(), t) * psi;
}

double spin_flip_time(const PTParams& p) {
  require_unbroken(p, "spin_flip_time");
  return (kPi - 2.0 * std::abs(p.alpha())) * hbar() / p.omega();
}

EquivalenceMap hermitian_equivalent(const PTParams& p) {
  require_unbroken(p, "hermitian_equivalent");
  const CPTFrame frame = c_operator(p);
  const Matrix2 cp = frame.c * frame.p;  // Hermitian positive on the unbroken region
  Eigen::SelfAdjointEigenSolver<Matrix2> es(cp);
  const auto& lam = es.eigenvalues();
  if (!(lam(0) > 1e-12 * std::max(1.0, lam(1))))
    throw Error(ErrorCode::NotPositive,
                "hermitian_equivalent: CP is not positive definite");

  const Matrix2 v = es.eigenvectors();
  Vector2 log_lam, inv_sqrt, sqrt_lam;
  for (int k = 0; k < 2; ++k) {
    log_lam(k) = std::log(lam(k));
    sqrt_lam(k) = std::sqrt(lam(k));
    inv_sqrt(k) = 1.0 / sqrt_lam(k);
  }
  EquivalenceMap out;
  out.q = v * log_lam.asDiagonal() * v.adjoint();
  const Matrix2 e_minus_half = v * inv_sqrt.asDiagonal() * v.adjoint();
  const Matrix2 e_plus_half = v * sqrt_lam.asDiagonal() * v.adjoint();
  out.h_tilde = e_minus_half * p.to_matrix() * e_plus_half;
  return out;
}

Vector3c effective_field(const PTParams& p) {
  return Vector3c(p.s, 0.0, kImag * p.r * std::sin(p.theta));
}

}  // namespace qbrach
