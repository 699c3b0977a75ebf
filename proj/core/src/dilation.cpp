// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0

#include "qbrach/dilation.hpp"

#include <cmath>
#include <numbers>

#include "qbrach/config.hpp"
#include "qbrach/error.hpp"
#include "qbrach/linalg.hpp"

namespace qbrach {

namespace {

// Square root of a Hermitian PSD matrix; eigenvalues in [-clip, 0) are taken
// as exact zeros, anything lower is a genuine positivity failure.
Matrix2 sqrt_psd(const Matrix2& m, const char* op, double clip = 1e-12) {
  Eigen::SelfAdjointEigenSolver<Matrix2> es(0.5 * (m + m.adjoint()));
  Vector2 roots;
  for (int k = 0; k < 2; ++k) {
    const double lam = es.eigenvalues()(k);
    if (lam < -clip)
      throw Error(ErrorCode::NotPositive,
                  std::string(op) + ": matrix has a negative eigenvalue");
    roots(k) = std::sqrt(std::max(0.0, lam));
  }
  return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Frame4 povm_frame(const PTParams& p) {
  const PTEigensystem sys = pt_eigensystem(p);
  const PTParams adj{p.r, p.s, -p.theta};  // H(theta)^dag = H(-theta)
  const PTEigensystem sys_adj = pt_eigensystem(adj);

  Frame4 out;
  out.vectors[0] = sys.v_plus.normalized();
  out.vectors[1] = sys.v_minus.normalized();
  out.vectors[2] = sys_adj.v_plus.normalized();
  out.vectors[3] = sys_adj.v_minus.normalized();

  out.frame_operator = Matrix2::Zero();
  for (const auto& v : out.vectors) out.frame_operator += v * v.adjoint();
  const Complex half_trace = 0.5 * out.frame_operator.trace();
  out.identity_deviation =
      (out.frame_operator - half_trace * Matrix2::Identity()).norm();
  return out;
}

Vector4 embed(const Vector2& psi) {
  Vector4 out;
  out << psi(0), psi(1), 0, 0;
  return out;
}

Vector2 project(const Vector4& psi) { return Vector2(psi(0), psi(1)); }

UnitaryDilation unitary_dilation(const PTParams& p, double t) {
  require_unbroken(p, "unitary_dilation");
  const Matrix2 u2 = mat_exp2(p.to_matrix(), t);

  Eigen::JacobiSVD<Matrix2> svd(u2);
  UnitaryDilation out;
  out.sigma_max = svd.singularValues()(0);

  const Matrix2 v = u2 / out.sigma_max;
  const Matrix2 d_left =
      sqrt_psd(Matrix2::Identity() - v * v.adjoint(), "unitary_dilation");
  const Matrix2 d_right =
      sqrt_psd(Matrix2::Identity() - v.adjoint() * v, "unitary_dilation");

  out.unitary.topLeftCorner<2, 2>() = v;
  out.unitary.topRightCorner<2, 2>() = d_left;
  out.unitary.bottomLeftCorner<2, 2>() = d_right;
  out.unitary.bottomRightCorner<2, 2>() = -v.adjoint();
  return out;
}

FixedDilation fixed_dilation_hamiltonian(
    const PTParams& p, std::optional<std::array<double, 4>> eigenvalue_assignment,
    double profile_t_max, int profile_points) {
  const Frame4 frame = povm_frame(p);
  const PTEigensystem sys = pt_eigensystem(p);

  std::array<double, 4> lambda = eigenvalue_assignment.value_or(
      std::array<double, 4>{sys.e_plus, sys.e_minus, sys.e_plus, sys.e_minus});

  // Scale the frame so that the 2x4 top block A has A A^dag = 1 (the frame
  // operator is 2*identity, so 1/sqrt(2) is exact). Then 1 - A^dag A is PSD
  // of rank <= 2 and the two aux rows complete an orthonormal 4-basis.
  Eigen::Matrix<Complex, 2, 4> a;
  for (int k = 0; k < 4; ++k)
    a.col(k) = frame.vectors[static_cast<std::size_t>(k)] / std::sqrt(2.0);

  const Matrix4 residual = Matrix4::Identity() - a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<Matrix4> es(residual);
  const auto& mu = es.eigenvalues();
  if (mu(0) < -1e-10 || mu(1) > 1e-10)
    throw Error(ErrorCode::CompletionFailure,
                "fixed_dilation_hamiltonian: residual is not PSD of rank 2");

  Eigen::Matrix<Complex, 2, 4> b;
  for (int j = 0; j < 2; ++j) {
    const double m = std::max(0.0, mu(j + 2));
    b.row(j) = std::sqrt(m) * es.eigenvectors().col(j + 2).adjoint();
  }

  FixedDilation out;
  out.eigenvalues = lambda;
  out.hamiltonian = Matrix4::Zero();
  for (int k = 0; k < 4; ++k) {
    Vector4 w;
    w << a(0, k), a(1, k), b(0, k), b(1, k);
    out.basis[static_cast<std::size_t>(k)] = w;
    out.hamiltonian += lambda[static_cast<std::size_t>(k)] * w * w.adjoint();
  }

  // Measured fidelity between the projected 4-dimensional motion of the
  // embedded spin-up state and the PT trajectory; surfaced, not asserted.
  const double gap = std::abs(sys.e_plus - sys.e_minus);
  if (profile_t_max <= 0.0)
    profile_t_max = 2.0 * std::numbers::pi * hbar() / std::max(gap, 1e-12);
  const Vector2 psi0(1, 0);
  out.fidelity_profile.reserve(static_cast<std::size_t>(profile_points));
  for (int i = 0; i < profile_points; ++i) {
    const double t = profile_t_max * i / std::max(1, profile_points - 1);
    const Vector4 big = mat_exp4(out.hamiltonian, t) * embed(psi0);
    const Vector2 projected = project(big);
    const Vector2 reference = pt_evolve(p, psi0, t);
    out.fidelity_profile.push_back({t, fidelity(projected, reference)});
  }
  return out;
}

}  // namespace qbrach
