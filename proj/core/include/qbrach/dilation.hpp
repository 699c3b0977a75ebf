// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0
//
// Embeds the PT-symmetric two-level evolution into four-dimensional Hermitian
// dynamics. Two variants:
//   - unitary_dilation: per-time contraction dilation of V(t) =
//     exp(-iHt/hbar)/sigma_max(t); the projected motion provably reproduces
//     the PT ray.
//   - fixed_dilation_hamiltonian: a single Hermitian 4x4 generator whose
//     eigenvectors complete the zero-padded eigenvector frame of H and H^dag;
//     its projected dynamics is measured against the PT motion, not asserted.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qbrach/pt.hpp"
#include "qbrach/types.hpp"

namespace qbrach {

struct Frame4 {
  // Normalized eigenvectors of H (first two) and H^dag (last two).
  std::array<Vector2, 4> vectors;
  Matrix2 frame_operator;     // sum |v><v|, equals 2*identity for this family
  double identity_deviation;  // || F - (tr F / 2) 1 ||
};

Frame4 povm_frame(const PTParams& p);

// Zero-padded embedding of a system state and its left inverse.
Vector4 embed(const Vector2& psi);
Vector2 project(const Vector4& psi);

struct UnitaryDilation {
  Matrix4 unitary;
  double sigma_max;  // largest singular value of exp(-iHt/hbar)
};

// [[V, (1-VV+)^{1/2}], [(1-V+V)^{1/2}, -V+]] with V = exp(-iHt/hbar)/sigma_max.
UnitaryDilation unitary_dilation(const PTParams& p, double t);

struct FidelitySample {
  double t;
  double fidelity;
};

struct FixedDilation {
  Matrix4 hamiltonian;            // Hermitian, spectrum = eigenvalues below
  std::array<Vector4, 4> basis;   // orthonormal; top components ~ frame rays
  std::array<double, 4> eigenvalues;
  std::vector<FidelitySample> fidelity_profile;  // projected vs pt_evolve rays
};

// Naimark-style completion of the frame into an orthonormal 4-basis and the
// Hermitian generator sum_k lambda_k |w_k><w_k|. Default eigenvalue
// assignment pairs (E+, E-, E+, E-) with the (H, H^dag) eigenvector order.
FixedDilation fixed_dilation_hamiltonian(
    const PTParams& p,
    std::optional<std::array<double, 4>> eigenvalue_assignment = std::nullopt,
    double profile_t_max = -1.0, int profile_points = 100);

}  // namespace qbrach
