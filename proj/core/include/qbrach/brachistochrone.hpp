// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0
//
// Hermitian quantum brachistochrone: Fubini-Study geometry on the Bloch
// sphere, optimal-Hamiltonian synthesis under a fixed spectral gap, minimum
// evolution times, and the constrained three-level orthogonalization.

#pragma once

#include <optional>
#include <utility>

#include "qbrach/types.hpp"

namespace qbrach {

// Geodesic distance between the rays of psi1 and psi2, in [0, pi].
double fs_distance(const Vector2& psi1, const Vector2& psi2);

struct BlochAngles {
  double theta;  // polar angle, [0, pi]
  double phi;    // azimuth, (-pi, pi]; reported 0 at the poles
};

BlochAngles bloch_angles(const Vector2& psi);

struct BrachistochroneSolution {
  Matrix2 hamiltonian;  // trace-free, Hermitian, eigenvalues +-gap/2
  Vector2 e_plus;       // eigenstate with eigenvalue +gap/2
  Vector2 e_minus;      // eigenstate with eigenvalue -gap/2
  double gap;
  double min_time;
  double distance;  // geodesic distance s_min between the input rays
};

// Fastest Hamiltonian with spectral gap `omega` carrying psi_i to psi_f.
// Antipodal inputs (infinitely many geodesics) get the deterministic
// representative built from the inputs as given.
BrachistochroneSolution optimal_hamiltonian(const Vector2& psi_i,
                                            const Vector2& psi_f,
                                            double omega);

// exp(-i H t / hbar) psi
Vector2 evolve(const Matrix2& h, const Vector2& psi, double t);

// H - <psi|H|psi> 1
Matrix2 mean_adjusted(const Matrix2& h, const Vector2& psi);

// Evolution speed 2 DeltaH / hbar of psi under h.
double aa_speed(const Matrix2& h, const Vector2& psi);

// Minimum orthogonalization time pi hbar / omega.
double passage_time(double omega);

struct HermitianParams {
  double r = 0;  // off-diagonal magnitude, >= 0
  double s = 0;  // upper diagonal entry
  double u = 0;  // lower diagonal entry
  double theta = 0;

  Matrix2 to_matrix() const;
  double gap() const;  // sqrt((s-u)^2 + 4 r^2)
};

// Time at which the evolved (1,0) state first attains lower-component
// magnitude b_mag under the params' Hamiltonian.
double variational_time(const HermitianParams& params, double b_mag);

// Minimum time to carry psi_i to psi_f at gap omega: 2 hbar arcsin|b| / omega.
double min_time(const Vector2& psi_i, const Vector2& psi_f, double omega);

struct ThreeLevelSpec {
  double omega_ji;  // E_j - E_i > 0
  double omega_ki;  // E_k - E_i >= omega_ji
  double alpha = 0.78539816339744831;  // pi/4
  double beta = 0.78539816339744831;
  double phi = 0;     // phase variables; they drop out of the overlap
  double varphi = 0;
};

struct ThreeLevelResult {
  bool feasible;
  double time;  // first orthogonalization time when feasible, else 0
  std::optional<std::pair<int, int>> ratio;  // (m, n) with gap ratio odd/odd
  double scan_min_overlap;  // smallest |overlap| seen by the scan (0 if not run)
  double dispersion;        // DeltaH of the initial state, with E_i = 0
};

// Orthogonalization feasibility and first time for the three-level state.
// alpha = beta = pi/4 is resolved analytically through the odd-integer gap
// ratio condition; other angles fall back to a dense scan of the overlap.
ThreeLevelResult three_level_orthogonality(const ThreeLevelSpec& spec);

}  // namespace qbrach
