// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0
//
// PT-symmetric 2x2 theory:
//
//   H = [[r e^{i theta}, s], [s, r e^{-i theta}]]
//
// Real spectrum iff s^2 > r^2 sin^2 theta (the unbroken region). There the
// derived angle alpha with sin(alpha) = (r/s) sin(theta) is real and the
// spectral gap satisfies omega^2 = 4 s^2 - 4 r^2 sin^2 theta. The C operator
// defines a positive CPT inner product under which the evolution is unitary.

#pragma once

#include "qbrach/types.hpp"

namespace qbrach {

struct PTParams {
  double r = 0;
  double s = 0;
  double theta = 0;

  Matrix2 to_matrix() const;
  double discriminant() const;  // s^2 - r^2 sin^2 theta
  bool unbroken() const;
  double alpha() const;  // asin(r sin(theta) / s), real in the unbroken region
  double omega() const;  // 2 sqrt(discriminant)
};

// The parity (swap) matrix.
Matrix2 parity();

// Throws BrokenPT (tag EXCEPTIONAL at the defective boundary) unless the
// params lie strictly inside the unbroken region.
void require_unbroken(const PTParams& p, const char* op);

struct PTEigensystem {
  double e_plus;
  double e_minus;
  Vector2 v_plus;   // unnormalized eigenvectors; Dirac norm sqrt(2),
  Vector2 v_minus;  // CPT norm sqrt(2 cos alpha)
  double alpha;
};

// Eigenvalues r cos(theta) +- sqrt(s^2 - r^2 sin^2 theta) and eigenvectors.
// Throws BrokenPT outside the unbroken region (tag EXCEPTIONAL when the
// discriminant vanishes and H is defective).
PTEigensystem pt_eigensystem(const PTParams& p);

struct CPTFrame {
  Matrix2 c;
  Matrix2 p;  // parity
  double alpha;
};

// C = (1/cos alpha) [[i sin alpha, 1], [1, -i sin alpha]], the solution of
// C^2 = 1, [C,PT] = 0, [C,H] = 0 for this family.
CPTFrame c_operator(const PTParams& p);

// <a|b> = (C P a*)^T b. Positive-definite on the unbroken region.
Complex cpt_inner(const Vector2& a, const Vector2& b, const CPTFrame& frame);

// exp(-i H t / hbar) psi
Vector2 pt_evolve(const PTParams& p, const Vector2& psi, double t);

// Smallest positive time at which the evolved (1,0) becomes proportional to
// (0,1), optimized over the sign of theta: (pi - 2|alpha|) hbar / omega.
// Tends to 0 as |alpha| -> pi/2 at fixed omega.
double spin_flip_time(const PTParams& p);

struct EquivalenceMap {
  Matrix2 q;        // Hermitian, e^Q = CP
  Matrix2 h_tilde;  // e^{-Q/2} H e^{Q/2}, Hermitian, isospectral with H
};

EquivalenceMap hermitian_equivalent(const PTParams& p);

// The complex magnetic field (s, 0, i r sin theta) realized by the params;
// equals the Pauli vector part of H.
Vector3c effective_field(const PTParams& p);

}  // namespace qbrach
