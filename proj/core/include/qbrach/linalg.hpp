// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "qbrach/types.hpp"

namespace qbrach {

// Pauli matrix sigma_k, k in {1,2,3}.
const Matrix2& pauli(int k);

// M = trace_part * 1 + vector_part . sigma
struct PauliDecomposition {
  Complex trace_part;
  Vector3c vector_part;

  Matrix2 reconstruct() const;
};

PauliDecomposition pauli_decompose(const Matrix2& m);

// exp(-i M t / hbar). Uses the analytically continued two-level closed form
// cos(w) 1 - i (t/hbar) sinc(w) (c.sigma) with w = sqrt(c.c) t / hbar on the
// principal branch; sinc's series covers the nilpotent limit c.c -> 0.
Matrix2 mat_exp2(const Matrix2& m, double t);

// exp(-i M t / hbar): eigendecomposition when M is Hermitian, scaling-and-
// squaring otherwise.
Matrix4 mat_exp4(const Matrix4& m, double t);

struct Eigensystem2 {
  std::array<Complex, 2> values;   // sorted by real part ascending, then imag
  std::array<Vector2, 2> vectors;  // unit Dirac norm
  bool degenerate = false;         // eigenvalues coincide within tolerance
};

// Closed-form quadratic eigensolver for arbitrary complex 2x2 matrices.
Eigensystem2 eig2(const Matrix2& m);

}  // namespace qbrach
