// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0

#include "qbrach/linalg.hpp"

#include <cmath>

#include <doctest.h>

#include "qbrach/config.hpp"
#include "qbrach/error.hpp"
#include "qbrach/pt.hpp"
#include "support.hpp"

using namespace qbrach;
using qtest::TestRng;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("pauli decomposition of the identity") {
  const auto d = pauli_decompose(Matrix2::Identity());
  CHECK(std::abs(d.trace_part - 1.0) < 1e-15);
  CHECK(d.vector_part.norm() < 1e-15);
}

TEST_CASE("pauli decomposition of the spin-flip Hamiltonian") {
  const double omega = 1.7;
  Matrix2 h;
  h << 0, -0.5 * omega, -0.5 * omega, 0;
  const auto d = pauli_decompose(h);
  CHECK(std::abs(d.trace_part) < 1e-15);
  CHECK(std::abs(d.vector_part(0) - Complex(-0.5 * omega)) < 1e-15);
  CHECK(std::abs(d.vector_part(1)) < 1e-15);
  CHECK(std::abs(d.vector_part(2)) < 1e-15);
}

TEST_CASE("pauli decomposition of the PT family") {
  const PTParams p{1.3, 0.7, 2.1};
  const auto d = pauli_decompose(p.to_matrix());
  CHECK(std::abs(d.trace_part - p.r * std::cos(p.theta)) < 1e-15);
  CHECK(std::abs(d.vector_part(0) - Complex(p.s)) < 1e-15);
  CHECK(std::abs(d.vector_part(1)) < 1e-15);
  CHECK(std::abs(d.vector_part(2) - qtest::kI * (p.r * std::sin(p.theta))) <
        1e-15);
}

TEST_CASE("pauli round trip on random matrices") {
  TestRng rng(11);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Matrix2 m = rng.matrix2();
    worst = std::max(worst,
                     (pauli_decompose(m).reconstruct() - m).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-14);
}

TEST_CASE("mat_exp2 of the zero matrix") {
  const Matrix2 u = mat_exp2(Matrix2::Zero(), 3.7);
  CHECK((u - Matrix2::Identity()).norm() < 1e-15);
}

TEST_CASE("mat_exp2 rotation generated by the spin-flip Hamiltonian") {
  const double omega = 1.0;
  Matrix2 h;
  h << 0, -0.5 * omega, -0.5 * omega, 0;
  for (const double t : {0.4, 1.1, 2.9}) {
    const Matrix2 u = mat_exp2(h, t);
    const double phi = 0.5 * omega * t / hbar();
    CHECK(std::abs(u(0, 0) - Complex(std::cos(phi))) < 1e-14);
    CHECK(std::abs(u(0, 1) - qtest::kI * std::sin(phi)) < 1e-14);
    CHECK(std::abs(u(1, 0) - qtest::kI * std::sin(phi)) < 1e-14);
    CHECK(std::abs(u(1, 1) - Complex(std::cos(phi))) < 1e-14);
  }
  // the rotation carries (1,0) onto the (0,1) ray at t = pi hbar / omega
  const Vector2 flipped = mat_exp2(h, qtest::kPi * hbar() / omega) * Vector2(1, 0);
  CHECK(std::abs(flipped(0)) < 1e-14);
  CHECK(std::abs(std::abs(flipped(1)) - 1.0) < 1e-14);
}

TEST_CASE("mat_exp2 against the series oracle") {
  const PTParams p{0.3, 1.0, 0.4};
  const double t = 0.7;
  const Matrix2 impl = mat_exp2(p.to_matrix(), t);
  const Matrix2 series =
      qtest::exp_taylor<Matrix2>(-qtest::kI * t / hbar() * p.to_matrix(), 20);
  CHECK((impl - series).cwiseAbs().maxCoeff() < 1e-12);

  TestRng rng(12);
  double worst = 0.0;
  for (int i = 0; i < 60; ++i) {
    const Matrix2 m = rng.matrix2(0.5);
    const double tt = rng.uniform(-1.0, 1.0);
    const Matrix2 ref =
        qtest::exp_taylor<Matrix2>(-qtest::kI * tt / hbar() * m, 30);
    worst = std::max(worst, (mat_exp2(m, tt) - ref).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("mat_exp2 handles nilpotent and negative-discriminant generators") {
  // c . c = 0: sigma_1 + i sigma_2 is nilpotent, the exponential truncates
  const Matrix2 nil = pauli(1) + qtest::kI * pauli(2);
  const double t = 1.3;
  const Matrix2 got = mat_exp2(nil, t);
  const Matrix2 want =
      Matrix2::Identity() - qtest::kI * (t / hbar()) * nil;
  CHECK((got - want).cwiseAbs().maxCoeff() < 1e-14);

  // broken-PT generator: complex eigenvalues, hyperbolic growth
  const PTParams broken{2.0, 0.5, qtest::kPi / 2.0};
  const Matrix2 m = broken.to_matrix();
  const Matrix2 ref = qtest::exp_taylor<Matrix2>(-qtest::kI * 0.8 * m, 40);
  CHECK((mat_exp2(m, 0.8) - ref).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("mat_exp2 semigroup property") {
  TestRng rng(13);
  double worst = 0.0;
  for (int i = 0; i < 60; ++i) {
    const Matrix2 m = rng.matrix2(0.5);
    const double t1 = rng.uniform(-1.5, 1.5), t2 = rng.uniform(-1.5, 1.5);
    worst = std::max(
        worst, (mat_exp2(m, t1) * mat_exp2(m, t2) - mat_exp2(m, t1 + t2)).norm());
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("mat_exp2 unitarity for Hermitian generators") {
  TestRng rng(14);
  double worst = 0.0;
  for (int i = 0; i < 40; ++i) {
    const Matrix2 m = rng.hermitian2();
    for (const double t : {-100.0, -3.2, 0.7, 42.0, 100.0}) {
      const Matrix2 u = mat_exp2(m, t);
      worst = std::max(worst, (u.adjoint() * u - Matrix2::Identity()).norm());
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("eig2 of sigma_3") {
  const auto sys = eig2(pauli(3));
  CHECK(std::abs(sys.values[0] - Complex(-1.0)) < 1e-15);
  CHECK(std::abs(sys.values[1] - Complex(1.0)) < 1e-15);
  CHECK(std::abs(std::abs(sys.vectors[0](1)) - 1.0) < 1e-15);  // axis vectors
  CHECK(std::abs(std::abs(sys.vectors[1](0)) - 1.0) < 1e-15);
  CHECK(!sys.degenerate);
}

TEST_CASE("eig2 reproduces the PT spectrum") {
  const PTParams p{1.0, 2.0, qtest::kPi / 2.0};
  const auto sys = eig2(p.to_matrix());
  const double root3 = 1.7320508075688772;
  CHECK(std::abs(sys.values[0] - Complex(-root3)) < 1e-14);
  CHECK(std::abs(sys.values[1] - Complex(root3)) < 1e-14);
}

TEST_CASE("eig2 residuals on random samples") {
  TestRng rng(15);
  double worst = 0.0;
  for (int i = 0; i < 120; ++i) {
    const Matrix2 m = i % 2 == 0 ? rng.matrix2() : rng.hermitian2();
    const auto sys = eig2(m);
    if (sys.degenerate) continue;
    for (int k = 0; k < 2; ++k)
      worst = std::max(worst,
                       (m * sys.vectors[k] - sys.values[k] * sys.vectors[k]).norm());
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("eig2 degenerate cases") {
  const auto scalar = eig2(2.5 * Matrix2::Identity());
  CHECK(scalar.degenerate);
  CHECK(std::abs(scalar.values[0] - Complex(2.5)) < 1e-15);
  CHECK(std::abs(scalar.vectors[0].dot(scalar.vectors[1])) < 1e-15);

  Matrix2 defective;
  defective << 1, 1, 0, 1;
  const auto sys = eig2(defective);
  CHECK(sys.degenerate);
  CHECK(std::abs(sys.values[0] - Complex(1.0)) < 1e-12);
}

TEST_CASE("mat_exp4 basics") {
  CHECK((mat_exp4(Matrix4::Zero(), 2.2) - Matrix4::Identity()).norm() < 1e-15);

  Matrix4 diag = Matrix4::Zero();
  const double entries[4] = {0.3, -1.2, 2.0, 0.0};
  for (int k = 0; k < 4; ++k) diag(k, k) = entries[k];
  const Matrix4 u = mat_exp4(diag, 1.4);
  for (int k = 0; k < 4; ++k) {
    const Complex want = std::exp(-qtest::kI * (entries[k] * 1.4 / hbar()));
    CHECK(std::abs(u(k, k) - want) < 1e-14);
  }
}

TEST_CASE("mat_exp4 unitarity and series agreement") {
  TestRng rng(16);
  double worst_u = 0.0, worst_s = 0.0;
  for (int i = 0; i < 20; ++i) {
    Matrix4 m;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) m(a, b) = rng.cgauss();
    const Matrix4 herm = 0.5 * (m + m.adjoint());
    const Matrix4 u = mat_exp4(herm, rng.uniform(-20.0, 20.0));
    worst_u = std::max(worst_u, (u.adjoint() * u - Matrix4::Identity()).norm());

    const Matrix4 small = 0.25 * m;  // general, non-Hermitian branch
    const double t = rng.uniform(-1.0, 1.0);
    const Matrix4 ref =
        qtest::exp_taylor<Matrix4>(-qtest::kI * t / hbar() * small, 30);
    worst_s = std::max(worst_s, (mat_exp4(small, t) - ref).norm());
  }
  CHECK(worst_u < 1e-12);
  CHECK(worst_s < 1e-10);
}

TEST_SUITE_END();
