// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0

#include "qbrach/pt.hpp"

#include <cmath>

#include <doctest.h>

#include "qbrach/config.hpp"
#include "qbrach/error.hpp"
#include "qbrach/linalg.hpp"
#include "support.hpp"

using namespace qbrach;
using qtest::kPi;
using qtest::TestRng;

namespace {

// frozen values for (r, s, theta) = (1, 2, pi/2)
constexpr double kRoot3 = 1.7320508075688772;
constexpr double kAlphaRef = 0.5235987755982988;    // asin(1/2)
constexpr double kCptNormRef = 1.3160740129524926;  // sqrt(2 cos alpha)

PTParams params_for_alpha(double alpha, double omega, double theta_sign) {
  const double s = omega / (2.0 * std::cos(alpha));
  return {s * std::sin(alpha), s, theta_sign * kPi / 2.0};
}

double cpt_norm2(const Vector2& v, const CPTFrame& f) {
  return std::real(cpt_inner(v, v, f));
}

}  // namespace

TEST_SUITE_BEGIN("pt");

TEST_CASE("eigensystem in the Hermitian limit") {
  const PTParams p{0.7, 1.9, 0.0};
  const auto sys = pt_eigensystem(p);
  CHECK(std::abs(sys.e_plus - (p.r + p.s)) < 1e-14);
  CHECK(std::abs(sys.e_minus - (p.r - p.s)) < 1e-14);
  CHECK(sys.alpha == 0.0);
  const Matrix2 h = p.to_matrix();
  CHECK((h * sys.v_plus - sys.e_plus * sys.v_plus).norm() < 1e-14);
  CHECK((h * sys.v_minus - sys.e_minus * sys.v_minus).norm() < 1e-14);
}

TEST_CASE("eigensystem of the reference PT point") {
  const PTParams p{1.0, 2.0, kPi / 2.0};
  const auto sys = pt_eigensystem(p);
  CHECK(std::abs(sys.e_plus - kRoot3) < 1e-14);
  CHECK(std::abs(sys.e_minus + kRoot3) < 1e-14);
  CHECK(std::abs(sys.alpha - kAlphaRef) < 1e-14);
  CHECK(std::abs(std::sin(sys.alpha) - 0.5) < 1e-14);

  const Matrix2 h = p.to_matrix();
  CHECK((h * sys.v_plus - sys.e_plus * sys.v_plus).norm() < 1e-12);
  CHECK((h * sys.v_minus - sys.e_minus * sys.v_minus).norm() < 1e-12);
}

TEST_CASE("CPT norms of the eigenvectors") {
  const PTParams p{1.0, 2.0, kPi / 2.0};
  const auto sys = pt_eigensystem(p);
  const CPTFrame frame = c_operator(p);
  CHECK(std::abs(std::sqrt(cpt_norm2(sys.v_plus, frame)) - kCptNormRef) < 1e-12);
  CHECK(std::abs(std::sqrt(cpt_norm2(sys.v_minus, frame)) - kCptNormRef) <
        1e-12);

  TestRng rng(41);
  for (int i = 0; i < 40; ++i) {
    const PTParams q = rng.unbroken();
    const auto s = pt_eigensystem(q);
    const CPTFrame f = c_operator(q);
    const double want = std::sqrt(2.0 * std::cos(s.alpha));
    CHECK(std::abs(std::sqrt(cpt_norm2(s.v_plus, f)) - want) < 1e-12);
    CHECK(std::abs(std::sqrt(cpt_norm2(s.v_minus, f)) - want) < 1e-12);
  }
}

TEST_CASE("eigenvector assignment follows the sign of s") {
  for (const double s : {1.5, -1.5}) {
    const PTParams p{0.5, s, 0.8};
    const auto sys = pt_eigensystem(p);
    CHECK(sys.e_plus > sys.e_minus);
    const Matrix2 h = p.to_matrix();
    CHECK((h * sys.v_plus - sys.e_plus * sys.v_plus).norm() < 1e-13);
    CHECK((h * sys.v_minus - sys.e_minus * sys.v_minus).norm() < 1e-13);
  }
}

TEST_CASE("broken and exceptional parameter sets are refused") {
  const PTParams broken{2.0, 0.5, kPi / 2.0};
  CHECK(!broken.unbroken());
  CHECK_THROWS_AS(pt_eigensystem(broken), Error);
  try {
    c_operator(broken);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BrokenPT);
    CHECK(e.tag().empty());
  }

  const double th = 0.9;
  const PTParams exceptional{1.0, std::sin(th), th};  // discriminant exactly 0
  try {
    pt_eigensystem(exceptional);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BrokenPT);
    CHECK(e.tag() == "EXCEPTIONAL");
  }
}

TEST_CASE("eig2 sees complex-conjugate spectra in the broken region") {
  const PTParams broken{2.0, 0.5, kPi / 2.0};
  const auto sys = eig2(broken.to_matrix());
  CHECK(std::abs(sys.values[0].imag()) > 0.1);
  CHECK(std::abs(sys.values[0].imag() + sys.values[1].imag()) < 1e-12);
  CHECK(std::abs(sys.values[0].real() - sys.values[1].real()) < 1e-12);
}

TEST_CASE("C operator reduces to parity in the Hermitian limit") {
  const PTParams p{0.7, 1.9, 0.0};
  const CPTFrame frame = c_operator(p);
  CHECK((frame.c - parity()).norm() < 1e-14);
}

TEST_CASE("C operator algebra") {
  const PTParams ref{1.0, 2.0, kPi / 2.0};
  const CPTFrame f0 = c_operator(ref);
  const double ca = std::cos(kAlphaRef);
  CHECK(std::abs(f0.c(0, 0) - qtest::kI * 0.5 / ca) < 1e-14);
  CHECK(std::abs(f0.c(0, 1) - Complex(1.0 / ca)) < 1e-14);

  TestRng rng(42);
  for (int i = 0; i < 50; ++i) {
    const PTParams p = rng.unbroken();
    const CPTFrame f = c_operator(p);
    const Matrix2 h = p.to_matrix();
    CHECK((f.c * f.c - Matrix2::Identity()).norm() < 1e-12);
    CHECK((f.c * h - h * f.c).norm() < 1e-12);
    CHECK((f.c * f.p - f.p * f.c.conjugate()).norm() < 1e-12);
    CHECK(std::abs(f.c.trace()) < 1e-12);
    CHECK(std::abs(f.c.determinant() - Complex(-1.0)) < 1e-12);
  }
}

TEST_CASE("CPT inner product") {
  const PTParams p{1.0, 2.0, kPi / 2.0};
  const auto sys = pt_eigensystem(p);
  const CPTFrame frame = c_operator(p);
  CHECK(std::abs(cpt_inner(sys.v_plus, sys.v_minus, frame)) < 1e-13);

  const PTParams hermitian{0.7, 1.9, 0.0};
  const CPTFrame f0 = c_operator(hermitian);
  CHECK(std::abs(cpt_inner(Vector2(1, 0), Vector2(1, 0), f0) - Complex(1.0)) <
        1e-14);

  TestRng rng(43);
  for (int i = 0; i < 40; ++i) {
    const PTParams q = rng.unbroken();
    const CPTFrame f = c_operator(q);
    Vector2 psi;
    psi << rng.cgauss(), rng.cgauss();
    CHECK(std::real(cpt_inner(psi, psi, f)) > 0.0);
    CHECK(std::abs(std::imag(cpt_inner(psi, psi, f))) < 1e-12);
  }
}

TEST_CASE("PT evolution matches the closed form and the series oracle") {
  TestRng rng(44);
  const Vector2 up(1, 0);
  for (int i = 0; i < 40; ++i) {
    const PTParams p = rng.unbroken();
    CHECK((pt_evolve(p, up, 0.0) - up).norm() < 1e-15);
    const double t_end = 10.0 * kPi * hbar() / p.omega();
    for (int k = 1; k <= 10; ++k) {
      const double t = t_end * k / 10.0;
      const Vector2 got = pt_evolve(p, up, t);
      const Vector2 want = qtest::pt_closed_form(p, t);
      CHECK((got - want).cwiseAbs().maxCoeff() < 1e-12);
    }
    const double t = rng.uniform(0.0, 2.0);
    const Matrix2 series = qtest::exp_taylor<Matrix2>(
        -qtest::kI * t / hbar() * p.to_matrix(), 40);
    CHECK((pt_evolve(p, up, t) - series * up).norm() < 1e-11);
  }
}

TEST_CASE("CPT norm is conserved along the PT trajectory") {
  TestRng rng(45);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const PTParams p = rng.unbroken();
    const CPTFrame frame = c_operator(p);
    const double expected = 1.0 / std::cos(p.alpha());
    const double t_end = 10.0 * kPi * hbar() / p.omega();
    for (int k = 0; k <= 100; ++k) {
      const Vector2 psi = pt_evolve(p, Vector2(1, 0), t_end * k / 100.0);
      worst = std::max(worst, std::abs(cpt_norm2(psi, frame) - expected));
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("spin-flip time formula, limits and scan oracle") {
  // alpha = 0: the Hermitian passage time
  const PTParams hermitian{0.0, 0.8, 0.3};
  CHECK(std::abs(spin_flip_time(hermitian) - kPi * hbar() / (2.0 * 0.8)) <
        1e-13);

  // sin(alpha) = 1/2: tau = (pi - pi/3) hbar / omega
  const double omega = 1.0;
  const PTParams half = params_for_alpha(kPi / 6.0, omega, -1.0);
  CHECK(std::abs(half.omega() - omega) < 1e-13);
  CHECK(std::abs(spin_flip_time(half) - 2.0943951023931953 / omega) < 1e-12);

  TestRng rng(46);
  for (int i = 0; i < 8; ++i) {
    const PTParams p = params_for_alpha(rng.uniform(0.1, 1.5), 1.0, -1.0);
    const double scanned = qtest::first_flip_crossing(
        p.to_matrix(), 1.2 * kPi * hbar() / p.omega(), 2500);
    CHECK(std::abs(scanned - spin_flip_time(p)) < 1e-9);
  }

  // monotone decrease toward zero along an alpha grid at fixed omega
  double prev = 1e300;
  for (int k = 0; k <= 100; ++k) {
    const double alpha = 1.55 * k / 100.0;
    const double tau = spin_flip_time(params_for_alpha(alpha, 1.0, -1.0));
    CHECK(tau < prev);
    prev = tau;
  }
  CHECK(prev < 0.02 * passage_time(1.0));

  CHECK_THROWS_AS(spin_flip_time(PTParams{2.0, 0.5, kPi / 2.0}), Error);
}

TEST_CASE("spin-flip states stay CPT non-orthogonal, Fleming bound holds") {
  for (int k = 1; k <= 60; ++k) {
    const double alpha = 1.55 * k / 60.0;
    const PTParams p = params_for_alpha(alpha, 1.0, -1.0);
    const CPTFrame frame = c_operator(p);
    const Vector2 up(1, 0), down(0, 1);
    const double inner = std::abs(cpt_inner(up, down, frame));
    CHECK(inner > 0.0);
    const double overlap =
        inner / std::sqrt(cpt_norm2(up, frame) * cpt_norm2(down, frame));
    const double distance = 2.0 * std::acos(std::min(1.0, overlap));
    const double tau = spin_flip_time(p);
    CHECK(tau >= distance * hbar() / p.omega() - 1e-12);
    CHECK(std::abs(tau - distance * hbar() / p.omega()) < 1e-10);
  }
}

TEST_CASE("Hermitian equivalent in the Hermitian limit") {
  const PTParams p{0.7, 1.9, 0.0};
  const EquivalenceMap map = hermitian_equivalent(p);
  CHECK(map.q.norm() < 1e-13);
  CHECK((map.h_tilde - p.to_matrix()).norm() < 1e-13);
}

TEST_CASE("Hermitian equivalent is isospectral and Hermitian") {
  const PTParams ref{1.0, 2.0, kPi / 2.0};
  const EquivalenceMap map_ref = hermitian_equivalent(ref);
  const auto spec = eig2(map_ref.h_tilde);
  CHECK(std::abs(spec.values[0] - Complex(-kRoot3)) < 1e-11);
  CHECK(std::abs(spec.values[1] - Complex(kRoot3)) < 1e-11);

  TestRng rng(47);
  for (int i = 0; i < 40; ++i) {
    const PTParams p = rng.unbroken();
    const Matrix2 h = p.to_matrix();
    const EquivalenceMap map = hermitian_equivalent(p);
    CHECK((map.q - map.q.adjoint()).norm() < 1e-12);
    CHECK((map.h_tilde - map.h_tilde.adjoint()).norm() < 1e-11);

    const Matrix2 eqh = mat_exp2(qtest::kI * hbar() * 0.5 * map.q, 1.0);
    const Matrix2 eqm = mat_exp2(-qtest::kI * hbar() * 0.5 * map.q, 1.0);
    CHECK((eqh * map.h_tilde * eqm - h).norm() < 1e-11);

    // e^Q = CP
    const CPTFrame frame = c_operator(p);
    const Matrix2 eq = mat_exp2(qtest::kI * hbar() * map.q, 1.0);
    CHECK((eq - frame.c * frame.p).norm() < 1e-11);

    const auto s1 = eig2(h), s2 = eig2(map.h_tilde);
    CHECK(std::abs(s1.values[0] - s2.values[0]) < 1e-11);
    CHECK(std::abs(s1.values[1] - s2.values[1]) < 1e-11);

    // CPT norm of psi equals the Dirac norm of e^{-Q/2} psi
    Vector2 psi;
    psi << rng.cgauss(), rng.cgauss();
    const double lhs = std::sqrt(std::real(cpt_inner(psi, psi, frame)));
    const double rhs = (eqm * psi).norm();
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("effective field") {
  const PTParams hermitian{0.7, 1.9, 0.0};
  const Vector3c field0 = effective_field(hermitian);
  CHECK(std::abs(field0(0) - Complex(1.9)) < 1e-15);
  CHECK(std::abs(field0(1)) < 1e-15);
  CHECK(std::abs(field0(2)) < 1e-15);

  const PTParams ref{1.0, 2.0, kPi / 2.0};
  const Vector3c field = effective_field(ref);
  CHECK(std::abs(field(0) - Complex(2.0)) < 1e-15);
  CHECK(std::abs(field(2) - qtest::kI) < 1e-15);

  TestRng rng(48);
  for (int i = 0; i < 20; ++i) {
    const PTParams p = rng.unbroken();
    const auto d = pauli_decompose(p.to_matrix());
    CHECK((d.vector_part - effective_field(p)).norm() < 1e-13);
  }
}

TEST_SUITE_END();
