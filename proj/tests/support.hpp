// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0
//
// Test-side oracles and generators. Everything here is deliberately
// independent of the library code paths it is used to check: the series
// exponential, the analytic oscillator solution, and the crossing scans are
// separate derivations, not wrappers.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <utility>

#include "qbrach/brachistochrone.hpp"
#include "qbrach/config.hpp"
#include "qbrach/pt.hpp"
#include "qbrach/types.hpp"

namespace qtest {

using qbrach::Complex;
using qbrach::Matrix2;
using qbrach::Matrix4;
using qbrach::Vector2;
using qbrach::Vector4;

constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  Complex cgauss() { return {gauss(), gauss()}; }

  Vector2 state() {
    Vector2 v;
    do {
      v << cgauss(), cgauss();
    } while (v.norm() < 1e-6);
    return v.normalized();
  }

  Matrix2 matrix2(double scale = 1.0) {
    Matrix2 m;
    m << cgauss(), cgauss(), cgauss(), cgauss();
    return scale * m;
  }

  Matrix2 hermitian2(double scale = 1.0) {
    const Matrix2 m = matrix2(scale);
    return 0.5 * (m + m.adjoint());
  }

  // Unbroken PT params (s > 0) with cos(alpha) bounded away from zero.
  qbrach::PTParams unbroken(double alpha_max = 1.2) {
    const double alpha = uniform(-alpha_max, alpha_max);
    const double omega = uniform(0.8, 2.5);
    const double sign = uniform() < 0.5 ? -1.0 : 1.0;
    const double theta = sign * uniform(0.6, kPi - 0.6);
    const double s = omega / (2.0 * std::cos(alpha));
    return {s * std::sin(alpha) / std::sin(theta), s, theta};
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Truncated Taylor series of exp(A); the reference the closed forms are
// checked against.
template <typename Mat>
Mat exp_taylor(const Mat& a, int terms) {
  Mat acc = Mat::Identity();
  Mat term = Mat::Identity();
  for (int k = 1; k <= terms; ++k) {
    term = (term * a / static_cast<double>(k)).eval();
    acc += term;
  }
  return acc;
}

// Great-circle distance between Bloch-sphere points.
inline double great_circle(const qbrach::BlochAngles& a,
                           const qbrach::BlochAngles& b) {
  const double c = std::cos(a.theta) * std::cos(b.theta) +
                   std::sin(a.theta) * std::sin(b.theta) * std::cos(a.phi - b.phi);
  return std::acos(std::min(1.0, std::max(-1.0, c)));
}

// First t > 0 at which evolve(h, (1,0), t) is proportional to (0,1): dense
// scan for the transversal sign change of Im(psi_0 conj(psi_1)), then
// bisection.
inline double first_flip_crossing(const Matrix2& h, double t_max, int grid) {
  auto w = [&](double t) {
    const Vector2 psi = qbrach::evolve(h, Vector2(1, 0), t);
    return std::imag(psi(0) * std::conj(psi(1)));
  };
  const double step = t_max / grid;
  double prev = w(step);
  for (int k = 2; k <= grid; ++k) {
    const double cur = w(k * step);
    if ((cur <= 0.0) != (prev <= 0.0)) {
      double lo = (k - 1) * step, hi = k * step, flo = prev;
      for (int i = 0; i < 90; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = w(mid);
        if ((fm <= 0.0) == (flo <= 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    prev = cur;
  }
  return -1.0;
}

// First t > 0 at which |second component| of the evolved (1,0) reaches b_mag
// (bisection on the monotone rise).
inline double first_reach_time(const Matrix2& h, double b_mag, double t_max,
                               int grid) {
  auto f = [&](double t) {
    const Vector2 psi = qbrach::evolve(h, Vector2(1, 0), t);
    return std::abs(psi(1)) - b_mag;
  };
  const double step = t_max / grid;
  double prev = f(0.0);
  for (int k = 1; k <= grid; ++k) {
    const double cur = f(k * step);
    if (prev < 0.0 && cur >= 0.0) {
      double lo = (k - 1) * step, hi = k * step;
      for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev = cur;
  }
  return -1.0;
}

// Closed-form trajectory of the evolved (1,0) state for the PT family with
// s > 0: prefactor e^{-i t r cos(theta)/hbar}/cos(alpha) times
// (cos(omega t / 2 hbar - alpha), -i sin(omega t / 2 hbar)).
inline Vector2 pt_closed_form(const qbrach::PTParams& p, double t) {
  const double hb = qbrach::hbar();
  const double alpha = p.alpha();
  const double omega = p.omega();
  const double phi = 0.5 * omega * t / hb;
  const Complex pre =
      std::exp(-kI * (t * p.r * std::cos(p.theta) / hb)) / std::cos(alpha);
  return pre * Vector2(std::cos(phi - alpha), -kI * std::sin(phi));
}

// Analytic solution of xdot = 2p, pdot = -2x from (x0, p0):
// x = A e^{2it} + B e^{-2it}, p = i(A e^{2it} - B e^{-2it}).
inline std::pair<Complex, Complex> oscillator_exact(Complex x0, Complex p0,
                                                    double t) {
  const Complex a = 0.5 * (x0 - kI * p0);
  const Complex b = 0.5 * (x0 + kI * p0);
  const Complex ep = std::exp(2.0 * kI * t);
  const Complex em = std::exp(-2.0 * kI * t);
  return {a * ep + b * em, kI * (a * ep - b * em)};
}

}  // namespace qtest
