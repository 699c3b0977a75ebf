// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0

#include "qbrach/brachistochrone.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qbrach/config.hpp"
#include "qbrach/error.hpp"
#include "qbrach/linalg.hpp"

namespace qbrach {

namespace {

constexpr double kPi = std::numbers::pi;

void require_state(const Vector2& psi, const char* op) {
  if (!is_finite(psi))
    throw std::invalid_argument(std::string(op) + ": non-finite state entry");
  if (psi.norm() < 1e-150)
    throw Error(ErrorCode::ZeroVector, std::string(op) + ": zero state vector");
}

double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

template <typename F>
std::pair<double, double> golden_min(F&& f, double lo, double hi, int iters) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

}  // namespace

double fs_distance(const Vector2& psi1, const Vector2& psi2) {
  require_state(psi1, "fs_distance");
  require_state(psi2, "fs_distance");
  const double overlap =
      std::abs(psi1.dot(psi2)) / (psi1.norm() * psi2.norm());
  return 2.0 * std::acos(clamp01(overlap));
}

BlochAngles bloch_angles(const Vector2& psi) {
  require_state(psi, "bloch_angles");
  const double ma = std::abs(psi(0));
  const double mb = std::abs(psi(1));
  BlochAngles out;
  out.theta = 2.0 * std::atan2(mb, ma);
  if (ma == 0.0 || mb == 0.0) {
    out.phi = 0.0;  // azimuth is gauge at the poles
  } else {
    out.phi = std::remainder(std::arg(psi(1)) - std::arg(psi(0)), 2.0 * kPi);
    if (out.phi <= -kPi) out.phi += 2.0 * kPi;
  }
  return out;
}

BrachistochroneSolution optimal_hamiltonian(const Vector2& psi_i,
                                            const Vector2& psi_f,
                                            double omega) {
  require_state(psi_i, "optimal_hamiltonian");
  require_state(psi_f, "optimal_hamiltonian");
  if (!(omega > 0.0))
    throw Error(ErrorCode::BadGap, "optimal_hamiltonian: omega must be > 0");

  const Vector2 vi = psi_i.normalized();
  Vector2 vf = psi_f.normalized();
  const Complex z = vi.dot(vf);
  const double az = std::abs(z);
  if (az >= 1.0 - 1e-12)
    throw Error(ErrorCode::ParallelStates,
                "optimal_hamiltonian: initial and final rays coincide");

  // Half the geodesic distance; fix the representative of psi_f so that
  // <psi_i|psi_f> = cos(alpha) e^{-i alpha}. Antipodal pairs (z = 0) keep the
  // inputs as given, which picks one of the infinitely many geodesics.
  const double alpha = std::acos(clamp01(az));
  const double sa = std::sin(alpha);
  if (az > 0.0) vf *= (std::conj(z) / az) * std::exp(-kImag * alpha);

  const double inv = 1.0 / (std::sqrt(2.0) * sa);
  Vector2 plus = kImag * inv * (vf - vi);
  Vector2 minus =
      kImag * inv * (std::exp(-kImag * alpha) * vi - std::exp(kImag * alpha) * vf);
  plus.normalize();
  minus.normalize();

  BrachistochroneSolution sol;
  sol.hamiltonian =
      0.5 * omega * (plus * plus.adjoint() - minus * minus.adjoint());
  sol.e_plus = plus;
  sol.e_minus = minus;
  sol.gap = omega;
  sol.distance = 2.0 * alpha;
  sol.min_time = sol.distance * hbar() / omega;
  return sol;
}

Vector2 evolve(const Matrix2& h, const Vector2& psi, double t) {
  return mat_exp2(h, t) * psi;
}

Matrix2 mean_adjusted(const Matrix2& h, const Vector2& psi) {
  require_state(psi, "mean_adjusted");
  const Vector2 v = psi.normalized();
  const Complex expectation = v.dot(h * v);
  return h - expectation * Matrix2::Identity();
}

double aa_speed(const Matrix2& h, const Vector2& psi) {
  require_state(psi, "aa_speed");
  const Vector2 v = psi.normalized();
  const Matrix2 ht = mean_adjusted(h, v);
  const double variance = std::max(0.0, std::real(v.dot(ht * (ht * v))));
  return 2.0 * std::sqrt(variance) / hbar();
}

double passage_time(double omega) {
  if (!(omega > 0.0))
    throw Error(ErrorCode::BadGap, "passage_time: omega must be > 0");
  return kPi * hbar() / omega;
}

Matrix2 HermitianParams::to_matrix() const {
  Matrix2 m;
  m << s, r * std::exp(-kImag * theta), r * std::exp(kImag * theta), u;
  return m;
}

double HermitianParams::gap() const {
  return std::sqrt((s - u) * (s - u) + 4.0 * r * r);
}

double variational_time(const HermitianParams& params, double b_mag) {
  if (!(b_mag >= 0.0 && b_mag <= 1.0))
    throw std::invalid_argument("variational_time: b_mag must be in [0, 1]");
  if (b_mag == 0.0) return 0.0;
  if (!(params.r > 0.0))
    throw Error(ErrorCode::Unreachable,
                "variational_time: r must be > 0 to reach |b| > 0");
  const double omega = params.gap();
  const double arg = omega * b_mag / (2.0 * params.r);
  if (arg > 1.0 + 1e-12)
    throw Error(ErrorCode::Unreachable,
                "variational_time: this Hamiltonian never reaches |b|");
  return (2.0 * hbar() / omega) * std::asin(clamp01(arg));
}

double min_time(const Vector2& psi_i, const Vector2& psi_f, double omega) {
  require_state(psi_i, "min_time");
  require_state(psi_f, "min_time");
  if (!(omega > 0.0))
    throw Error(ErrorCode::BadGap, "min_time: omega must be > 0");
  const Vector2 vi = psi_i.normalized();
  const Vector2 vf = psi_f.normalized();
  const Vector2 perp(-std::conj(vi(1)), std::conj(vi(0)));
  const double b = std::abs(perp.dot(vf));
  return 2.0 * hbar() * std::asin(clamp01(b)) / omega;
}

namespace {

struct OverlapScan {
  double min_overlap;
  double argmin_t;
  bool found_zero;
  double first_zero_t;
};

// Dense scan of |cos^2 a + sin^2 a cos^2 b e^{-i w_ji t/hb} +
// sin^2 a sin^2 b e^{-i w_ki t/hb}| over (0, 20 pi hb / w_ji], with
// golden-section refinement of each bracketed minimum.
OverlapScan scan_three_level(const ThreeLevelSpec& spec) {
  const double ca = std::cos(spec.alpha), sa = std::sin(spec.alpha);
  const double cb = std::cos(spec.beta), sb = std::sin(spec.beta);
  const double c0 = ca * ca;
  const double c1 = sa * sa * cb * cb;
  const double c2 = sa * sa * sb * sb;
  const double hb = hbar();
  auto overlap2 = [&](double t) {
    const Complex f = c0 + c1 * std::exp(-kImag * (spec.omega_ji * t / hb)) +
                      c2 * std::exp(-kImag * (spec.omega_ki * t / hb));
    return std::norm(f);
  };

  const double step = 1e-4 * kPi * hb / spec.omega_ji;
  const double t_end = 20.0 * kPi * hb / spec.omega_ji;
  const auto n = static_cast<long>(t_end / step);

  OverlapScan out{1.0, 0.0, false, 0.0};
  double gm2 = overlap2(step), gm1 = overlap2(2.0 * step);
  for (long k = 3; k <= n; ++k) {
    const double g = overlap2(static_cast<double>(k) * step);
    if (gm1 <= gm2 && gm1 <= g) {
      const auto [tm, fm] = golden_min(
          overlap2, static_cast<double>(k - 2) * step,
          static_cast<double>(k) * step, 70);
      const double mag = std::sqrt(fm);
      if (mag < out.min_overlap) {
        out.min_overlap = mag;
        out.argmin_t = tm;
      }
      // a true zero refines to the rounding floor ~1e-8; nonzero minima of
      // this overlap sit at physical scale, far above 1e-6
      if (!out.found_zero && mag < 1e-6) {
        out.found_zero = true;
        out.first_zero_t = tm;
        break;  // minima cannot go below zero; first zero is what we need
      }
    }
    gm2 = gm1;
    gm1 = g;
  }
  return out;
}

}  // namespace

ThreeLevelResult three_level_orthogonality(const ThreeLevelSpec& spec) {
  if (!(spec.omega_ji > 0.0) || !(spec.omega_ki >= spec.omega_ji))
    throw Error(ErrorCode::BadSpec,
                "three_level_orthogonality: need omega_ki >= omega_ji > 0");

  ThreeLevelResult out{false, 0.0, std::nullopt, 0.0, 0.0};

  // Energy dispersion of the initial state with E_i = 0.
  const double sa2 = std::sin(spec.alpha) * std::sin(spec.alpha);
  const double cb2 = std::cos(spec.beta) * std::cos(spec.beta);
  const double w1 = sa2 * cb2, w2 = sa2 * (1.0 - cb2);
  const double mean = w1 * spec.omega_ji + w2 * spec.omega_ki;
  const double mean_sq =
      w1 * spec.omega_ji * spec.omega_ji + w2 * spec.omega_ki * spec.omega_ki;
  out.dispersion = std::sqrt(std::max(0.0, mean_sq - mean * mean));

  const bool canonical_angles = std::abs(spec.alpha - kPi / 4.0) < 1e-12 &&
                                std::abs(spec.beta - kPi / 4.0) < 1e-12;
  if (canonical_angles) {
    // Orthogonality needs both phases at an odd multiple of pi, i.e. the gap
    // ratio equal to (2m-1)/(2n-1); the smallest matching n fixes the first
    // crossing time (2n-1) pi hbar / omega_ji.
    const double ratio = spec.omega_ki / spec.omega_ji;
    for (int n = 1; n <= 50; ++n) {
      const double q = 2.0 * n - 1.0;
      const auto m = static_cast<int>(std::llround((ratio * q + 1.0) / 2.0));
      if (m < 1 || m > 50 || m == n) continue;
      if (std::abs(ratio - (2.0 * m - 1.0) / q) < 1e-9) {
        out.feasible = true;
        out.time = q * kPi * hbar() / spec.omega_ji;
        out.ratio = std::make_pair(m, n);
        return out;
      }
    }
    const OverlapScan scan = scan_three_level(spec);
    out.scan_min_overlap = scan.min_overlap;
    return out;
  }

  const OverlapScan scan = scan_three_level(spec);
  out.scan_min_overlap = scan.min_overlap;
  if (scan.found_zero) {
    out.feasible = true;
    out.time = scan.first_zero_t;
  }
  return out;
}

}  // namespace qbrach
