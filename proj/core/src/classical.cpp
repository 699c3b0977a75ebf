// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0

#include "qbrach/classical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qbrach/error.hpp"

namespace qbrach {

namespace {

struct Z {
  Complex x, p;
};

Z deriv(const Z& z) { return {2.0 * z.p, -2.0 * z.x}; }

Z shifted(const Z& z, double h, const Z& d) {
  return {z.x + h * d.x, z.p + h * d.p};
}

Z rk4_step(const Z& z, double h) {
  const Z k1 = deriv(z);
  const Z k2 = deriv(shifted(z, 0.5 * h, k1));
  const Z k3 = deriv(shifted(z, 0.5 * h, k2));
  const Z k4 = deriv(shifted(z, h, k3));
  return {z.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
          z.p + h / 6.0 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p)};
}

Complex energy_of(const Z& z) { return z.p * z.p + z.x * z.x; }

double dist2(const Z& a, const Z& b) {
  return std::norm(a.x - b.x) + std::norm(a.p - b.p);
}

Complex initial_momentum(Complex x0, Complex energy, int branch_sign) {
  if (branch_sign != 1 && branch_sign != -1)
    throw std::invalid_argument("branch_sign must be +1 or -1");
  const Complex p0 = std::sqrt(energy - x0 * x0);
  return branch_sign == 1 ? p0 : -p0;
}

void check_drift(const Z& z, Complex energy, double tol, double t,
                 const char* op) {
  const double drift = std::abs(energy_of(z) - energy);
  if (drift > tol)
    throw Error(ErrorCode::StepTooLarge,
                std::string(op) + ": energy drift " + std::to_string(drift) +
                    " at t = " + std::to_string(t) + " exceeds tolerance");
}

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

// Bisection for a sign change of val(state) on [t_lo, t_hi], where states are
// reached by one partial RK4 step from `base` at time t_base.
template <typename F>
double bisect_crossing(const Z& base, double t_base, double t_lo, double t_hi,
                       F&& val) {
  double lo = t_lo, hi = t_hi;
  double flo = val(rk4_step(base, lo - t_base));
  for (int i = 0; i < 90 && hi - lo > 1e-16 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = val(rk4_step(base, mid - t_base));
    if ((fm <= 0.0) == (flo <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ClassicalTrajectory integrate_orbit(Complex x0, Complex energy, double dt,
                                    double t_max, int branch_sign,
                                    double energy_tol) {
  if (!(dt > 0.0) || !std::isfinite(dt) || !std::isfinite(t_max) || t_max < 0.0)
    throw std::invalid_argument("integrate_orbit: bad dt or t_max");
  if (!is_finite(x0) || !is_finite(energy))
    throw std::invalid_argument("integrate_orbit: non-finite input");

  const double tol = energy_tol * std::max(1.0, std::abs(energy));
  Z z{x0, initial_momentum(x0, energy, branch_sign)};

  ClassicalTrajectory traj;
  traj.energy = energy;
  traj.dt = dt;
  traj.max_energy_drift = 0.0;
  const auto n = static_cast<long>(std::ceil(t_max / dt - 1e-9));
  traj.points.reserve(static_cast<std::size_t>(n + 1));
  traj.points.push_back({z.x, z.p, 0.0});
  for (long k = 1; k <= n; ++k) {
    z = rk4_step(z, dt);
    const double t = static_cast<double>(k) * dt;
    const double drift = std::abs(energy_of(z) - energy);
    traj.max_energy_drift = std::max(traj.max_energy_drift, drift);
    if (drift > tol)
      throw Error(ErrorCode::StepTooLarge,
                  "integrate_orbit: energy drift " + std::to_string(drift) +
                      " at t = " + std::to_string(t) + " exceeds tolerance");
    traj.points.push_back({z.x, z.p, t});
  }
  return traj;
}

PeriodResult orbit_period(Complex x0, Complex energy, int branch_sign,
                          double dt, double max_time) {
  if (!(dt > 0.0) || !(max_time > 0.0))
    throw std::invalid_argument("orbit_period: bad dt or max_time");

  const Z z0{x0, initial_momentum(x0, energy, branch_sign)};
  const Z d0 = deriv(z0);
  const double speed0 = std::sqrt(std::norm(d0.x) + std::norm(d0.p));
  const double capture = 2.0 * speed0 * dt + 1e-12;

  Z window[3] = {z0, rk4_step(z0, dt), {}};
  window[2] = rk4_step(window[1], dt);
  double d[3] = {0.0, dist2(window[1], z0), dist2(window[2], z0)};

  for (long k = 3; static_cast<double>(k) * dt <= max_time; ++k) {
    const Z base = window[0];  // state at (k-3) dt... shifted below
    const Z next = rk4_step(window[2], dt);
    const double dn = dist2(next, z0);
    // bracketed sample minimum at (k-1) dt within the capture radius
    if (k > 3 && d[1] <= d[0] && d[1] <= d[2] &&
        std::sqrt(d[1]) < capture) {
      const double t_lo = static_cast<double>(k - 3) * dt;
      auto g = [&](double t) { return dist2(rk4_step(base, t - t_lo), z0); };
      const auto [t_min, g_min] =
          golden_min(g, t_lo, static_cast<double>(k - 1) * dt, 90);
      const double closure = std::sqrt(g_min);
      if (closure < 1e-8) return {t_min, closure};
    }
    window[0] = window[1];
    window[1] = window[2];
    window[2] = next;
    d[0] = d[1];
    d[1] = d[2];
    d[2] = dn;
  }
  throw Error(ErrorCode::NoClosure,
              "orbit_period: no first return within max_time");
}

double foci_invariant(const ClassicalTrajectory& traj) {
  if (traj.points.empty())
    throw std::invalid_argument("foci_invariant: empty trajectory");
  double mean = 0.0;
  for (const auto& pt : traj.points)
    mean += std::abs(pt.x - 1.0) + std::abs(pt.x + 1.0);
  mean /= static_cast<double>(traj.points.size());
  double dev = 0.0;
  for (const auto& pt : traj.points) {
    const double m = std::abs(pt.x - 1.0) + std::abs(pt.x + 1.0);
    dev = std::max(dev, std::abs(m - mean));
  }
  return dev;
}

SwitchedFlight switched_flight(double a, SwitchMode mode, double dt) {
  if (!(a >= 1.0) || !std::isfinite(a))
    throw std::invalid_argument("switched_flight: need a >= 1");
  if (!(dt > 0.0))
    throw std::invalid_argument("switched_flight: bad dt");

  const Complex energy = 1.0;
  const double v_free = 2.0;  // E = p^2 with p = 1, xdot = 2p

  // Where the potential switches on, and the free path lengths.
  double x_on, free_in;
  if (mode == SwitchMode::Immediate) {
    x_on = -a;
    free_in = 0.0;
  } else {
    x_on = -1.0;
    free_in = (a - 1.0) / v_free;
  }
  // Momentum re-solved from the energy constraint at the switch.
  const Complex p_on = std::sqrt(energy - Complex(x_on) * Complex(x_on));
  const double x_off = -x_on;
  const double free_out = free_in;

  Z z{x_on, p_on};
  const bool complex_arc = std::abs(p_on.imag()) > 0.0;
  const double tol = 1e-8;

  double t = 0.0;
  double t_cross = -1.0;
  Z prev = z;
  bool p_was_positive = false;
  // Half-orbit: either the complex arc back to the positive real axis, or a
  // real half-cycle from rest at the turning point to the opposite one.
  while (t_cross < 0.0) {
    prev = z;
    z = rk4_step(z, dt);
    t += dt;
    check_drift(z, energy, tol, t, "switched_flight");
    if (t > 40.0 * std::numbers::pi)
      throw Error(ErrorCode::NoClosure,
                  "switched_flight: arc did not reach the positive axis");
    if (complex_arc) {
      if (z.x.imag() < 0.0)
        t_cross = bisect_crossing(prev, t - dt, t - dt, t,
                                  [](const Z& s) { return s.x.imag(); });
    } else {
      if (z.p.real() > 1e-12) p_was_positive = true;
      if (p_was_positive && z.p.real() < 0.0)
        t_cross = bisect_crossing(prev, t - dt, t - dt, t,
                                  [](const Z& s) { return s.p.real(); });
    }
  }

  const Z arrival = rk4_step(prev, t_cross - (t - dt));

  SwitchedFlight out;
  out.in_potential_time = t_cross;
  out.free_time = free_in + free_out;
  out.total_time = free_in + t_cross + free_out;
  out.arrival_x_error = std::abs(arrival.x - Complex(x_off));
  return out;
}

}  // namespace qbrach
