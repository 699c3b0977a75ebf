// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0
//
// Complex classical trajectories of H = p^2 + x^2 (xdot = 2p, pdot = -2x,
// taken literally). At E = 1 every orbit is an ellipse in the complex-x plane
// with foci at the turning points x = +-1; the real segment between them is
// the degenerate member. All orbits share one period, which is measured
// rather than assumed.

#pragma once

#include <vector>

#include "qbrach/types.hpp"

namespace qbrach {

struct PhasePoint {
  Complex x;
  Complex p;
  double t;
};

struct ClassicalTrajectory {
  std::vector<PhasePoint> points;
  Complex energy;
  double dt;
  double max_energy_drift;  // max |H(x,p) - E| observed along the trajectory
};

// Fixed-step RK4 integration from x0 with p0 = +-sqrt(E - x0^2) (principal
// branch for branch_sign = +1). Throws StepTooLarge when the energy drift
// exceeds energy_tol * max(1, |E|).
ClassicalTrajectory integrate_orbit(Complex x0, Complex energy, double dt,
                                    double t_max, int branch_sign = +1,
                                    double energy_tol = 1e-8);

struct PeriodResult {
  double period;            // measured first-return time
  double closure_distance;  // refined phase-space distance at the return
};

// First return of (x, p) to its initial value, located by bracketing the
// sampled minimum and refining with partial steps. Throws NoClosure if no
// return is found before max_time.
PeriodResult orbit_period(Complex x0, Complex energy, int branch_sign = +1,
                          double dt = 1e-4, double max_time = 62.8318530717958648);

// Max deviation over the trajectory of |x-1| + |x+1| from its mean. Small
// values certify an ellipse with foci at +-1.
double foci_invariant(const ClassicalTrajectory& traj);

enum class SwitchMode { AtTurningPoint, Immediate };

struct SwitchedFlight {
  double total_time;
  double free_time;          // both field-free real-axis segments
  double in_potential_time;  // complex (or real) arc inside V = x^2
  double arrival_x_error;    // |x at switch-off - expected switch-off point|
};

// Flight from x = -a to x = +a at E = 1: free motion on the real axis, then
// V = x^2 switched on either immediately (complex half-orbit) or at the
// turning point x = -1 (real half-cycle), then free motion again. Each switch
// re-solves p from the energy constraint on the principal branch.
SwitchedFlight switched_flight(double a, SwitchMode mode, double dt = 1e-4);

}  // namespace qbrach
