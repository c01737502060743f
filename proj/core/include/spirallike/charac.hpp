#pragma once

#include <cstddef>
#include <string>

#include "spirallike/domain.hpp"

namespace spirallike {

// Result of one characterization check. The margin is signed: the smallest
// slack found over the evaluated samples, >= -tolerance means pass. The
// witness records where that margin is attained: theta alone for the
// derivative check, a base angle theta0 plus offset theta for the inclusion
// checks, and the knot pair (theta0, theta) for the Lipschitz check.
// witness_theta0 is NaN when the check has a single-angle witness.
struct CheckReport {
    std::string condition;
    bool pass = false;
    double margin = 0.0;
    double witness_theta0 = 0.0;
    double witness_theta = 0.0;
    std::size_t grid = 0;
    double tolerance = 0.0;
};

// JSON form: {condition, pass, margin, witness:{theta0?, theta}, grid, tolerance}.
std::string to_json(const CheckReport& report);

// Margin tolerance used by the inclusion oracles: 1e-9 for analytic
// variants, (2*pi/N)*(A - B) for sampled ones (piecewise-linear error bound).
double inclusion_tolerance(const RadiusFunction& r, const SpiralParams& p);

// Slope bound |rho' + sin(lambda)cos(lambda)| <= cos^2(lambda)*tan(pi*alpha/2),
// exact on every slope interval.
CheckReport check_derivative(const RadiusFunction& r, const SpiralParams& p);

// Two-sided bound B*(t2 - t1) <= rho(t2) - rho(t1) <= A*(t2 - t1) over all
// breakpoint pairs within one period (exact for piecewise-linear rho).
CheckReport check_lipschitz(const RadiusFunction& r, const SpiralParams& p);

// Boundary inclusion w*U within the domain for boundary samples
// w = P(R(theta0), theta0): log R(theta0 + theta) - log R(theta0) >=
// max(B*theta, -A*(2*pi - theta)) for theta in (0, 2*pi). theta0 runs over
// `grid` uniform samples; for each, theta runs over the exact break angles
// of the defect (profile breakpoints shifted by theta0, plus the crossover),
// so piecewise-linear violations cannot hide between samples.
CheckReport check_inclusion_boundary(const RadiusFunction& r, const SpiralParams& p,
                                     std::size_t grid);

// Interior inclusion w*U within the domain for w = P(t*R(theta0), theta0),
// t in {0.1, ..., 0.9}; the scaled copy's radius inequality is evaluated at
// the same exact break angles.
CheckReport check_inclusion_interior(const RadiusFunction& r, const SpiralParams& p,
                                     std::size_t grid);

// Dual inclusion: the domain lies inside w*V for boundary samples w, plus
// the exterior variant on a ring of samples outside the closure.
CheckReport check_dual_inclusion(const RadiusFunction& r, const SpiralParams& p,
                                 std::size_t grid);

// Smallest order alpha for which the profile satisfies the slope bound with
// spiral angle lambda (clamped so |lambda| < pi*alpha/2 stays admissible):
//   alpha_min = (2/pi) * arctan(max(sup|rho' + sin cos| / cos^2, tan|lambda|)).
// Returns 0 for a disk centered at the origin with lambda = 0.
double minimal_order(const RadiusFunction& r, const LambdaAngle& lam);

}  // namespace spirallike
