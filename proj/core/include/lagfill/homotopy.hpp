#pragma once

#include "lagfill/cutoff.hpp"
#include "lagfill/legendrian.hpp"
#include "lagfill/parametric_map.hpp"

namespace lagfill {

// The moving front, its Legendrian lift and the Lagrangian perturbation of
// the trace, all over [0, n] x S^1. Writing
//   Z0(th) = 2/3 cos^3 th,        W(th) = 2/3 cos^3 th - 8/5 cos^5 th,
//   Y0(th) = -sin 2th,            V(th) = sin 4th + sin 2th,
// the maps are
//   front(t, th) = (sin th, Z0 + rho2(t) W)
//   lift(t, th)  = (sin th, Y0 + rho2(t) V, Z0 + rho2(t) W)
//   trace(t, th) = (t, lift(t, th))
//   immersion(t, th) = (t, sin th, Y0 + rho2 V, Z0 + (rho2 + rho2') W).
// The derivative term in the z coefficient is what makes d(e^t alpha) pull
// back to zero; the plain trace is not Lagrangian.

/// (t, theta) -> (x, z) interpolating between the two fronts.
ParametricMap front_homotopy(const CutoffFunction& cutoff);

/// The unique T in [0, n] with rho2(T) = 5/7, i.e. the time at which the two
/// front strands through theta = 0 and theta = pi meet at the origin.
double tangency_time(const CutoffFunction& cutoff);

/// Legendrian lift of the front homotopy; each fixed-t slice solves y = dz/dx.
ParametricMap legendrian_lift(const CutoffFunction& cutoff);

/// (t, theta) -> (t, lift(t, theta)) in R x R^3.
ParametricMap lift_trace(const CutoffFunction& cutoff);

struct LagrangianImmersedSurface {
  ParametricMap map;          // [0, n] x S^1 -> (t, x, y, z)
  CutoffFunction cutoff;
  double collar_width = 0.0;  // n/3 for SmoothPlateau, 0 for Identity
  double lagrangian_residual = 0.0;  // cached on a modest grid
};

/// The Lagrangian immersion obtained by perturbing the trace.
LagrangianImmersedSurface perturbed_immersion(const CutoffFunction& cutoff,
                                              int residual_grid = 200);

}  // namespace lagfill
