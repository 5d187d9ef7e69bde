#pragma once

#include "lagfill/homotopy.hpp"
#include "lagfill/unwrap.hpp"

namespace lagfill {

/// Rotationally symmetric surface in R x R^5 obtained by spinning a filling
/// (t, x, y, z) around the circle after shifting x into the positive half:
///   F(theta, t, phi) = (t, (x + shift) cos th, y cos th,
///                          (x + shift) sin th, y sin th, z).
struct SpunSurface {
  ParametricMap map;  // S^1 x [0, n] x S^1 -> R^6
  double shift = 0.0;
  double min_shifted_x = 0.0;
};

/// Throws when min (x + shift) fails to be positive on a dense sample.
SpunSurface spin(const LagrangianImmersedSurface& base, double shift);

/// Boundary torus (theta, phi) -> R^5 at t = n (the t coordinate dropped).
ParametricMap boundary_torus(const SpunSurface& spun);

/// Spin the boundary curve of the base directly; used to check that spinning
/// commutes with taking the boundary.
ParametricMap spin_boundary_curve(const LagrangianImmersedSurface& base,
                                  double shift);

/// Loop of tangent 3-frames theta -> T F(theta, t0, phi0); Maslov index 0.
FramePathFn spin_circle_loop(const SpunSurface& spun, double t0, double phi0);

/// Loop of tangent 3-frames along the boundary knot phi -> T F(theta0, n, phi);
/// Maslov index 0, so the boundary torus has vanishing Maslov class.
FramePathFn boundary_knot_loop(const SpunSurface& spun, double theta0);

}  // namespace lagfill
