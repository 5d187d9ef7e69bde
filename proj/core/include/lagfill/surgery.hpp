#pragma once

#include <array>
#include <complex>

#include "lagfill/double_points.hpp"
#include "lagfill/unwrap.hpp"

namespace lagfill {

/// Profile curve of the Lagrangian 1-handle: an embedded plane curve
/// gamma: [-1, 1] -> C \ {0} running from the positive real axis to the
/// positive imaginary axis and tangent to the axes at its ends. The default
/// is a quarter-turn at radius ~r0 whose radius dips so that the ends move
/// radially:
///   gamma(s) = r(s) exp(i theta(s)),
///   r(s) = r0 (1 + dip s^2 + skew s^3),  theta(s) = pi/4 (1 + sin(pi s / 2)).
class HandleProfile {
 public:
  explicit HandleProfile(double r0 = 0.05, double dip = 0.25, double skew = 0.0);

  std::complex<double> gamma(double s) const;
  std::complex<double> gamma_prime(double s) const;

  double min_radius() const;  // min |gamma| over [-1, 1]
  /// Checks the end conditions (gamma on the axes, gamma' along them) to
  /// `tol` and min |gamma| > 0; throws on violation.
  void validate(double tol = 1e-10) const;

 private:
  double r0_, dip_, skew_;
};

/// The handle annulus H(s, psi) = (gamma(s) cos psi, gamma(s) sin psi) in
/// C^2 = R^4 with coordinates (xi1, xi2, eta1, eta2); Lagrangian for
/// omega = d xi1 ^ d eta1 + d xi2 ^ d eta2 for any profile.
ParametricMap build_handle(const HandleProfile& profile);

/// The constant model symplectic form on (xi1, xi2, eta1, eta2).
double model_symplectic_form(Params u, Params v);

/// Lagrangian residual of the handle annulus against the model form.
double handle_lagrangian_residual(const HandleProfile& profile, int grid = 200);

/// Frame path of the handle longitude psi = 0 in model coordinates; the
/// det^2 rotation of this path, asserted to lie in (-2 pi, 2 pi).
double handle_rotation_angle(const HandleProfile& profile, bool reversed = false,
                             int n_samples = 4096);

/// Meridian loop s = s0 of the model handle; Maslov index is 0.
FramePathFn handle_meridian_loop(const HandleProfile& profile, double s0 = 0.0);

/// Linear symplectic change of frame coordinates at a double point carrying
/// the tangent plane of the second sheet to the real plane {eta = 0} and the
/// first sheet to the imaginary plane {xi = 0}. Stored row-major.
struct Normalization {
  std::array<double, 16> to_model{};    // frame coords at q -> model coords
  std::array<double, 16> from_model{};  // inverse
  double plane_residual = 0.0;          // basis images off their model planes
  double symplectic_residual = 0.0;     // |omega(Nu, Nv) - omega(u, v)| max
  double transversality_pairing = 0.0;  // |det| of the omega-pairing of sheets
};

Normalization normalize_double_point(const DoublePoint& dp,
                                     const ParametricMap& surface);

/// Handle longitude conjugated into the frame coordinates at the double
/// point: a path of Lagrangian frames from the second sheet's tangent plane
/// back to the first sheet's.
FramePathFn conjugated_handle_path(const HandleProfile& profile,
                                   const Normalization& nrm);

/// Meridian loop of the handle seen in the frame coordinates at q.
FramePathFn conjugated_handle_meridian(const HandleProfile& profile,
                                       const Normalization& nrm, double s0 = 0.0);

struct SurgeryLoopResult {
  int maslov_index = 0;       // winding of det^2 over the assembled loop
  double phi1 = 0.0;          // det rotation along the immersed path
  double phi2 = 0.0;          // det^2 rotation along the conjugated handle
  double total_rotation = 0.0;  // 2 phi1 + phi2, an odd multiple of 2 pi
};

/// Assembles the loop (frame path through the double point) + (handle
/// longitude) and computes its winding together with the phi2 split.
SurgeryLoopResult assembled_surgery_loop(const FramePathFn& immersed_path,
                                         const HandleProfile& profile,
                                         const Normalization& nrm,
                                         int n_samples = 8192);

}  // namespace lagfill
