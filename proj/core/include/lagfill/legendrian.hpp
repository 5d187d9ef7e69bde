#pragma once

#include <functional>
#include <vector>

#include "lagfill/parametric_map.hpp"

namespace lagfill {

/// A closed Legendrian curve in (R^3, dz - y dx), with its contact residual
/// and an embeddedness margin cached at construction.
class LegendrianCurve {
 public:
  explicit LegendrianCurve(ParametricMap map, int check_samples = 10000);

  const ParametricMap& map() const { return map_; }
  double contact_residual() const { return contact_residual_; }
  /// Min distance between image points whose parameters are at least 0.1
  /// apart on the circle.
  double embedding_margin() const { return embedding_margin_; }

  Vec point(double theta) const;
  Vec tangent(double theta) const;

 private:
  ParametricMap map_;
  double contact_residual_;
  double embedding_margin_;
};

/// theta -> (sin t, -sin 2t, 2/3 cos^3 t), the standard Legendrian unknot.
LegendrianCurve make_k1();
/// theta -> (sin t, sin 4t, 4/3 cos^3 t - 8/5 cos^5 t), its stabilization.
LegendrianCurve make_k2();

struct Cusp {
  double theta = 0.0;
  bool up = false;  // sign of dz/dtheta just after the cusp
};

struct FrontDiagram {
  std::vector<double> theta;
  std::vector<double> x;
  std::vector<double> z;
  std::vector<Cusp> cusps;
};

/// xz-projection of a Legendrian curve with cusp detection. Cusps are the
/// parameters where dx/dtheta = 0; the Legendrian condition forces dz/dtheta
/// to vanish there as well, and genuine semicubical cusps are kept by
/// requiring x'' != 0 and z''' != 0.
FrontDiagram front_project(const LegendrianCurve& curve, int n_samples);

/// Same machinery on a raw planar closed curve theta -> (x, z); used for
/// negative controls that are not fronts of Legendrian curves. Candidate
/// parameters with dx/dtheta = 0 count as cusps only when dz/dtheta also
/// vanishes there.
FrontDiagram front_project_xz(const ParametricMap& plane_curve, int n_samples);

/// Winding number of theta -> (a(theta), b(theta)) around the origin over one
/// period. Throws if the path passes within 1e-10 of the origin.
int winding_number(const std::function<void(double, double&, double&)>& path,
                   int n_samples = 100000);

/// Winding number of the Lagrangian-projection tangent (dx, dy)/dtheta,
/// cross-checked against half the signed cusp count of the front.
int rotation_number(const LegendrianCurve& curve, int n_samples = 100000);

}  // namespace lagfill
