#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "lagfill/homotopy.hpp"

#include <json.hpp>

namespace lagfill {

/// A transverse self-intersection of a surface (t, theta) -> R^4. The two
/// preimages share the t coordinate because the first ambient coordinate of
/// the surface is t itself.
struct DoublePoint {
  double t = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::array<double, 4> image{};
  int sign = 0;
  /// Smallest singular value of the 4x4 matrix of the four tangent vectors.
  double transversality_margin = 0.0;
};

struct CensusOptions {
  int grid_t = 200;
  int grid_theta = 200;
  double seed_radius = 0.1;      // image-distance threshold for Newton seeds
  double min_angle_sep = 0.1;    // reject near-diagonal pairs
  double dedup_distance = 1e-6;  // parameter-space merge radius
  int newton_max_iter = 60;
};

struct CensusDiagnostics {
  std::size_t seeds = 0;
  std::size_t newton_failures = 0;  // logged, not fatal
};

/// Grid-seeded Newton census of the double points of a surface
/// [0,n] x S^1 -> (t, x, y, z). Throws on duplicate-collapse ambiguity
/// (two distinct refined roots closer than 10x the dedup distance).
std::vector<DoublePoint> double_point_census(const ParametricMap& surface,
                                             const CensusOptions& opts = {},
                                             CensusDiagnostics* diag = nullptr);

std::vector<DoublePoint> double_point_census(
    const LagrangianImmersedSurface& surface, const CensusOptions& opts = {},
    CensusDiagnostics* diag = nullptr);

/// Sign of the intersection against the omega^wedge-omega orientation:
/// sign det[u1 u2 v1 v2] with (u1, u2), (v1, v2) the tangent frames at the two
/// preimages. Swapping the sheets is the even permutation (13)(24), so the
/// result does not depend on sheet order.
int self_intersection_sign(const DoublePoint& dp, const ParametricMap& surface);

/// Number of grid pairs of a closed surface map (two circle factors) into R^d
/// whose images come within `radius` although the parameters are not
/// near-diagonal (some factor differs by at least `min_sep`). Zero certifies
/// embeddedness at the grid resolution.
std::size_t close_pair_count(const ParametricMap& torus, int grid, double radius,
                             double min_sep = 0.1);

nlohmann::json census_to_json(const std::vector<DoublePoint>& census);

}  // namespace lagfill
