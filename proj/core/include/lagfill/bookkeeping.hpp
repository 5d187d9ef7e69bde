#pragma once

#include <string>

#include <json.hpp>

namespace lagfill {

/// Classification data of a compact surface: Euler characteristic,
/// orientability and number of boundary circles determine it uniquely.
struct SurfaceBookkeeping {
  int euler_characteristic = 0;
  bool orientable = true;
  int boundary_components = 0;

  static SurfaceBookkeeping disk() { return {1, true, 1}; }
  static SurfaceBookkeeping cylinder() { return {0, true, 2}; }
};

/// Gluing along `circles` pairs of boundary circles: chi adds, boundary
/// count drops by two per glued circle.
SurfaceBookkeeping concatenate(const SurfaceBookkeeping& a,
                               const SurfaceBookkeeping& b, int circles);

/// Effect of resolving transverse double points by 1-handle surgery: chi
/// drops by 2 per point, orientability is lost when the surgery creates an
/// orientation-reversing loop, boundary is untouched.
SurfaceBookkeeping bookkeeping_resolve(const SurfaceBookkeeping& before,
                                       int double_points_resolved,
                                       bool orientation_reversing_loop_created);

/// Human-readable name ("Klein bottle minus 1 open disk", "torus", ...).
std::string classification_name(const SurfaceBookkeeping& s);

nlohmann::json bookkeeping_to_json(const SurfaceBookkeeping& s);

}  // namespace lagfill
