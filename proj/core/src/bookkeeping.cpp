#include "lagfill/bookkeeping.hpp"

#include <stdexcept>

namespace lagfill {

SurfaceBookkeeping concatenate(const SurfaceBookkeeping& a,
                               const SurfaceBookkeeping& b, int circles) {
  if (circles < 0 || circles > a.boundary_components ||
      circles > b.boundary_components)
    throw std::invalid_argument("concatenate: not enough boundary circles");
  SurfaceBookkeeping out;
  out.euler_characteristic = a.euler_characteristic + b.euler_characteristic;
  out.orientable = a.orientable && b.orientable;
  out.boundary_components =
      a.boundary_components + b.boundary_components - 2 * circles;
  return out;
}

SurfaceBookkeeping bookkeeping_resolve(const SurfaceBookkeeping& before,
                                       int double_points_resolved,
                                       bool orientation_reversing_loop_created) {
  if (double_points_resolved < 0)
    throw std::invalid_argument("bookkeeping_resolve: negative count");
  SurfaceBookkeeping out = before;
  out.euler_characteristic -= 2 * double_points_resolved;
  if (orientation_reversing_loop_created) out.orientable = false;
  return out;
}

std::string classification_name(const SurfaceBookkeeping& s) {
  const int chi = s.euler_characteristic;
  const int b = s.boundary_components;
  std::string base;
  if (s.orientable) {
    const int twice_genus = 2 - chi - b;
    if (twice_genus < 0 || twice_genus % 2 != 0) return "not a compact surface";
    const int g = twice_genus / 2;
    if (g == 0)
      base = "sphere";
    else if (g == 1)
      base = "torus";
    else
      base = "genus-" + std::to_string(g) + " surface";
  } else {
    const int crosscaps = 2 - chi - b;
    if (crosscaps < 1) return "not a compact surface";
    if (crosscaps == 1)
      base = "projective plane";
    else if (crosscaps == 2)
      base = "Klein bottle";
    else
      base = "non-orientable surface with " + std::to_string(crosscaps) +
             " crosscaps";
  }
  if (b == 0) return base;
  return base + " minus " + std::to_string(b) + " open disk" + (b > 1 ? "s" : "");
}

nlohmann::json bookkeeping_to_json(const SurfaceBookkeeping& s) {
  return {{"chi", s.euler_characteristic},
          {"orientable", s.orientable},
          {"boundary_components", s.boundary_components},
          {"classification_name", classification_name(s)}};
}

}  // namespace lagfill
