#include "lagfill/spin.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lagfill/forms.hpp"

namespace lagfill {

SpunSurface spin(const LagrangianImmersedSurface& base, double shift) {
  const ParametricMap& bm = base.map;
  double min_x = std::numeric_limits<double>::infinity();
  const std::vector<double> ts = factor_grid(bm.factor(0), 200);
  const std::vector<double> phis = factor_grid(bm.factor(1), 200);
  for (double t : ts)
    for (double phi : phis) {
      const double p[2] = {t, phi};
      min_x = std::min(min_x, bm.eval(p)[1] + shift);
    }
  if (!(min_x > 0.0))
    throw std::invalid_argument("spin: shifted x not positive, min = " +
                                std::to_string(min_x));

  const ParametricMap basemap = bm;
  ParametricMap map(
      "spun_filling",
      {DomainFactor::circle(), bm.factor(0), DomainFactor::circle()}, 6,
      [basemap, shift](Params p) {
        const double c = std::cos(p[0]), s = std::sin(p[0]);
        const double q[2] = {p[1], p[2]};
        const Vec b = basemap.eval(q);
        const double xs = b[1] + shift;
        return Vec{b[0], xs * c, b[2] * c, xs * s, b[2] * s, b[3]};
      },
      [basemap, shift](Params p, int k) {
        const double c = std::cos(p[0]), s = std::sin(p[0]);
        const double q[2] = {p[1], p[2]};
        if (k == 0) {
          const Vec b = basemap.eval(q);
          const double xs = b[1] + shift;
          return Vec{0.0, -xs * s, -b[2] * s, xs * c, b[2] * c, 0.0};
        }
        const Vec d = basemap.deriv(q, k - 1);
        return Vec{d[0], d[1] * c, d[2] * c, d[1] * s, d[2] * s, d[3]};
      });
  return SpunSurface{std::move(map), shift, min_x};
}

ParametricMap boundary_torus(const SpunSurface& spun) {
  const double n = spun.map.factor(1).hi;
  const ParametricMap at_boundary = spun.map.fix_factor(1, n, "spun_boundary6");
  const ParametricMap six = at_boundary;
  return ParametricMap(
      "spun_boundary_torus", {DomainFactor::circle(), DomainFactor::circle()}, 5,
      [six](Params p) {
        const Vec v = six.eval(p);
        return Vec{v[1], v[2], v[3], v[4], v[5]};
      },
      [six](Params p, int k) {
        const Vec v = six.deriv(p, k);
        return Vec{v[1], v[2], v[3], v[4], v[5]};
      });
}

ParametricMap spin_boundary_curve(const LagrangianImmersedSurface& base,
                                  double shift) {
  const double n = base.map.factor(0).hi;
  const ParametricMap bd = base.map.fix_factor(0, n, "base_boundary");
  const ParametricMap curve = bd;
  return ParametricMap(
      "spun_base_boundary", {DomainFactor::circle(), DomainFactor::circle()}, 5,
      [curve, shift](Params p) {
        const double c = std::cos(p[0]), s = std::sin(p[0]);
        const double q[1] = {p[1]};
        const Vec b = curve.eval(q);
        const double xs = b[1] + shift;
        return Vec{xs * c, b[2] * c, xs * s, b[2] * s, b[3]};
      },
      [curve, shift](Params p, int k) {
        const double c = std::cos(p[0]), s = std::sin(p[0]);
        const double q[1] = {p[1]};
        if (k == 0) {
          const Vec b = curve.eval(q);
          const double xs = b[1] + shift;
          return Vec{-xs * s, -b[2] * s, xs * c, b[2] * c, 0.0};
        }
        const Vec d = curve.deriv(q, 0);
        return Vec{d[1] * c, d[2] * c, d[1] * s, d[2] * s, d[3]};
      });
}

namespace {

FrameSample spun_frame(const ParametricMap& map, double theta, double t,
                       double phi) {
  const double p[3] = {theta, t, phi};
  const Vec pt = map.eval(p);
  const UnitaryFrame frame(2);
  FrameSample f;
  f.X.n = f.Y.n = 3;
  for (int k = 0; k < 3; ++k) {
    const Vec d = map.deriv(p, k);
    const FrameComponents fc = frame.components(pt, d);
    for (int j = 0; j < 3; ++j) {
      f.X.at(k, j) = fc.xi[static_cast<std::size_t>(j)];
      f.Y.at(k, j) = fc.eta[static_cast<std::size_t>(j)];
    }
  }
  return f;
}

}  // namespace

FramePathFn spin_circle_loop(const SpunSurface& spun, double t0, double phi0) {
  const ParametricMap map = spun.map;
  return [map, t0, phi0](double u) {
    return spun_frame(map, kTwoPi * u, t0, phi0);
  };
}

FramePathFn boundary_knot_loop(const SpunSurface& spun, double theta0) {
  const ParametricMap map = spun.map;
  const double n = map.factor(1).hi;
  return [map, theta0, n](double u) {
    return spun_frame(map, theta0, n, kTwoPi * u);
  };
}

}  // namespace lagfill
