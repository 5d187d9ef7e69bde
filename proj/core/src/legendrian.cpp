#include "lagfill/legendrian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lagfill/forms.hpp"
#include "lagfill/pullback.hpp"

namespace lagfill {

namespace {

double circle_dist(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

}  // namespace

LegendrianCurve::LegendrianCurve(ParametricMap map, int check_samples)
    : map_(std::move(map)), contact_residual_(0.0), embedding_margin_(0.0) {
  if (map_.arity() != 1 || map_.factor(0).kind != FactorKind::Circle)
    throw std::invalid_argument("LegendrianCurve: expected a circle domain");
  if (map_.codomain_dim() != 3)
    throw std::invalid_argument("LegendrianCurve: expected a curve in R^3");
  contact_residual_ = pullback_1form_residual(map_, ContactForm(1), check_samples);

  const int n = 2000;
  std::vector<Vec> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double th = kTwoPi * i / n;
    const double p[1] = {th};
    pts.push_back(map_.eval(p));
  }
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (circle_dist(kTwoPi * i / n, kTwoPi * j / n) < 0.1) continue;
      double d2 = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double d = pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -
                         pts[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        d2 += d * d;
      }
      margin = std::min(margin, d2);
    }
  }
  embedding_margin_ = std::sqrt(margin);
}

Vec LegendrianCurve::point(double theta) const {
  const double p[1] = {theta};
  return map_.eval(p);
}

Vec LegendrianCurve::tangent(double theta) const {
  const double p[1] = {theta};
  return map_.deriv(p, 0);
}

LegendrianCurve make_k1() {
  ParametricMap m(
      "K1", {DomainFactor::circle()}, 3,
      [](Params p) {
        const double th = p[0];
        const double c = std::cos(th);
        return Vec{std::sin(th), -std::sin(2.0 * th), (2.0 / 3.0) * c * c * c};
      },
      [](Params p, int) {
        const double th = p[0];
        const double c = std::cos(th), s = std::sin(th);
        return Vec{c, -2.0 * std::cos(2.0 * th), -2.0 * c * c * s};
      });
  return LegendrianCurve(std::move(m));
}

LegendrianCurve make_k2() {
  ParametricMap m(
      "K2", {DomainFactor::circle()}, 3,
      [](Params p) {
        const double th = p[0];
        const double c = std::cos(th);
        const double c3 = c * c * c, c5 = c3 * c * c;
        return Vec{std::sin(th), std::sin(4.0 * th),
                   (4.0 / 3.0) * c3 - (8.0 / 5.0) * c5};
      },
      [](Params p, int) {
        const double th = p[0];
        const double c = std::cos(th), s = std::sin(th);
        const double c2 = c * c;
        return Vec{c, 4.0 * std::cos(4.0 * th),
                   4.0 * c2 * s * (2.0 * c2 - 1.0)};
      });
  return LegendrianCurve(std::move(m));
}

namespace {

struct PlaneCurve {
  std::function<double(double)> x, z, xp, zp;
};

double second_derivative(const std::function<double(double)>& fp, double th,
                         double h = 1e-5) {
  return (fp(th + h) - fp(th - h)) / (2.0 * h);
}

double third_derivative_of(const std::function<double(double)>& fp, double th,
                           double h = 1e-4) {
  // second derivative of the (exact) first derivative
  return (fp(th + h) - 2.0 * fp(th) + fp(th - h)) / (h * h);
}

FrontDiagram project_impl(const PlaneCurve& c, int n_samples) {
  if (n_samples < 100)
    throw std::invalid_argument("front_project: need at least 100 samples");
  FrontDiagram fd;
  fd.theta.reserve(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    const double th = kTwoPi * i / n_samples;
    fd.theta.push_back(th);
    fd.x.push_back(c.x(th));
    fd.z.push_back(c.z(th));
  }

  // Roots of x'(theta): sign-change brackets refined by bisection, plus
  // near-zero local minima of |x'| (double roots) refined by Newton on x'.
  const int scan = std::max(n_samples, 4096);
  std::vector<double> roots;
  auto push_root = [&roots](double th) {
    th = std::fmod(th, kTwoPi);
    if (th < 0) th += kTwoPi;
    for (double r : roots)
      if (circle_dist(r, th) < 1e-6) return;
    roots.push_back(th);
  };
  double prev_th = 0.0, prev_v = c.xp(0.0);
  for (int i = 1; i <= scan; ++i) {
    const double th = kTwoPi * i / scan;
    const double v = c.xp(th);
    if (prev_v == 0.0) push_root(prev_th);
    if (prev_v * v < 0.0) {
      double a = prev_th, b = th, fa = prev_v;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = c.xp(mid);
        if (fa * fm <= 0.0) {
          b = mid;
        } else {
          a = mid;
          fa = fm;
        }
        if (b - a < 1e-14) break;
      }
      if (std::abs(c.xp(0.5 * (a + b))) > 1e-8)
        throw std::runtime_error(
            "front_project: root finder failed to converge on bracket [" +
            std::to_string(prev_th) + ", " + std::to_string(th) + "]");
      push_root(0.5 * (a + b));
    } else {
      // Flat local minimum of |x'| hiding a sign-preserving double root.
      const double mid = 0.5 * (prev_th + th);
      if (std::abs(c.xp(mid)) < 1e-3 && std::abs(v) >= std::abs(c.xp(mid)) &&
          std::abs(prev_v) >= std::abs(c.xp(mid))) {
        double th0 = mid;
        bool ok = false;
        for (int it = 0; it < 100; ++it) {
          const double f = c.xp(th0);
          if (std::abs(f) < 1e-9) {
            ok = true;
            break;
          }
          const double df = second_derivative(c.xp, th0);
          if (df == 0.0) break;
          th0 -= f / df;
        }
        if (ok) push_root(th0);
      }
    }
    prev_th = th;
    prev_v = v;
  }
  std::sort(roots.begin(), roots.end());

  for (double th : roots) {
    if (std::abs(c.zp(th)) > 1e-8) continue;  // vertical tangent, not a cusp
    const double xpp = second_derivative(c.xp, th);
    const double zppp = third_derivative_of(c.zp, th);
    if (std::abs(xpp) < 1e-6 || std::abs(zppp) < 1e-6) continue;
    Cusp cusp;
    cusp.theta = th;
    cusp.up = c.zp(th + 1e-4) > 0.0;
    fd.cusps.push_back(cusp);
  }
  return fd;
}

}  // namespace

FrontDiagram front_project(const LegendrianCurve& curve, int n_samples) {
  const ParametricMap& m = curve.map();
  PlaneCurve pc;
  pc.x = [&m](double th) {
    const double p[1] = {th};
    return m.eval(p)[0];
  };
  pc.z = [&m](double th) {
    const double p[1] = {th};
    return m.eval(p)[2];
  };
  pc.xp = [&m](double th) {
    const double p[1] = {th};
    return m.deriv(p, 0)[0];
  };
  pc.zp = [&m](double th) {
    const double p[1] = {th};
    return m.deriv(p, 0)[2];
  };
  return project_impl(pc, n_samples);
}

FrontDiagram front_project_xz(const ParametricMap& plane_curve, int n_samples) {
  if (plane_curve.codomain_dim() != 2 || plane_curve.arity() != 1)
    throw std::invalid_argument("front_project_xz: expected circle -> R^2");
  PlaneCurve pc;
  pc.x = [&plane_curve](double th) {
    const double p[1] = {th};
    return plane_curve.eval(p)[0];
  };
  pc.z = [&plane_curve](double th) {
    const double p[1] = {th};
    return plane_curve.eval(p)[1];
  };
  pc.xp = [&plane_curve](double th) {
    const double p[1] = {th};
    return plane_curve.deriv(p, 0)[0];
  };
  pc.zp = [&plane_curve](double th) {
    const double p[1] = {th};
    return plane_curve.deriv(p, 0)[1];
  };
  return project_impl(pc, n_samples);
}

namespace {

int winding_attempt(const std::function<void(double, double&, double&)>& path,
                    int n_samples, double phase) {
  double a0, b0;
  path(phase, a0, b0);
  if (std::hypot(a0, b0) < 1e-10)
    throw std::runtime_error("winding_number: sample within 1e-10 of the origin");
  double total = 0.0, comp = 0.0;
  double pa = a0, pb = b0;
  for (int i = 1; i <= n_samples; ++i) {
    const double th = phase + kTwoPi * i / n_samples;
    double a, b;
    path(th, a, b);
    if (std::hypot(a, b) < 1e-10)
      throw std::runtime_error("winding_number: sample within 1e-10 of the origin");
    // increment = arg((a + ib) / (pa + i pb))
    const double cross = pa * b - pb * a;
    const double dot = pa * a + pb * b;
    const double inc = std::atan2(cross, dot);
    const double y = inc - comp;
    const double t = total + y;
    comp = (t - total) - y;
    total = t;
    pa = a;
    pb = b;
  }
  const double w = total / kTwoPi;
  const double rounded = std::round(w);
  if (std::abs(w - rounded) > 1e-6)
    throw std::runtime_error("winding_number: non-integer winding " +
                             std::to_string(w));
  return static_cast<int>(rounded);
}

}  // namespace

int winding_number(const std::function<void(double, double&, double&)>& path,
                   int n_samples) {
  // A sample landing within 1e-10 of the origin is treated as non-generic
  // sampling: refine with a phase shift and retry before giving up.
  int n = n_samples;
  for (int attempt = 0; attempt < 3; ++attempt) {
    try {
      return winding_attempt(path, n, attempt * 1e-3);
    } catch (const std::runtime_error&) {
      if (attempt == 2) throw;
      n = 2 * n + 1;
    }
  }
  throw std::runtime_error("winding_number: unreachable");
}

int rotation_number(const LegendrianCurve& curve, int n_samples) {
  const ParametricMap& m = curve.map();
  auto tangent_xy = [&m](double th, double& a, double& b) {
    const double p[1] = {th};
    const Vec d = m.deriv(p, 0);
    a = d[0];
    b = d[1];
  };
  const int w = winding_number(tangent_xy, n_samples);

  const FrontDiagram fd = front_project(curve, 1000);
  int signed_cusps = 0;
  for (const Cusp& c : fd.cusps) signed_cusps += c.up ? 1 : -1;
  if (signed_cusps % 2 != 0)
    throw std::runtime_error("rotation_number: odd signed cusp count");
  if (w != signed_cusps / 2)
    throw std::runtime_error(
        "rotation_number: winding disagrees with half the signed cusp count");
  return w;
}

}  // namespace lagfill
