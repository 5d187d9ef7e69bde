#include "lagfill/homotopy.hpp"

#include <cmath>
#include <stdexcept>

#include "lagfill/forms.hpp"
#include "lagfill/pullback.hpp"

namespace lagfill {

namespace {

struct ThetaTerms {
  double x, xp;    // sin, cos
  double y0, y0p;  // -sin 2th and derivative
  double v, vp;    // sin 4th + sin 2th and derivative
  double z0, z0p;  // 2/3 cos^3 and derivative
  double w, wp;    // 2/3 cos^3 - 8/5 cos^5 and derivative
};

ThetaTerms theta_terms(double th) {
  ThetaTerms a;
  const double c = std::cos(th), s = std::sin(th);
  const double c2 = c * c, c3 = c2 * c, c5 = c3 * c2;
  a.x = s;
  a.xp = c;
  a.y0 = -std::sin(2.0 * th);
  a.y0p = -2.0 * std::cos(2.0 * th);
  a.v = std::sin(4.0 * th) + std::sin(2.0 * th);
  a.vp = 4.0 * std::cos(4.0 * th) + 2.0 * std::cos(2.0 * th);
  a.z0 = (2.0 / 3.0) * c3;
  a.z0p = -2.0 * c2 * s;
  a.w = (2.0 / 3.0) * c3 - (8.0 / 5.0) * c5;
  a.wp = 2.0 * c2 * s * (4.0 * c2 - 1.0);
  return a;
}

std::vector<DomainFactor> strip_domain(int n) {
  return {DomainFactor::interval(0.0, static_cast<double>(n)),
          DomainFactor::circle()};
}

}  // namespace

ParametricMap front_homotopy(const CutoffFunction& cutoff) {
  const CutoffFunction rho = cutoff;
  return ParametricMap(
      "front_homotopy", strip_domain(rho.n()), 2,
      [rho](Params p) {
        const ThetaTerms a = theta_terms(p[1]);
        return Vec{a.x, a.z0 + rho.rho2(p[0]) * a.w};
      },
      [rho](Params p, int k) {
        const ThetaTerms a = theta_terms(p[1]);
        if (k == 0) return Vec{0.0, rho.rho2_prime(p[0]) * a.w};
        return Vec{a.xp, a.z0p + rho.rho2(p[0]) * a.wp};
      });
}

double tangency_time(const CutoffFunction& cutoff) {
  const double target = 5.0 / 7.0;
  if (cutoff.variant() == CutoffFunction::Variant::Identity)
    return target * cutoff.n();
  // bisection over the transition interval, then Newton polish
  double a = cutoff.transition_lo(), b = cutoff.transition_hi();
  for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
    const double mid = 0.5 * (a + b);
    if (cutoff.rho2(mid) < target)
      a = mid;
    else
      b = mid;
  }
  double t = 0.5 * (a + b);
  for (int it = 0; it < 50; ++it) {
    const double f = cutoff.rho2(t) - target;
    const double fp = cutoff.rho2_prime(t);
    if (fp <= 0.0) break;
    const double step = f / fp;
    t -= step;
    if (std::abs(step) < 1e-15) break;
  }
  return t;
}

ParametricMap legendrian_lift(const CutoffFunction& cutoff) {
  const CutoffFunction rho = cutoff;
  return ParametricMap(
      "legendrian_lift", strip_domain(rho.n()), 3,
      [rho](Params p) {
        const ThetaTerms a = theta_terms(p[1]);
        const double r = rho.rho2(p[0]);
        return Vec{a.x, a.y0 + r * a.v, a.z0 + r * a.w};
      },
      [rho](Params p, int k) {
        const ThetaTerms a = theta_terms(p[1]);
        if (k == 0) {
          const double rp = rho.rho2_prime(p[0]);
          return Vec{0.0, rp * a.v, rp * a.w};
        }
        const double r = rho.rho2(p[0]);
        return Vec{a.xp, a.y0p + r * a.vp, a.z0p + r * a.wp};
      });
}

ParametricMap lift_trace(const CutoffFunction& cutoff) {
  const CutoffFunction rho = cutoff;
  return ParametricMap(
      "lift_trace", strip_domain(rho.n()), 4,
      [rho](Params p) {
        const ThetaTerms a = theta_terms(p[1]);
        const double r = rho.rho2(p[0]);
        return Vec{p[0], a.x, a.y0 + r * a.v, a.z0 + r * a.w};
      },
      [rho](Params p, int k) {
        const ThetaTerms a = theta_terms(p[1]);
        if (k == 0) {
          const double rp = rho.rho2_prime(p[0]);
          return Vec{1.0, 0.0, rp * a.v, rp * a.w};
        }
        const double r = rho.rho2(p[0]);
        return Vec{0.0, a.xp, a.y0p + r * a.vp, a.z0p + r * a.wp};
      });
}

LagrangianImmersedSurface perturbed_immersion(const CutoffFunction& cutoff,
                                              int residual_grid) {
  const CutoffFunction rho = cutoff;
  ParametricMap map(
      "perturbed_immersion", strip_domain(rho.n()), 4,
      [rho](Params p) {
        const ThetaTerms a = theta_terms(p[1]);
        const double r = rho.rho2(p[0]);
        const double cz = r + rho.rho2_prime(p[0]);
        return Vec{p[0], a.x, a.y0 + r * a.v, a.z0 + cz * a.w};
      },
      [rho](Params p, int k) {
        const ThetaTerms a = theta_terms(p[1]);
        if (k == 0) {
          const double rp = rho.rho2_prime(p[0]);
          const double czp = rp + rho.rho2_second(p[0]);
          return Vec{1.0, 0.0, rp * a.v, czp * a.w};
        }
        const double r = rho.rho2(p[0]);
        const double cz = r + rho.rho2_prime(p[0]);
        return Vec{0.0, a.xp, a.y0p + r * a.vp, a.z0p + cz * a.wp};
      });

  LagrangianImmersedSurface surf{std::move(map), rho, 0.0, 0.0};
  if (rho.variant() == CutoffFunction::Variant::SmoothPlateau)
    surf.collar_width = rho.n() / 3.0;
  surf.lagrangian_residual = pullback_2form_residual(
      surf.map, SymplectizationForm(1), {residual_grid, residual_grid});
  return surf;
}

}  // namespace lagfill
