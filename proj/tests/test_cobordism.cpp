#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lagfill/double_points.hpp"
#include "lagfill/forms.hpp"
#include "lagfill/homotopy.hpp"
#include "lagfill/legendrian.hpp"
#include "lagfill/pullback.hpp"

using namespace lagfill;

TEST_CASE("smooth plateau cutoff: plateaus, monotone transition") {
  const CutoffFunction rho(CutoffFunction::Variant::SmoothPlateau, 7);
  for (int i = 0; i <= 1000; ++i) {
    const double t_low = 7.0 / 3.0 * i / 1000.0;
    CHECK(std::abs(rho.rho2(t_low)) <= 1e-14);
    CHECK(rho.rho2_prime(t_low) == 0.0);
    const double t_high = 14.0 / 3.0 + (7.0 - 14.0 / 3.0) * i / 1000.0;
    CHECK(std::abs(rho.rho2(t_high) - 1.0) <= 1e-14);
    CHECK(rho.rho2_prime(t_high) == 0.0);
  }
  // strict positivity on the open transition interval: rho2' underflows to 0
  // within ~1e-3 of the plateau joins, so positivity there is certified by
  // the log-space evaluation staying finite
  for (int i = 1; i < 10000; ++i) {
    const double t = 7.0 / 3.0 + (7.0 / 3.0) * i / 10000.0;
    CHECK(rho.rho2_prime(t) >= 0.0);
    CHECK(std::isfinite(rho.log_rho1_prime(t / 7.0)));
  }
  // representable part of the transition is strictly positive outright
  for (int i = 0; i <= 10000; ++i) {
    const double s = (1.0 / 3.0 + 1.0 / 2000.0) + (1.0 / 3.0 - 1.0 / 1000.0) * i / 10000.0;
    CHECK(rho.rho1_prime(s) > 0.0);
  }
}

TEST_CASE("identity cutoff is exact division") {
  const CutoffFunction rho(CutoffFunction::Variant::Identity, 7);
  CHECK(rho.rho2(3.5) == 0.5);
  CHECK(rho.rho2_prime(2.0) == 1.0 / 7.0);
  CHECK(rho.rho2_second(2.0) == 0.0);
}

TEST_CASE("tangency times") {
  CHECK(tangency_time(CutoffFunction(CutoffFunction::Variant::Identity, 7)) == 5.0);
  CHECK(tangency_time(CutoffFunction(CutoffFunction::Variant::Identity, 14)) == 10.0);
  const CutoffFunction pl(CutoffFunction::Variant::SmoothPlateau, 7);
  const double T = tangency_time(pl);
  CHECK(T > 7.0 / 3.0);
  CHECK(T < 14.0 / 3.0);
  CHECK(std::abs(pl.rho2(T) - 5.0 / 7.0) <= 1e-12);
  // frozen from the bisection oracle at 1e-12 tolerance
  CHECK(T == doctest::Approx(3.754530868310).epsilon(1e-9));
}

TEST_CASE("front homotopy interpolates the two fronts and touches at T") {
  const CutoffFunction id7(CutoffFunction::Variant::Identity, 7);
  const ParametricMap front = front_homotopy(id7);
  const LegendrianCurve k1 = make_k1(), k2 = make_k2();
  for (int i = 0; i < 50; ++i) {
    const double th = kTwoPi * i / 50.0;
    const double p0[2] = {0.0, th};
    const double pn[2] = {7.0, th};
    const Vec f0 = front.eval(p0), fn = front.eval(pn);
    const Vec a = k1.point(th), b = k2.point(th);
    CHECK(std::abs(f0[0] - a[0]) <= 1e-15);
    CHECK(std::abs(f0[1] - a[2]) <= 1e-15);
    CHECK(std::abs(fn[0] - b[0]) <= 1e-15);
    CHECK(std::abs(fn[1] - b[2]) <= 1e-14);
  }
  const double q0[2] = {5.0, 0.0};
  const double q1[2] = {5.0, kPi};
  CHECK(std::hypot(front.eval(q0)[0], front.eval(q0)[1]) <= 1e-10);
  CHECK(std::hypot(front.eval(q1)[0], front.eval(q1)[1]) <= 1e-10);
}

TEST_CASE("lift restricts to the knots and is Legendrian slice by slice") {
  for (auto variant : {CutoffFunction::Variant::Identity,
                       CutoffFunction::Variant::SmoothPlateau}) {
    const CutoffFunction rho(variant, 7);
    const ParametricMap lift = legendrian_lift(rho);
    const LegendrianCurve k1 = make_k1(), k2 = make_k2();
    for (int i = 0; i < 50; ++i) {
      const double th = kTwoPi * i / 50.0;
      const double p0[2] = {0.0, th};
      const double pn[2] = {7.0, th};
      const Vec f0 = lift.eval(p0), fn = lift.eval(pn);
      const Vec a = k1.point(th), b = k2.point(th);
      for (int c = 0; c < 3; ++c) {
        CHECK(std::abs(f0[static_cast<std::size_t>(c)] - a[static_cast<std::size_t>(c)]) <= 1e-14);
        CHECK(std::abs(fn[static_cast<std::size_t>(c)] - b[static_cast<std::size_t>(c)]) <= 1e-14);
      }
    }
    const ContactForm alpha(1);
    const ParametricMap mid = lift.fix_factor(0, 3.5, "mid_slice");
    CHECK(pullback_1form_residual(mid, alpha, 10000) <= 1e-12);
  }
}

TEST_CASE("perturbed immersion: z coefficient and collar") {
  const CutoffFunction id7(CutoffFunction::Variant::Identity, 7);
  const LagrangianImmersedSurface surf = perturbed_immersion(id7, 100);
  // z coefficient at t = 4 is (4+1)/7 = 5/7 and 2/3 + (5/7)(2/3 - 8/5) = 0
  const double q0[2] = {4.0, 0.0};
  const double q1[2] = {4.0, kPi};
  const Vec f0 = surf.map.eval(q0), f1 = surf.map.eval(q1);
  for (int c = 0; c < 4; ++c)
    CHECK(std::abs(f0[static_cast<std::size_t>(c)] - f1[static_cast<std::size_t>(c)]) <= 1e-15);
  CHECK(std::abs(f0[1]) <= 1e-15);
  CHECK(std::abs(f0[2]) <= 1e-15);
  CHECK(std::abs(f0[3]) <= 1e-15);
  CHECK(std::abs(2.0 / 3.0 + (5.0 / 7.0) * (2.0 / 3.0 - 8.0 / 5.0)) <= 1e-15);

  // smooth plateau: exact product collars at both ends
  const CutoffFunction pl7(CutoffFunction::Variant::SmoothPlateau, 7);
  const LagrangianImmersedSurface cob = perturbed_immersion(pl7, 100);
  CHECK(cob.collar_width == doctest::Approx(7.0 / 3.0));
  const LegendrianCurve k1 = make_k1(), k2 = make_k2();
  for (int i = 0; i < 40; ++i) {
    const double th = kTwoPi * i / 40.0;
    for (double t : {0.0, 1.0, 7.0 / 3.0 - 1e-6}) {
      const double p[2] = {t, th};
      const Vec f = cob.map.eval(p);
      const Vec a = k1.point(th);
      CHECK(std::abs(f[0] - t) <= 1e-15);
      for (int c = 0; c < 3; ++c)
        CHECK(std::abs(f[static_cast<std::size_t>(c + 1)] - a[static_cast<std::size_t>(c)]) <= 1e-12);
    }
    for (double t : {14.0 / 3.0 + 1e-6, 6.0, 7.0}) {
      const double p[2] = {t, th};
      const Vec f = cob.map.eval(p);
      const Vec b = k2.point(th);
      for (int c = 0; c < 3; ++c)
        CHECK(std::abs(f[static_cast<std::size_t>(c + 1)] - b[static_cast<std::size_t>(c)]) <= 1e-12);
    }
  }
  CHECK(cob.lagrangian_residual <= 1e-10);
}

TEST_CASE("census: identity cutoff has one double point for n in {7, 10, 14}") {
  for (int n : {7, 10, 14}) {
    const CutoffFunction rho(CutoffFunction::Variant::Identity, n);
    const LagrangianImmersedSurface surf = perturbed_immersion(rho, 2);
    const std::vector<DoublePoint> census = double_point_census(surf);
    REQUIRE(census.size() == 1);
    const DoublePoint& dp = census.front();
    // (t+1)/n = 5/7 pins the collision time
    CHECK(dp.t == doctest::Approx(5.0 * n / 7.0 - 1.0).epsilon(1e-10));
    CHECK(std::abs(dp.theta1) <= 1e-8);
    CHECK(dp.theta2 == doctest::Approx(kPi).epsilon(1e-10));
    CHECK(std::abs(dp.image[1]) <= 1e-10);
    CHECK(std::abs(dp.image[2]) <= 1e-10);
    CHECK(std::abs(dp.image[3]) <= 1e-10);
    CHECK(dp.transversality_margin > 1e-6);
    CHECK(dp.sign == -1);
  }
}

TEST_CASE("census: identity cutoff n = 3 still isolates one double point") {
  const CutoffFunction rho(CutoffFunction::Variant::Identity, 3);
  const std::vector<DoublePoint> census =
      double_point_census(perturbed_immersion(rho, 2));
  REQUIRE(census.size() == 1);
  CHECK(census.front().t == doctest::Approx(8.0 / 7.0).epsilon(1e-10));
}

TEST_CASE("census: smooth plateau at n = 7 is n-too-small (three points)") {
  // the derivative perturbation is large enough to create an extra symmetric
  // pair of double points away from theta in {0, pi}
  const CutoffFunction rho(CutoffFunction::Variant::SmoothPlateau, 7);
  const std::vector<DoublePoint> census =
      double_point_census(perturbed_immersion(rho, 2));
  CHECK(census.size() == 3);
}

TEST_CASE("census of the trace finds the tangency at t = 5") {
  const CutoffFunction id7(CutoffFunction::Variant::Identity, 7);
  const ParametricMap trace = lift_trace(id7);
  const std::vector<DoublePoint> census = double_point_census(trace);
  REQUIRE(census.size() == 1);
  CHECK(census.front().t == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(std::abs(census.front().image[1]) <= 1e-10);
  CHECK(std::abs(census.front().image[2]) <= 1e-10);
  CHECK(std::abs(census.front().image[3]) <= 1e-10);
  // the trace's self-intersection carries the same sign as the immersion's
  CHECK(census.front().sign == -1);
  CHECK(self_intersection_sign(census.front(), trace) == -1);
}

TEST_CASE("census of an embedded collar is empty") {
  const LegendrianCurve k1 = make_k1();
  const ParametricMap k1map = k1.map();
  const ParametricMap collar(
      "collar", {DomainFactor::interval(0.0, 1.0), DomainFactor::circle()}, 4,
      [k1map](Params p) {
        const double q[1] = {p[1]};
        const Vec a = k1map.eval(q);
        return Vec{p[0], a[0], a[1], a[2]};
      },
      [k1map](Params p, int k) {
        if (k == 0) return Vec{1.0, 0.0, 0.0, 0.0};
        const double q[1] = {p[1]};
        const Vec d = k1map.deriv(q, 0);
        return Vec{0.0, d[0], d[1], d[2]};
      });
  CHECK(double_point_census(collar).empty());
}

TEST_CASE("census rejects undersized grids") {
  const CutoffFunction id7(CutoffFunction::Variant::Identity, 7);
  CensusOptions opts;
  opts.grid_t = 100;
  CHECK_THROWS_AS(double_point_census(perturbed_immersion(id7, 2), opts),
                  std::invalid_argument);
}

TEST_CASE("self-intersection sign is -1 and sheet-order invariant") {
  const CutoffFunction id7(CutoffFunction::Variant::Identity, 7);
  const LagrangianImmersedSurface surf = perturbed_immersion(id7, 2);
  const std::vector<DoublePoint> census = double_point_census(surf);
  REQUIRE(census.size() == 1);
  DoublePoint dp = census.front();
  CHECK(self_intersection_sign(dp, surf.map) == -1);
  std::swap(dp.theta1, dp.theta2);
  CHECK(self_intersection_sign(dp, surf.map) == -1);

  DoublePoint degenerate = census.front();
  degenerate.transversality_margin = 1e-9;
  CHECK_THROWS_AS(self_intersection_sign(degenerate, surf.map),
                  std::invalid_argument);
}

TEST_CASE("census serializes to json") {
  const CutoffFunction id7(CutoffFunction::Variant::Identity, 7);
  const std::vector<DoublePoint> census =
      double_point_census(perturbed_immersion(id7, 2));
  const nlohmann::json j = census_to_json(census);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["sign"] == -1);
  CHECK(j[0]["t"].get<double>() == doctest::Approx(4.0));
  CHECK(j[0]["image"].size() == 4);
  CHECK(j[0].contains("margin"));
  CHECK(j[0].contains("theta1"));
  CHECK(j[0].contains("theta2"));
}
