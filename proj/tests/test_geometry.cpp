#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lagfill/forms.hpp"
#include "lagfill/homotopy.hpp"
#include "lagfill/legendrian.hpp"
#include "lagfill/parametric_map.hpp"
#include "lagfill/pullback.hpp"

using namespace lagfill;

namespace {

ParametricMap flat_plane() {
  return ParametricMap(
      "flat_plane",
      {DomainFactor::interval(0.0, 1.0), DomainFactor::circle()}, 4,
      [](Params p) { return Vec{p[0], p[1], 0.0, 0.0}; },
      [](Params, int k) {
        return k == 0 ? Vec{1.0, 0.0, 0.0, 0.0} : Vec{0.0, 1.0, 0.0, 0.0};
      });
}

ParametricMap twisted_patch() {
  // (t, cos th, sin th, t): not Lagrangian
  return ParametricMap(
      "twisted_patch",
      {DomainFactor::interval(0.0, 1.0), DomainFactor::circle()}, 4,
      [](Params p) { return Vec{p[0], std::cos(p[1]), std::sin(p[1]), p[0]}; },
      [](Params p, int k) {
        if (k == 0) return Vec{1.0, 0.0, 0.0, 1.0};
        return Vec{0.0, -std::sin(p[1]), std::cos(p[1]), 0.0};
      });
}

}  // namespace

TEST_CASE("contact form on coordinate directions") {
  const ContactForm alpha(1);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    const Vec p = {dist(rng), dist(rng), dist(rng)};
    CHECK(alpha(p, Vec{0.0, 0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(alpha(p, Vec{1.0, 0.0, 0.0}) == doctest::Approx(-p[1]).epsilon(1e-14));
    CHECK(alpha(p, Vec{0.0, 1.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-14));
  }
  const ContactForm alpha2(2);
  const Vec q = {0.3, -1.2, 0.8, 0.5, 2.0};
  CHECK(alpha2(q, Vec{0, 0, 0, 0, 1}) == 1.0);
  CHECK(alpha2(q, Vec{1, 0, 0, 0, 0}) == doctest::Approx(1.2));
  CHECK(alpha2(q, Vec{0, 0, 1, 0, 0}) == doctest::Approx(-0.5));
}

TEST_CASE("symplectization form is antisymmetric and nondegenerate") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  for (int m : {1, 2}) {
    const SymplectizationForm omega(m);
    const int d = omega.space_dim();
    for (int trial = 0; trial < 40; ++trial) {
      Vec p(static_cast<std::size_t>(d)), u(static_cast<std::size_t>(d)),
          v(static_cast<std::size_t>(d));
      for (auto& x : p) x = dist(rng);
      for (auto& x : u) x = dist(rng);
      for (auto& x : v) x = dist(rng);
      CHECK(std::abs(omega(p, u, v) + omega(p, v, u)) <= 1e-14 * std::exp(p[0]) * 100);
    }
    // Gram matrix on the standard basis has full rank
    Vec p(static_cast<std::size_t>(d));
    for (auto& x : p) x = dist(rng);
    std::vector<std::vector<double>> gram(
        static_cast<std::size_t>(d), std::vector<double>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Vec ei(static_cast<std::size_t>(d), 0.0), ej(static_cast<std::size_t>(d), 0.0);
        ei[static_cast<std::size_t>(i)] = 1.0;
        ej[static_cast<std::size_t>(j)] = 1.0;
        gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = omega(p, ei, ej);
      }
    double det = 1.0;
    for (int col = 0; col < d; ++col) {
      int piv = col;
      for (int r = col + 1; r < d; ++r)
        if (std::abs(gram[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
            std::abs(gram[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]))
          piv = r;
      std::swap(gram[static_cast<std::size_t>(piv)], gram[static_cast<std::size_t>(col)]);
      if (piv != col) det = -det;
      const double diag = gram[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      det *= diag;
      if (diag == 0.0) break;
      for (int r = col + 1; r < d; ++r) {
        const double f =
            gram[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / diag;
        for (int c2 = col; c2 < d; ++c2)
          gram[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -=
              f * gram[static_cast<std::size_t>(col)][static_cast<std::size_t>(c2)];
      }
    }
    CHECK(std::abs(det) > 1e-8);
  }
}

TEST_CASE("unitary frame diagonalizes the symplectization form") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  for (int m : {1, 2}) {
    const UnitaryFrame frame(m);
    const SymplectizationForm omega(m);
    const int d = omega.space_dim();
    Vec p(static_cast<std::size_t>(d));
    for (auto& x : p) x = dist(rng);
    // frame pairings: omega(e_k, f_k) = e^t, everything else vanishes
    const double et = std::exp(p[0]);
    std::vector<Vec> e, f;
    const std::size_t zi = static_cast<std::size_t>(2 * m + 1);
    {
      Vec v(static_cast<std::size_t>(d), 0.0);
      v[0] = 1.0;
      e.push_back(v);
      v[0] = 0.0;
      v[zi] = 1.0;
      f.push_back(v);
    }
    for (int j = 0; j < m; ++j) {
      Vec v(static_cast<std::size_t>(d), 0.0);
      v[static_cast<std::size_t>(2 * j + 1)] = 1.0;
      v[zi] = p[static_cast<std::size_t>(2 * j + 2)];
      e.push_back(v);
      Vec w(static_cast<std::size_t>(d), 0.0);
      w[static_cast<std::size_t>(2 * j + 2)] = 1.0;
      f.push_back(w);
    }
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = 0; b < f.size(); ++b) {
        const double want = (a == b) ? et : 0.0;
        CHECK(std::abs(omega(p, e[a], f[b]) - want) <= 1e-12 * std::max(1.0, et));
        CHECK(std::abs(omega(p, e[a], e[b])) <= 1e-12 * std::max(1.0, et));
        CHECK(std::abs(omega(p, f[a], f[b])) <= 1e-12 * std::max(1.0, et));
      }
    // omega through frame components equals omega directly
    for (int trial = 0; trial < 60; ++trial) {
      Vec u(static_cast<std::size_t>(d)), v(static_cast<std::size_t>(d));
      for (auto& x : u) x = dist(rng);
      for (auto& x : v) x = dist(rng);
      CHECK(std::abs(omega(p, u, v) - frame.omega_via_frame(p, u, v)) <=
            1e-12 * std::max(1.0, et));
    }
  }
}

TEST_CASE("pullback residual: flat plane is Lagrangian") {
  CHECK(pullback_2form_residual(flat_plane(), SymplectizationForm(1), {50, 50}) <=
        1e-14);
}

TEST_CASE("pullback residual: twisted patch is far from Lagrangian") {
  const double r =
      pullback_2form_residual(twisted_patch(), SymplectizationForm(1), {50, 50});
  // residual is e^t sin^2(theta), maximized near (1, pi/2)
  CHECK(r > 0.5);
  CHECK(r == doctest::Approx(std::exp(1.0)).epsilon(0.05));
}

TEST_CASE("pullback residual: perturbed immersion is Lagrangian, the plain trace is not") {
  const CutoffFunction id7(CutoffFunction::Variant::Identity, 7);
  const LagrangianImmersedSurface surf = perturbed_immersion(id7, 200);
  CHECK(surf.lagrangian_residual <= 1e-10);

  // the trace misses the dx/\dy term: omega = -e^t rho2' W'(theta), so its
  // residual on the same grid matches the closed form of that expression
  const ParametricMap trace = lift_trace(id7);
  const double direct =
      pullback_2form_residual(trace, SymplectizationForm(1), {200, 200});
  double oracle = 0.0;
  for (int i = 0; i < 200; ++i)
    for (int j = 0; j < 200; ++j) {
      const double t = 7.0 * i / 199.0;
      const double th = kTwoPi * j / 200.0;
      const double c = std::cos(th), s = std::sin(th);
      const double wp = 2.0 * c * c * s * (4.0 * c * c - 1.0);
      oracle = std::max(oracle, std::exp(t) * std::abs(wp) / 7.0);
    }
  CHECK(direct == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(direct > 100.0);
}

TEST_CASE("pullback residual rejects dimension mismatch") {
  CHECK_THROWS_AS(
      pullback_2form_residual(flat_plane(), SymplectizationForm(2), {10, 10}),
      std::invalid_argument);
  const LegendrianCurve k1 = make_k1();
  CHECK_THROWS_AS(pullback_1form_residual(k1.map(), ContactForm(2), 100),
                  std::invalid_argument);
}

TEST_CASE("1-form residuals of the knots and a non-Legendrian circle") {
  const ContactForm alpha(1);
  CHECK(pullback_1form_residual(make_k1().map(), alpha, 10000) <= 1e-12);
  CHECK(pullback_1form_residual(make_k2().map(), alpha, 10000) <= 1e-12);

  const ParametricMap circle(
      "planar_circle", {DomainFactor::circle()}, 3,
      [](Params p) { return Vec{std::cos(p[0]), std::sin(p[0]), 0.0}; },
      [](Params p, int) { return Vec{-std::sin(p[0]), std::cos(p[0]), 0.0}; });
  // alpha(c') = -y x' = sin^2, peaking at 1
  CHECK(pullback_1form_residual(circle, alpha, 10000) ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("closed-form derivatives agree with finite differences") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const CutoffFunction pl7(CutoffFunction::Variant::SmoothPlateau, 7);
  std::vector<ParametricMap> pool;
  pool.push_back(make_k1().map());
  pool.push_back(make_k2().map());
  pool.push_back(legendrian_lift(pl7));
  pool.push_back(perturbed_immersion(pl7, 2).map);
  for (const ParametricMap& m : pool) {
    for (int trial = 0; trial < 100; ++trial) {
      Vec p(static_cast<std::size_t>(m.arity()));
      for (int i = 0; i < m.arity(); ++i) {
        const DomainFactor& f = m.factor(i);
        const double inset = 1e-4 * f.length();
        p[static_cast<std::size_t>(i)] =
            f.lo + inset + (f.length() - 2.0 * inset) * unit(rng);
      }
      CHECK(max_relative_fd_error(m, p) <= 1e-6);
    }
  }
}

TEST_CASE("circle factors are periodic") {
  const CutoffFunction id7(CutoffFunction::Variant::Identity, 7);
  CHECK(periodicity_defect(make_k1().map(), 0, 200) <= 1e-12);
  CHECK(periodicity_defect(make_k2().map(), 0, 200) <= 1e-12);
  CHECK(periodicity_defect(perturbed_immersion(id7, 2).map, 1, 200) <= 1e-12);
}

TEST_CASE("fix_factor restricts and shifts derivative indices") {
  const CutoffFunction id7(CutoffFunction::Variant::Identity, 7);
  const ParametricMap lift = legendrian_lift(id7);
  const ParametricMap slice = lift.fix_factor(0, 3.5, "slice");
  CHECK(slice.arity() == 1);
  const double th[1] = {1.1};
  const double full[2] = {3.5, 1.1};
  const Vec a = slice.eval(th);
  const Vec b = lift.eval(full);
  for (int i = 0; i < 3; ++i) CHECK(a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)]);
  const Vec da = slice.deriv(th, 0);
  const Vec db = lift.deriv(full, 1);
  for (int i = 0; i < 3; ++i) CHECK(da[static_cast<std::size_t>(i)] == db[static_cast<std::size_t>(i)]);
}
