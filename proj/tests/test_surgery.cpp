#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lagfill/bookkeeping.hpp"
#include "lagfill/double_points.hpp"
#include "lagfill/homotopy.hpp"
#include "lagfill/maslov.hpp"
#include "lagfill/surgery.hpp"

using namespace lagfill;

namespace {

struct Setup {
  LagrangianImmersedSurface surf;
  DoublePoint dp;
  Normalization nrm;
};

const Setup& setup() {
  static const Setup s = [] {
    const CutoffFunction id7(CutoffFunction::Variant::Identity, 7);
    LagrangianImmersedSurface surf = perturbed_immersion(id7, 2);
    const std::vector<DoublePoint> census = double_point_census(surf);
    REQUIRE(census.size() == 1);
    const Normalization nrm = normalize_double_point(census.front(), surf.map);
    return Setup{std::move(surf), census.front(), nrm};
  }();
  return s;
}

}  // namespace

TEST_CASE("profile end conditions and embeddedness") {
  const HandleProfile p;
  p.validate();
  CHECK(p.min_radius() == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(p.gamma(-1.0).imag() == 0.0);
  CHECK(p.gamma(1.0).real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(p.gamma_prime(-1.0).real() < 0.0);
  CHECK(p.gamma_prime(1.0).imag() > 0.0);

  CHECK_THROWS_AS(HandleProfile(-0.05), std::invalid_argument);
  CHECK_THROWS_AS(HandleProfile(0.05, 0.25, 0.5), std::invalid_argument);
}

TEST_CASE("handle annulus is Lagrangian with boundaries on the model planes") {
  const HandleProfile p;
  CHECK(handle_lagrangian_residual(p) <= 1e-12);
  const ParametricMap h = build_handle(p);
  for (int i = 0; i < 40; ++i) {
    const double psi = kTwoPi * i / 40.0;
    const double lo[2] = {-1.0, psi};
    const double hi[2] = {1.0, psi};
    const Vec a = h.eval(lo), b = h.eval(hi);
    // start circle on the real plane, end circle on the imaginary plane
    CHECK(std::abs(a[2]) <= 1e-12);
    CHECK(std::abs(a[3]) <= 1e-12);
    CHECK(std::abs(b[0]) <= 1e-12);
    CHECK(std::abs(b[1]) <= 1e-12);
  }
}

TEST_CASE("meridian of the model handle has Maslov index zero") {
  const HandleProfile p;
  CHECK(maslov_index_loop(handle_meridian_loop(p)) == 0);
  CHECK(maslov_index_loop(handle_meridian_loop(p, 0.6)) == 0);
}

TEST_CASE("model longitude rotation vanishes for the radial-dip family") {
  // the ends move radially and the turning speed never reverses, so the
  // frame determinant gamma' gamma makes no net turn
  CHECK(std::abs(handle_rotation_angle(HandleProfile())) <= 1e-9);
  CHECK(std::abs(handle_rotation_angle(HandleProfile(0.05, 0.25, 0.1))) <= 1e-9);
  CHECK(std::abs(handle_rotation_angle(HandleProfile(0.02, 0.4, -0.2))) <= 1e-9);
}

TEST_CASE("normalization maps the sheets to the model planes symplectically") {
  const Normalization& nrm = setup().nrm;
  CHECK(nrm.plane_residual <= 1e-10);
  CHECK(nrm.symplectic_residual <= 1e-10);
  CHECK(nrm.transversality_pairing > 1e-6);
}

TEST_CASE("normalization rejects non-transverse input") {
  DoublePoint fake = setup().dp;
  fake.transversality_margin = 0.0;
  CHECK_THROWS_AS(normalize_double_point(fake, setup().surf.map),
                  std::invalid_argument);
}

TEST_CASE("sheets already in model position normalize to the identity") {
  // synthetic surface: near theta = 0 the tangent frame is the real model
  // plane {d/dt, d/dx}, near theta = pi the imaginary plane {d/dz, d/dy};
  // both sheets pass through the origin where frame coordinates are plain
  // coordinates
  const ParametricMap two_sheets(
      "model_sheets", {DomainFactor::interval(0.0, 1.0), DomainFactor::circle()},
      4, [](Params) { return Vec{0.0, 0.0, 0.0, 0.0}; },
      [](Params p, int k) {
        const bool first_sheet = std::cos(p[1]) > 0.0;
        if (first_sheet) return k == 0 ? Vec{0.0, 0.0, 0.0, 1.0}   // d/dz
                                       : Vec{0.0, 0.0, 1.0, 0.0};  // d/dy
        return k == 0 ? Vec{1.0, 0.0, 0.0, 0.0}                    // d/dt
                      : Vec{0.0, 1.0, 0.0, 0.0};                   // d/dx
      });
  DoublePoint dp;
  dp.t = 0.5;
  dp.theta1 = 0.0;
  dp.theta2 = kPi;
  dp.transversality_margin = 1.0;
  const Normalization nrm = normalize_double_point(dp, two_sheets);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double want = i == j ? 1.0 : 0.0;
      CHECK(std::abs(nrm.to_model[static_cast<std::size_t>(4 * i + j)] - want) <=
            1e-12);
    }

  // coincident sheets have a degenerate pairing
  const ParametricMap coincident(
      "coincident_sheets",
      {DomainFactor::interval(0.0, 1.0), DomainFactor::circle()}, 4,
      [](Params) { return Vec{0.0, 0.0, 0.0, 0.0}; },
      [](Params, int k) {
        return k == 0 ? Vec{1.0, 0.0, 0.0, 0.0} : Vec{0.0, 1.0, 0.0, 0.0};
      });
  CHECK_THROWS_AS(normalize_double_point(dp, coincident), std::runtime_error);
}

TEST_CASE("conjugated meridian keeps index zero") {
  const HandleProfile p;
  CHECK(maslov_index_loop(conjugated_handle_meridian(p, setup().nrm)) == 0);
}

TEST_CASE("assembled surgery loop: index one and the angle budget") {
  const DoublePointFramePath fp(
      CutoffFunction(CutoffFunction::Variant::Identity, 7));
  const HandleProfile profile;
  const SurgeryLoopResult res =
      assembled_surgery_loop(fp.path(), profile, setup().nrm);
  CHECK(res.maslov_index == 1);
  CHECK(res.phi1 == doctest::Approx(phi1_endpoint_formula()).epsilon(1e-9));
  CHECK(res.phi2 > -kTwoPi);
  CHECK(res.phi2 < kTwoPi);
  CHECK(res.phi2 == doctest::Approx(kTwoPi - 2.0 * phi1_endpoint_formula())
                        .epsilon(1e-9));
  CHECK(std::abs(res.total_rotation - kTwoPi) <= 1e-6 * kTwoPi);
  CHECK(surgery_loop_index(res.phi1, res.phi2) == 1);

  // the ambient handle rotation is odd under path reversal
  const FramePathFn handle = conjugated_handle_path(profile, setup().nrm);
  const FramePathFn rev = [&handle](double u) { return handle(1.0 - u); };
  CHECK(det2_rotation(rev, 0.0, 1.0, 4096) ==
        doctest::Approx(-res.phi2).epsilon(1e-9));
}

TEST_CASE("assembled loop is stable across profiles") {
  const DoublePointFramePath fp(
      CutoffFunction(CutoffFunction::Variant::Identity, 7));
  for (const HandleProfile& profile :
       {HandleProfile(0.05, 0.25, 0.1), HandleProfile(0.01, 0.3, 0.0)}) {
    const SurgeryLoopResult res =
        assembled_surgery_loop(fp.path(), profile, setup().nrm);
    CHECK(res.maslov_index == 1);
    CHECK(std::abs(res.total_rotation - kTwoPi) <= 1e-6 * kTwoPi);
  }
}

TEST_CASE("bookkeeping: disk + cylinder resolves to the punctured Klein bottle") {
  const SurfaceBookkeeping disk = SurfaceBookkeeping::disk();
  const SurfaceBookkeeping cyl = SurfaceBookkeeping::cylinder();
  const SurfaceBookkeeping filling = concatenate(disk, cyl, 1);
  CHECK(filling.euler_characteristic == 1);
  CHECK(filling.orientable);
  CHECK(filling.boundary_components == 1);

  const SurfaceBookkeeping resolved = bookkeeping_resolve(filling, 1, true);
  CHECK(resolved.euler_characteristic == -1);
  CHECK_FALSE(resolved.orientable);
  CHECK(resolved.boundary_components == 1);
  CHECK(classification_name(resolved) == "Klein bottle minus 1 open disk");

  // resolving nothing is the identity
  const SurfaceBookkeeping same = bookkeeping_resolve(filling, 0, false);
  CHECK(same.euler_characteristic == filling.euler_characteristic);
  CHECK(same.orientable == filling.orientable);

  // additivity: k points lower chi by 2k
  const SurfaceBookkeeping three = bookkeeping_resolve(filling, 3, true);
  CHECK(three.euler_characteristic == 1 - 6);
}

TEST_CASE("bookkeeping names") {
  CHECK(classification_name({2, true, 0}) == "sphere");
  CHECK(classification_name({0, true, 0}) == "torus");
  CHECK(classification_name({1, true, 1}) == "sphere minus 1 open disk");
  CHECK(classification_name({0, false, 0}) == "Klein bottle");
  CHECK(classification_name({1, false, 0}) == "projective plane");
  CHECK(classification_name({-2, true, 0}) == "genus-2 surface");
  CHECK(classification_name({0, true, 2}) == "sphere minus 2 open disks");
}

TEST_CASE("bookkeeping serializes to json") {
  const nlohmann::json j = bookkeeping_to_json({-1, false, 1});
  CHECK(j["chi"] == -1);
  CHECK(j["orientable"] == false);
  CHECK(j["boundary_components"] == 1);
  CHECK(j["classification_name"] == "Klein bottle minus 1 open disk");
}

TEST_CASE("concatenate rejects impossible gluings") {
  CHECK_THROWS_AS(concatenate(SurfaceBookkeeping::disk(),
                              SurfaceBookkeeping::disk(), 2),
                  std::invalid_argument);
}
