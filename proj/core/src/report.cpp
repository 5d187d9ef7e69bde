#include "lagfill/report.hpp"

#include <cmath>
#include <complex>
#include <filesystem>
#include <functional>
#include <random>

#include "lagfill/bookkeeping.hpp"
#include "lagfill/double_points.hpp"
#include "lagfill/emit.hpp"
#include "lagfill/forms.hpp"
#include "lagfill/homotopy.hpp"
#include "lagfill/legendrian.hpp"
#include "lagfill/maslov.hpp"
#include "lagfill/pullback.hpp"
#include "lagfill/spin.hpp"
#include "lagfill/surgery.hpp"

namespace lagfill {

void RunConfig::validate() const {
  if (n < 3) throw ConfigError("config: n must be at least 3");
  if (census_grid < 200) throw ConfigError("config: census grid minimum is 200");
  if (residual_grid < 2 || spun_grid < 2)
    throw ConfigError("config: residual grids need at least 2 samples");
  if (samples < 10000)
    throw ConfigError("config: sample count minimum is 10000");
  if (positivity_samples < 100000)
    throw ConfigError("config: positivity sample minimum is 100000");
  if (front_samples < 100 || detpath_samples < 100)
    throw ConfigError("config: emit sample minimum is 100");
  if (!(tol_scale > 0.0)) throw ConfigError("config: tolerance must be positive");
  if (out_dir.empty()) throw ConfigError("config: output directory empty");
}

nlohmann::json RunConfig::to_json() const {
  return {{"n", n},
          {"cutoff", cutoff == CutoffFunction::Variant::Identity
                         ? "identity"
                         : "smooth-plateau"},
          {"census_grid", census_grid},
          {"residual_grid", residual_grid},
          {"spun_grid", spun_grid},
          {"samples", samples},
          {"positivity_samples", positivity_samples},
          {"front_samples", front_samples},
          {"detpath_samples", detpath_samples},
          {"tol_scale", tol_scale},
          {"spin_shift", spin_shift},
          {"out_dir", out_dir}};
}

bool VerificationReport::all_pass() const {
  for (const ClaimResult& c : claims)
    if (!c.pass) return false;
  return true;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const ClaimResult& c : claims)
    arr.push_back({{"claim_id", c.id},
                   {"statement", c.statement},
                   {"computed", c.computed},
                   {"expected", c.expected},
                   {"tolerance", c.tolerance},
                   {"pass", c.pass},
                   {"note", c.note}});
  return {{"schema_version", schema_version},
          {"config", config.to_json()},
          {"environment",
           {{"compiler", __VERSION__}, {"floating_point", "ieee754-binary64"}}},
          {"claims", arr},
          {"all_pass", all_pass()}};
}

namespace {

double contact_residual_on_torus(const ParametricMap& torus, int grid) {
  const ContactForm alpha(2);
  const std::vector<double> a = factor_grid(torus.factor(0), grid);
  const std::vector<double> b = factor_grid(torus.factor(1), grid);
  double worst = 0.0;
  for (double u : a)
    for (double v : b) {
      const double p[2] = {u, v};
      const Vec pt = torus.eval(p);
      for (int k = 0; k < 2; ++k)
        worst = std::max(worst, std::abs(alpha(pt, torus.deriv(p, k))));
    }
  return worst;
}

struct ClaimRunner {
  std::vector<ClaimResult>& out;

  void run(const std::string& id, const std::string& statement,
           double tolerance, const std::function<void(ClaimResult&)>& body) {
    ClaimResult c;
    c.id = id;
    c.statement = statement;
    c.tolerance = tolerance;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.pass = false;
      c.note = c.note.empty() ? e.what() : c.note + "; " + e.what();
    }
    out.push_back(std::move(c));
  }
};

nlohmann::json complex_json(std::complex<double> z) {
  return {{"re", z.real()}, {"im", z.imag()}};
}

}  // namespace

VerificationReport run_verification(const RunConfig& config) {
  config.validate();
  VerificationReport report;
  report.config = config;
  ClaimRunner runner{report.claims};
  const double ts = config.tol_scale;

  const CutoffFunction cutoff(config.cutoff, config.n);
  const CutoffFunction identity7(CutoffFunction::Variant::Identity, 7);
  const CutoffFunction plateau_n(CutoffFunction::Variant::SmoothPlateau, config.n);

  // 1. contact residuals of the two knots and of every time slice of the lift
  runner.run(
      "legendrian_residuals",
      "contact form vanishes along K1, K2 and each time slice of the lift",
      1e-10 * ts, [&](ClaimResult& c) {
        const ContactForm alpha(1);
        const LegendrianCurve k1 = make_k1();
        const LegendrianCurve k2 = make_k2();
        const double r1 = pullback_1form_residual(k1.map(), alpha, config.samples);
        const double r2 = pullback_1form_residual(k2.map(), alpha, config.samples);
        const ParametricMap lift = legendrian_lift(cutoff);
        double rf = 0.0;
        for (int i = 0; i < 100; ++i) {
          const double t = config.n * static_cast<double>(i) / 99.0;
          const ParametricMap slice = lift.fix_factor(0, t, "lift_slice");
          rf = std::max(rf, pullback_1form_residual(slice, alpha, config.samples));
        }
        c.computed = {{"K1", r1}, {"K2", r2}, {"lift_slices_max", rf}};
        c.expected = {{"K1", 0.0}, {"K2", 0.0}, {"lift_slices_max", 0.0}};
        c.pass = r1 <= c.tolerance && r2 <= c.tolerance && rf <= c.tolerance;
      });

  // 2. tangency time
  runner.run("tangency_time",
             "the fronts touch at t = 5 where the cutoff reaches 5/7",
             1e-12 * ts, [&](ClaimResult& c) {
               const double T = tangency_time(cutoff);
               const double rho_gap = std::abs(cutoff.rho2(T) - 5.0 / 7.0);
               const ParametricMap front = front_homotopy(cutoff);
               const double p0[2] = {T, 0.0};
               const double p1[2] = {T, kPi};
               const Vec f0 = front.eval(p0), f1 = front.eval(p1);
               const double n0 = std::hypot(f0[0], f0[1]);
               const double n1 = std::hypot(f1[0], f1[1]);
               c.computed = {{"T", T},
                             {"rho2_gap", rho_gap},
                             {"front_at_0", n0},
                             {"front_at_pi", n1}};
               c.expected = {{"T", 5.0},
                             {"rho2_gap", 0.0},
                             {"front_at_0", 0.0},
                             {"front_at_pi", 0.0}};
               c.pass = std::abs(T - 5.0) <= c.tolerance &&
                        rho_gap <= c.tolerance && n0 <= 1e-10 * ts &&
                        n1 <= 1e-10 * ts;
             });

  // 3. Lagrangian residual of the perturbed immersion
  runner.run("immersion_lagrangian_residual",
             "the perturbed trace pulls the symplectization form back to zero",
             1e-10 * ts, [&](ClaimResult& c) {
               const LagrangianImmersedSurface surf = perturbed_immersion(cutoff, 2);
               const double r = pullback_2form_residual(
                   surf.map, SymplectizationForm(1),
                   {config.residual_grid, config.residual_grid});
               c.computed = r;
               c.expected = 0.0;
               c.pass = r <= c.tolerance;
             });

  // 4. double point census of the immersion and of the trace
  runner.run(
      "double_point_census",
      "exactly one double point, at (4, 0, pi) with image (4, 0, 0, 0); the "
      "trace meets itself once at t = 5",
      1e-8 * ts, [&](ClaimResult& c) {
        CensusOptions opts;
        opts.grid_t = opts.grid_theta = config.census_grid;
        const LagrangianImmersedSurface surf = perturbed_immersion(cutoff, 2);
        const std::vector<DoublePoint> census = double_point_census(surf, opts);
        const std::vector<DoublePoint> trace_census =
            double_point_census(lift_trace(cutoff), opts);
        c.computed = {{"census", census_to_json(census)},
                      {"trace_census", census_to_json(trace_census)}};
        c.expected = {{"count", 1},
                      {"t", 4.0},
                      {"theta1", 0.0},
                      {"theta2", kPi},
                      {"image", {4.0, 0.0, 0.0, 0.0}},
                      {"trace_count", 1},
                      {"trace_t", 5.0}};
        bool ok = census.size() == 1 && trace_census.size() == 1;
        if (census.size() != 1 || trace_census.size() != 1)
          c.note = "n too small: census count differs from 1";
        if (ok) {
          const DoublePoint& dp = census.front();
          ok = std::abs(dp.t - 4.0) <= c.tolerance &&
               std::abs(dp.theta1 - 0.0) <= c.tolerance &&
               std::abs(dp.theta2 - kPi) <= c.tolerance &&
               std::abs(dp.image[0] - 4.0) <= c.tolerance &&
               std::abs(dp.image[1]) <= c.tolerance &&
               std::abs(dp.image[2]) <= c.tolerance &&
               std::abs(dp.image[3]) <= c.tolerance &&
               dp.transversality_margin > 1e-6;
          ok = ok && std::abs(trace_census.front().t - 5.0) <= c.tolerance;
          if (!ok) c.note = "double point away from the pinned location";
        }
        c.note += c.note.empty() ? "census-certified at resolution " +
                                       std::to_string(config.census_grid)
                                 : "; census-certified at resolution " +
                                       std::to_string(config.census_grid);
        c.pass = ok;
      });

  // 5. self-intersection sign (identity cutoff, n = 7, the pinned setting)
  runner.run("self_intersection_sign",
             "the double point has self-intersection -1, independent of sheet "
             "order",
             0.0, [&](ClaimResult& c) {
               const LagrangianImmersedSurface surf =
                   perturbed_immersion(identity7, 2);
               CensusOptions opts;
               const std::vector<DoublePoint> census =
                   double_point_census(surf, opts);
               if (census.size() != 1)
                 throw std::runtime_error("census did not isolate one point");
               DoublePoint dp = census.front();
               const int s1 = self_intersection_sign(dp, surf.map);
               std::swap(dp.theta1, dp.theta2);
               const int s2 = self_intersection_sign(dp, surf.map);
               c.computed = {{"sign", s1}, {"sign_swapped", s2}};
               c.expected = {{"sign", -1}, {"sign_swapped", -1}};
               c.pass = s1 == -1 && s2 == -1;
             });

  // 6. displayed frame vs pushforward frame
  runner.run("frame_agreement",
             "the explicit frame matrices match the pushed-forward frame",
             1e-12 * ts, [&](ClaimResult& c) {
               const DoublePointFramePath fp(identity7);
               const double worst =
                   fp.max_disagreement(config.samples, c.tolerance);
               c.computed = worst;
               c.expected = 0.0;
               c.pass = worst <= c.tolerance;
             });

  // 7. determinant path values, symmetry and positivity
  runner.run(
      "determinant_path",
      "determinant path: endpoint and midpoint values, mirror symmetry, "
      "positive real part on the first half",
      1e-12 * ts, [&](ClaimResult& c) {
        const double closed_form_gap = det_path_max_mismatch(config.samples, 1e-10 * ts);
        const DetPathProperties p = verify_det_path_properties(
            config.samples, config.positivity_samples);
        const double start_gap = std::abs(p.det_start - p.oracle_start);
        const double mid_gap = std::abs(p.det_mid - p.oracle_mid);
        const double end_gap = std::abs(p.det_end - p.oracle_end);
        const double variant_gap = std::abs(p.det_start - p.printed_start_variant);
        c.computed = {{"det_start", complex_json(p.det_start)},
                      {"det_mid", complex_json(p.det_mid)},
                      {"det_end", complex_json(p.det_end)},
                      {"start_gap", start_gap},
                      {"mid_gap", mid_gap},
                      {"end_gap", end_gap},
                      {"symmetry_max_error", p.symmetry_max_error},
                      {"positivity_min_sampled", p.positivity_min_sampled},
                      {"derivative_bound", p.derivative_bound},
                      {"closed_form_gap", closed_form_gap},
                      {"printed_variant_gap", variant_gap}};
        c.expected = {{"det_start", complex_json(p.oracle_start)},
                      {"det_mid", complex_json(p.oracle_mid)},
                      {"det_end", complex_json(p.oracle_end)},
                      {"re_positive_first_half", true}};
        c.note =
            "exact rational evaluation of the endpoint gives (125+136i)/105 "
            "by both the product and the closed-form route; the published "
            "variant (115+136i)/105 matches neither and is recorded as a "
            "documented discrepancy (gap printed above)";
        c.pass = start_gap <= c.tolerance && mid_gap <= c.tolerance &&
                 end_gap <= c.tolerance &&
                 p.symmetry_max_error <= 1e-10 * ts &&
                 p.re_positive_first_half;
      });

  // 8. rotation angle of the determinant path
  runner.run("rotation_angle",
             "the determinant path rotates by phi1 = pi - 2 atan2(136, 125), "
             "inside (pi/4, pi/2)",
             1e-9 * ts, [&](ClaimResult& c) {
               const double phi1 = rotation_angle_phi1(config.samples);
               const double ref = phi1_endpoint_formula();
               c.computed = {{"phi1", phi1}, {"two_phi1", 2.0 * phi1}};
               c.expected = {{"phi1", ref}, {"two_phi1", 2.0 * ref}};
               c.pass = std::abs(phi1 - ref) <= c.tolerance &&
                        phi1 > kPi / 4.0 && phi1 < kPi / 2.0 &&
                        2.0 * phi1 > kPi / 2.0 && 2.0 * phi1 < kPi;
             });

  // 9. Maslov potential difference across the double point
  runner.run("maslov_potential_difference",
             "the two sheets differ by exactly one half in Maslov potential",
             1e-6 * ts, [&](ClaimResult& c) {
               const DoublePointFramePath fp(identity7);
               const double pd = maslov_potential_difference(fp.path());
               c.computed = pd;
               c.expected = 0.5;
               c.pass = std::abs(pd - 0.5) <= c.tolerance;
             });

  // 10. loop indices
  runner.run(
      "loop_indices",
      "meridian, spun circle and boundary knot loops have index 0; the "
      "surgery loop has index 1 with 2 phi1 + phi2 = 2 pi",
      1e-6 * ts, [&](ClaimResult& c) {
        const LagrangianImmersedSurface surf = perturbed_immersion(identity7, 2);
        const std::vector<DoublePoint> census = double_point_census(surf);
        if (census.size() != 1)
          throw std::runtime_error("census did not isolate one point");
        const Normalization nrm = normalize_double_point(census.front(), surf.map);
        const HandleProfile profile;
        const DoublePointFramePath fp(identity7);

        const int meridian =
            maslov_index_loop(conjugated_handle_meridian(profile, nrm));
        const SurgeryLoopResult loop =
            assembled_surgery_loop(fp.path(), profile, nrm);

        const LagrangianImmersedSurface base = perturbed_immersion(plateau_n, 2);
        const SpunSurface spun = spin(base, config.spin_shift);
        const int spin_idx = maslov_index_loop(
            spin_circle_loop(spun, 0.5 * config.n, 1.0));
        const int knot_idx = maslov_index_loop(boundary_knot_loop(spun, 0.3));

        c.computed = {{"meridian", meridian},
                      {"spun_circle", spin_idx},
                      {"boundary_knot", knot_idx},
                      {"surgery_loop", loop.maslov_index},
                      {"phi1", loop.phi1},
                      {"phi2", loop.phi2},
                      {"total_rotation", loop.total_rotation}};
        c.expected = {{"meridian", 0},
                      {"spun_circle", 0},
                      {"boundary_knot", 0},
                      {"surgery_loop", 1},
                      {"total_rotation", kTwoPi}};
        const bool phi2_in_range = loop.phi2 > -kTwoPi && loop.phi2 < kTwoPi;
        const int via_angles = surgery_loop_index(loop.phi1, loop.phi2, 1e-6 * ts);
        c.pass = meridian == 0 && spin_idx == 0 && knot_idx == 0 &&
                 loop.maslov_index == 1 && via_angles == 1 && phi2_in_range &&
                 std::abs(loop.total_rotation - kTwoPi) <= 1e-6 * ts * kTwoPi;
      });

  // 11. spun filling
  runner.run(
      "spun_filling",
      "the spun filling is Lagrangian, its boundary torus is Legendrian and "
      "embedded",
      1e-10 * ts, [&](ClaimResult& c) {
        const LagrangianImmersedSurface base = perturbed_immersion(plateau_n, 2);
        const SpunSurface spun = spin(base, config.spin_shift);
        const double lag = pullback_2form_residual(
            spun.map, SymplectizationForm(2),
            {config.spun_grid, config.spun_grid, config.spun_grid});
        const ParametricMap torus = boundary_torus(spun);
        const double contact = contact_residual_on_torus(torus, 200);
        const std::size_t close_pairs = close_pair_count(torus, 100, 0.01);
        c.computed = {{"lagrangian_residual", lag},
                      {"boundary_contact_residual", contact},
                      {"boundary_close_pairs", close_pairs},
                      {"min_shifted_x", spun.min_shifted_x}};
        c.expected = {{"lagrangian_residual", 0.0},
                      {"boundary_contact_residual", 0.0},
                      {"boundary_close_pairs", 0}};
        c.pass = lag <= c.tolerance && contact <= c.tolerance &&
                 close_pairs == 0 && spun.min_shifted_x > 0.0;
      });

  // 12. surface bookkeeping
  runner.run(
      "surface_bookkeeping",
      "disk + cylinder resolves to the Klein bottle minus an open disk",
      0.0, [&](ClaimResult& c) {
        const SurfaceBookkeeping filling = concatenate(
            SurfaceBookkeeping::disk(), SurfaceBookkeeping::cylinder(), 1);
        const SurfaceBookkeeping resolved = bookkeeping_resolve(filling, 1, true);
        c.computed = {{"before", bookkeeping_to_json(filling)},
                      {"after", bookkeeping_to_json(resolved)}};
        c.expected = {{"chi", -1},
                      {"orientable", false},
                      {"boundary_components", 1},
                      {"classification_name", "Klein bottle minus 1 open disk"}};
        c.pass = filling.euler_characteristic == 1 && filling.orientable &&
                 filling.boundary_components == 1 &&
                 resolved.euler_characteristic == -1 && !resolved.orientable &&
                 resolved.boundary_components == 1 &&
                 classification_name(resolved) == "Klein bottle minus 1 open disk";
      });

  // 13. randomized property trials
  runner.run(
      "randomized_properties",
      "finite differences, reversal antisymmetry, rotation additivity and "
      "reparameterization invariance over 100 random trials each",
      1e-6 * ts, [&](ClaimResult& c) {
        std::mt19937_64 rng(20240817);
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        // derivative cross-check over a pool of registered maps
        std::vector<ParametricMap> pool;
        pool.push_back(make_k1().map());
        pool.push_back(make_k2().map());
        pool.push_back(legendrian_lift(identity7));
        pool.push_back(legendrian_lift(plateau_n));
        pool.push_back(perturbed_immersion(identity7, 2).map);
        pool.push_back(perturbed_immersion(plateau_n, 2).map);
        pool.push_back(spin(perturbed_immersion(plateau_n, 2), config.spin_shift).map);
        pool.push_back(build_handle(HandleProfile()));
        double fd_worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
          const ParametricMap& m =
              pool[static_cast<std::size_t>(rng() % pool.size())];
          Vec p(static_cast<std::size_t>(m.arity()));
          for (int i = 0; i < m.arity(); ++i) {
            const DomainFactor& f = m.factor(i);
            const double inset = 1e-4 * f.length();
            p[static_cast<std::size_t>(i)] =
                f.lo + inset + (f.length() - 2.0 * inset) * unit(rng);
          }
          fd_worst = std::max(fd_worst, max_relative_fd_error(m, p));
        }

        // potential difference: reversal antisymmetry under reparameterization
        const DoublePointFramePath fp(identity7);
        const FramePathFn base_path = fp.path();
        double pd_worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
          const double a = -0.9 + 1.8 * unit(rng);
          auto sigma = [a](double u) {
            return u + a * std::sin(kTwoPi * u) / kTwoPi;
          };
          FramePathFn fwd = [&base_path, sigma](double u) {
            return base_path(sigma(u));
          };
          FramePathFn rev = [&base_path, sigma](double u) {
            return base_path(sigma(1.0 - u));
          };
          const double f = maslov_potential_difference(fwd, 2048);
          const double r = maslov_potential_difference(rev, 2048);
          pd_worst = std::max(pd_worst, std::abs(f - 0.5));
          pd_worst = std::max(pd_worst, std::abs(r + 0.5));
        }

        // additivity of the det^2 rotation under concatenation
        double add_worst = 0.0;
        const double full = det2_rotation(base_path, 0.0, 1.0, 4096);
        for (int trial = 0; trial < 100; ++trial) {
          const double split = 0.05 + 0.9 * unit(rng);
          const double left = det2_rotation(base_path, 0.0, split, 2048);
          const double right = det2_rotation(base_path, split, 1.0, 2048);
          add_worst = std::max(add_worst, std::abs(left + right - full));
        }

        // loop index invariance under monotone reparameterization
        const LagrangianImmersedSurface base = perturbed_immersion(plateau_n, 2);
        const SpunSurface spun = spin(base, config.spin_shift);
        const FramePathFn spin_loop = spin_circle_loop(spun, 0.5 * config.n, 1.0);
        const FramePathFn meridian = handle_meridian_loop(HandleProfile());
        bool reparam_ok = true;
        for (int trial = 0; trial < 100; ++trial) {
          const double a = -0.9 + 1.8 * unit(rng);
          auto sigma = [a](double u) {
            return u + a * std::sin(kTwoPi * u) / kTwoPi;
          };
          const FramePathFn& loop = (trial % 2 == 0) ? spin_loop : meridian;
          FramePathFn reparam = [&loop, sigma](double u) {
            return loop(sigma(u));
          };
          if (maslov_index_loop(reparam, 512) != 0) reparam_ok = false;
        }

        c.computed = {{"fd_worst_relative_error", fd_worst},
                      {"potential_difference_worst_gap", pd_worst},
                      {"rotation_additivity_worst_gap", add_worst},
                      {"loop_reparam_invariant", reparam_ok}};
        c.expected = {{"fd_worst_relative_error", 0.0},
                      {"potential_difference_worst_gap", 0.0},
                      {"rotation_additivity_worst_gap", 0.0},
                      {"loop_reparam_invariant", true}};
        c.pass = fd_worst <= 1e-6 * ts && pd_worst == 0.0 &&
                 add_worst <= 1e-9 * ts && reparam_ok;
      });

  return report;
}

void write_front_files(const RunConfig& config) {
  config.validate();
  namespace fs = std::filesystem;
  fs::create_directories(config.out_dir);

  CsvWriter csv({"theta", "x", "z"});
  const LegendrianCurve knots[2] = {make_k1(), make_k2()};
  const char* names[2] = {"fronts_K1.svg", "fronts_K2.svg"};
  for (int k = 0; k < 2; ++k) {
    const FrontDiagram fd = front_project(knots[k], config.front_samples);
    for (std::size_t i = 0; i < fd.theta.size(); ++i)
      csv.add_row({fd.theta[i], fd.x[i], fd.z[i]});

    SvgPlot svg;
    std::vector<double> x = fd.x, z = fd.z;
    x.push_back(fd.x.front());  // close the loop
    z.push_back(fd.z.front());
    svg.add_polyline(x, z);
    for (const Cusp& cusp : fd.cusps) {
      const Vec pt = knots[k].point(cusp.theta);
      svg.add_marker({pt[0], pt[2], "#d62728", cusp.up ? "cusp up" : "cusp down"});
    }
    write_text_file((fs::path(config.out_dir) / names[k]).string(), svg.str());
  }
  write_text_file((fs::path(config.out_dir) / "fronts.csv").string(), csv.str());
}

void write_detpath_files(const RunConfig& config) {
  config.validate();
  namespace fs = std::filesystem;
  fs::create_directories(config.out_dir);

  // identity cutoff, n = 7 is forced for the determinant path
  const ArgumentTrace tr =
      unwrap_argument(det_path_direct, 0.0, 1.0, config.detpath_samples);
  CsvWriter csv({"s", "re", "im", "unwrapped_arg"});
  std::vector<double> re, im;
  re.reserve(tr.s.size());
  im.reserve(tr.s.size());
  for (std::size_t i = 0; i < tr.s.size(); ++i) {
    const std::complex<double> d = det_path_direct(tr.s[i]);
    csv.add_row({tr.s[i], d.real(), d.imag(), tr.arg[i]});
    re.push_back(d.real());
    im.push_back(d.imag());
  }
  write_text_file((fs::path(config.out_dir) / "detpath.csv").string(), csv.str());

  SvgPlot svg;
  svg.add_polyline(re, im);
  const std::complex<double> d0 = det_path_direct(0.0);
  const std::complex<double> dh = det_path_direct(0.5);
  const std::complex<double> d1 = det_path_direct(1.0);
  svg.add_marker({d0.real(), d0.imag(), "#2ca02c", "s=0"});
  svg.add_marker({dh.real(), dh.imag(), "#d62728", "s=1/2: 22i/7"});
  svg.add_marker({d1.real(), d1.imag(), "#2ca02c", "s=1"});
  write_text_file((fs::path(config.out_dir) / "detpath.svg").string(), svg.str());
}

void write_report_file(const VerificationReport& report,
                       const std::string& path) {
  write_text_file(path, report.to_json().dump(2) + "\n");
}

}  // namespace lagfill
