#include "lagfill/double_points.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lagfill {

namespace {

double circle_dist(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi - 1e-9) a = 0.0;  // snap the seam so pairs canonicalize
  return a;
}

// distance between unordered angle pairs, respecting the sheet symmetry
double pair_dist(double a1, double a2, double b1, double b2) {
  const double direct = circle_dist(a1, b1) + circle_dist(a2, b2);
  const double crossed = circle_dist(a1, b2) + circle_dist(a2, b1);
  return std::min(direct, crossed);
}

// det of a 4x4 given as rows
double det4(const std::array<std::array<double, 4>, 4>& m) {
  std::array<std::array<double, 4>, 4> a = m;
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
          std::abs(a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]))
        piv = r;
    if (a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == 0.0)
      return 0.0;
    if (piv != col) {
      std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(col)]);
      det = -det;
    }
    det *= a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int r = col + 1; r < 4; ++r) {
      const double f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                       a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      for (int c = col; c < 4; ++c)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
    }
  }
  return det;
}

// smallest singular value of a 4x4: sqrt of the min eigenvalue of A^T A,
// by cyclic Jacobi on the symmetric 4x4
double smallest_singular_value(const std::array<std::array<double, 4>, 4>& rows) {
  std::array<std::array<double, 4>, 4> s{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double v = 0.0;
      for (int k = 0; k < 4; ++k)
        v += rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] *
             rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q)
        off += std::abs(s[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]);
    if (off < 1e-18) break;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        const double apq = s[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
        if (std::abs(apq) < 1e-300) continue;
        const double app = s[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)];
        const double aqq = s[static_cast<std::size_t>(q)][static_cast<std::size_t>(q)];
        const double phi = 0.5 * std::atan2(2.0 * apq, aqq - app);
        const double c = std::cos(phi), sn = std::sin(phi);
        for (int k = 0; k < 4; ++k) {
          const double skp = s[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
          const double skq = s[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)];
          s[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] = c * skp - sn * skq;
          s[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)] = sn * skp + c * skq;
        }
        for (int k = 0; k < 4; ++k) {
          const double spk = s[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)];
          const double sqk = s[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)];
          s[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)] = c * spk - sn * sqk;
          s[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)] = sn * spk + c * sqk;
        }
      }
  }
  double mn = s[0][0];
  for (int i = 1; i < 4; ++i)
    mn = std::min(mn, s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
  return std::sqrt(std::max(0.0, mn));
}

bool solve3(std::array<std::array<double, 3>, 3> a, std::array<double, 3>& b) {
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
          std::abs(a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]))
        piv = r;
    if (std::abs(a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]) < 1e-14)
      return false;
    std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(col)]);
    std::swap(b[static_cast<std::size_t>(piv)], b[static_cast<std::size_t>(col)]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                       a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      for (int c = 0; c < 3; ++c)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
      b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(col)];
    }
  }
  for (int i = 0; i < 3; ++i)
    b[static_cast<std::size_t>(i)] /=
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  return true;
}

struct Root {
  double t, th1, th2;
};

void check_surface(const ParametricMap& surface) {
  if (surface.arity() != 2 || surface.codomain_dim() != 4 ||
      surface.factor(0).kind != FactorKind::Interval ||
      surface.factor(1).kind != FactorKind::Circle)
    throw std::invalid_argument(
        "double_point_census: expected [0,n] x S^1 -> R^4");
}

}  // namespace

std::vector<DoublePoint> double_point_census(const ParametricMap& surface,
                                             const CensusOptions& opts,
                                             CensusDiagnostics* diag) {
  check_surface(surface);
  if (opts.grid_t < 200 || opts.grid_theta < 200)
    throw std::invalid_argument("double_point_census: grid must be >= 200");

  const double t_lo = surface.factor(0).lo, t_hi = surface.factor(0).hi;

  // Precompute images on the (t, theta) grid; the t coordinates of a double
  // point agree, so only same-t pairs are candidate seeds.
  const std::vector<double> ts = factor_grid(surface.factor(0), opts.grid_t);
  const std::vector<double>ths = factor_grid(surface.factor(1), opts.grid_theta);
  std::vector<std::array<double, 3>> img(
      static_cast<std::size_t>(opts.grid_t) * static_cast<std::size_t>(opts.grid_theta));
  for (int i = 0; i < opts.grid_t; ++i)
    for (int j = 0; j < opts.grid_theta; ++j) {
      const double p[2] = {ts[static_cast<std::size_t>(i)], ths[static_cast<std::size_t>(j)]};
      const Vec v = surface.eval(p);
      img[static_cast<std::size_t>(i) * static_cast<std::size_t>(opts.grid_theta) +
          static_cast<std::size_t>(j)] = {v[1], v[2], v[3]};
    }

  const double r2 = opts.seed_radius * opts.seed_radius;
  std::vector<Root> seeds;
  for (int i = 0; i < opts.grid_t; ++i) {
    const std::size_t row = static_cast<std::size_t>(i) * static_cast<std::size_t>(opts.grid_theta);
    for (int j = 0; j < opts.grid_theta; ++j)
      for (int k = j + 1; k < opts.grid_theta; ++k) {
        if (circle_dist(ths[static_cast<std::size_t>(j)], ths[static_cast<std::size_t>(k)]) <
            opts.min_angle_sep)
          continue;
        const auto& a = img[row + static_cast<std::size_t>(j)];
        const auto& b = img[row + static_cast<std::size_t>(k)];
        const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
        if (dx * dx + dy * dy + dz * dz < r2)
          seeds.push_back({ts[static_cast<std::size_t>(i)], ths[static_cast<std::size_t>(j)],
                           ths[static_cast<std::size_t>(k)]});
      }
  }
  if (diag) diag->seeds = seeds.size();

  // Newton on G(t, th1, th2) = (x,y,z)(t, th1) - (x,y,z)(t, th2)
  std::vector<Root> roots;
  std::size_t failures = 0;
  for (const Root& seed : seeds) {
    Root r = seed;
    bool converged = false;
    for (int it = 0; it < opts.newton_max_iter; ++it) {
      const double p1[2] = {r.t, r.th1};
      const double p2[2] = {r.t, r.th2};
      const Vec f1 = surface.eval(p1), f2 = surface.eval(p2);
      std::array<double, 3> g = {f1[1] - f2[1], f1[2] - f2[2], f1[3] - f2[3]};
      const double gn = std::hypot(g[0], g[1], g[2]);
      if (gn < 1e-12) {
        converged = true;
        break;
      }
      const Vec dt1 = surface.deriv(p1, 0), dt2 = surface.deriv(p2, 0);
      const Vec dh1 = surface.deriv(p1, 1), dh2 = surface.deriv(p2, 1);
      std::array<std::array<double, 3>, 3> jac{};
      for (int c = 0; c < 3; ++c) {
        jac[static_cast<std::size_t>(c)][0] =
            dt1[static_cast<std::size_t>(c + 1)] - dt2[static_cast<std::size_t>(c + 1)];
        jac[static_cast<std::size_t>(c)][1] = dh1[static_cast<std::size_t>(c + 1)];
        jac[static_cast<std::size_t>(c)][2] = -dh2[static_cast<std::size_t>(c + 1)];
      }
      if (!solve3(jac, g)) break;
      r.t -= g[0];
      r.th1 -= g[1];
      r.th2 -= g[2];
      if (r.t < t_lo - 0.5 || r.t > t_hi + 0.5) break;
    }
    if (!converged) {
      ++failures;  // logged, not fatal
      continue;
    }
    if (r.t < t_lo - 1e-9 || r.t > t_hi + 1e-9) continue;
    r.t = std::clamp(r.t, t_lo, t_hi);
    r.th1 = wrap_angle(r.th1);
    r.th2 = wrap_angle(r.th2);
    if (circle_dist(r.th1, r.th2) < 1e-3) continue;  // collapsed to the diagonal
    if (r.th1 > r.th2) std::swap(r.th1, r.th2);
    roots.push_back(r);
  }
  if (diag) diag->newton_failures = failures;

  // Deduplicate by parameter distance; two surviving distinct roots closer
  // than 10x the merge radius cannot be told apart and are fatal.
  std::vector<Root> unique_roots;
  for (const Root& r : roots) {
    bool merged = false;
    for (Root& u : unique_roots) {
      const double d =
          std::abs(u.t - r.t) + pair_dist(u.th1, u.th2, r.th1, r.th2);
      if (d < opts.dedup_distance) {
        merged = true;
        break;
      }
    }
    if (!merged) unique_roots.push_back(r);
  }
  for (std::size_t i = 0; i < unique_roots.size(); ++i)
    for (std::size_t j = i + 1; j < unique_roots.size(); ++j) {
      const double d =
          std::abs(unique_roots[i].t - unique_roots[j].t) +
          pair_dist(unique_roots[i].th1, unique_roots[i].th2,
                    unique_roots[j].th1, unique_roots[j].th2);
      if (d < 10.0 * opts.dedup_distance)
        throw std::runtime_error(
            "double_point_census: duplicate-collapse ambiguity, two roots at "
            "parameter distance " +
            std::to_string(d));
    }

  std::vector<DoublePoint> out;
  for (const Root& r : unique_roots) {
    DoublePoint dp;
    dp.t = r.t;
    dp.theta1 = r.th1;
    dp.theta2 = r.th2;
    const double p1[2] = {r.t, r.th1};
    const double p2[2] = {r.t, r.th2};
    const Vec f1 = surface.eval(p1), f2 = surface.eval(p2);
    for (int c = 0; c < 4; ++c)
      dp.image[static_cast<std::size_t>(c)] =
          0.5 * (f1[static_cast<std::size_t>(c)] + f2[static_cast<std::size_t>(c)]);
    const Vec u1 = surface.deriv(p1, 0), u2 = surface.deriv(p1, 1);
    const Vec v1 = surface.deriv(p2, 0), v2 = surface.deriv(p2, 1);
    std::array<std::array<double, 4>, 4> rows{};
    for (int c = 0; c < 4; ++c) {
      rows[0][static_cast<std::size_t>(c)] = u1[static_cast<std::size_t>(c)];
      rows[1][static_cast<std::size_t>(c)] = u2[static_cast<std::size_t>(c)];
      rows[2][static_cast<std::size_t>(c)] = v1[static_cast<std::size_t>(c)];
      rows[3][static_cast<std::size_t>(c)] = v2[static_cast<std::size_t>(c)];
    }
    dp.transversality_margin = smallest_singular_value(rows);
    const double d = det4(rows);
    dp.sign = d > 0.0 ? 1 : -1;
    out.push_back(dp);
  }
  std::sort(out.begin(), out.end(), [](const DoublePoint& a, const DoublePoint& b) {
    if (a.t != b.t) return a.t < b.t;
    return a.theta1 < b.theta1;
  });
  return out;
}

std::vector<DoublePoint> double_point_census(
    const LagrangianImmersedSurface& surface, const CensusOptions& opts,
    CensusDiagnostics* diag) {
  return double_point_census(surface.map, opts, diag);
}

int self_intersection_sign(const DoublePoint& dp, const ParametricMap& surface) {
  check_surface(surface);
  if (dp.transversality_margin <= 1e-6)
    throw std::invalid_argument(
        "self_intersection_sign: transversality margin " +
        std::to_string(dp.transversality_margin) + " too small");
  const double p1[2] = {dp.t, dp.theta1};
  const double p2[2] = {dp.t, dp.theta2};
  const Vec u1 = surface.deriv(p1, 0), u2 = surface.deriv(p1, 1);
  const Vec v1 = surface.deriv(p2, 0), v2 = surface.deriv(p2, 1);
  std::array<std::array<double, 4>, 4> rows{};
  for (int c = 0; c < 4; ++c) {
    rows[0][static_cast<std::size_t>(c)] = u1[static_cast<std::size_t>(c)];
    rows[1][static_cast<std::size_t>(c)] = u2[static_cast<std::size_t>(c)];
    rows[2][static_cast<std::size_t>(c)] = v1[static_cast<std::size_t>(c)];
    rows[3][static_cast<std::size_t>(c)] = v2[static_cast<std::size_t>(c)];
  }
  // rows are ordered against the (t, x, y, z) coordinate basis, which is
  // positively oriented for omega ^ omega
  const double d = det4(rows);
  if (d == 0.0)
    throw std::runtime_error("self_intersection_sign: degenerate intersection");
  return d > 0.0 ? 1 : -1;
}

std::size_t close_pair_count(const ParametricMap& torus, int grid, double radius,
                             double min_sep) {
  if (torus.arity() != 2 || torus.factor(0).kind != FactorKind::Circle ||
      torus.factor(1).kind != FactorKind::Circle)
    throw std::invalid_argument("close_pair_count: expected S^1 x S^1 domain");
  const int d = torus.codomain_dim();
  const std::vector<double> a = factor_grid(torus.factor(0), grid);
  const std::vector<double> b = factor_grid(torus.factor(1), grid);
  std::vector<double> img(static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid) *
                          static_cast<std::size_t>(d));
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const double p[2] = {a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]};
      const Vec v = torus.eval(p);
      for (int c = 0; c < d; ++c)
        img[(static_cast<std::size_t>(i) * static_cast<std::size_t>(grid) +
             static_cast<std::size_t>(j)) * static_cast<std::size_t>(d) +
            static_cast<std::size_t>(c)] = v[static_cast<std::size_t>(c)];
    }
  const double r2 = radius * radius;
  std::size_t count = 0;
  const std::size_t total = static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid);
  for (std::size_t p = 0; p < total; ++p)
    for (std::size_t q = p + 1; q < total; ++q) {
      const int pi = static_cast<int>(p) / grid, pj = static_cast<int>(p) % grid;
      const int qi = static_cast<int>(q) / grid, qj = static_cast<int>(q) % grid;
      if (circle_dist(a[static_cast<std::size_t>(pi)], a[static_cast<std::size_t>(qi)]) < min_sep &&
          circle_dist(b[static_cast<std::size_t>(pj)], b[static_cast<std::size_t>(qj)]) < min_sep)
        continue;
      double dist2 = 0.0;
      for (int c = 0; c < d; ++c) {
        const double diff = img[p * static_cast<std::size_t>(d) + static_cast<std::size_t>(c)] -
                            img[q * static_cast<std::size_t>(d) + static_cast<std::size_t>(c)];
        dist2 += diff * diff;
        if (dist2 >= r2) break;
      }
      if (dist2 < r2) ++count;
    }
  return count;
}

nlohmann::json census_to_json(const std::vector<DoublePoint>& census) {
  nlohmann::json arr = nlohmann::json::array();
  for (const DoublePoint& dp : census) {
    arr.push_back({{"t", dp.t},
                   {"theta1", dp.theta1},
                   {"theta2", dp.theta2},
                   {"image", {dp.image[0], dp.image[1], dp.image[2], dp.image[3]}},
                   {"sign", dp.sign},
                   {"margin", dp.transversality_margin}});
  }
  return arr;
}

}  // namespace lagfill
