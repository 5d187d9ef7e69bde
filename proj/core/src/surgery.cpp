#include "lagfill/surgery.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lagfill/forms.hpp"
#include "lagfill/pullback.hpp"

namespace lagfill {

HandleProfile::HandleProfile(double r0, double dip, double skew)
    : r0_(r0), dip_(dip), skew_(skew) {
  if (r0 <= 0.0) throw std::invalid_argument("HandleProfile: r0 must be positive");
  // radial end speeds r'(-1) < 0 and r'(1) > 0 keep the ends immersed
  if (!(dip > 0.0) || std::abs(skew) >= 2.0 * dip / 3.0)
    throw std::invalid_argument("HandleProfile: need dip > 0, |skew| < 2 dip / 3");
}

std::complex<double> HandleProfile::gamma(double s) const {
  const double r = r0_ * (1.0 + dip_ * s * s + skew_ * s * s * s);
  const double th = 0.25 * kPi * (1.0 + std::sin(0.5 * kPi * s));
  return std::polar(r, th);
}

std::complex<double> HandleProfile::gamma_prime(double s) const {
  const double r = r0_ * (1.0 + dip_ * s * s + skew_ * s * s * s);
  const double rp = r0_ * (2.0 * dip_ * s + 3.0 * skew_ * s * s);
  const double th = 0.25 * kPi * (1.0 + std::sin(0.5 * kPi * s));
  const double thp = 0.125 * kPi * kPi * std::cos(0.5 * kPi * s);
  return std::complex<double>(rp, r * thp) * std::polar(1.0, th);
}

double HandleProfile::min_radius() const {
  double mn = std::abs(gamma(-1.0));
  for (int i = 0; i <= 2000; ++i)
    mn = std::min(mn, std::abs(gamma(-1.0 + 2.0 * i / 2000.0)));
  return mn;
}

void HandleProfile::validate(double tol) const {
  const std::complex<double> g0 = gamma(-1.0), g1 = gamma(1.0);
  const std::complex<double> d0 = gamma_prime(-1.0), d1 = gamma_prime(1.0);
  if (!(g0.real() > 0.0) || std::abs(g0.imag()) > tol)
    throw std::runtime_error("HandleProfile: gamma(-1) not on the positive real axis");
  if (!(g1.imag() > 0.0) || std::abs(g1.real()) > tol)
    throw std::runtime_error("HandleProfile: gamma(1) not on the positive imaginary axis");
  if (std::abs(d0.imag()) > tol || std::abs(d0.real()) < tol)
    throw std::runtime_error("HandleProfile: end tangency fails at s = -1");
  if (std::abs(d1.real()) > tol || std::abs(d1.imag()) < tol)
    throw std::runtime_error("HandleProfile: end tangency fails at s = 1");
  if (!(min_radius() > 0.0))
    throw std::runtime_error("HandleProfile: profile passes through the origin");
}

ParametricMap build_handle(const HandleProfile& profile) {
  profile.validate();
  const HandleProfile prof = profile;
  return ParametricMap(
      "polterovich_handle",
      {DomainFactor::interval(-1.0, 1.0), DomainFactor::circle()}, 4,
      [prof](Params p) {
        const std::complex<double> g = prof.gamma(p[0]);
        const double c = std::cos(p[1]), s = std::sin(p[1]);
        return Vec{g.real() * c, g.real() * s, g.imag() * c, g.imag() * s};
      },
      [prof](Params p, int k) {
        const double c = std::cos(p[1]), s = std::sin(p[1]);
        if (k == 0) {
          const std::complex<double> d = prof.gamma_prime(p[0]);
          return Vec{d.real() * c, d.real() * s, d.imag() * c, d.imag() * s};
        }
        const std::complex<double> g = prof.gamma(p[0]);
        return Vec{-g.real() * s, g.real() * c, -g.imag() * s, g.imag() * c};
      });
}

double model_symplectic_form(Params u, Params v) {
  // coordinates (xi1, xi2, eta1, eta2)
  return u[0] * v[2] - u[2] * v[0] + u[1] * v[3] - u[3] * v[1];
}

double handle_lagrangian_residual(const HandleProfile& profile, int grid) {
  const ParametricMap handle = build_handle(profile);
  TwoForm form = [](Params, Params u, Params v) {
    return model_symplectic_form(u, v);
  };
  return pullback_2form_residual(handle, form, {grid, grid});
}

namespace {

FrameSample model_frame(const HandleProfile& prof, double s, double psi) {
  // rows: d/ds H and d/dpsi H in complex coordinates (z1, z2)
  const std::complex<double> g = prof.gamma(s);
  const std::complex<double> d = prof.gamma_prime(s);
  const double c = std::cos(psi), sn = std::sin(psi);
  FrameSample f;
  f.X.n = f.Y.n = 2;
  f.X.at(0, 0) = d.real() * c;
  f.X.at(0, 1) = d.real() * sn;
  f.Y.at(0, 0) = d.imag() * c;
  f.Y.at(0, 1) = d.imag() * sn;
  f.X.at(1, 0) = -g.real() * sn;
  f.X.at(1, 1) = g.real() * c;
  f.Y.at(1, 0) = -g.imag() * sn;
  f.Y.at(1, 1) = g.imag() * c;
  return f;
}

std::array<double, 4> apply4(const std::array<double, 16>& m,
                             const std::array<double, 4>& v) {
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out[static_cast<std::size_t>(i)] +=
          m[static_cast<std::size_t>(4 * i + j)] * v[static_cast<std::size_t>(j)];
  return out;
}

bool invert4(const std::array<double, 16>& m, std::array<double, 16>& inv) {
  std::array<double, 32> a{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j)
      a[static_cast<std::size_t>(8 * i + j)] = m[static_cast<std::size_t>(4 * i + j)];
    a[static_cast<std::size_t>(8 * i + 4 + i)] = 1.0;
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a[static_cast<std::size_t>(8 * r + col)]) >
          std::abs(a[static_cast<std::size_t>(8 * piv + col)]))
        piv = r;
    if (std::abs(a[static_cast<std::size_t>(8 * piv + col)]) < 1e-13) return false;
    if (piv != col)
      for (int c = 0; c < 8; ++c)
        std::swap(a[static_cast<std::size_t>(8 * piv + c)],
                  a[static_cast<std::size_t>(8 * col + c)]);
    const double d = a[static_cast<std::size_t>(8 * col + col)];
    for (int c = 0; c < 8; ++c) a[static_cast<std::size_t>(8 * col + c)] /= d;
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = a[static_cast<std::size_t>(8 * r + col)];
      if (f == 0.0) continue;
      for (int c = 0; c < 8; ++c)
        a[static_cast<std::size_t>(8 * r + c)] -= f * a[static_cast<std::size_t>(8 * col + c)];
    }
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      inv[static_cast<std::size_t>(4 * i + j)] = a[static_cast<std::size_t>(8 * i + 4 + j)];
  return true;
}

// frame coordinates of the two tangent vectors of one sheet, as
// (xi1, xi2, eta1, eta2) 4-vectors
std::array<std::array<double, 4>, 2> sheet_plane(const ParametricMap& surface,
                                                 double t, double theta) {
  const double p[2] = {t, theta};
  const Vec pt = surface.eval(p);
  const UnitaryFrame frame(1);
  std::array<std::array<double, 4>, 2> rows{};
  for (int k = 0; k < 2; ++k) {
    const Vec d = surface.deriv(p, k);
    const FrameComponents fc = frame.components(pt, d);
    rows[static_cast<std::size_t>(k)] = {fc.xi[0], fc.xi[1], fc.eta[0], fc.eta[1]};
  }
  return rows;
}

}  // namespace

Normalization normalize_double_point(const DoublePoint& dp,
                                     const ParametricMap& surface) {
  if (dp.transversality_margin <= 1e-6)
    throw std::invalid_argument("normalize_double_point: sheets not transverse");

  // a-basis spans the second sheet (sent to the real plane, where the handle
  // starts), b-basis the first sheet (sent to the imaginary plane)
  const auto a = sheet_plane(surface, dp.t, dp.theta2);
  const auto b0 = sheet_plane(surface, dp.t, dp.theta1);

  auto omega = [](const std::array<double, 4>& u, const std::array<double, 4>& v) {
    return u[0] * v[2] - u[2] * v[0] + u[1] * v[3] - u[3] * v[1];
  };

  // pairing P_ij = omega(a_i, b0_j); transversality makes it invertible
  const double p11 = omega(a[0], b0[0]), p12 = omega(a[0], b0[1]);
  const double p21 = omega(a[1], b0[0]), p22 = omega(a[1], b0[1]);
  const double det = p11 * p22 - p12 * p21;
  if (std::abs(det) < 1e-10)
    throw std::runtime_error("normalize_double_point: degenerate sheet pairing");

  // b = b0 P^{-1} so that omega(a_i, b_j) = delta_ij
  const double q11 = p22 / det, q12 = -p12 / det;
  const double q21 = -p21 / det, q22 = p11 / det;
  std::array<std::array<double, 4>, 2> b{};
  for (int c = 0; c < 4; ++c) {
    b[0][static_cast<std::size_t>(c)] =
        b0[0][static_cast<std::size_t>(c)] * q11 + b0[1][static_cast<std::size_t>(c)] * q21;
    b[1][static_cast<std::size_t>(c)] =
        b0[0][static_cast<std::size_t>(c)] * q12 + b0[1][static_cast<std::size_t>(c)] * q22;
  }

  // columns (a1 a2 b1 b2) map the standard symplectic basis to the sheets;
  // the normalization is the inverse
  std::array<double, 16> basis{};
  for (int r = 0; r < 4; ++r) {
    basis[static_cast<std::size_t>(4 * r + 0)] = a[0][static_cast<std::size_t>(r)];
    basis[static_cast<std::size_t>(4 * r + 1)] = a[1][static_cast<std::size_t>(r)];
    basis[static_cast<std::size_t>(4 * r + 2)] = b[0][static_cast<std::size_t>(r)];
    basis[static_cast<std::size_t>(4 * r + 3)] = b[1][static_cast<std::size_t>(r)];
  }

  Normalization nrm;
  nrm.from_model = basis;
  if (!invert4(basis, nrm.to_model))
    throw std::runtime_error("normalize_double_point: basis not invertible");
  nrm.transversality_pairing = std::abs(det);

  // certificate: images of the sheet bases sit on the model planes and the
  // map preserves omega on the basis
  double plane_res = 0.0;
  for (int i = 0; i < 2; ++i) {
    const auto na = apply4(nrm.to_model, a[static_cast<std::size_t>(i)]);
    const auto nb = apply4(nrm.to_model, b[static_cast<std::size_t>(i)]);
    plane_res = std::max(plane_res, std::abs(na[2]));
    plane_res = std::max(plane_res, std::abs(na[3]));
    plane_res = std::max(plane_res, std::abs(nb[0]));
    plane_res = std::max(plane_res, std::abs(nb[1]));
  }
  nrm.plane_residual = plane_res;

  double symp_res = 0.0;
  std::array<std::array<double, 4>, 4> all = {a[0], a[1], b[0], b[1]};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto ni = apply4(nrm.to_model, all[static_cast<std::size_t>(i)]);
      const auto nj = apply4(nrm.to_model, all[static_cast<std::size_t>(j)]);
      symp_res = std::max(symp_res, std::abs(omega(ni, nj) -
                                             omega(all[static_cast<std::size_t>(i)],
                                                   all[static_cast<std::size_t>(j)])));
    }
  nrm.symplectic_residual = symp_res;
  return nrm;
}

double handle_rotation_angle(const HandleProfile& profile, bool reversed,
                             int n_samples) {
  profile.validate();
  const HandleProfile prof = profile;
  FramePathFn path = [prof, reversed](double u) {
    const double s = reversed ? 1.0 - 2.0 * u : -1.0 + 2.0 * u;
    return model_frame(prof, s, 0.0);
  };
  const double phi2 = det2_rotation(path, 0.0, 1.0, n_samples);
  if (!(phi2 > -kTwoPi && phi2 < kTwoPi))
    throw std::runtime_error("handle_rotation_angle: rotation " +
                             std::to_string(phi2) + " outside (-2pi, 2pi)");
  return phi2;
}

FramePathFn handle_meridian_loop(const HandleProfile& profile, double s0) {
  const HandleProfile prof = profile;
  return [prof, s0](double u) { return model_frame(prof, s0, kTwoPi * u); };
}

namespace {

FrameSample conjugate_sample(const FrameSample& model,
                             const std::array<double, 16>& from_model) {
  FrameSample out;
  out.X.n = out.Y.n = 2;
  for (int r = 0; r < 2; ++r) {
    const std::array<double, 4> v = {model.X.at(r, 0), model.X.at(r, 1),
                                     model.Y.at(r, 0), model.Y.at(r, 1)};
    const std::array<double, 4> w = apply4(from_model, v);
    out.X.at(r, 0) = w[0];
    out.X.at(r, 1) = w[1];
    out.Y.at(r, 0) = w[2];
    out.Y.at(r, 1) = w[3];
  }
  return out;
}

}  // namespace

FramePathFn conjugated_handle_path(const HandleProfile& profile,
                                   const Normalization& nrm) {
  const HandleProfile prof = profile;
  const std::array<double, 16> from_model = nrm.from_model;
  return [prof, from_model](double u) {
    return conjugate_sample(model_frame(prof, -1.0 + 2.0 * u, 0.0), from_model);
  };
}

FramePathFn conjugated_handle_meridian(const HandleProfile& profile,
                                       const Normalization& nrm, double s0) {
  const HandleProfile prof = profile;
  const std::array<double, 16> from_model = nrm.from_model;
  return [prof, from_model, s0](double u) {
    return conjugate_sample(model_frame(prof, s0, kTwoPi * u), from_model);
  };
}

SurgeryLoopResult assembled_surgery_loop(const FramePathFn& immersed_path,
                                         const HandleProfile& profile,
                                         const Normalization& nrm,
                                         int n_samples) {
  SurgeryLoopResult res;
  const FramePathFn handle = conjugated_handle_path(profile, nrm);

  auto det_immersed = [&immersed_path](double s) {
    return frame_det(immersed_path(s));
  };
  res.phi1 = unwrap_argument(det_immersed, 0.0, 1.0, n_samples).total_rotation;
  res.phi2 = det2_rotation(handle, 0.0, 1.0, n_samples);
  res.total_rotation = 2.0 * res.phi1 + res.phi2;

  FramePathFn loop = [&immersed_path, &handle](double u) {
    return u <= 0.5 ? immersed_path(2.0 * u) : handle(2.0 * u - 1.0);
  };
  res.maslov_index = maslov_index_loop(loop, n_samples);
  return res;
}

}  // namespace lagfill
