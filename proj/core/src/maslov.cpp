#include "lagfill/maslov.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lagfill/forms.hpp"

namespace lagfill {

DoublePointFramePath::DoublePointFramePath(const CutoffFunction& cutoff)
    : surface_(perturbed_immersion(cutoff, 2)) {
  if (cutoff.variant() != CutoffFunction::Variant::Identity || cutoff.n() != 7)
    throw std::invalid_argument(
        "DoublePointFramePath: defined for the identity cutoff with n = 7");
}

FrameSample DoublePointFramePath::displayed(double s) const {
  const double c = std::cos(kPi * s);
  const double c3 = c * c * c, c5 = c3 * c * c;
  const double v = std::sin(4.0 * kPi * s) + std::sin(2.0 * kPi * s);
  FrameSample f;
  f.X.n = f.Y.n = 2;
  f.X.at(0, 0) = 1.0;
  f.X.at(0, 1) = 0.0;
  f.X.at(1, 0) = 0.0;
  f.X.at(1, 1) = c;
  f.Y.at(0, 0) = ((2.0 / 3.0) * c3 - (8.0 / 5.0) * c5) / 7.0;
  f.Y.at(0, 1) = v / 7.0;
  f.Y.at(1, 0) = c * v / 7.0;
  f.Y.at(1, 1) = (2.0 / 7.0) * (8.0 * std::cos(4.0 * kPi * s) -
                                3.0 * std::cos(2.0 * kPi * s));
  return f;
}

FrameSample DoublePointFramePath::pushforward(double s) const {
  const double p[2] = {4.0, kPi * s};
  const Vec pt = surface_.map.eval(p);
  const Vec u1 = surface_.map.deriv(p, 0);
  const Vec u2 = surface_.map.deriv(p, 1);
  const UnitaryFrame frame(1);
  const FrameComponents a = frame.components(pt, u1);
  const FrameComponents b = frame.components(pt, u2);
  FrameSample f;
  f.X.n = f.Y.n = 2;
  for (int k = 0; k < 2; ++k) {
    f.X.at(0, k) = a.xi[static_cast<std::size_t>(k)];
    f.Y.at(0, k) = a.eta[static_cast<std::size_t>(k)];
    f.X.at(1, k) = b.xi[static_cast<std::size_t>(k)];
    f.Y.at(1, k) = b.eta[static_cast<std::size_t>(k)];
  }
  return f;
}

double DoublePointFramePath::max_disagreement(int n_samples, double tol) const {
  double worst = 0.0;
  for (int i = 0; i <= n_samples; ++i) {
    const double s = static_cast<double>(i) / n_samples;
    const FrameSample da = displayed(s);
    const FrameSample db = pushforward(s);
    double local = 0.0;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        local = std::max(local, std::abs(da.X.at(r, c) - db.X.at(r, c)));
        local = std::max(local, std::abs(da.Y.at(r, c) - db.Y.at(r, c)));
      }
    if (local > tol)
      throw std::runtime_error(
          "DoublePointFramePath: frame routes disagree by " +
          std::to_string(local) + " at s = " + std::to_string(s));
    worst = std::max(worst, local);
  }
  return worst;
}

FramePathFn DoublePointFramePath::path() const {
  const DoublePointFramePath self = *this;
  return [self](double s) { return self.pushforward(s); };
}

FramePathFn DoublePointFramePath::displayed_path() const {
  const DoublePointFramePath self = *this;
  return [self](double s) { return self.displayed(s); };
}

std::complex<double> det_path_direct(double s) {
  static const CutoffFunction id(CutoffFunction::Variant::Identity, 7);
  static const DoublePointFramePath fp(id);
  return frame_det(fp.displayed(s));
}

namespace {

// Re and Im of det(X + iY) as polynomials in c = cos(pi s).
// Exposed through evaluate/derivative-bound helpers below.
struct DetPolynomials {
  // Re = sum re_coef[k] c^{re_pow[k]} ; Im likewise
  static constexpr int re_pow[5] = {9, 7, 5, 3, 1};
  static constexpr int im_pow[4] = {6, 4, 2, 0};
  const double re_coef[5] = {704.0 / 5.0 / 49.0, -640.0 / 3.0 / 49.0,
                             1388.0 / 15.0 / 49.0, -32.0 / 3.0 / 49.0,
                             49.0 / 49.0};
  const double im_coef[4] = {-8.0 / 5.0 / 7.0, 386.0 / 3.0 / 7.0, -140.0 / 7.0,
                             22.0 / 7.0};

  double re(double c) const {
    double v = 0.0;
    for (int k = 0; k < 5; ++k) v += re_coef[k] * std::pow(c, re_pow[k]);
    return v;
  }
  double im(double c) const {
    double v = 0.0;
    for (int k = 0; k < 4; ++k) v += im_coef[k] * std::pow(c, im_pow[k]);
    return v;
  }
  // |d/ds Re| <= sum |coef| * pow * pi on [0, 1]
  double re_derivative_bound() const {
    double v = 0.0;
    for (int k = 0; k < 5; ++k) v += std::abs(re_coef[k]) * re_pow[k];
    return v * kPi;
  }
  double re_second_derivative_bound() const {
    // d^2/ds^2 c^p = p(p-1) c^{p-2} sin^2 - p c^p cos, each term <= 2 p^2 pi^2
    double v = 0.0;
    for (int k = 0; k < 5; ++k)
      v += std::abs(re_coef[k]) * 2.0 * re_pow[k] * re_pow[k];
    return v * kPi * kPi;
  }
};

const DetPolynomials& det_polys() {
  static const DetPolynomials p;
  return p;
}

}  // namespace

std::complex<double> det_path_closed_form(double s) {
  const double c = std::cos(kPi * s);
  return {det_polys().re(c), det_polys().im(c)};
}

double det_path_max_mismatch(int n_samples, double tol) {
  double worst = 0.0;
  for (int i = 0; i <= n_samples; ++i) {
    const double s = static_cast<double>(i) / n_samples;
    const double d = std::abs(det_path_direct(s) - det_path_closed_form(s));
    if (d > tol)
      throw std::runtime_error("det path: direct and closed form disagree by " +
                               std::to_string(d) + " at s = " + std::to_string(s));
    worst = std::max(worst, d);
  }
  return worst;
}

DetPathProperties verify_det_path_properties(int n_symmetry_samples,
                                             int n_positivity_samples) {
  if (n_symmetry_samples < 10000 || n_positivity_samples < 100000)
    throw std::invalid_argument(
        "verify_det_path_properties: sampling below the certified minimum");
  DetPathProperties r;
  r.det_start = det_path_direct(0.0);
  r.det_mid = det_path_direct(0.5);
  r.det_end = det_path_direct(1.0);
  r.start_ok = std::abs(r.det_start - r.oracle_start) <= 1e-10;
  r.mid_ok = std::abs(r.det_mid - r.oracle_mid) <= 1e-10;
  r.end_ok = std::abs(r.det_end - r.oracle_end) <= 1e-10;

  double sym = 0.0;
  for (int i = 0; i <= n_symmetry_samples; ++i) {
    const double s = 0.5 * i / n_symmetry_samples;
    const std::complex<double> a = det_path_direct(s);
    const std::complex<double> b = det_path_direct(1.0 - s);
    sym = std::max(sym, std::abs(a.real() + b.real()));
    sym = std::max(sym, std::abs(a.imag() - b.imag()));
  }
  r.symmetry_max_error = sym;
  r.re_antisymmetric = r.im_symmetric = sym <= 1e-10;

  // (6): Re > 0 on [0, 1/2). Between consecutive samples a sign change would
  // need a dip of at least min_sampled, which the derivative bound excludes;
  // on the last gap before s = 1/2, where Re tends to 0, the slope
  // d Re/ds = -pi sin(pi s) dRe/dc stays negative (second-derivative bound),
  // so Re decreases monotonically to its zero at exactly s = 1/2.
  const DetPolynomials& poly = det_polys();
  r.derivative_bound = poly.re_derivative_bound();
  r.second_derivative_bound = poly.re_second_derivative_bound();
  r.endpoint_slope = -kPi;  // dRe/dc at c = 0 is 1, d c/ds at s = 1/2 is -pi
  const double h = 0.5 / n_positivity_samples;
  const double wedge = std::min(0.25, 0.9 * kPi / r.second_derivative_bound);
  double min_sampled = std::numeric_limits<double>::infinity();
  bool positive = true;
  for (int i = 0; i <= n_positivity_samples; ++i) {
    const double s = std::min(0.5 * i / n_positivity_samples, 0.5 - wedge);
    const double re = det_path_closed_form(s).real();
    if (re <= 0.0) positive = false;
    min_sampled = std::min(min_sampled, re);
    if (s >= 0.5 - wedge) break;
  }
  // gap coverage away from the wedge
  if (min_sampled <= r.derivative_bound * h / 2.0) positive = false;
  // inside the wedge the slope stays within second_derivative_bound * wedge
  // of -pi, hence negative, and Re(1/2) = 0 exactly
  if (r.second_derivative_bound * wedge >= kPi) positive = false;
  r.positivity_min_sampled = min_sampled;
  r.re_positive_first_half = positive;
  return r;
}

double rotation_angle_phi1(int n_samples) {
  const ArgumentTrace tr = unwrap_argument(det_path_direct, 0.0, 1.0, n_samples);
  const double phi1 = tr.total_rotation;
  if (!(phi1 > kPi / 4.0 && phi1 < kPi / 2.0))
    throw std::runtime_error("rotation_angle_phi1: value " +
                             std::to_string(phi1) +
                             " outside (pi/4, pi/2)");
  return phi1;
}

double phi1_endpoint_formula() { return kPi - 2.0 * std::atan2(136.0, 125.0); }

double maslov_potential_difference_from_rotation(double det2_rotation_radians) {
  const double delta = det2_rotation_radians / kTwoPi;
  const double candidate = std::floor(delta) + 0.5;
  const double nearest =
      (std::abs(delta - candidate) <= std::abs(delta - (candidate + 1.0)))
          ? candidate
          : candidate + 1.0;
  const double gap = std::abs(delta - nearest);
  if (std::abs(gap - 0.5) <= 1e-6)
    throw std::runtime_error(
        "maslov_potential_difference: rotation equidistant between coset "
        "elements");
  return nearest;
}

double maslov_potential_difference(const FramePathFn& path, int n_init) {
  const ArgumentTrace tr = det_squared_trace(path, 0.0, 1.0, n_init);
  // unwrapper self-check: the total rotation reduces to the principal
  // argument gap of the endpoint det^2 values modulo 2 pi
  const std::complex<double> w0 = frame_det(path(0.0));
  const std::complex<double> w1 = frame_det(path(1.0));
  const double principal_gap = std::arg(w1 * w1) - std::arg(w0 * w0);
  const double defect =
      std::remainder(tr.total_rotation - principal_gap, kTwoPi);
  if (std::abs(defect) > 1e-9)
    throw std::runtime_error("maslov_potential_difference: inconsistent unwrap");
  return maslov_potential_difference_from_rotation(tr.total_rotation);
}

int surgery_loop_index(double phi1, double phi2, double tol) {
  if (!(phi1 > kPi / 4.0 && phi1 < kPi / 2.0))
    throw std::invalid_argument("surgery_loop_index: phi1 outside (pi/4, pi/2)");
  if (!(phi2 > -kTwoPi && phi2 < kTwoPi))
    throw std::invalid_argument("surgery_loop_index: phi2 outside (-2pi, 2pi)");
  const double total = 2.0 * phi1 + phi2;
  if (!(total > -1.5 * kPi && total < 3.0 * kPi))
    throw std::runtime_error("surgery_loop_index: total outside (-3pi/2, 3pi)");
  // the only odd multiple of 2 pi in that window is 2 pi itself
  if (std::abs(total - kTwoPi) > tol * kTwoPi)
    throw std::runtime_error(
        "surgery_loop_index: 2 phi1 + phi2 = " + std::to_string(total) +
        " is not 2 pi");
  return 1;
}

}  // namespace lagfill
