#include "lagfill/unwrap.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lagfill/parametric_map.hpp"

namespace lagfill {

namespace {

double principal_increment(std::complex<double> from, std::complex<double> to) {
  const std::complex<double> q = to * std::conj(from);
  return std::atan2(q.imag(), q.real());
}

void check_nonzero(std::complex<double> w, double s) {
  if (std::abs(w) < 1e-12)
    throw std::runtime_error("unwrap_argument: path vanishes near s = " +
                             std::to_string(s));
}

}  // namespace

ArgumentTrace unwrap_argument(
    const std::function<std::complex<double>(double)>& path, double s0,
    double s1, int n_init, int max_depth) {
  if (n_init < 2) throw std::invalid_argument("unwrap_argument: n_init >= 2");

  ArgumentTrace tr;
  tr.s.reserve(static_cast<std::size_t>(n_init) + 1);
  std::vector<std::complex<double>> w;
  w.reserve(static_cast<std::size_t>(n_init) + 1);
  for (int i = 0; i <= n_init; ++i) {
    const double s = s0 + (s1 - s0) * i / n_init;
    const std::complex<double> v = path(s);
    check_nonzero(v, s);
    tr.s.push_back(s);
    w.push_back(v);
  }

  // refine any step whose increment reaches pi/2 by inserting midpoints
  for (int depth = 0; depth < max_depth; ++depth) {
    bool refined = false;
    std::vector<double> s2;
    std::vector<std::complex<double>> w2;
    s2.reserve(tr.s.size());
    w2.reserve(w.size());
    s2.push_back(tr.s[0]);
    w2.push_back(w[0]);
    for (std::size_t i = 1; i < tr.s.size(); ++i) {
      if (std::abs(principal_increment(w[i - 1], w[i])) >= kPi / 2.0) {
        const double mid = 0.5 * (tr.s[i - 1] + tr.s[i]);
        const std::complex<double> v = path(mid);
        check_nonzero(v, mid);
        s2.push_back(mid);
        w2.push_back(v);
        refined = true;
      }
      s2.push_back(tr.s[i]);
      w2.push_back(w[i]);
    }
    tr.s.swap(s2);
    w.swap(w2);
    if (!refined) break;
    if (depth == max_depth - 1)
      throw std::runtime_error("unwrap_argument: refinement did not settle");
  }

  tr.arg.resize(tr.s.size());
  tr.arg[0] = std::arg(w[0]);
  double comp = 0.0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    const double inc = principal_increment(w[i - 1], w[i]);
    const double y = inc - comp;
    const double t = tr.arg[i - 1] + y;
    comp = (t - tr.arg[i - 1]) - y;
    tr.arg[i] = t;
  }
  tr.total_rotation = tr.arg.back() - tr.arg.front();

  int crossings = 0;
  for (std::size_t i = 1; i < tr.arg.size(); ++i) {
    const double a = (tr.arg[i - 1] - tr.arg[0]) / kTwoPi;
    const double b = (tr.arg[i] - tr.arg[0]) / kTwoPi;
    crossings += static_cast<int>(std::floor(b) - std::floor(a));
  }
  tr.start_ray_crossings = crossings;
  return tr;
}

std::complex<double> frame_det(const FrameSample& f) {
  const int n = f.X.n;
  std::complex<double> z[3][3];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      z[i][j] = std::complex<double>(f.X.at(i, j), f.Y.at(i, j));
  if (n == 2) return z[0][0] * z[1][1] - z[0][1] * z[1][0];
  if (n == 3)
    return z[0][0] * (z[1][1] * z[2][2] - z[1][2] * z[2][1]) -
           z[0][1] * (z[1][0] * z[2][2] - z[1][2] * z[2][0]) +
           z[0][2] * (z[1][0] * z[2][1] - z[1][1] * z[2][0]);
  throw std::invalid_argument("frame_det: size must be 2 or 3");
}

ArgumentTrace det_squared_trace(const FramePathFn& path, double s0, double s1,
                                int n_init) {
  auto f = [&path](double s) {
    const std::complex<double> d = frame_det(path(s));
    return d * d;
  };
  return unwrap_argument(f, s0, s1, n_init);
}

double det2_rotation(const FramePathFn& path, double s0, double s1, int n_init) {
  return det_squared_trace(path, s0, s1, n_init).total_rotation;
}

int maslov_index_loop(const FramePathFn& loop, int n_init) {
  int n = n_init;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const double rot = det2_rotation(loop, 0.0, 1.0, n);
    const double w = rot / kTwoPi;
    const double rounded = std::round(w);
    if (std::abs(w - rounded) <= 1e-6) return static_cast<int>(rounded);
    n *= 4;
  }
  throw std::runtime_error("maslov_index_loop: winding did not quantize");
}

}  // namespace lagfill
