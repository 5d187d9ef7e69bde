#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace lagfill {

/// Unwrapped argument of a nonvanishing complex path, with samples refined
/// until consecutive increments stay below pi/2.
struct ArgumentTrace {
  std::vector<double> s;
  std::vector<double> arg;  // arg[0] is the principal argument at s.front()
  double total_rotation = 0.0;
  /// Signed crossings of the rays arg = arg[0] + 2 pi k, start excluded.
  int start_ray_crossings = 0;
};

ArgumentTrace unwrap_argument(
    const std::function<std::complex<double>(double)>& path, double s0,
    double s1, int n_init, int max_depth = 32);

/// Square matrix of size 2 or 3 with fixed storage.
struct MatN {
  int n = 2;
  std::array<double, 9> a{};

  double& at(int i, int j) { return a[static_cast<std::size_t>(3 * i + j)]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(3 * i + j)]; }
};

/// One sample of a Lagrangian frame in a unitary trivialization: row j of
/// X + iY holds the frame-pair components of the j-th tangent vector.
struct FrameSample {
  MatN X, Y;
};

using FramePathFn = std::function<FrameSample(double)>;

std::complex<double> frame_det(const FrameSample& f);

/// Unwrapped trace of s -> det(X(s) + iY(s))^2 over [s0, s1].
ArgumentTrace det_squared_trace(const FramePathFn& path, double s0, double s1,
                                int n_init);

/// Total det^2 rotation in radians over [s0, s1].
double det2_rotation(const FramePathFn& path, double s0, double s1, int n_init);

/// Maslov index of a closed loop of Lagrangian frames: winding of det^2.
/// The loop is sampled over [0, 1]; frames at 0 and 1 must span the same
/// plane. Sampling is refined until the winding is an integer to 1e-6.
int maslov_index_loop(const FramePathFn& loop, int n_init = 2048);

}  // namespace lagfill
