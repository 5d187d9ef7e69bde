#pragma once

#include "lagfill/parametric_map.hpp"

namespace lagfill {

// Coordinate conventions, used consistently across the library:
//   contact space R^{2m+1}:    m=1  (x, y, z)
//                              m=2  (x1, y1, x2, y2, z)
//   symplectization R x R^{2m+1}:  m=1  (t, x, y, z)
//                                  m=2  (t, x1, y1, x2, y2, z)

/// The contact form dz - sum_j y_j dx_j on R^{2m+1}.
struct ContactForm {
  int m = 1;

  explicit ContactForm(int m_) : m(m_) {}
  int space_dim() const { return 2 * m + 1; }
  double operator()(Params point, Params tangent) const;
};

/// d(e^t alpha) = e^t (dt ^ (dz - sum y_j dx_j) + sum dx_j ^ dy_j)
/// on the symplectization R x R^{2m+1}.
struct SymplectizationForm {
  int m = 1;

  explicit SymplectizationForm(int m_) : m(m_) {}
  int space_dim() const { return 2 * m + 2; }
  double operator()(Params point, Params u, Params v) const;
};

/// Components of a tangent vector in the frame
///   e_1 = d/dt,                 f_1 = d/dz,
///   e_{j+1} = d/dx_j + y_j d/dz, f_{j+1} = d/dy_j,   j = 1..m.
/// The pairs satisfy omega(e_k, f_k) = e^t with all other pairings zero.
struct FrameComponents {
  Vec xi;   // components on e_1 .. e_{m+1}
  Vec eta;  // components on f_1 .. f_{m+1}
};

struct UnitaryFrame {
  int m = 1;

  explicit UnitaryFrame(int m_) : m(m_) {}
  int pairs() const { return m + 1; }
  FrameComponents components(Params point, Params tangent) const;
  /// omega reconstructed from frame components, e^t (xi.eta' - eta.xi').
  double omega_via_frame(Params point, Params u, Params v) const;
};

}  // namespace lagfill
