#include "lagfill/forms.hpp"

#include <cmath>
#include <stdexcept>

namespace lagfill {

namespace {
void check_dim(const char* what, Params v, int want) {
  if (static_cast<int>(v.size()) != want)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}
}  // namespace

double ContactForm::operator()(Params point, Params tangent) const {
  check_dim("ContactForm point", point, space_dim());
  check_dim("ContactForm tangent", tangent, space_dim());
  // coordinates (x1, y1, .., xm, ym, z)
  const int zi = 2 * m;
  double val = tangent[static_cast<std::size_t>(zi)];
  for (int j = 0; j < m; ++j)
    val -= point[static_cast<std::size_t>(2 * j + 1)] *
           tangent[static_cast<std::size_t>(2 * j)];
  return val;
}

double SymplectizationForm::operator()(Params point, Params u, Params v) const {
  check_dim("SymplectizationForm point", point, space_dim());
  check_dim("SymplectizationForm u", u, space_dim());
  check_dim("SymplectizationForm v", v, space_dim());
  const int zi = 2 * m + 1;
  auto alpha = [&](Params w) {
    double a = w[static_cast<std::size_t>(zi)];
    for (int j = 0; j < m; ++j)
      a -= point[static_cast<std::size_t>(2 * j + 2)] *
           w[static_cast<std::size_t>(2 * j + 1)];
    return a;
  };
  double val = u[0] * alpha(v) - v[0] * alpha(u);
  for (int j = 0; j < m; ++j) {
    const std::size_t xj = static_cast<std::size_t>(2 * j + 1);
    const std::size_t yj = static_cast<std::size_t>(2 * j + 2);
    val += u[xj] * v[yj] - u[yj] * v[xj];
  }
  return std::exp(point[0]) * val;
}

FrameComponents UnitaryFrame::components(Params point, Params tangent) const {
  const int dim = 2 * m + 2;
  if (static_cast<int>(point.size()) != dim ||
      static_cast<int>(tangent.size()) != dim)
    throw std::invalid_argument("UnitaryFrame: dimension mismatch");
  FrameComponents c;
  c.xi.resize(static_cast<std::size_t>(pairs()));
  c.eta.resize(static_cast<std::size_t>(pairs()));
  const std::size_t zi = static_cast<std::size_t>(2 * m + 1);
  c.xi[0] = tangent[0];
  double eta0 = tangent[zi];
  for (int j = 0; j < m; ++j) {
    const std::size_t xj = static_cast<std::size_t>(2 * j + 1);
    const std::size_t yj = static_cast<std::size_t>(2 * j + 2);
    c.xi[static_cast<std::size_t>(j + 1)] = tangent[xj];
    c.eta[static_cast<std::size_t>(j + 1)] = tangent[yj];
    eta0 -= point[yj] * tangent[xj];
  }
  c.eta[0] = eta0;
  return c;
}

double UnitaryFrame::omega_via_frame(Params point, Params u, Params v) const {
  const FrameComponents a = components(point, u);
  const FrameComponents b = components(point, v);
  double val = 0.0;
  for (int k = 0; k < pairs(); ++k) {
    const std::size_t uk = static_cast<std::size_t>(k);
    val += a.xi[uk] * b.eta[uk] - a.eta[uk] * b.xi[uk];
  }
  return std::exp(point[0]) * val;
}

}  // namespace lagfill
