#include "lagfill/pullback.hpp"

#include <cmath>
#include <stdexcept>

namespace lagfill {

namespace {

double residual_impl(const ParametricMap& surface, const TwoForm& form,
                     const std::vector<int>& grid) {
  const int arity = surface.arity();
  if (static_cast<int>(grid.size()) != arity)
    throw std::invalid_argument("pullback_2form_residual: grid size mismatch");
  for (int g : grid)
    if (g < 2) throw std::invalid_argument("pullback_2form_residual: grid >= 2");

  std::vector<std::vector<double>> axes;
  axes.reserve(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i)
    axes.push_back(factor_grid(surface.factor(i), grid[static_cast<std::size_t>(i)]));

  Vec p(static_cast<std::size_t>(arity));
  std::vector<int> idx(static_cast<std::size_t>(arity), 0);
  double worst = 0.0;
  while (true) {
    for (int i = 0; i < arity; ++i)
      p[static_cast<std::size_t>(i)] =
          axes[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    const Vec pt = surface.eval(p);
    std::vector<Vec> tangents;
    tangents.reserve(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i) tangents.push_back(surface.deriv(p, i));
    for (int i = 0; i < arity; ++i)
      for (int j = i + 1; j < arity; ++j)
        worst = std::max(worst, std::abs(form(pt, tangents[static_cast<std::size_t>(i)],
                                              tangents[static_cast<std::size_t>(j)])));
    int k = arity - 1;
    while (k >= 0 && ++idx[static_cast<std::size_t>(k)] ==
                         static_cast<int>(axes[static_cast<std::size_t>(k)].size())) {
      idx[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return worst;
}

}  // namespace

double pullback_2form_residual(const ParametricMap& surface,
                               const SymplectizationForm& form,
                               const std::vector<int>& grid) {
  if (surface.codomain_dim() != form.space_dim())
    throw std::invalid_argument(
        "pullback_2form_residual: surface codomain does not match the form");
  TwoForm f = [&form](Params pt, Params u, Params v) { return form(pt, u, v); };
  return residual_impl(surface, f, grid);
}

double pullback_2form_residual(const ParametricMap& surface, const TwoForm& form,
                               const std::vector<int>& grid) {
  return residual_impl(surface, form, grid);
}

double pullback_1form_residual(const ParametricMap& curve,
                               const ContactForm& form, int n) {
  if (curve.arity() != 1)
    throw std::invalid_argument("pullback_1form_residual: curve must have one factor");
  if (curve.codomain_dim() != form.space_dim())
    throw std::invalid_argument(
        "pullback_1form_residual: curve codomain does not match the form");
  const std::vector<double> ts = factor_grid(curve.factor(0), n);
  double worst = 0.0;
  for (double t : ts) {
    const double p[1] = {t};
    const Vec pt = curve.eval(p);
    const Vec dt = curve.deriv(p, 0);
    worst = std::max(worst, std::abs(form(pt, dt)));
  }
  return worst;
}

}  // namespace lagfill
