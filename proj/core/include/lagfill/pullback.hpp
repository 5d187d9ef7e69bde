#pragma once

#include <functional>

#include "lagfill/forms.hpp"
#include "lagfill/parametric_map.hpp"

namespace lagfill {

/// Generic 2-form evaluated at (point, u, v).
using TwoForm = std::function<double(Params, Params, Params)>;

/// Max over the product grid of |omega(d_i map, d_j map)| over all factor
/// pairs i < j. A Lagrangian surface stays below ~1e-10.
double pullback_2form_residual(const ParametricMap& surface,
                               const SymplectizationForm& form,
                               const std::vector<int>& grid);

/// Same, for an arbitrary constant-coefficient or position-dependent 2-form.
double pullback_2form_residual(const ParametricMap& surface, const TwoForm& form,
                               const std::vector<int>& grid);

/// Max over n samples of |alpha(curve')| for a one-parameter map into
/// R^{2m+1}. A Legendrian curve stays below ~1e-12.
double pullback_1form_residual(const ParametricMap& curve,
                               const ContactForm& form, int n);

}  // namespace lagfill
