#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace lagfill {

using Vec = std::vector<double>;
using Params = std::span<const double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

enum class FactorKind { Interval, Circle };

/// One factor of a product domain: a closed interval [lo, hi] or a circle
/// parameterized by [0, 2pi).
struct DomainFactor {
  FactorKind kind = FactorKind::Interval;
  double lo = 0.0;
  double hi = 1.0;

  static DomainFactor interval(double a, double b);
  static DomainFactor circle() { return {FactorKind::Circle, 0.0, kTwoPi}; }

  double length() const { return hi - lo; }
};

/// Smooth map from a product of intervals and circles into R^d, carrying
/// closed-form first derivatives. Derivatives are the primary source of
/// tangent data everywhere; finite differences are only a cross-check.
class ParametricMap {
 public:
  using EvalFn = std::function<Vec(Params)>;
  using DerivFn = std::function<Vec(Params, int)>;

  ParametricMap(std::string name, std::vector<DomainFactor> domain,
                int codomain_dim, EvalFn eval, DerivFn deriv);

  const std::string& name() const { return name_; }
  int arity() const { return static_cast<int>(domain_.size()); }
  int codomain_dim() const { return codomain_dim_; }
  const std::vector<DomainFactor>& domain() const { return domain_; }
  const DomainFactor& factor(int i) const { return domain_.at(i); }

  Vec eval(Params p) const;
  /// Partial derivative with respect to domain factor `factor_index`.
  Vec deriv(Params p, int factor_index) const;

  /// Restriction obtained by pinning one factor to a fixed value.
  ParametricMap fix_factor(int factor_index, double value,
                           std::string new_name) const;

 private:
  std::string name_;
  std::vector<DomainFactor> domain_;
  int codomain_dim_;
  EvalFn eval_;
  DerivFn deriv_;
};

/// Sample points for one factor. Intervals include both endpoints,
/// circles are sampled uniformly over [0, 2pi).
std::vector<double> factor_grid(const DomainFactor& f, int n);

/// Largest relative disagreement between the closed-form partials and a
/// central finite difference at `p`, over all factors.
double max_relative_fd_error(const ParametricMap& m, Params p,
                             double step = 1e-5);

/// Largest |eval(.., theta, ..) - eval(.., theta + 2pi, ..)| over the given
/// circle factor, sampled at `n` random-ish points of the rest of the domain.
double periodicity_defect(const ParametricMap& m, int circle_factor, int n);

}  // namespace lagfill
