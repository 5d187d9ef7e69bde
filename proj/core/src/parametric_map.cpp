#include "lagfill/parametric_map.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace lagfill {

DomainFactor DomainFactor::interval(double a, double b) {
  if (!(a < b)) throw std::invalid_argument("interval needs lo < hi");
  return {FactorKind::Interval, a, b};
}

ParametricMap::ParametricMap(std::string name, std::vector<DomainFactor> domain,
                             int codomain_dim, EvalFn eval, DerivFn deriv)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      codomain_dim_(codomain_dim),
      eval_(std::move(eval)),
      deriv_(std::move(deriv)) {
  if (domain_.empty()) throw std::invalid_argument(name_ + ": empty domain");
  if (codomain_dim_ <= 0)
    throw std::invalid_argument(name_ + ": codomain dimension must be positive");
}

Vec ParametricMap::eval(Params p) const {
  if (static_cast<int>(p.size()) != arity())
    throw std::invalid_argument(name_ + ": wrong parameter count");
  return eval_(p);
}

Vec ParametricMap::deriv(Params p, int factor_index) const {
  if (static_cast<int>(p.size()) != arity())
    throw std::invalid_argument(name_ + ": wrong parameter count");
  if (factor_index < 0 || factor_index >= arity())
    throw std::invalid_argument(name_ + ": factor index out of range");
  return deriv_(p, factor_index);
}

ParametricMap ParametricMap::fix_factor(int factor_index, double value,
                                        std::string new_name) const {
  if (factor_index < 0 || factor_index >= arity())
    throw std::invalid_argument(name_ + ": factor index out of range");
  std::vector<DomainFactor> rest;
  for (int i = 0; i < arity(); ++i)
    if (i != factor_index) rest.push_back(domain_[i]);

  const ParametricMap base = *this;
  auto expand = [factor_index, value, n = arity()](Params p) {
    Vec full(static_cast<std::size_t>(n));
    int j = 0;
    for (int i = 0; i < n; ++i)
      full[static_cast<std::size_t>(i)] =
          (i == factor_index) ? value : p[static_cast<std::size_t>(j++)];
    return full;
  };
  auto ev = [base, expand](Params p) { return base.eval(expand(p)); };
  auto de = [base, expand, factor_index](Params p, int k) {
    const int full_k = (k < factor_index) ? k : k + 1;
    return base.deriv(expand(p), full_k);
  };
  return ParametricMap(std::move(new_name), std::move(rest), codomain_dim_,
                       std::move(ev), std::move(de));
}

std::vector<double> factor_grid(const DomainFactor& f, int n) {
  if (n < 2) throw std::invalid_argument("factor_grid needs n >= 2");
  std::vector<double> g(static_cast<std::size_t>(n));
  if (f.kind == FactorKind::Circle) {
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = kTwoPi * i / n;
  } else {
    const double h = (f.hi - f.lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = f.lo + h * i;
    g.back() = f.hi;
  }
  return g;
}

double max_relative_fd_error(const ParametricMap& m, Params p, double step) {
  Vec lo(p.begin(), p.end()), hi(p.begin(), p.end());
  double worst = 0.0;
  for (int k = 0; k < m.arity(); ++k) {
    const std::size_t uk = static_cast<std::size_t>(k);
    hi[uk] = p[uk] + step;
    lo[uk] = p[uk] - step;
    const Vec fp = m.eval(hi), fm = m.eval(lo);
    const Vec d = m.deriv(p, k);
    hi[uk] = lo[uk] = p[uk];
    for (std::size_t j = 0; j < d.size(); ++j) {
      const double fd = (fp[j] - fm[j]) / (2.0 * step);
      const double scale = std::max(1.0, std::abs(d[j]));
      worst = std::max(worst, std::abs(fd - d[j]) / scale);
    }
  }
  return worst;
}

double periodicity_defect(const ParametricMap& m, int circle_factor, int n) {
  if (m.factor(circle_factor).kind != FactorKind::Circle)
    throw std::invalid_argument(m.name() + ": factor is not a circle");
  std::mt19937_64 rng(0x5eed);
  double worst = 0.0;
  Vec p(static_cast<std::size_t>(m.arity()));
  for (int trial = 0; trial < n; ++trial) {
    for (int i = 0; i < m.arity(); ++i) {
      const DomainFactor& f = m.factor(i);
      std::uniform_real_distribution<double> dist(f.lo, f.hi);
      p[static_cast<std::size_t>(i)] = dist(rng);
    }
    const Vec a = m.eval(p);
    p[static_cast<std::size_t>(circle_factor)] += kTwoPi;
    const Vec b = m.eval(p);
    p[static_cast<std::size_t>(circle_factor)] -= kTwoPi;
    for (std::size_t j = 0; j < a.size(); ++j)
      worst = std::max(worst, std::abs(a[j] - b[j]));
  }
  return worst;
}

}  // namespace lagfill
