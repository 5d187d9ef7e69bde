#include "lagfill/cutoff.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lagfill {

namespace {

double g(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }
double gp(double u) { return u > 0.0 ? std::exp(-1.0 / u) / (u * u) : 0.0; }
double gpp(double u) {
  if (u <= 0.0) return 0.0;
  return std::exp(-1.0 / u) * (1.0 / (u * u * u * u) - 2.0 / (u * u * u));
}

}  // namespace

CutoffFunction::CutoffFunction(Variant v, int n) : variant_(v), n_(n) {
  if (n < 1) throw std::invalid_argument("CutoffFunction: n must be positive");
}

double CutoffFunction::rho1(double s) const {
  if (variant_ == Variant::Identity) return s;
  if (s <= 1.0 / 3.0) return 0.0;
  if (s >= 2.0 / 3.0) return 1.0;
  const double a = 3.0 * s - 1.0, b = 2.0 - 3.0 * s;
  const double ga = g(a), gb = g(b);
  return ga / (ga + gb);
}

double CutoffFunction::rho1_prime(double s) const {
  if (variant_ == Variant::Identity) return 1.0;
  if (s <= 1.0 / 3.0 || s >= 2.0 / 3.0) return 0.0;
  const double a = 3.0 * s - 1.0, b = 2.0 - 3.0 * s;
  const double ga = g(a), gb = g(b);
  const double sum = ga + gb;
  return 3.0 * (gp(a) * gb + ga * gp(b)) / (sum * sum);
}

double CutoffFunction::rho1_second(double s) const {
  if (variant_ == Variant::Identity) return 0.0;
  if (s <= 1.0 / 3.0 || s >= 2.0 / 3.0) return 0.0;
  const double a = 3.0 * s - 1.0, b = 2.0 - 3.0 * s;
  const double ga = g(a), gb = g(b), gpa = gp(a), gpb = gp(b);
  const double sum = ga + gb;
  // d/ds [3 (g'(a) g(b) + g(a) g'(b)) / sum^2], da/ds = 3, db/ds = -3
  const double num = gpa * gb + ga * gpb;
  const double dnum = 3.0 * (gpp(a) * gb - gpa * gpb + gpa * gpb - ga * gpp(b));
  const double dsum = 3.0 * (gpa - gpb);
  return 3.0 * (dnum * sum - 2.0 * num * dsum) / (sum * sum * sum);
}

double CutoffFunction::log_rho1_prime(double s) const {
  const double inf = std::numeric_limits<double>::infinity();
  if (variant_ == Variant::Identity) return 0.0;
  if (s <= 1.0 / 3.0 || s >= 2.0 / 3.0) return -inf;
  const double a = 3.0 * s - 1.0, b = 2.0 - 3.0 * s;
  // log g(u) = -1/u, log g'(u) = -1/u - 2 log u
  const double t1 = -1.0 / a - 2.0 * std::log(a) - 1.0 / b;  // g'(a) g(b)
  const double t2 = -1.0 / a - 1.0 / b - 2.0 * std::log(b);  // g(a) g'(b)
  const double hi = std::max(t1, t2);
  const double lse = hi + std::log1p(std::exp(std::min(t1, t2) - hi));
  // denominator (g(a)+g(b))^2: both terms <= 1, log(sum) <= log 2
  const double lden = 2.0 * (std::max(-1.0 / a, -1.0 / b) +
                             std::log1p(std::exp(-std::abs(1.0 / a - 1.0 / b))));
  return std::log(3.0) + lse - lden;
}

double CutoffFunction::transition_lo() const {
  return variant_ == Variant::Identity ? 0.0 : n_ / 3.0;
}

double CutoffFunction::transition_hi() const {
  return variant_ == Variant::Identity ? static_cast<double>(n_) : 2.0 * n_ / 3.0;
}

}  // namespace lagfill
