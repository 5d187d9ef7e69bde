#pragma once

namespace lagfill {

/// Cutoff profile rho2(t) = rho1(t/n) on [0, n].
///
/// SmoothPlateau uses the standard bump-quotient transition
///   rho1(s) = g(3s-1) / (g(3s-1) + g(2-3s)),  g(u) = exp(-1/u) (0 for u <= 0),
/// which is identically 0 on [0,1/3], identically 1 on [2/3,1] and strictly
/// increasing in between. Identity is rho1(s) = s; it is not a cutoff but the
/// Maslov computations reduce to it.
class CutoffFunction {
 public:
  enum class Variant { Identity, SmoothPlateau };

  CutoffFunction(Variant v, int n);

  Variant variant() const { return variant_; }
  int n() const { return n_; }

  double rho1(double s) const;
  double rho1_prime(double s) const;
  double rho1_second(double s) const;

  double rho2(double t) const { return rho1(t / n_); }
  double rho2_prime(double t) const { return rho1_prime(t / n_) / n_; }
  double rho2_second(double t) const {
    return rho1_second(t / n_) / (static_cast<double>(n_) * n_);
  }

  /// log rho1'(s), evaluated without underflow; -inf on the plateaus.
  /// Positivity of rho1' on the open transition interval is certified by this
  /// value being finite even where rho1' itself underflows to 0.
  double log_rho1_prime(double s) const;

  /// Transition interval of rho2 in t ([n/3, 2n/3] for SmoothPlateau,
  /// [0, n] for Identity).
  double transition_lo() const;
  double transition_hi() const;

 private:
  Variant variant_;
  int n_;
};

}  // namespace lagfill
