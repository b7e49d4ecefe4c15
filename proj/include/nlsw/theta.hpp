#pragma once

#include <cmath>

#include "nlsw/errors.hpp"

namespace nlsw {

// Smoothed, rescaled growth weight theta(xi): 1 on |xi| <= N, (|xi|/N)^s on
// |xi| >= 2N, even, non-decreasing, >= 1, with two continuous derivatives.
//
// Transition band: theta = exp(s * Q(t)), t = |xi|/N - 1 in [0,1], where Q is
// a fixed s-independent septic matching value/slope/curvature of log(r)/1 at
// both ends (the log of the outer pieces scales linearly in s, so the joins
// are C^2 for every s).  The two bump coefficients flatten the curvature
// peaks; with them the ratios |theta'||xi|/theta and |theta''|xi^2/theta stay
// within 4s^2 for s >= 1.4.  A plain Hermite quintic in theta itself exceeds
// that cap up to s ~ 1.65.
template <typename Scalar = double>
class ThetaProfile {
 public:
  ThetaProfile(Scalar s, Scalar big_n) : s_(s), n_(big_n) {
    if (!(s >= Scalar(1))) throw ConfigError("ThetaProfile: s must be >= 1");
    if (!(big_n > Scalar(1))) throw ConfigError("ThetaProfile: N must be > 1");
  }

  Scalar s() const { return s_; }
  Scalar cutoff() const { return n_; }

  Scalar operator()(Scalar xi) const {
    const Scalar r = std::abs(xi) / n_;
    if (r <= Scalar(1)) return Scalar(1);
    if (r >= Scalar(2)) return std::pow(r, s_);
    return std::exp(s_ * q(r - Scalar(1)));
  }

  Scalar squared(Scalar xi) const {
    const Scalar v = (*this)(xi);
    return v * v;
  }

  Scalar derivative(Scalar xi) const {
    const Scalar a = std::abs(xi);
    const Scalar r = a / n_;
    if (r <= Scalar(1)) return Scalar(0);
    const Scalar sgn = xi < Scalar(0) ? Scalar(-1) : Scalar(1);
    if (r >= Scalar(2)) return sgn * s_ * std::pow(r, s_ - 1) / n_;
    const Scalar t = r - Scalar(1);
    return sgn * s_ * dq(t) * std::exp(s_ * q(t)) / n_;
  }

  Scalar second_derivative(Scalar xi) const {
    const Scalar r = std::abs(xi) / n_;
    if (r < Scalar(1)) return Scalar(0);
    if (r >= Scalar(2)) return s_ * (s_ - 1) * std::pow(r, s_ - 2) / (n_ * n_);
    const Scalar t = r - Scalar(1);
    const Scalar q1 = dq(t);
    return s_ * (d2q(t) + s_ * q1 * q1) * std::exp(s_ * q(t)) / (n_ * n_);
  }

  // d/dxi of theta^2 and its second derivative, used by the bound verifiers.
  Scalar squared_derivative(Scalar xi) const { return Scalar(2) * (*this)(xi)*derivative(xi); }
  Scalar squared_second_derivative(Scalar xi) const {
    const Scalar d = derivative(xi);
    return Scalar(2) * (d * d + (*this)(xi)*second_derivative(xi));
  }

 private:
  // Hermite quintic for (0,0,0) -> (ln 2, 1/2, -1/4) plus the frozen
  // curvature-flattening bump.
  static constexpr Scalar kC3 = Scalar(4.806471805599453);   // 10e - 4D + A/2
  static constexpr Scalar kC4 = Scalar(-6.647207708399179);  // -15e + 7D - A
  static constexpr Scalar kC5 = Scalar(2.533883083359672);   // 6e - 3D + A/2
  static constexpr Scalar kBumpA = Scalar(3.00129469);
  static constexpr Scalar kBumpB = Scalar(-3.45041667);

  static Scalar q(Scalar t) {
    const Scalar base = ((kC5 * t + kC4) * t + kC3) * t * t * t;
    const Scalar u = Scalar(1) - t;
    const Scalar bump = t * t * t * u * u * u * (kBumpA + kBumpB * (Scalar(2) * t - Scalar(1)));
    return base + bump;
  }

  static Scalar dq(Scalar t) {
    const Scalar base =
        ((Scalar(5) * kC5 * t + Scalar(4) * kC4) * t + Scalar(3) * kC3) * t * t;
    const Scalar u = Scalar(1) - t;
    const Scalar t2 = t * t, u2 = u * u;
    const Scalar shape = kBumpA + kBumpB * (Scalar(2) * t - Scalar(1));
    const Scalar bump = Scalar(3) * t2 * u2 * (u - t) * shape + t2 * t * u2 * u * Scalar(2) * kBumpB;
    return base + bump;
  }

  static Scalar d2q(Scalar t) {
    const Scalar base = (Scalar(20) * kC5 * t + Scalar(12) * kC4) * t + Scalar(6) * kC3;
    const Scalar u = Scalar(1) - t;
    const Scalar shape = kBumpA + kBumpB * (Scalar(2) * t - Scalar(1));
    const Scalar d2poly =
        Scalar(6) * t * u * (u * u - Scalar(3) * t * u + t * t) * shape +
        Scalar(12) * t * t * u * u * (u - t) * kBumpB;
    return base * t + d2poly;
  }

  Scalar s_;
  Scalar n_;
};

}  // namespace nlsw
