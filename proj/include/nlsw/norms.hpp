#pragma once

#include <cmath>
#include <complex>

#include "nlsw/grid.hpp"
#include "nlsw/theta.hpp"
#include "nlsw/transforms.hpp"

namespace nlsw {

// Direct L^2 quadrature, ||f||_2 = (sum |f(x_j)|^2 dx)^{1/2}.
template <typename Scalar>
Scalar l2_norm(const Field<Scalar>& f) {
  Scalar acc = 0;
  for (Eigen::Index j = 0; j < f.samples.size(); ++j) acc += std::norm(f.samples[j]);
  return std::sqrt(acc * f.grid.dx());
}

template <typename Scalar>
Scalar mass(const Field<Scalar>& f) {
  Scalar acc = 0;
  for (Eigen::Index j = 0; j < f.samples.size(); ++j) acc += std::norm(f.samples[j]);
  return acc * f.grid.dx();
}

// ||f||_{H^s}^2 = sum_k <xi_k>^{2s} |u_hat(xi_k)|^2 / L, the discrete form of
// (1/2pi) int <xi>^{2s} |u_hat|^2 dxi.
template <typename Scalar>
Scalar hs_norm_sq(const Spectrum<Scalar>& F, Scalar s) {
  Scalar acc = 0;
  for (Eigen::Index i = 0; i < F.coeffs.size(); ++i) {
    const Scalar xi = F.grid.freq(i);
    acc += std::pow(Scalar(1) + xi * xi, s) * std::norm(F.coeffs[i]);
  }
  return acc / F.grid.length();
}

template <typename Scalar>
Scalar sobolev_norm(const Field<Scalar>& f, Scalar s) {
  if (!f.finite()) throw InvalidField("sobolev_norm: non-finite input");
  return std::sqrt(hs_norm_sq(forward_transform(f), s));
}

// ||Q_N f||_{H^s}^2 with the sharp projector onto |xi| >= N.
template <typename Scalar>
Scalar qu_norm_sq(const Spectrum<Scalar>& F, Scalar s, Scalar n) {
  Scalar acc = 0;
  for (Eigen::Index i = 0; i < F.coeffs.size(); ++i) {
    const Scalar xi = F.grid.freq(i);
    if (std::abs(xi) < n) continue;
    acc += std::pow(Scalar(1) + xi * xi, s) * std::norm(F.coeffs[i]);
  }
  return acc / F.grid.length();
}

// E^1 = ||D_theta u||_{L^2}^2 evaluated spectrally.
template <typename Scalar>
Scalar modified_energy_e1(const Spectrum<Scalar>& F, const ThetaProfile<Scalar>& theta) {
  Scalar acc = 0;
  for (Eigen::Index i = 0; i < F.coeffs.size(); ++i) {
    acc += theta.squared(F.grid.freq(i)) * std::norm(F.coeffs[i]);
  }
  return acc / F.grid.length();
}

template <typename Scalar>
Scalar l2_norm_spectral(const Spectrum<Scalar>& F) {
  Scalar acc = 0;
  for (Eigen::Index i = 0; i < F.coeffs.size(); ++i) acc += std::norm(F.coeffs[i]);
  return std::sqrt(acc / F.grid.length());
}

}  // namespace nlsw
