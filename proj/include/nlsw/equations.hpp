#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>

#include "nlsw/grid.hpp"
#include "nlsw/norms.hpp"
#include "nlsw/potential.hpp"
#include "nlsw/transforms.hpp"

namespace nlsw {

enum class EquationKind { CubicNLS, Hartree, GaugedDnls };

// sign = +1 defocusing, -1 focusing (NLS/Hartree only).
template <typename Scalar = double>
struct EquationSpec {
  EquationKind kind = EquationKind::CubicNLS;
  int sign = +1;
  std::optional<PotentialSpec<Scalar>> potential;  // Hartree only

  static EquationSpec cubic(int sign_) { return {EquationKind::CubicNLS, sign_, std::nullopt}; }
  static EquationSpec hartree(const PotentialSpec<Scalar>& v, int sign_) {
    return {EquationKind::Hartree, sign_, v};
  }
  static EquationSpec gauged_dnls() { return {EquationKind::GaugedDnls, +1, std::nullopt}; }
};

template <typename Scalar>
Field<Scalar> spectral_derivative(const Field<Scalar>& f) {
  auto F = forward_transform(f);
  for (Eigen::Index i = 0; i < F.coeffs.size(); ++i) {
    F.coeffs[i] *= std::complex<Scalar>(0, F.grid.freq(i));
  }
  return inverse_transform(F);
}

// Right-hand-side nonlinear term N(u) of  i u_t + u_xx = N(u), so every
// variant is integrated as u_t = i u_xx - i N(u):
//   cubic    N = sign |u|^2 u
//   Hartree  N = sign (V * |u|^2) u, convolution evaluated spectrally
//   gauged DNLS  N = -i w^2 conj(w)_x - (1/2)|w|^4 w
// (for the gauged equation this makes u_t = i u_xx - w^2 conj(w)_x
//  + (i/2)|w|^4 w; the + sign on the quintic term is what conserves the
//  gauged Hamiltonian).
template <typename Scalar>
Field<Scalar> nonlinearity(const EquationSpec<Scalar>& spec, const Field<Scalar>& u) {
  const auto& g = u.grid;
  switch (spec.kind) {
    case EquationKind::CubicNLS: {
      ComplexArray<Scalar> out(g.modes());
      for (Eigen::Index j = 0; j < g.modes(); ++j) {
        out[j] = Scalar(spec.sign) * std::norm(u.samples[j]) * u.samples[j];
      }
      return Field<Scalar>(g, std::move(out));
    }
    case EquationKind::Hartree: {
      if (!spec.potential) throw ConfigError("nonlinearity: Hartree spec has no potential");
      ComplexArray<Scalar> density(g.modes());
      for (Eigen::Index j = 0; j < g.modes(); ++j) density[j] = std::norm(u.samples[j]);
      auto dens_hat = forward_transform(Field<Scalar>(g, std::move(density)));
      const auto& vhat = spec.potential->vhat_grid();
      for (Eigen::Index i = 0; i < g.modes(); ++i) dens_hat.coeffs[i] *= vhat[i];
      auto conv = inverse_transform(dens_hat);
      ComplexArray<Scalar> out(g.modes());
      for (Eigen::Index j = 0; j < g.modes(); ++j) {
        out[j] = Scalar(spec.sign) * conv.samples[j].real() * u.samples[j];
      }
      return Field<Scalar>(g, std::move(out));
    }
    case EquationKind::GaugedDnls:
    default: {
      auto wx = spectral_derivative(u);
      ComplexArray<Scalar> out(g.modes());
      const std::complex<Scalar> mi(0, -1);
      for (Eigen::Index j = 0; j < g.modes(); ++j) {
        const auto w = u.samples[j];
        const Scalar mod2 = std::norm(w);
        out[j] = mi * w * w * std::conj(wx.samples[j]) - Scalar(0.5) * mod2 * mod2 * w;
      }
      return Field<Scalar>(g, std::move(out));
    }
  }
}

// Gauge transform G f(x) = exp(-i int_{-inf}^x |f|^2 dy) f(x), with the
// cumulative integral taken by trapezoid quadrature from the left grid edge
// (data are required to be negligible there).
template <typename Scalar>
Field<Scalar> gauge_transform(const Field<Scalar>& f, Scalar phase_sign) {
  const auto& g = f.grid;
  ComplexArray<Scalar> out(g.modes());
  const Scalar dx = g.dx();
  Scalar integral = 0;
  Scalar prev = std::norm(f.samples[0]);
  out[0] = f.samples[0];  // integral vanishes at the left edge
  for (Eigen::Index j = 1; j < g.modes(); ++j) {
    const Scalar cur = std::norm(f.samples[j]);
    integral += Scalar(0.5) * (prev + cur) * dx;
    prev = cur;
    out[j] = std::polar(Scalar(1), phase_sign * integral) * f.samples[j];
  }
  return Field<Scalar>(g, std::move(out));
}

template <typename Scalar>
Field<Scalar> gauge_forward(const Field<Scalar>& f) {
  return gauge_transform(f, Scalar(-1));
}

template <typename Scalar>
Field<Scalar> gauge_inverse(const Field<Scalar>& f) {
  return gauge_transform(f, Scalar(+1));
}

template <typename Scalar>
struct SmallnessResult {
  Scalar l2_norm = 0;
  Scalar threshold = 0;
  bool pass = false;
  Scalar margin() const { return threshold - l2_norm; }
};

// ||Phi||_{L^2} < sqrt(2 pi), the standing requirement for the DNLS flow.
template <typename Scalar>
SmallnessResult<Scalar> smallness_check(const Field<Scalar>& phi) {
  SmallnessResult<Scalar> out;
  out.l2_norm = l2_norm(phi);
  out.threshold = std::sqrt(Scalar(2) * std::numbers::pi_v<Scalar>);
  out.pass = out.l2_norm < out.threshold;
  return out;
}

}  // namespace nlsw
