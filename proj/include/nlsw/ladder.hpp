#pragma once

#include <complex>
#include <string>
#include <vector>

#include "nlsw/diffpoly.hpp"
#include "nlsw/equations.hpp"
#include "nlsw/norms.hpp"

namespace nlsw {

// Integrable hierarchy for the cubic NLS, division-free form.  With
// P_k = ubar q_k, the textbook recursion P_{k+1} = -i ubar d/dx (P_k/ubar)
// + sum P_l P_{k-l} becomes
//
//   q_1 = u,   q_{k+1} = -i d/dx q_k + gamma * ubar * sum_{l=1}^{k-1} q_l q_{k-l}
//
// an exact identity by induction, with no division by ubar.  The literal
// recursion (gamma = 1) does NOT produce conserved densities beyond P_2:
// conservation (the acceptance oracle) forces gamma = sign/2, matching the
// displayed P_3 = -ubar u_xx + |u|^4/2.
inline std::vector<DiffPolynomial> build_q_ladder(int k_max, Rational gamma = Rational(1, 2)) {
  if (k_max < 1) throw ConfigError("build_q_ladder: k_max must be >= 1");
  if (k_max > 9) throw KMaxTooLarge("build_q_ladder: k_max must be <= 9");
  std::vector<DiffPolynomial> q;
  q.reserve(std::size_t(k_max));
  q.push_back(DiffPolynomial::u());
  const DiffPolynomial ubar = DiffPolynomial::ubar();
  for (int k = 1; k < k_max; ++k) {
    DiffPolynomial quad = DiffPolynomial::zero();
    for (int l = 1; l <= k - 1; ++l) {
      quad = quad + q[std::size_t(l - 1)] * q[std::size_t(k - l - 1)];
    }
    q.push_back(GaussianRational::minus_i() * q.back().x_derivative() +
                GaussianRational(gamma) * (ubar * quad));
  }
  return q;
}

// P_k = ubar * q_k
inline std::vector<DiffPolynomial> build_p_ladder(int k_max, Rational gamma = Rational(1, 2)) {
  auto q = build_q_ladder(k_max, gamma);
  const DiffPolynomial ubar = DiffPolynomial::ubar();
  for (auto& p : q) p = ubar * p;
  return q;
}

// conserved-quantity record: value series along a trajectory plus drift
struct ConservedReport {
  std::string name;
  std::vector<double> times;
  std::vector<std::complex<double>> values;

  double drift() const {
    if (values.empty()) return 0.0;
    const auto c0 = values.front();
    double worst = 0.0;
    for (const auto& v : values) worst = std::max(worst, std::abs(v - c0));
    return worst / std::max(std::abs(c0), 1e-12);
  }
};

// classical invariants per equation variant; mass always, energy per
// variant, momentum for the cubic flow
template <typename Scalar>
std::vector<std::pair<std::string, std::complex<Scalar>>> classical_invariants(
    const EquationSpec<Scalar>& spec, const Field<Scalar>& u) {
  std::vector<std::pair<std::string, std::complex<Scalar>>> out;
  const auto& g = u.grid;
  out.push_back({"mass", std::complex<Scalar>(mass(u), 0)});

  auto ux = spectral_derivative(u);
  Scalar grad_sq = 0;
  for (Eigen::Index j = 0; j < g.modes(); ++j) grad_sq += std::norm(ux.samples[j]);
  grad_sq *= g.dx();

  switch (spec.kind) {
    case EquationKind::CubicNLS: {
      Scalar quartic = 0;
      for (Eigen::Index j = 0; j < g.modes(); ++j) {
        const Scalar m2 = std::norm(u.samples[j]);
        quartic += m2 * m2;
      }
      quartic *= g.dx();
      out.push_back({"energy", std::complex<Scalar>(
                                   Scalar(0.5) * grad_sq + Scalar(spec.sign) * quartic / Scalar(4), 0)});
      Scalar momentum = 0;  // Im int ubar u_x dx, real by construction
      for (Eigen::Index j = 0; j < g.modes(); ++j) {
        momentum += std::imag(std::conj(u.samples[j]) * ux.samples[j]);
      }
      momentum *= g.dx();
      out.push_back({"momentum", std::complex<Scalar>(momentum, 0)});
      break;
    }
    case EquationKind::Hartree: {
      if (!spec.potential) throw ConfigError("classical_invariants: Hartree spec has no potential");
      // (V * |u|^2) evaluated spectrally, as in the flow itself
      ComplexArray<Scalar> density(g.modes());
      for (Eigen::Index j = 0; j < g.modes(); ++j) density[j] = std::norm(u.samples[j]);
      auto dens_hat = forward_transform(Field<Scalar>(g, std::move(density)));
      for (Eigen::Index i = 0; i < g.modes(); ++i) dens_hat.coeffs[i] *= spec.potential->vhat_grid()[i];
      auto conv = inverse_transform(dens_hat);
      Scalar pot = 0;
      for (Eigen::Index j = 0; j < g.modes(); ++j) {
        pot += conv.samples[j].real() * std::norm(u.samples[j]);
      }
      pot *= g.dx();
      out.push_back({"energy", std::complex<Scalar>(
                                   Scalar(0.5) * grad_sq + Scalar(spec.sign) * pot / Scalar(4), 0)});
      break;
    }
    case EquationKind::GaugedDnls: {
      // E(f) = int |f_x|^2 - (1/2) Im int |f|^2 f conj(f)_x
      Scalar im_part = 0;
      for (Eigen::Index j = 0; j < g.modes(); ++j) {
        const auto f = u.samples[j];
        im_part += std::imag(std::norm(f) * f * std::conj(ux.samples[j]));
      }
      im_part *= g.dx();
      out.push_back({"hamiltonian", std::complex<Scalar>(grad_sq - Scalar(0.5) * im_part, 0)});
      break;
    }
  }
  return out;
}

}  // namespace nlsw
