#pragma once

#include <unsupported/Eigen/FFT>
#include <vector>

#include "nlsw/grid.hpp"

namespace nlsw {

namespace detail {

// One FFT engine per thread; Eigen's FFT object caches plans by size.
template <typename Scalar>
Eigen::FFT<Scalar>& fft_engine() {
  static thread_local Eigen::FFT<Scalar> engine;
  return engine;
}

}  // namespace detail

// Continuum-normalized forward transform,
//   coeffs_k = dx * sum_j f(x_j) e^{-i x_j xi_k}.
// The left edge x_0 = -L/2 contributes the exact phase (-1)^k relative to a
// DFT indexed from 0.
template <typename Scalar>
Spectrum<Scalar> forward_transform(const Field<Scalar>& f) {
  if (!f.finite()) throw InvalidField("forward_transform: non-finite input");
  const auto& g = f.grid;
  const Eigen::Index m = g.modes();

  std::vector<std::complex<Scalar>> in(f.samples.data(), f.samples.data() + m);
  std::vector<std::complex<Scalar>> out(m);
  detail::fft_engine<Scalar>().fwd(out, in);

  ComplexArray<Scalar> coeffs(m);
  const Scalar dx = g.dx();
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index k = g.wavenumber(i);
    const Eigen::Index dft = (k + m) % m;
    const Scalar sign = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
    coeffs[i] = dx * sign * out[dft];
  }
  return Spectrum<Scalar>(g, std::move(coeffs));
}

// Exact inverse of forward_transform:
//   f(x_j) = (1/L) * sum_k coeffs_k e^{i x_j xi_k}.
template <typename Scalar>
Field<Scalar> inverse_transform(const Spectrum<Scalar>& F) {
  if (!F.finite()) throw InvalidSpectrum("inverse_transform: non-finite input");
  const auto& g = F.grid;
  const Eigen::Index m = g.modes();

  std::vector<std::complex<Scalar>> in(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index k = g.wavenumber(i);
    const Eigen::Index dft = (k + m) % m;
    const Scalar sign = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
    in[dft] = sign * F.coeffs[i];
  }
  std::vector<std::complex<Scalar>> out(m);
  detail::fft_engine<Scalar>().inv(out, in);

  ComplexArray<Scalar> samples(m);
  const Scalar inv_dx = Scalar(1) / g.dx();
  for (Eigen::Index j = 0; j < m; ++j) samples[j] = inv_dx * out[j];
  return Field<Scalar>(g, std::move(samples));
}

}  // namespace nlsw
