#pragma once

#include <complex>
#include <vector>

#include "nlsw/four_point.hpp"
#include "nlsw/grid.hpp"
#include "nlsw/transforms.hpp"

namespace nlsw {

// Direct summation of the n-linear functional
//   lambda_n(M_n; f) = sum_{Gamma_n} M_n(xi) prod_j h_hat_j(xi_j) * (2pi/L)^{n-1}/(2pi)^{n-1}
// with h_j = f for odd j and conj(f) for even j, so
// h_hat_j(xi) = conj(f_hat(-xi)) on even slots.  The zero-sum constraint is
// the exact integer index identity; tuples whose index sum leaves the stored
// range contribute zero (no aliasing wrap).
//
// The multiplier functor is called as mn(std::span<const Scalar> xi).

namespace detail {

template <typename Scalar>
struct LambdaTables {
  std::vector<std::complex<Scalar>> uhat;  // odd slots, indexed by storage slot
  std::vector<std::complex<Scalar>> ghat;  // even slots (transform of conj f)
  std::vector<Eigen::Index> u_support;
  std::vector<Eigen::Index> g_support;

  LambdaTables(const Spectrum<Scalar>& F) {
    const auto& g = F.grid;
    const Eigen::Index m = g.modes();
    uhat.resize(m);
    ghat.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) uhat[i] = F.coeffs[i];
    for (Eigen::Index i = 0; i < m; ++i) {
      const Eigen::Index k = g.wavenumber(i);
      // conj(f_hat(-xi_k)); -k has no slot when k is the Nyquist index
      ghat[i] = g.holds_wavenumber(-k) ? std::conj(F.coeffs[g.index_of(-k)])
                                       : std::complex<Scalar>(0, 0);
    }
    for (Eigen::Index i = 0; i < m; ++i) {
      if (uhat[i] != std::complex<Scalar>(0, 0)) u_support.push_back(i);
      if (ghat[i] != std::complex<Scalar>(0, 0)) g_support.push_back(i);
    }
  }
};

}  // namespace detail

template <typename Scalar, typename Mult>
std::complex<Scalar> lambda_n_eval(const Mult& mn, const Field<Scalar>& f, int n) {
  const auto& g = f.grid;
  const Eigen::Index m = g.modes();
  if (n != 4 && n != 6 && n != 8) throw ConfigError("lambda_n_eval: n must be 4, 6 or 8");
  if ((n == 4 && m > 128) || (n == 6 && m > 48) || (n == 8 && m > 24))
    throw GridTooLarge("lambda_n_eval: grid exceeds the direct-summation cap");

  const auto F = forward_transform(f);
  detail::LambdaTables<Scalar> tab(F);

  std::array<Scalar, 8> xi{};
  std::complex<Scalar> acc(0, 0);

  // depth-first over the first n-1 slots, the last slot index is forced
  auto recurse = [&](auto&& self, int slot, Eigen::Index ksum,
                     std::complex<Scalar> partial) -> void {
    if (slot == n - 1) {
      const Eigen::Index klast = -ksum;
      if (!g.holds_wavenumber(klast)) return;
      const Eigen::Index i = g.index_of(klast);
      const bool even_slot = (n % 2 == 0);  // slot n is even for n in {4,6,8}
      const std::complex<Scalar> h = even_slot ? tab.ghat[i] : tab.uhat[i];
      if (h == std::complex<Scalar>(0, 0)) return;
      xi[slot] = g.freq(i);
      acc += mn(std::span<const Scalar>(xi.data(), n)) * partial * h;
      return;
    }
    const bool even_slot = ((slot + 1) % 2 == 0);
    const auto& support = even_slot ? tab.g_support : tab.u_support;
    const auto& table = even_slot ? tab.ghat : tab.uhat;
    for (Eigen::Index i : support) {
      xi[slot] = g.freq(i);
      self(self, slot + 1, ksum + g.wavenumber(i), partial * table[i]);
    }
  };
  recurse(recurse, 0, 0, std::complex<Scalar>(1, 0));

  const Scalar measure = std::pow(Scalar(1) / g.length(), Scalar(n - 1));
  return acc * measure;
}

// Dedicated quartic path used along trajectories: same contract as
// lambda_n_eval with n = 4 but taking the spectrum directly and a four-point
// functor, avoiding the generic recursion in the O(M^3) loop.
template <typename Scalar, typename Four>
std::complex<Scalar> lambda4_spectral(const Four& m4, const Spectrum<Scalar>& F) {
  const auto& g = F.grid;
  if (g.modes() > 128) throw GridTooLarge("lambda4_spectral: grid exceeds the n=4 cap");
  detail::LambdaTables<Scalar> tab(F);

  std::complex<Scalar> acc(0, 0);
  for (Eigen::Index i1 : tab.u_support) {
    const Eigen::Index k1 = g.wavenumber(i1);
    const Scalar x1 = g.freq(i1);
    const std::complex<Scalar> p1 = tab.uhat[i1];
    for (Eigen::Index i2 : tab.g_support) {
      const Eigen::Index k12 = k1 + g.wavenumber(i2);
      const Scalar x2 = g.freq(i2);
      const std::complex<Scalar> p12 = p1 * tab.ghat[i2];
      for (Eigen::Index i3 : tab.u_support) {
        const Eigen::Index k4 = -(k12 + g.wavenumber(i3));
        if (!g.holds_wavenumber(k4)) continue;
        const Eigen::Index i4 = g.index_of(k4);
        const std::complex<Scalar> h4 = tab.ghat[i4];
        if (h4 == std::complex<Scalar>(0, 0)) continue;
        const Scalar w = m4(x1, x2, g.freq(i3), g.freq(i4));
        if (w == Scalar(0)) continue;
        acc += w * p12 * tab.uhat[i3] * h4;
      }
    }
  }
  const Scalar il = Scalar(1) / g.length();
  return acc * il * il * il;
}

}  // namespace nlsw
