#pragma once

#include <cmath>
#include <variant>
#include <vector>

#include "nlsw/grid.hpp"
#include "nlsw/theta.hpp"
#include "nlsw/transforms.hpp"

namespace nlsw {

// Real single-function Fourier multipliers m(xi).

template <typename Scalar>
struct JapaneseBracketPow {
  Scalar s;
  Scalar operator()(Scalar xi) const { return std::pow(std::sqrt(Scalar(1) + xi * xi), s); }
};

template <typename Scalar>
struct HomogeneousPow {
  Scalar s;
  Scalar operator()(Scalar xi) const { return std::pow(std::abs(xi), s); }
};

// Sharp projector onto |xi| >= N (eq. indicator, not smoothed).
template <typename Scalar>
struct HighPassQ {
  Scalar n;
  Scalar operator()(Scalar xi) const { return std::abs(xi) >= n ? Scalar(1) : Scalar(0); }
};

// Littlewood-Paley shell |xi| in [N, 2N) for dyadic N >= 1; N == 0 denotes the
// extra low shell |xi| < 1.  The shells partition the frequency axis.
template <typename Scalar>
struct DyadicShell {
  Scalar n;
  Scalar operator()(Scalar xi) const {
    const Scalar a = std::abs(xi);
    if (n == Scalar(0)) return a < Scalar(1) ? Scalar(1) : Scalar(0);
    return (a >= n && a < Scalar(2) * n) ? Scalar(1) : Scalar(0);
  }
};

template <typename Scalar>
struct ThetaWeight {
  ThetaProfile<Scalar> profile;
  Scalar operator()(Scalar xi) const { return profile(xi); }
};

template <typename Scalar = double>
using MultiplierProfile =
    std::variant<JapaneseBracketPow<Scalar>, HomogeneousPow<Scalar>, HighPassQ<Scalar>,
                 DyadicShell<Scalar>, ThetaWeight<Scalar>>;

template <typename Scalar>
Scalar eval_multiplier(const MultiplierProfile<Scalar>& m, Scalar xi) {
  return std::visit([xi](const auto& kind) { return kind(xi); }, m);
}

template <typename Scalar>
Spectrum<Scalar> apply_multiplier(const Spectrum<Scalar>& F, const MultiplierProfile<Scalar>& m) {
  ComplexArray<Scalar> coeffs(F.coeffs.size());
  for (Eigen::Index i = 0; i < F.coeffs.size(); ++i) {
    coeffs[i] = eval_multiplier(m, F.grid.freq(i)) * F.coeffs[i];
  }
  return Spectrum<Scalar>(F.grid, std::move(coeffs));
}

template <typename Scalar>
Field<Scalar> apply_multiplier(const Field<Scalar>& f, const MultiplierProfile<Scalar>& m) {
  return inverse_transform(apply_multiplier(forward_transform(f), m));
}

template <typename Scalar>
Field<Scalar> dyadic_component(const Field<Scalar>& f, Scalar n_dyadic) {
  return apply_multiplier(f, MultiplierProfile<Scalar>(DyadicShell<Scalar>{n_dyadic}));
}

// Shell parameters 0 (the |xi| < 1 shell), 1, 2, 4, ... covering the grid.
template <typename Scalar>
std::vector<Scalar> dyadic_shells(const Grid<Scalar>& g) {
  std::vector<Scalar> shells{Scalar(0)};
  for (Scalar n = Scalar(1); n <= g.nyquist(); n *= Scalar(2)) shells.push_back(n);
  return shells;
}

}  // namespace nlsw
