#pragma once

#include <cmath>
#include <functional>
#include <variant>

#include "nlsw/simplex.hpp"
#include "nlsw/theta.hpp"

namespace nlsw {

template <typename Scalar = double>
using VhatFn = std::function<Scalar(Scalar)>;

namespace detail {

// xi_1^2 - xi_2^2 + xi_3^2 - xi_4^2; on Gamma_4 this factors as
// 2(xi_1+xi_2)(xi_1+xi_4).
template <typename Scalar>
Scalar quadratic_denominator(Scalar x1, Scalar x2, Scalar x3, Scalar x4) {
  return x1 * x1 - x2 * x2 + x3 * x3 - x4 * x4;
}

template <typename Scalar>
bool resonant(Scalar denom, Scalar x1, Scalar x2, Scalar x3, Scalar x4, Scalar eps_res) {
  const Scalar scale = std::max(Scalar(1), x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4);
  return std::abs(denom) <= eps_res * scale;
}

}  // namespace detail

// The Hartree correction multiplier Psi on Gamma_4:
//   c * [theta^2(xi1) - theta^2(xi2) + theta^2(xi3) - theta^2(xi4)] * Vhat(xi3+xi4)
//     / (xi1^2 - xi2^2 + xi3^2 - xi4^2)
// off the resonant set, 0 on it.  Vhat multiplies the whole theta^2
// difference (the grouping fixed by the dE^1/dt identity).
template <typename Scalar = double>
struct PsiHartree {
  ThetaProfile<Scalar> theta;
  VhatFn<Scalar> vhat;
  Scalar c = Scalar(1);
  Scalar eps_res = Scalar(1e-9);

  Scalar operator()(Scalar x1, Scalar x2, Scalar x3, Scalar x4) const {
    const Scalar denom = detail::quadratic_denominator(x1, x2, x3, x4);
    if (detail::resonant(denom, x1, x2, x3, x4, eps_res)) return Scalar(0);
    const Scalar num =
        theta.squared(x1) - theta.squared(x2) + theta.squared(x3) - theta.squared(x4);
    return c * num * vhat(x3 + x4) / denom;
  }
};

// Derivative-NLS four-point multiplier,
//   [theta^2(xi1) xi3 + theta^2(xi2) xi4 + theta^2(xi3) xi1 + theta^2(xi4) xi2]
//     / (xi1^2 - xi2^2 + xi3^2 - xi4^2),
// with the same resonance convention.
template <typename Scalar = double>
struct M4Dnls {
  ThetaProfile<Scalar> theta;
  Scalar c = Scalar(1);
  Scalar eps_res = Scalar(1e-9);

  Scalar operator()(Scalar x1, Scalar x2, Scalar x3, Scalar x4) const {
    const Scalar denom = detail::quadratic_denominator(x1, x2, x3, x4);
    if (detail::resonant(denom, x1, x2, x3, x4, eps_res)) return Scalar(0);
    const Scalar num = theta.squared(x1) * x3 + theta.squared(x2) * x4 +
                       theta.squared(x3) * x1 + theta.squared(x4) * x2;
    return c * num / denom;
  }
};

template <typename Scalar = double>
using FourPointMultiplier = std::variant<PsiHartree<Scalar>, M4Dnls<Scalar>>;

template <typename Scalar>
Scalar eval_four_point(const FourPointMultiplier<Scalar>& m, Scalar x1, Scalar x2, Scalar x3,
                       Scalar x4) {
  return std::visit([&](const auto& mult) { return mult(x1, x2, x3, x4); }, m);
}

template <typename Scalar>
Scalar eval_four_point(const FourPointMultiplier<Scalar>& m, const SimplexSample<Scalar>& q) {
  if (q.n() != 4) throw ConfigError("eval_four_point: sample must lie on Gamma_4");
  return eval_four_point(m, q[0], q[1], q[2], q[3]);
}

template <typename Scalar>
Scalar psi_hartree(const SimplexSample<Scalar>& q, const PsiHartree<Scalar>& m) {
  if (q.n() != 4) throw ConfigError("psi_hartree: sample must lie on Gamma_4");
  return m(q[0], q[1], q[2], q[3]);
}

template <typename Scalar>
Scalar m4_dnls(const SimplexSample<Scalar>& q, const M4Dnls<Scalar>& m) {
  if (q.n() != 4) throw ConfigError("m4_dnls: sample must lie on Gamma_4");
  return m(q[0], q[1], q[2], q[3]);
}

namespace detail {

template <typename Scalar>
void check_gamma4(Scalar a, Scalar b, Scalar c, Scalar d) {
  const Scalar sum = a + b + c + d;
  const Scalar scale =
      std::max(Scalar(1), std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d));
  if (std::abs(sum) > Scalar(1e-10) * scale)
    throw ConfigError("inner four-point argument tuple left Gamma_4");
}

}  // namespace detail

// M_6 for the Hartree flow: the four-term alternating combination of M_4
// evaluations at contracted arguments, each weighted by Vhat of the
// contracted pair.
template <typename Scalar>
Scalar m6_hartree(const SimplexSample<Scalar>& q, const PsiHartree<Scalar>& m) {
  if (q.n() != 6) throw ConfigError("m6_hartree: sample must lie on Gamma_6");
  const Scalar x1 = q[0], x2 = q[1], x3 = q[2], x4 = q[3], x5 = q[4], x6 = q[5];
  detail::check_gamma4(x1 + x2 + x3, x4, x5, x6);
  detail::check_gamma4(x1, x2 + x3 + x4, x5, x6);
  detail::check_gamma4(x1, x2, x3 + x4 + x5, x6);
  detail::check_gamma4(x1, x2, x3, x4 + x5 + x6);
  return m(x1 + x2 + x3, x4, x5, x6) * m.vhat(x1 + x2) -
         m(x1, x2 + x3 + x4, x5, x6) * m.vhat(x2 + x3) +
         m(x1, x2, x3 + x4 + x5, x6) * m.vhat(x3 + x4) -
         m(x1, x2, x3, x4 + x5 + x6) * m.vhat(x4 + x5);
}

// sigma_6 for the gauged DNLS flow: the alternating theta^2 sum; no
// denominator.
template <typename Scalar>
Scalar sigma6_dnls(const SimplexSample<Scalar>& q, const ThetaProfile<Scalar>& theta) {
  if (q.n() != 6) throw ConfigError("sigma6_dnls: sample must lie on Gamma_6");
  return theta.squared(q[0]) - theta.squared(q[1]) + theta.squared(q[2]) -
         theta.squared(q[3]) + theta.squared(q[4]) - theta.squared(q[5]);
}

template <typename Scalar>
Scalar m6_dnls(const SimplexSample<Scalar>& q, const M4Dnls<Scalar>& m) {
  if (q.n() != 6) throw ConfigError("m6_dnls: sample must lie on Gamma_6");
  const Scalar x1 = q[0], x2 = q[1], x3 = q[2], x4 = q[3], x5 = q[4], x6 = q[5];
  detail::check_gamma4(x1 + x2 + x3, x4, x5, x6);
  return m(x1 + x2 + x3, x4, x5, x6) * x2 + m(x1, x2 + x3 + x4, x5, x6) * x3 +
         m(x1, x2, x3 + x4 + x5, x6) * x4 + m(x1, x2, x3, x4 + x5 + x6) * x5;
}

template <typename Scalar>
Scalar m8_dnls(const SimplexSample<Scalar>& q, const M4Dnls<Scalar>& m) {
  if (q.n() != 8) throw ConfigError("m8_dnls: sample must lie on Gamma_8");
  const Scalar x1 = q[0], x2 = q[1], x3 = q[2], x4 = q[3];
  const Scalar x5 = q[4], x6 = q[5], x7 = q[6], x8 = q[7];
  return m(x1 + x2 + x3 + x4 + x5, x6, x7, x8) - m(x1, x2 + x3 + x4 + x5 + x6, x7, x8) +
         m(x1, x2, x3 + x4 + x5 + x6 + x7, x8) - m(x1, x2, x3, x4 + x5 + x6 + x7 + x8);
}

}  // namespace nlsw
