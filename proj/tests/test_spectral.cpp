#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "nlsw/grid.hpp"
#include "nlsw/multipliers.hpp"
#include "nlsw/norms.hpp"
#include "nlsw/rng.hpp"
#include "nlsw/transforms.hpp"

using namespace nlsw;
using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

namespace {

Field<double> random_smooth_field(const Grid<double>& g, std::uint64_t seed) {
  // Random band-limited data: Gaussian coefficients shaped by a decaying
  // envelope, synthesized in spectral space.
  SplitMix64 rng(seed);
  ComplexArray<double> coeffs = ComplexArray<double>::Zero(g.modes());
  for (Eigen::Index i = 0; i < g.modes(); ++i) {
    const double xi = g.freq(i);
    if (std::abs(xi) > g.nyquist() / 3.0) continue;
    const double env = std::exp(-0.5 * xi * xi);
    coeffs[i] = env * cplx(rng.normal(), rng.normal());
  }
  return inverse_transform(Spectrum<double>(g, std::move(coeffs)));
}

}  // namespace

TEST_CASE("forward transform basics") {
  Grid<double> g(40.0, 512);

  SUBCASE("zero field maps to zero coefficients") {
    auto F = forward_transform(Field<double>::zero(g));
    CHECK(F.coeffs.abs().maxCoeff() == 0.0);
  }

  SUBCASE("gaussian has closed-form transform") {
    // u_hat(xi) = sqrt(pi) exp(-xi^2/4); check the xi = 0 value.
    auto f = Field<double>::from_function(g, [](double x) { return std::exp(-x * x); });
    auto F = forward_transform(f);
    const double got = F.coeffs[g.index_of(0)].real();
    CHECK(std::abs(got - std::sqrt(pi)) < 1e-10);
    CHECK(std::abs(F.coeffs[g.index_of(0)].imag()) < 1e-12);
    // and a nonzero frequency for good measure
    const double xi = g.freq(g.index_of(3));
    const double expect = std::sqrt(pi) * std::exp(-xi * xi / 4.0);
    CHECK(std::abs(F.coeffs[g.index_of(3)].real() - expect) < 1e-10);
  }

  SUBCASE("single mode is exactly one DFT line of height L") {
    const double L = g.length();
    auto f = Field<double>::from_function(
        g, [L](double x) { return std::exp(cplx(0.0, 2.0 * pi / L) * x); });
    auto F = forward_transform(f);
    for (Eigen::Index i = 0; i < g.modes(); ++i) {
      if (g.wavenumber(i) == 1) {
        CHECK(std::abs(F.coeffs[i] - cplx(L, 0.0)) < 1e-12 * L);
      } else {
        CHECK(std::abs(F.coeffs[i]) < 1e-12 * L);
      }
    }
  }

  SUBCASE("non-finite input throws") {
    auto f = Field<double>::zero(g);
    f.samples[7] = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
    CHECK_THROWS_AS(forward_transform(f), InvalidField);
  }
}

TEST_CASE("inverse transform") {
  Grid<double> g(40.0, 512);

  SUBCASE("zero coefficients map to zero field") {
    auto f = inverse_transform(Spectrum<double>::zero(g));
    CHECK(f.samples.abs().maxCoeff() == 0.0);
  }

  SUBCASE("round trip on random smooth fields") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto f = random_smooth_field(g, seed);
      auto back = inverse_transform(forward_transform(f));
      const double scale = f.samples.abs().maxCoeff();
      CHECK((back.samples - f.samples).abs().maxCoeff() < 1e-12 * scale);
    }
  }

  SUBCASE("gaussian recovered from its transform") {
    auto f = Field<double>::from_function(g, [](double x) { return std::exp(-x * x); });
    auto back = inverse_transform(forward_transform(f));
    CHECK((back.samples - f.samples).abs().maxCoeff() < 1e-10);
  }

  SUBCASE("non-finite input throws") {
    auto F = Spectrum<double>::zero(g);
    F.coeffs[0] = cplx(0.0, std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(inverse_transform(F), InvalidSpectrum);
  }
}

TEST_CASE("Parseval identity on 100 random smooth fields") {
  Grid<double> g(40.0, 256);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto f = random_smooth_field(g, 1000 + seed);
    const double direct = mass(f);
    const double spectral = [&] {
      auto F = forward_transform(f);
      double acc = 0;
      for (Eigen::Index i = 0; i < g.modes(); ++i) acc += std::norm(F.coeffs[i]);
      return acc / g.length();
    }();
    CHECK(std::abs(direct - spectral) < 1e-12 * std::max(1.0, direct));
  }
}

TEST_CASE("apply_multiplier") {
  Grid<double> g(40.0, 256);

  SUBCASE("D^0 is the identity") {
    auto f = random_smooth_field(g, 7);
    auto out = apply_multiplier(f, MultiplierProfile<double>(JapaneseBracketPow<double>{0.0}));
    CHECK((out.samples - f.samples).abs().maxCoeff() < 1e-12 * f.samples.abs().maxCoeff());
  }

  SUBCASE("Q above Nyquist annihilates") {
    auto f = random_smooth_field(g, 8);
    auto out = apply_multiplier(f, MultiplierProfile<double>(HighPassQ<double>{g.nyquist() + 1.0}));
    CHECK(out.samples.abs().maxCoeff() < 1e-14 * f.samples.abs().maxCoeff());
  }

  SUBCASE("homogeneous derivative weight on a single mode") {
    const double L = g.length();
    auto f = Field<double>::from_function(
        g, [L](double x) { return std::exp(cplx(0.0, 2.0 * pi / L) * x); });
    auto out = apply_multiplier(f, MultiplierProfile<double>(HomogeneousPow<double>{1.0}));
    const double want = 2.0 * pi / L;
    CHECK((out.samples - want * f.samples).abs().maxCoeff() < 1e-12);
  }

  SUBCASE("linearity") {
    auto f = random_smooth_field(g, 9);
    auto h = random_smooth_field(g, 10);
    const cplx a(1.25, -0.5), b(-0.75, 2.0);
    MultiplierProfile<double> m(JapaneseBracketPow<double>{1.5});
    Field<double> combo(g, a * f.samples + b * h.samples);
    auto lhs = apply_multiplier(combo, m);
    auto rhs_f = apply_multiplier(f, m);
    auto rhs_h = apply_multiplier(h, m);
    ComplexArray<double> rhs = a * rhs_f.samples + b * rhs_h.samples;
    const double scale = rhs.abs().maxCoeff();
    CHECK((lhs.samples - rhs).abs().maxCoeff() < 1e-12 * scale);
  }

  SUBCASE("Q is an idempotent sharp projector") {
    Grid<double> gg(40.0, 128);
    // On the mask level Q*Q == Q and (I-Q)+Q == I hold bitwise.
    HighPassQ<double> q{5.0};
    for (Eigen::Index i = 0; i < gg.modes(); ++i) {
      const double xi = gg.freq(i);
      const double m = q(xi);
      CHECK(m * m == m);
      CHECK((1.0 - m) + m == 1.0);
      CHECK((m == 0.0 || m == 1.0));
    }
    // and through the transform pair at roundoff level
    auto f = random_smooth_field(gg, 11);
    MultiplierProfile<double> qm(q);
    auto qf = apply_multiplier(f, qm);
    auto qqf = apply_multiplier(qf, qm);
    CHECK((qqf.samples - qf.samples).abs().maxCoeff() < 1e-13 * f.samples.abs().maxCoeff());
  }
}

TEST_CASE("sobolev norms") {
  Grid<double> g(40.0, 512);

  SUBCASE("zero field") { CHECK(sobolev_norm(Field<double>::zero(g), 1.5) == 0.0); }

  SUBCASE("gaussian L2 norm closed form") {
    auto f = Field<double>::from_function(g, [](double x) { return std::exp(-x * x); });
    CHECK(std::abs(sobolev_norm(f, 0.0) - std::pow(pi / 2.0, 0.25)) < 1e-10);
    // s = 0 agrees with direct quadrature
    CHECK(std::abs(sobolev_norm(f, 0.0) - l2_norm(f)) < 1e-12);
  }

  SUBCASE("single mode H^s norm") {
    const double L = g.length();
    auto f = Field<double>::from_function(
        g, [L](double x) { return std::exp(cplx(0.0, 2.0 * pi / L) * x); });
    const double xi = 2.0 * pi / L;
    for (double s : {0.0, 1.0, 2.5}) {
      const double want = std::pow(1.0 + xi * xi, s / 2.0) * std::sqrt(L);
      CHECK(std::abs(sobolev_norm(f, s) - want) < 1e-10 * want);
    }
  }
}

TEST_CASE("low-frequency bound with the exact discrete constant") {
  // ||(I-Q)f||_{H^s} <= <N'>^{s-k} ||f||_{H^k} for s >= k, N' the largest grid
  // frequency below N.
  Grid<double> g(40.0, 256);
  const double s = 2.5, k = 1.0;
  for (std::uint64_t seed = 40; seed < 48; ++seed) {
    auto f = random_smooth_field(g, seed);
    for (double n : {2.0, 5.0, 11.0}) {
      double nprime = 0.0;
      for (Eigen::Index i = 0; i < g.modes(); ++i) {
        const double a = std::abs(g.freq(i));
        if (a < n && a > nprime) nprime = a;
      }
      auto low = apply_multiplier(f, MultiplierProfile<double>(HighPassQ<double>{n}));
      Field<double> iminusq(g, f.samples - low.samples);
      const double lhs = sobolev_norm(iminusq, s);
      const double rhs = std::pow(1.0 + nprime * nprime, (s - k) / 2.0) * sobolev_norm(f, k);
      CHECK(lhs <= rhs * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("dyadic decomposition") {
  Grid<double> g(40.0, 256);

  SUBCASE("shells partition: sum reconstructs the field") {
    auto f = random_smooth_field(g, 21);
    auto acc = Field<double>::zero(g);
    for (double n : dyadic_shells(g)) acc.samples += dyadic_component(f, n).samples;
    CHECK((acc.samples - f.samples).abs().maxCoeff() < 1e-12 * f.samples.abs().maxCoeff());
  }

  SUBCASE("support containment picks out one shell") {
    // spectrum supported in [5, 7] stays in the N = 4 shell
    ComplexArray<double> coeffs = ComplexArray<double>::Zero(g.modes());
    for (Eigen::Index i = 0; i < g.modes(); ++i) {
      const double xi = g.freq(i);
      if (xi >= 5.0 && xi <= 7.0) coeffs[i] = cplx(1.0, -0.5);
    }
    auto f = inverse_transform(Spectrum<double>(g, coeffs));
    auto in_shell = dyadic_component(f, 4.0);
    CHECK((in_shell.samples - f.samples).abs().maxCoeff() < 1e-12);
    for (double n : dyadic_shells(g)) {
      if (n == 4.0) continue;
      CHECK(dyadic_component(f, n).samples.abs().maxCoeff() < 1e-13);
    }
  }

  SUBCASE("Parseval over disjoint shells") {
    auto f = random_smooth_field(g, 22);
    const double total = mass(f);
    double acc = 0;
    for (double n : dyadic_shells(g)) acc += mass(dyadic_component(f, n));
    CHECK(std::abs(acc - total) < 1e-12 * std::max(1.0, total));
  }
}
