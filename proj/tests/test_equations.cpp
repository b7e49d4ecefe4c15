#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "nlsw/equations.hpp"
#include "nlsw/norms.hpp"
#include "nlsw/potential.hpp"
#include "nlsw/rng.hpp"
#include "nlsw/transforms.hpp"

using namespace nlsw;
using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

namespace {

Field<double> random_smooth_field(const Grid<double>& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  ComplexArray<double> coeffs = ComplexArray<double>::Zero(g.modes());
  for (Eigen::Index i = 0; i < g.modes(); ++i) {
    const double xi = g.freq(i);
    if (std::abs(xi) > g.nyquist() / 3.0) continue;
    coeffs[i] = std::exp(-0.5 * xi * xi) * cplx(rng.normal(), rng.normal());
  }
  return inverse_transform(Spectrum<double>(g, std::move(coeffs)));
}

}  // namespace

TEST_CASE("potential checks") {
  Grid<double> g(40.0, 256);

  SUBCASE("gaussian passes all three assumptions") {
    auto v = PotentialSpec<double>::gaussian(g, 1.0);
    auto rep = check_potential(v);
    CHECK(rep.l1_finite);
    CHECK(rep.nonnegative);
    CHECK(rep.even);
    CHECK(rep.pass());
    CHECK(rep.l1_mass == doctest::Approx(1.0).epsilon(1e-12));
    // closed-form spectrum: Vhat(0) = mass, decays like exp(-w^2 xi^2/4)
    CHECK(v.vhat(0.0) == 1.0);
    CHECK(v.vhat(2.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  }

  SUBCASE("exponential shape") {
    // the |x| kink limits the Riemann-sum mass to O(dx^2) accuracy
    Grid<double> fine(40.0, 2048);
    auto v = PotentialSpec<double>::exponential(fine, 2.0);
    auto rep = check_potential(v);
    CHECK(rep.pass());
    CHECK(rep.l1_mass == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(v.vhat(0.0) == 1.0);
    CHECK(v.vhat(2.0) == doctest::Approx(0.5).epsilon(1e-14));
  }

}

TEST_CASE("custom potential from table") {
  Grid<double> g(40.0, 256);

  SUBCASE("x exp(-x^2) fails nonnegativity and evenness") {
    std::vector<std::pair<double, double>> rows;
    for (double x = -10.0; x <= 10.0; x += 0.05) rows.push_back({x, x * std::exp(-x * x)});
    auto v = PotentialSpec<double>::custom(g, rows);
    auto rep = check_potential(v);
    CHECK_FALSE(rep.nonnegative);
    CHECK_FALSE(rep.even);
    CHECK_FALSE(rep.pass());
  }

  SUBCASE("one negative entry fails (ii)") {
    std::vector<std::pair<double, double>> rows;
    for (double x = -10.0; x <= 10.0; x += 0.05) rows.push_back({x, std::exp(-x * x)});
    rows[150].second = -0.01;
    auto v = PotentialSpec<double>::custom(g, rows);
    auto rep = check_potential(v);
    CHECK_FALSE(rep.nonnegative);
  }

  SUBCASE("even custom table resamples with a real spectrum") {
    std::vector<std::pair<double, double>> rows;
    for (double x = -12.0; x <= 12.0 + 1e-9; x += 0.1) rows.push_back({x, 1.0 / (1.0 + x * x)});
    auto v = PotentialSpec<double>::custom(g, rows);
    CHECK(check_potential(v).even);
    // vhat accessor agrees with the grid table at grid frequencies
    const auto i = g.index_of(3);
    CHECK(v.vhat(g.freq(i)) == doctest::Approx(v.vhat_grid()[i]).epsilon(1e-12));
  }
}

TEST_CASE("nonlinearity") {
  Grid<double> g(40.0, 256);

  SUBCASE("zero field gives zero for all variants") {
    auto z = Field<double>::zero(g);
    auto v = PotentialSpec<double>::gaussian(g, 1.0);
    for (auto spec : {EquationSpec<double>::cubic(+1), EquationSpec<double>::hartree(v, +1),
                      EquationSpec<double>::gauged_dnls()}) {
      CHECK(nonlinearity(spec, z).samples.abs().maxCoeff() == 0.0);
    }
  }

  SUBCASE("narrow unit-mass potential approximates the cubic term") {
    auto f = Field<double>::from_function(g, [](double x) { return std::exp(-x * x); });
    auto v = PotentialSpec<double>::gaussian(g, 0.05);
    auto hart = nonlinearity(EquationSpec<double>::hartree(v, +1), f);
    auto cub = nonlinearity(EquationSpec<double>::cubic(+1), f);
    Field<double> diff(g, hart.samples - cub.samples);
    CHECK(l2_norm(diff) / l2_norm(cub) <= 0.05);
  }

  SUBCASE("gauge invariance of the cubic term") {
    auto f = random_smooth_field(g, 31);
    const cplx phase = std::polar(1.0, 0.8371);
    Field<double> rotated(g, phase * f.samples);
    auto spec = EquationSpec<double>::cubic(+1);
    auto lhs = nonlinearity(spec, rotated);
    ComplexArray<double> rhs = phase * nonlinearity(spec, f).samples;
    CHECK((lhs.samples - rhs).abs().maxCoeff() < 1e-12 * rhs.abs().maxCoeff());
  }

  SUBCASE("Hartree term keeps <N(u), u> real") {
    auto v = PotentialSpec<double>::gaussian(g, 1.0);
    auto spec = EquationSpec<double>::hartree(v, +1);
    for (std::uint64_t seed = 50; seed < 58; ++seed) {
      auto f = random_smooth_field(g, seed);
      auto nf = nonlinearity(spec, f);
      cplx inner(0, 0);
      for (Eigen::Index j = 0; j < g.modes(); ++j) {
        inner += nf.samples[j] * std::conj(f.samples[j]);
      }
      inner *= g.dx();
      CHECK(std::abs(inner.imag()) <= 1e-10 * std::max(1.0, std::abs(inner.real())));
    }
  }
}

TEST_CASE("gauge transform") {
  Grid<double> g(40.0, 512);

  SUBCASE("zero field maps to zero") {
    auto gf = gauge_forward(Field<double>::zero(g));
    CHECK(gf.samples.abs().maxCoeff() == 0.0);
  }

  SUBCASE("round trip") {
    for (std::uint64_t seed = 60; seed < 66; ++seed) {
      auto f = random_smooth_field(g, seed);
      auto back = gauge_inverse(gauge_forward(f));
      CHECK((back.samples - f.samples).abs().maxCoeff() <= 1e-10 * f.samples.abs().maxCoeff());
    }
  }

  SUBCASE("modulus preserved pointwise at machine precision") {
    auto f = random_smooth_field(g, 70);
    auto gf = gauge_forward(f);
    for (Eigen::Index j = 0; j < g.modes(); ++j) {
      CHECK(std::abs(std::abs(gf.samples[j]) - std::abs(f.samples[j])) <=
            4.0 * std::numeric_limits<double>::epsilon() * std::abs(f.samples[j]));
    }
    CHECK(mass(gf) == doctest::Approx(mass(f)).epsilon(1e-12));
  }

  SUBCASE("commutes with constant phases") {
    auto f = random_smooth_field(g, 71);
    const cplx phase = std::polar(1.0, -1.234);
    Field<double> rotated(g, phase * f.samples);
    auto lhs = gauge_forward(rotated);
    ComplexArray<double> rhs = phase * gauge_forward(f).samples;
    CHECK((lhs.samples - rhs).abs().maxCoeff() <= 1e-12 * rhs.abs().maxCoeff());
  }
}

TEST_CASE("smallness check") {
  Grid<double> g(40.0, 512);

  SUBCASE("zero field passes with full margin") {
    auto r = smallness_check(Field<double>::zero(g));
    CHECK(r.pass);
    CHECK(r.l2_norm == 0.0);
    CHECK(r.margin() == doctest::Approx(std::sqrt(2.0 * pi)).epsilon(1e-15));
  }

  SUBCASE("unit gaussian passes") {
    auto f = Field<double>::from_function(g, [](double x) { return std::exp(-x * x); });
    auto r = smallness_check(f);
    CHECK(r.pass);
    CHECK(r.l2_norm == doctest::Approx(std::pow(pi / 2.0, 0.25)).epsilon(1e-10));
  }

  SUBCASE("3x gaussian fails") {
    auto f = Field<double>::from_function(g, [](double x) { return 3.0 * std::exp(-x * x); });
    auto r = smallness_check(f);
    CHECK_FALSE(r.pass);
    CHECK(r.l2_norm == doctest::Approx(3.0 * std::pow(pi / 2.0, 0.25)).epsilon(1e-10));
  }
}
