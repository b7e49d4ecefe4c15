#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "nlsw/four_point.hpp"
#include "nlsw/grid.hpp"
#include "nlsw/norms.hpp"
#include "nlsw/transforms.hpp"

namespace nlsw {

// Convolution potential V for the Hartree flow.  Assumptions carried by the
// type: V in L^1, V >= 0, V even.  Gaussian and Exponential shapes have unit
// mass and closed-form spectra; Custom resamples tabulated (x, V) pairs onto
// the grid by linear interpolation.
template <typename Scalar = double>
class PotentialSpec {
 public:
  enum class Shape { Gaussian, Exponential, Custom };

  static PotentialSpec gaussian(const Grid<Scalar>& g, Scalar width) {
    if (!(width > Scalar(0))) throw ConfigError("PotentialSpec: width must be > 0");
    PotentialSpec p(g, Shape::Gaussian, width);
    const Scalar a = Scalar(1) / (width * std::sqrt(std::numbers::pi_v<Scalar>));
    for (Eigen::Index j = 0; j < g.modes(); ++j) {
      const Scalar x = g.x(j);
      p.samples_[j] = a * std::exp(-x * x / (width * width));
    }
    p.fill_spectrum_closed_form();
    return p;
  }

  static PotentialSpec exponential(const Grid<Scalar>& g, Scalar rate) {
    if (!(rate > Scalar(0))) throw ConfigError("PotentialSpec: rate must be > 0");
    PotentialSpec p(g, Shape::Exponential, rate);
    for (Eigen::Index j = 0; j < g.modes(); ++j) {
      const Scalar x = g.x(j);
      p.samples_[j] = rate / Scalar(2) * std::exp(-rate * std::abs(x));
    }
    p.fill_spectrum_closed_form();
    return p;
  }

  // Two-column (x, V(x)) table, linearly interpolated; zero outside the
  // tabulated range.
  static PotentialSpec custom(const Grid<Scalar>& g,
                              const std::vector<std::pair<Scalar, Scalar>>& table) {
    if (table.size() < 2) throw ConfigError("PotentialSpec: custom table needs >= 2 rows");
    auto rows = table;
    std::sort(rows.begin(), rows.end());
    PotentialSpec p(g, Shape::Custom, Scalar(0));
    for (Eigen::Index j = 0; j < g.modes(); ++j) {
      const Scalar x = g.x(j);
      if (x <= rows.front().first || x >= rows.back().first) {
        p.samples_[j] = (x == rows.front().first)   ? rows.front().second
                        : (x == rows.back().first) ? rows.back().second
                                                   : Scalar(0);
        continue;
      }
      auto hi = std::lower_bound(rows.begin(), rows.end(), std::make_pair(x, Scalar(0)));
      auto lo = hi - 1;
      const Scalar w = (x - lo->first) / (hi->first - lo->first);
      p.samples_[j] = (Scalar(1) - w) * lo->second + w * hi->second;
    }
    // spectrum from the grid samples; V even and real makes it real
    auto field = Field<Scalar>(g, p.samples_.template cast<std::complex<Scalar>>());
    auto spec = forward_transform(field);
    for (Eigen::Index i = 0; i < g.modes(); ++i) p.vhat_grid_[i] = spec.coeffs[i].real();
    return p;
  }

  Shape shape() const { return shape_; }
  const Grid<Scalar>& grid() const { return grid_; }
  const RealArray<Scalar>& samples() const { return samples_; }
  const RealArray<Scalar>& vhat_grid() const { return vhat_grid_; }

  // V-hat at arbitrary frequency: closed form for the analytic shapes, linear
  // interpolation of the grid table (0 beyond Nyquist) for Custom.
  Scalar vhat(Scalar xi) const {
    switch (shape_) {
      case Shape::Gaussian:
        return std::exp(-param_ * param_ * xi * xi / Scalar(4));
      case Shape::Exponential: {
        const Scalar r2 = param_ * param_;
        return r2 / (r2 + xi * xi);
      }
      case Shape::Custom:
      default: {
        const Scalar lo = grid_.freq(0);
        const Scalar dxi = grid_.freq_spacing();
        const Scalar pos = (xi - lo) / dxi;
        if (pos < Scalar(0) || pos > Scalar(grid_.modes() - 1)) return Scalar(0);
        const Eigen::Index i0 = std::min<Eigen::Index>(Eigen::Index(pos), grid_.modes() - 2);
        const Scalar w = pos - Scalar(i0);
        return (Scalar(1) - w) * vhat_grid_[i0] + w * vhat_grid_[i0 + 1];
      }
    }
  }

  VhatFn<Scalar> vhat_fn() const {
    return [copy = *this](Scalar xi) { return copy.vhat(xi); };
  }

  Scalar l1_mass() const {
    Scalar acc = 0;
    for (Eigen::Index j = 0; j < samples_.size(); ++j) acc += std::abs(samples_[j]);
    return acc * grid_.dx();
  }

 private:
  PotentialSpec(const Grid<Scalar>& g, Shape shape, Scalar param)
      : grid_(g),
        shape_(shape),
        param_(param),
        samples_(RealArray<Scalar>::Zero(g.modes())),
        vhat_grid_(RealArray<Scalar>::Zero(g.modes())) {}

  void fill_spectrum_closed_form() {
    for (Eigen::Index i = 0; i < grid_.modes(); ++i) vhat_grid_[i] = vhat(grid_.freq(i));
  }

  Grid<Scalar> grid_;
  Shape shape_;
  Scalar param_;
  RealArray<Scalar> samples_;
  RealArray<Scalar> vhat_grid_;
};

struct PotentialCheck {
  bool l1_finite = false;
  bool nonnegative = false;
  bool even = false;
  double l1_mass = 0.0;
  double max_negative = 0.0;
  double max_odd_part = 0.0;
  bool pass() const { return l1_finite && nonnegative && even; }
};

// Evaluates the three standing assumptions on V: integrable, nonnegative, even.
template <typename Scalar>
PotentialCheck check_potential(const PotentialSpec<Scalar>& v) {
  PotentialCheck out;
  const auto& g = v.grid();
  const auto& s = v.samples();
  out.l1_mass = v.l1_mass();
  out.l1_finite = std::isfinite(out.l1_mass);
  out.max_negative = 0.0;
  for (Eigen::Index j = 0; j < s.size(); ++j) out.max_negative = std::min(out.max_negative, double(s[j]));
  out.max_negative = -out.max_negative;
  out.nonnegative = out.max_negative <= 0.0;
  // x_j = -L/2 + j dx pairs j <-> M - j (index 0 is its own mirror image)
  double max_odd = 0.0, scale = 1e-30;
  for (Eigen::Index j = 1; j < g.modes(); ++j) {
    const Eigen::Index mirror = g.modes() - j;
    max_odd = std::max(max_odd, std::abs(double(s[j] - s[mirror])));
    scale = std::max(scale, std::abs(double(s[j])));
  }
  out.max_odd_part = max_odd;
  out.even = max_odd <= 1e-12 * std::max(1.0, scale);
  return out;
}

}  // namespace nlsw
