#pragma once

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <numbers>

#include "nlsw/errors.hpp"

namespace nlsw {

template <typename Scalar>
using ComplexArray = Eigen::Array<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using RealArray = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

// Uniform periodized grid on [-L/2, L/2).  Frequencies are the physical
// xi_k = 2*pi*k/L for k = -M/2 .. M/2-1, stored in monotone k order, so the
// single unpaired Nyquist mode sits at index 0 with frequency -pi*M/L.
template <typename Scalar = double>
class Grid {
 public:
  Grid(Scalar length, Eigen::Index modes) : length_(length), modes_(modes) {
    if (!(length > Scalar(0))) throw ConfigError("Grid: length must be > 0");
    if (modes < 2 || modes % 2 != 0) throw ConfigError("Grid: modes must be a positive even integer");
  }

  Scalar length() const { return length_; }
  Eigen::Index modes() const { return modes_; }
  Scalar dx() const { return length_ / Scalar(modes_); }

  Scalar x(Eigen::Index j) const { return -length_ / Scalar(2) + Scalar(j) * dx(); }

  // k index of storage slot i, k = i - M/2
  Eigen::Index wavenumber(Eigen::Index i) const { return i - modes_ / 2; }
  Eigen::Index index_of(Eigen::Index k) const { return k + modes_ / 2; }
  bool holds_wavenumber(Eigen::Index k) const { return k >= -modes_ / 2 && k < modes_ / 2; }

  Scalar freq(Eigen::Index i) const {
    return Scalar(2) * std::numbers::pi_v<Scalar> * Scalar(wavenumber(i)) / length_;
  }
  Scalar freq_spacing() const { return Scalar(2) * std::numbers::pi_v<Scalar> / length_; }
  Scalar nyquist() const { return std::numbers::pi_v<Scalar> * Scalar(modes_) / length_; }

  RealArray<Scalar> freqs() const {
    RealArray<Scalar> out(modes_);
    for (Eigen::Index i = 0; i < modes_; ++i) out[i] = freq(i);
    return out;
  }

  RealArray<Scalar> points() const {
    RealArray<Scalar> out(modes_);
    for (Eigen::Index j = 0; j < modes_; ++j) out[j] = x(j);
    return out;
  }

  bool operator==(const Grid& other) const {
    return length_ == other.length_ && modes_ == other.modes_;
  }

 private:
  Scalar length_;
  Eigen::Index modes_;
};

// Complex samples u(x_j) on a grid.
template <typename Scalar = double>
struct Field {
  Grid<Scalar> grid;
  ComplexArray<Scalar> samples;

  Field(const Grid<Scalar>& g, ComplexArray<Scalar> s) : grid(g), samples(std::move(s)) {
    if (samples.size() != grid.modes()) throw InvalidField("Field: samples.size() != grid.modes()");
  }

  static Field zero(const Grid<Scalar>& g) {
    return Field(g, ComplexArray<Scalar>::Zero(g.modes()));
  }

  template <typename Fn>
  static Field from_function(const Grid<Scalar>& g, Fn&& fn) {
    ComplexArray<Scalar> s(g.modes());
    for (Eigen::Index j = 0; j < g.modes(); ++j) s[j] = fn(g.x(j));
    return Field(g, std::move(s));
  }

  bool finite() const {
    for (Eigen::Index j = 0; j < samples.size(); ++j) {
      if (!std::isfinite(samples[j].real()) || !std::isfinite(samples[j].imag())) return false;
    }
    return true;
  }
};

// Fourier coefficients with continuum normalization,
// coeffs[i] ~ int u(x) e^{-i x xi_k} dx at xi_k = freq(i).
template <typename Scalar = double>
struct Spectrum {
  Grid<Scalar> grid;
  ComplexArray<Scalar> coeffs;

  Spectrum(const Grid<Scalar>& g, ComplexArray<Scalar> c) : grid(g), coeffs(std::move(c)) {
    if (coeffs.size() != grid.modes()) throw InvalidSpectrum("Spectrum: coeffs.size() != grid.modes()");
  }

  static Spectrum zero(const Grid<Scalar>& g) {
    return Spectrum(g, ComplexArray<Scalar>::Zero(g.modes()));
  }

  bool finite() const {
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
      if (!std::isfinite(coeffs[i].real()) || !std::isfinite(coeffs[i].imag())) return false;
    }
    return true;
  }
};

}  // namespace nlsw
