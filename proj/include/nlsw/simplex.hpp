#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "nlsw/errors.hpp"

namespace nlsw {

// A point on the hyperplane Gamma_n = {xi_1 + ... + xi_n = 0}, n in {4,6,8}.
// The last coordinate is derived from the others, so the zero-sum constraint
// holds exactly in floating point (summation in fixed left-to-right order).
template <typename Scalar = double>
class SimplexSample {
 public:
  static SimplexSample from_free(std::span<const Scalar> free) {
    const std::size_t n = free.size() + 1;
    if (n != 4 && n != 6 && n != 8) throw ConfigError("SimplexSample: n must be 4, 6 or 8");
    SimplexSample q;
    q.n_ = n;
    Scalar sum = 0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      q.xi_[j] = free[j];
      sum += free[j];
    }
    q.xi_[n - 1] = -sum;
    return q;
  }

  static SimplexSample gamma4(Scalar a, Scalar b, Scalar c) {
    const std::array<Scalar, 3> free{a, b, c};
    return from_free(std::span<const Scalar>(free));
  }

  std::size_t n() const { return n_; }
  Scalar operator[](std::size_t j) const { return xi_[j]; }
  std::span<const Scalar> values() const { return {xi_.data(), n_}; }

  Scalar residual() const {
    Scalar sum = 0;
    for (std::size_t j = 0; j < n_; ++j) sum += xi_[j];
    return sum;
  }

 private:
  SimplexSample() = default;
  std::size_t n_ = 0;
  std::array<Scalar, 8> xi_{};
};

}  // namespace nlsw
