#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nlsw/four_point.hpp"
#include "nlsw/rng.hpp"
#include "nlsw/theta.hpp"

namespace nlsw {

struct BoundRow {
  std::string bound_id;
  std::string regime;
  std::size_t samples = 0;
  double max_ratio = 0.0;
  double p99_ratio = 0.0;
  double n = 0.0;
  double s = 0.0;
};

struct BoundReport {
  std::vector<BoundRow> rows;

  const BoundRow* find(const std::string& bound_id, const std::string& regime) const {
    for (const auto& r : rows)
      if (r.bound_id == bound_id && r.regime == regime) return &r;
    return nullptr;
  }

  double max_over_all() const {
    double m = 0.0;
    for (const auto& r : rows) m = std::max(m, r.max_ratio);
    return m;
  }

  bool all_finite() const {
    for (const auto& r : rows)
      if (!std::isfinite(r.max_ratio) || !std::isfinite(r.p99_ratio)) return false;
    return true;
  }
};

struct SamplerConfig {
  std::size_t samples = 100000;  // per bound; >= 1e4 for meaningful tails
  std::uint64_t seed = 1;
  double scale_factor = 16.0;  // top sampled |xi| relative to N
  std::size_t batch = 4096;    // deterministic per-batch seeds
};

namespace detail {

class RatioAccumulator {
 public:
  void add(double r) {
    ratios_.push_back(r);
    max_ = std::max(max_, r);
  }
  std::size_t count() const { return ratios_.size(); }
  double max() const { return ratios_.empty() ? 0.0 : max_; }
  double p99() {
    if (ratios_.empty()) return 0.0;
    const std::size_t k = std::size_t(0.99 * double(ratios_.size() - 1));
    std::nth_element(ratios_.begin(), ratios_.begin() + k, ratios_.end());
    return ratios_[k];
  }

 private:
  std::vector<double> ratios_;
  double max_ = 0.0;
};

// Ordered magnitudes, floored at 1 to mirror the minimal dyadic shell.
inline std::array<double, 4> ordered_scales(double x1, double x2, double x3, double x4) {
  std::array<double, 4> ns{std::abs(x1), std::abs(x2), std::abs(x3), std::abs(x4)};
  std::sort(ns.begin(), ns.end(), std::greater<double>());
  for (auto& v : ns) v = std::max(v, 1.0);
  return ns;
}

inline double log_uniform(SplitMix64& rng, double lo, double hi) {
  return lo * std::pow(hi / lo, rng.uniform());
}

inline double rand_sign(SplitMix64& rng) { return rng.uniform() < 0.5 ? -1.0 : 1.0; }

// Gamma_4 tuple generators, cycled to stratify the case analysis:
// pair-cancellation tuples (two large nearly opposite entries), comparable
// tuples, and generic log-uniform tuples.
inline std::array<double, 4> draw_gamma4(SplitMix64& rng, int recipe, double n, double top) {
  double x1, x2, x3;
  switch (recipe) {
    case 0: {
      const double t = log_uniform(rng, n / 4.0, top);
      x1 = rand_sign(rng) * t * (1.0 + rng.uniform());
      const double a = rand_sign(rng) * log_uniform(rng, 1e-5 * t, t);
      x2 = -x1 + a;
      x3 = rand_sign(rng) * log_uniform(rng, 1e-2, std::max(1.0, std::abs(a)));
      break;
    }
    case 1: {
      const double t = log_uniform(rng, n / 4.0, top);
      x1 = rand_sign(rng) * rng.uniform(0.5, 2.0) * t;
      x2 = rand_sign(rng) * rng.uniform(0.5, 2.0) * t;
      x3 = rand_sign(rng) * rng.uniform(0.5, 2.0) * t;
      break;
    }
    default: {
      x1 = rand_sign(rng) * log_uniform(rng, 1e-2 * n, top);
      x2 = rand_sign(rng) * log_uniform(rng, 1e-2 * n, top);
      x3 = rand_sign(rng) * log_uniform(rng, 1e-2 * n, top);
      break;
    }
  }
  const double x4 = -(x1 + x2 + x3);
  return {x1, x2, x3, x4};
}

}  // namespace detail

// Monte-Carlo verification of the pointwise multiplier bounds: the two-regime
// Psi bound, the theta^2 difference lemma, the double mean value inequality
// on theta^2, and the DNLS M_4 bound.  Reports empirical max and p99 ratios
// |quantity| / bound-expression per regime.
inline BoundReport verify_pointwise_bounds(const ThetaProfile<double>& theta,
                                           const VhatFn<double>& vhat,
                                           const SamplerConfig& cfg) {
  const double n = theta.cutoff();
  const double s = theta.s();
  const double top = cfg.scale_factor * n;
  PsiHartree<double> psi{theta, vhat};
  M4Dnls<double> m4{theta};

  std::map<std::pair<std::string, std::string>, detail::RatioAccumulator> acc;

  // --- Psi and M4 over stratified Gamma_4 samples ---
  std::size_t produced = 0, attempts = 0;
  std::size_t batch_index = 0;
  SplitMix64 rng(derive_seed(cfg.seed, batch_index));
  while (produced < cfg.samples && attempts < 20 * cfg.samples) {
    if (attempts % cfg.batch == 0 && attempts > 0) {
      rng = SplitMix64(derive_seed(cfg.seed, ++batch_index));
    }
    ++attempts;
    const auto xi = detail::draw_gamma4(rng, int(attempts % 3), n, top);
    const auto ns = detail::ordered_scales(xi[0], xi[1], xi[2], xi[3]);
    const double denom = detail::quadratic_denominator(xi[0], xi[1], xi[2], xi[3]);
    const double scale = std::max(1.0, xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2] + xi[3] * xi[3]);
    // keep off the resonance-tolerance zone so float cancellation noise in the
    // numerator cannot masquerade as a bound violation
    if (std::abs(denom) < 1e-6 * scale) continue;
    ++produced;

    const double bound1 = theta(ns[0]) * theta(ns[1]) / (ns[0] * ns[0]);
    const double bound2 = theta(ns[0]) * theta(ns[1]) * ns[2] * ns[3] / (ns[0] * ns[0] * ns[0]);
    std::string regime;
    double bound;
    if (ns[1] >= 8.0 * ns[2]) {
      regime = "wellsep";
      bound = bound1;
    } else if (ns[1] <= 2.0 * ns[2]) {
      regime = "comparable";
      bound = bound2;
    } else {
      regime = "mid";
      bound = std::max(bound1, bound2);
    }
    const double psival = psi(xi[0], xi[1], xi[2], xi[3]);
    acc[{"psi_pointwise", regime}].add(std::abs(psival) / bound);

    const double m4val = m4(xi[0], xi[1], xi[2], xi[3]);
    const double m4bound = theta(ns[0]) * theta(ns[1]) / ns[0];
    acc[{"m4_dnls", "all"}].add(std::abs(m4val) / m4bound);
  }

  // --- Lemma: |theta^2(x) - theta^2(y)| <= C (|x|-|y|) theta^2(x)/|x| ---
  {
    SplitMix64 lrng(derive_seed(cfg.seed, 1000));
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      double x = detail::rand_sign(lrng) * detail::log_uniform(lrng, 1e-2 * n, top);
      double y = detail::rand_sign(lrng) * lrng.uniform(0.0, std::abs(x));
      const double lhs = std::abs(theta.squared(x) - theta.squared(y));
      const double gap = std::abs(x) - std::abs(y);
      const double rhs = gap * theta.squared(x) / std::abs(x);
      if (rhs == 0.0) {
        // |x| = |y| (or x = 0): the left side vanishes by evenness
        acc[{"theta_sq_diff", "all"}].add(lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
      } else {
        acc[{"theta_sq_diff", "all"}].add(lhs / rhs);
      }
    }
  }

  // --- Double mean value inequality on f = theta^2 ---
  {
    SplitMix64 drng(derive_seed(cfg.seed, 2000));
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      const double x = detail::rand_sign(drng) * detail::log_uniform(drng, 2.5 * n, 100.0 * n);
      const double eta = drng.uniform(-std::abs(x) / 8.0, std::abs(x) / 8.0);
      const double mu = drng.uniform(-std::abs(x) / 8.0, std::abs(x) / 8.0);
      const double lhs = std::abs(theta.squared(x + eta + mu) - theta.squared(x + eta) -
                                  theta.squared(x + mu) + theta.squared(x));
      const double rhs = std::abs(eta) * std::abs(mu) * std::abs(theta.squared_second_derivative(x));
      if (rhs < 1e-300) continue;
      // float cancellation floor: four O(theta^2) terms cancel to O(rhs)
      const double noise = 4.0 * std::numeric_limits<double>::epsilon() * theta.squared(x + eta + mu);
      if (rhs < 1e3 * noise) continue;
      acc[{"double_mvt", "all"}].add(lhs / rhs);
    }
  }

  BoundReport report;
  for (auto& [key, a] : acc) {
    BoundRow row;
    row.bound_id = key.first;
    row.regime = key.second;
    row.samples = a.count();
    row.max_ratio = a.max();
    row.p99_ratio = a.p99();
    row.n = n;
    row.s = s;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace nlsw
