#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "nlsw/equations.hpp"
#include "nlsw/errors.hpp"
#include "nlsw/grid.hpp"
#include "nlsw/transforms.hpp"

namespace nlsw {

// ---- exact rational arithmetic (checked int64) ----

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
  }
  Rational operator-() const { return Rational(-num_, den_); }
  bool operator==(const Rational&) const = default;

  double to_double() const { return double(num_) / double(den_); }

 private:
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational: add overflow");
    return r;
  }
  static std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("Rational: sub overflow");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational: mul overflow");
    return r;
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Gaussian rational a + b i; the exact coefficient field of the ladder.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(r) {}
  GaussianRational(Rational r, Rational i) : re(r), im(i) {}

  static GaussianRational one() { return {Rational(1)}; }
  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  static GaussianRational minus_i() { return {Rational(0), Rational(-1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational conj() const { return {re, -im}; }
  bool operator==(const GaussianRational&) const = default;

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

// ---- differential polynomials in u, ubar and their x-derivatives ----

enum class FieldVar : std::uint8_t { U = 0, UBar = 1 };

struct DiffFactor {
  FieldVar var;
  int order;
  auto operator<=>(const DiffFactor&) const = default;
};

using Monomial = std::vector<DiffFactor>;  // kept sorted

// Exact symbolic differential polynomial: a map from canonical monomials
// (sorted factor multisets) to Gaussian-rational coefficients.  All
// arithmetic is exact; floats only appear at evaluation time.
class DiffPolynomial {
 public:
  DiffPolynomial() = default;

  static DiffPolynomial zero() { return {}; }
  static DiffPolynomial u() {
    DiffPolynomial p;
    p.terms_[{{FieldVar::U, 0}}] = GaussianRational::one();
    return p;
  }
  static DiffPolynomial ubar() {
    DiffPolynomial p;
    p.terms_[{{FieldVar::UBar, 0}}] = GaussianRational::one();
    return p;
  }
  static DiffPolynomial monomial(GaussianRational coeff, Monomial factors) {
    DiffPolynomial p;
    std::sort(factors.begin(), factors.end());
    if (!coeff.is_zero()) p.terms_[std::move(factors)] = coeff;
    return p;
  }

  const std::map<Monomial, GaussianRational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const DiffPolynomial&) const = default;

  friend DiffPolynomial operator+(const DiffPolynomial& a, const DiffPolynomial& b) {
    DiffPolynomial out = a;
    for (const auto& [mono, coeff] : b.terms_) out.accumulate(mono, coeff);
    return out;
  }
  friend DiffPolynomial operator-(const DiffPolynomial& a, const DiffPolynomial& b) {
    DiffPolynomial out = a;
    for (const auto& [mono, coeff] : b.terms_) out.accumulate(mono, -coeff);
    return out;
  }
  friend DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b) {
    DiffPolynomial out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial merged;
        merged.reserve(ma.size() + mb.size());
        std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(merged));
        out.accumulate(merged, ca * cb);
      }
    }
    return out;
  }
  friend DiffPolynomial operator*(const GaussianRational& c, const DiffPolynomial& p) {
    DiffPolynomial out;
    if (c.is_zero()) return out;
    for (const auto& [mono, coeff] : p.terms_) out.terms_[mono] = c * coeff;
    return out;
  }

  // d/dx via the Leibniz rule.
  DiffPolynomial x_derivative() const {
    DiffPolynomial out;
    for (const auto& [mono, coeff] : terms_) {
      for (std::size_t pos = 0; pos < mono.size(); ++pos) {
        // skip duplicate positions so each distinct factor is bumped once
        // with the right multiplicity
        if (pos > 0 && mono[pos] == mono[pos - 1]) continue;
        int mult = 0;
        for (const auto& f : mono)
          if (f == mono[pos]) ++mult;
        Monomial bumped = mono;
        bumped[pos].order += 1;
        std::sort(bumped.begin(), bumped.end());
        out.accumulate(bumped, GaussianRational(Rational(mult)) * coeff);
      }
    }
    return out;
  }

  // formal partial derivative with respect to one factor symbol
  DiffPolynomial partial(DiffFactor f) const {
    DiffPolynomial out;
    for (const auto& [mono, coeff] : terms_) {
      int mult = 0;
      for (const auto& g : mono)
        if (g == f) ++mult;
      if (mult == 0) continue;
      Monomial reduced;
      reduced.reserve(mono.size() - 1);
      bool removed = false;
      for (const auto& g : mono) {
        if (!removed && g == f) {
          removed = true;
          continue;
        }
        reduced.push_back(g);
      }
      out.accumulate(reduced, GaussianRational(Rational(mult)) * coeff);
    }
    return out;
  }

  // swap u <-> ubar and conjugate coefficients
  DiffPolynomial conjugate() const {
    DiffPolynomial out;
    for (const auto& [mono, coeff] : terms_) {
      Monomial flipped = mono;
      for (auto& f : flipped) f.var = f.var == FieldVar::U ? FieldVar::UBar : FieldVar::U;
      std::sort(flipped.begin(), flipped.end());
      out.accumulate(flipped, coeff.conj());
    }
    return out;
  }

  int max_order() const {
    int d = 0;
    for (const auto& [mono, coeff] : terms_)
      for (const auto& f : mono) d = std::max(d, f.order);
    return d;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff.re.num();
      if (coeff.re.den() != 1) os << "/" << coeff.re.den();
      if (!coeff.im.is_zero()) {
        os << (coeff.im.num() >= 0 ? "+" : "") << coeff.im.num();
        if (coeff.im.den() != 1) os << "/" << coeff.im.den();
        os << "i";
      }
      os << ")";
      for (const auto& f : mono) {
        os << "*" << (f.var == FieldVar::U ? "u" : "ub");
        if (f.order > 0) os << "_x" << f.order;
      }
    }
    return os.str();
  }

 private:
  void accumulate(const Monomial& mono, const GaussianRational& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      terms_[mono] = coeff;
      return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::map<Monomial, GaussianRational> terms_;
};

// Pointwise evaluation of each monomial with spectral derivatives of u,
// summed with weight dx.
template <typename Scalar>
std::complex<Scalar> eval_conserved(const DiffPolynomial& p, const Field<Scalar>& u) {
  if (p.is_zero()) return {0, 0};
  const auto& g = u.grid;
  const int dmax = p.max_order();

  // derivative table: derivs[d][j] = (d/dx)^d u (x_j)
  std::vector<ComplexArray<Scalar>> derivs;
  derivs.reserve(dmax + 1);
  derivs.push_back(u.samples);
  if (dmax > 0) {
    auto F = forward_transform(u);
    for (int d = 1; d <= dmax; ++d) {
      for (Eigen::Index i = 0; i < F.coeffs.size(); ++i) {
        F.coeffs[i] *= std::complex<Scalar>(0, F.grid.freq(i));
      }
      derivs.push_back(inverse_transform(F).samples);
    }
  }

  std::complex<Scalar> total(0, 0);
  for (const auto& [mono, coeff] : p.terms()) {
    std::complex<Scalar> sum(0, 0);
    for (Eigen::Index j = 0; j < g.modes(); ++j) {
      std::complex<Scalar> prod(1, 0);
      for (const auto& f : mono) {
        const auto v = derivs[std::size_t(f.order)][j];
        prod *= (f.var == FieldVar::U) ? v : std::conj(v);
      }
      sum += prod;
    }
    const auto c = coeff.to_complex();
    total += std::complex<Scalar>(Scalar(c.real()), Scalar(c.imag())) * sum;
  }
  return total * g.dx();
}

}  // namespace nlsw
