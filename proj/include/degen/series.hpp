#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degen/binomial.hpp"
#include "degen/cyclotomic.hpp"
#include "degen/rational.hpp"

namespace degen {

/// Truncated exponential generating function sum_{n<=T} a_n t^n / n!.
///
/// Coefficients are the EGF coefficients a_n, so the product of two series is
/// the binomial convolution of their coefficient sequences. Binary operations
/// require equal truncation orders and never resize silently.
///
/// `Ring` is Rational or Cyclotomic; any type with +, -, *, a Rational scale,
/// construction from int, and free `inverse`/`is_zero` works.
template <class Ring>
class EgfSeries {
 public:
  explicit EgfSeries(std::size_t truncation_order) : coeffs_(truncation_order + 1, Ring(0)) {}
  explicit EgfSeries(std::vector<Ring> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  static EgfSeries constant(const Ring& c, std::size_t truncation_order) {
    EgfSeries s(truncation_order);
    s.coeffs_[0] = c;
    return s;
  }
  static EgfSeries one(std::size_t truncation_order) { return constant(Ring(1), truncation_order); }

  std::size_t truncation_order() const { return coeffs_.size() - 1; }
  const Ring& operator[](std::size_t n) const { return coeffs_.at(n); }
  Ring& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<Ring>& coefficients() const { return coeffs_; }

  EgfSeries& operator+=(const EgfSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  EgfSeries& operator-=(const EgfSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  EgfSeries scaled(const Ring& c) const {
    EgfSeries r = *this;
    for (auto& a : r.coeffs_) a = a * c;
    return r;
  }

  /// (s*u)_n = sum_i C(n,i) s_i u_{n-i}
  friend EgfSeries operator*(const EgfSeries& s, const EgfSeries& u) {
    s.require_same_order(u);
    EgfSeries r(s.truncation_order());
    for (std::size_t n = 0; n < s.coeffs_.size(); ++n) {
      Ring acc(0);
      for (std::size_t i = 0; i <= n; ++i) {
        if (is_zero(s.coeffs_[i]) || is_zero(u.coeffs_[n - i])) continue;
        acc += s.coeffs_[i] * u.coeffs_[n - i] * Rational(binomial(unsigned(n), unsigned(i)));
      }
      r.coeffs_[n] = std::move(acc);
    }
    return r;
  }

  /// Multiplicative inverse up to the truncation order. Throws
  /// std::domain_error when the constant term is not invertible.
  EgfSeries inverse() const {
    if (is_zero(coeffs_[0])) throw std::domain_error("series inverse: constant term is zero");
    const Ring c0_inv = degen::inverse(coeffs_[0]);
    EgfSeries r(truncation_order());
    r.coeffs_[0] = c0_inv;
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
      Ring acc(0);
      for (std::size_t i = 1; i <= n; ++i) {
        if (is_zero(coeffs_[i])) continue;
        acc += coeffs_[i] * r.coeffs_[n - i] * Rational(binomial(unsigned(n), unsigned(i)));
      }
      r.coeffs_[n] = -(acc * c0_inv);
    }
    return r;
  }

  friend EgfSeries operator+(EgfSeries a, const EgfSeries& b) { return a += b; }
  friend EgfSeries operator-(EgfSeries a, const EgfSeries& b) { return a -= b; }
  friend EgfSeries operator-(const EgfSeries& a) { return a.scaled(Ring(-1)); }
  friend bool operator==(const EgfSeries& a, const EgfSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void require_same_order(const EgfSeries& o) const {
    if (o.coeffs_.size() != coeffs_.size())
      throw std::invalid_argument("series truncation orders differ: " + std::to_string(truncation_order()) +
                                  " vs " + std::to_string(o.truncation_order()));
  }

  std::vector<Ring> coeffs_;
};

template <class To, class From>
EgfSeries<To> series_cast(const EgfSeries<From>& s) {
  std::vector<To> c;
  c.reserve(s.coefficients().size());
  for (const auto& a : s.coefficients()) c.emplace_back(a);
  return EgfSeries<To>(std::move(c));
}

/// (y|lambda)_n = y (y - lambda) ... (y - (n-1) lambda); 1 for n = 0.
template <class Ring>
Ring falling(const Ring& y, const Rational& lambda, long n) {
  if (n < 0) throw std::invalid_argument("falling factorial with negative length");
  Ring acc(1);
  for (long j = 0; j < n; ++j) acc = acc * (y - Ring(lambda * Rational(j)));
  return acc;
}

/// EGF of (1 + lambda t)^(y / lambda): coefficients (y|lambda)_n. For lambda = 0
/// this is e^{yt}.
EgfSeries<Rational> degenerate_exponential(const Rational& lambda, const Rational& y,
                                           std::size_t truncation_order);

}  // namespace degen
