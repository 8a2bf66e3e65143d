#pragma once

#include <cstddef>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

/// Dense rational polynomial in one variable, lowest degree first.
/// Integrand type for the fermionic-integral oracles.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coefficients);

  static QPolynomial monomial(std::size_t degree, const Rational& c = Rational(1));
  /// y |-> (shift + y | lambda)_n as a polynomial in y.
  static QPolynomial shifted_falling(const Rational& shift, const Rational& lambda, std::size_t n);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Rational operator()(const Rational& y) const;

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace degen
