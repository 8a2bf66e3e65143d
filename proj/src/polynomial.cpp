#include "degen/polynomial.hpp"

#include <algorithm>

namespace degen {

QPolynomial::QPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

QPolynomial QPolynomial::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::shifted_falling(const Rational& shift, const Rational& lambda, std::size_t n) {
  QPolynomial acc({Rational(1)});
  for (std::size_t j = 0; j < n; ++j)
    acc = acc * QPolynomial({shift - lambda * Rational(static_cast<long>(j)), Rational(1)});
  return acc;
}

Rational QPolynomial::operator()(const Rational& y) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * y + coeffs_[i];
  return acc;
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return QPolynomial(std::move(c));
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return QPolynomial(std::move(c));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

}  // namespace degen
