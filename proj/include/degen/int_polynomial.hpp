#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

/// Dense integer polynomial, lowest degree first. The zero polynomial has an
/// empty coefficient vector; otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  /// x^n - 1
  static IntPolynomial x_pow_minus_one(std::size_t n);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string str() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

struct IntDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Long division by a monic divisor. Throws std::invalid_argument if the
/// divisor is zero or not monic.
IntDivision divide_monic(const IntPolynomial& dividend, const IntPolynomial& divisor);

/// The m-th cyclotomic polynomial, cached. Throws std::invalid_argument for m = 0.
const IntPolynomial& cyclotomic_polynomial(unsigned m);

unsigned euler_phi(unsigned long n);

}  // namespace degen
