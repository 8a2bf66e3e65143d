#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

struct CyclotomicField;

/// Exact element of Q(zeta_m), stored as the coefficient vector of a
/// polynomial in zeta_m of degree < phi(m), reduced modulo Phi_m.
///
/// Order 1 (and 2) elements are ordinary rationals. Binary operators on
/// elements of different orders first embed both into Q(zeta_lcm).
class Cyclotomic {
 public:
  /// Zero of order 1.
  Cyclotomic();
  Cyclotomic(const Rational& r);  // NOLINT(google-explicit-constructor)
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  static Cyclotomic zero(unsigned order);
  static Cyclotomic from_rational(unsigned order, const Rational& r);
  /// Reduces an arbitrary-length polynomial in zeta_m modulo Phi_m.
  static Cyclotomic from_polynomial(unsigned order, std::vector<Rational> coefficients);
  /// Throws std::invalid_argument unless coefficients.size() == phi(order).
  static Cyclotomic from_coefficients(unsigned order, std::vector<Rational> coefficients);

  unsigned order() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Image in Q(zeta_multiple). Throws std::invalid_argument if order() does
  /// not divide `multiple`.
  Cyclotomic embed(unsigned multiple) const;

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> to_rational() const;

  /// Throws std::domain_error for zero.
  Cyclotomic inverse() const;
  Cyclotomic pow(unsigned long exponent) const;

  /// Value of a rational polynomial (lowest degree first) at this element.
  Cyclotomic evaluate(std::span<const Rational> poly) const;

  /// Human-readable sum of coefficient * zeta_m^i terms.
  std::string str() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator-(Cyclotomic a);

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

 private:
  Cyclotomic(const CyclotomicField* field, std::vector<Rational> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {}

  const CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

/// zeta_m^(k mod m) in Q(zeta_m).
Cyclotomic root_of_unity(unsigned m, long k);

inline Cyclotomic inverse(const Cyclotomic& c) { return c.inverse(); }
inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }

}  // namespace degen
