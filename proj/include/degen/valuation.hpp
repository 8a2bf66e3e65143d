#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "degen/cyclotomic.hpp"
#include "degen/rational.hpp"

namespace degen {

/// p-adic valuation: an integer, or +infinity for zero.
class Valuation {
 public:
  static Valuation finite(long v) { return Valuation(false, v); }
  static Valuation infinity() { return Valuation(true, 0); }

  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error when infinite.
  long value() const;

  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return finite(a.value_ + b.value_);
  }
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
  friend bool operator>=(const Valuation& a, long n) { return a.infinite_ || a.value_ >= n; }

  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

 private:
  Valuation(bool inf, long v) : infinite_(inf), value_(v) {}

  bool infinite_;
  long value_;
};

bool is_prime(unsigned long n);

/// v_p(q). Throws std::invalid_argument if p is not prime.
Valuation p_adic_valuation(const Rational& q, unsigned long p);

/// Minimum coefficient valuation in the power basis of Q(zeta_m). For p not
/// dividing m this is the minimum over the primes of Z[zeta_m] above p.
Valuation p_adic_valuation(const Cyclotomic& c, unsigned long p);

}  // namespace degen
