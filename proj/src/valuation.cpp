#include "degen/valuation.hpp"

#include <stdexcept>

namespace degen {

long Valuation::value() const {
  if (infinite_) throw std::logic_error("value() of infinite valuation");
  return value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return a.value_ <=> b.value_;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

namespace {

long multiplicity(BigInt n, unsigned long p) {
  long v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

}  // namespace

Valuation p_adic_valuation(const Rational& q, unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument("p-adic valuation needs a prime, got " + std::to_string(p));
  if (q.is_zero()) return Valuation::infinity();
  return Valuation::finite(multiplicity(q.numerator(), p) - multiplicity(q.denominator(), p));
}

Valuation p_adic_valuation(const Cyclotomic& c, unsigned long p) {
  Valuation best = Valuation::infinity();
  for (const auto& coeff : c.coefficients()) {
    const Valuation v = p_adic_valuation(coeff, p);
    if (v < best) best = v;
  }
  if (c.coefficients().empty() && !is_prime(p))
    throw std::invalid_argument("p-adic valuation needs a prime");
  return best;
}

}  // namespace degen
