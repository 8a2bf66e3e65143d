#include "degen/fermionic.hpp"

#include <stdexcept>
#include <string>

#include "degen/binomial.hpp"
#include "degen/valuation.hpp"

namespace degen {

std::vector<Rational> fermionic_moments(std::size_t n_max) {
  std::vector<Rational> m;
  m.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Rational rhs(n == 0 ? 2 : 0);
    for (std::size_t k = 0; k < n; ++k) rhs -= Rational(binomial(unsigned(n), unsigned(k))) * m[k];
    m.push_back(rhs / Rational(2));
  }
  return m;
}

Rational fermionic_integral(const QPolynomial& f) {
  if (f.degree() < 0) return Rational(0);
  const auto m = fermionic_moments(static_cast<std::size_t>(f.degree()));
  Rational acc(0);
  for (std::size_t i = 0; i < m.size(); ++i) acc += f.coefficient(i) * m[i];
  return acc;
}

std::vector<Cyclotomic> twisted_fermionic_moments(const DirichletCharacter& chi, std::size_t n_max) {
  const unsigned d = chi.modulus();
  const unsigned order = chi.order();
  std::vector<Cyclotomic> m;
  m.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Cyclotomic rhs = Cyclotomic::zero(order);
    for (unsigned l = 0; l < d; ++l) {
      const Cyclotomic& value = chi(l);
      if (value.is_zero()) continue;
      const Rational power = Rational(ipow(BigInt(l), n));  // 0^0 = 1
      rhs += value * (l % 2 == 0 ? power : -power);
    }
    rhs *= Rational(2);
    for (std::size_t k = 0; k < n; ++k)
      rhs -= m[k] * Rational(BigInt(binomial(unsigned(n), unsigned(k)) * ipow(BigInt(d), n - k)));
    rhs *= Rational(1, 2);
    m.push_back(std::move(rhs));
  }
  return m;
}

Cyclotomic twisted_fermionic_integral(const QPolynomial& f, const DirichletCharacter& chi) {
  Cyclotomic acc = Cyclotomic::zero(chi.order());
  if (f.degree() < 0) return acc;
  const auto m = twisted_fermionic_moments(chi, static_cast<std::size_t>(f.degree()));
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!f.coefficient(i).is_zero()) acc += m[i] * f.coefficient(i);
  return acc;
}

Cyclotomic finite_level_sum(const QPolynomial& f, const DirichletCharacter* chi, unsigned long p,
                            unsigned level) {
  if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("finite_level_sum needs an odd prime p, got " + std::to_string(p));
  if (level < 1) throw std::invalid_argument("finite_level_sum needs level N >= 1");
  const unsigned long d = chi ? chi->modulus() : 1;
  if (d % p == 0) throw std::invalid_argument("finite_level_sum needs gcd(p, d) = 1");

  unsigned long range = d;
  for (unsigned i = 0; i < level; ++i) range *= p;

  Cyclotomic acc = Cyclotomic::zero(chi ? chi->order() : 1);
  Rational untwisted(0);
  for (unsigned long x = 0; x < range; ++x) {
    Rational term = f(Rational(static_cast<long>(x)));
    if (x % 2 == 1) term = -term;
    if (chi == nullptr) {
      untwisted += term;
      continue;
    }
    const Cyclotomic& value = (*chi)(static_cast<long>(x));
    if (!value.is_zero()) acc += value * term;
  }
  return chi ? acc : Cyclotomic(untwisted);
}

}  // namespace degen
