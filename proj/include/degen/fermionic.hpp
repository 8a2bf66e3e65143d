#pragma once

#include <cstddef>
#include <vector>

#include "degen/characters.hpp"
#include "degen/cyclotomic.hpp"
#include "degen/polynomial.hpp"

namespace degen {

/// I(x^k) for k <= n_max, from the shift relation I(f(.+1)) + I(f) = 2 f(0):
/// 2 I(x^n) = 2 [n = 0] - sum_{k<n} C(n,k) I(x^k).
std::vector<Rational> fermionic_moments(std::size_t n_max);

/// The linear functional fixed by I(f(.+1)) + I(f) = 2 f(0) on polynomials.
Rational fermionic_integral(const QPolynomial& f);

/// J(x^k) for k <= n_max, from J(f(.+d)) + J(f) = 2 sum_{l<d} (-1)^l chi(l) f(l):
/// 2 J(x^n) = 2 sum_{l<d} (-1)^l chi(l) l^n - sum_{k<n} C(n,k) d^(n-k) J(x^k).
std::vector<Cyclotomic> twisted_fermionic_moments(const DirichletCharacter& chi, std::size_t n_max);

Cyclotomic twisted_fermionic_integral(const QPolynomial& f, const DirichletCharacter& chi);

/// sum_{x=0}^{d p^N - 1} chi(x) f(x) (-1)^x, with d = 1 and chi = 1 when no
/// character is given. Throws std::invalid_argument if p is not an odd prime,
/// p divides d, or level < 1.
Cyclotomic finite_level_sum(const QPolynomial& f, const DirichletCharacter* chi, unsigned long p,
                            unsigned level);

}  // namespace degen
