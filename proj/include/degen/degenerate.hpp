#pragma once

#include <cstddef>
#include <vector>

#include "degen/characters.hpp"
#include "degen/cyclotomic.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"

namespace degen {

/// Carlitz degenerate Euler numbers E_n(lambda) = E_n(0|lambda), n <= n_max.
struct DegenEulerNumbers {
  Rational lambda;
  std::vector<Rational> values;

  std::size_t n_max() const { return values.size() - 1; }
};

/// Generalized degenerate Euler numbers E_{n,lambda,chi}, n <= n_max, in
/// Q(zeta_{ord chi}).
struct GenDegenEulerNumbers {
  unsigned modulus;
  std::size_t chi_index;
  Rational lambda;
  std::vector<Cyclotomic> values;

  std::size_t n_max() const { return values.size() - 1; }
};

/// Coefficients of 2 / ((1 + lambda t)^(1/lambda) + 1).
DegenEulerNumbers carlitz_numbers(const Rational& lambda, std::size_t n_max);

/// E_n(x|lambda) = sum_k C(n,k) E_k(lambda) (x|lambda)_{n-k}.
/// Throws std::out_of_range if n exceeds numbers.n_max().
Rational carlitz_poly_eval(const DegenEulerNumbers& numbers, std::size_t n, const Rational& x);
Rational carlitz_poly_eval(const Rational& lambda, std::size_t n, const Rational& x);

/// Coefficients of 2 sum_{a<d} (-1)^a chi(a) (1+lambda t)^(a/lambda) / ((1+lambda t)^(d/lambda) + 1),
/// by series division over Q(zeta_{ord chi}).
GenDegenEulerNumbers generalized_numbers(const DirichletCharacter& chi, const Rational& lambda,
                                         std::size_t n_max);

/// E_{n,lambda,chi}(x) = sum_k C(n,k) E_{k,lambda,chi} (x|lambda)_{n-k}.
Cyclotomic generalized_poly_eval(const GenDegenEulerNumbers& numbers, std::size_t n, const Rational& x);
Cyclotomic generalized_poly_eval(const DirichletCharacter& chi, const Rational& lambda, std::size_t n,
                                 const Rational& x);

/// R_k(n, lambda | chi) = 2 sum_{l=0}^{n} (-1)^l chi(l) (l|lambda)_k.
Cyclotomic r_sum(std::size_t k, std::size_t n, const Rational& lambda, const DirichletCharacter& chi);

/// sum_{a<d} (-1)^a chi(a) (1+lambda t)^(w a/lambda); half the numerator of the
/// generalized numbers' generating function when w = 1.
EgfSeries<Cyclotomic> character_exponential_sum(const DirichletCharacter& chi, const Rational& lambda,
                                                long w, std::size_t truncation_order);

}  // namespace degen
