#include "degen/degenerate.hpp"

#include <stdexcept>

#include "degen/binomial.hpp"

namespace degen {

DegenEulerNumbers carlitz_numbers(const Rational& lambda, std::size_t n_max) {
  auto denominator = degenerate_exponential(lambda, Rational(1), n_max);
  denominator[0] += Rational(1);
  const auto quotient = denominator.inverse().scaled(Rational(2));
  return {lambda, quotient.coefficients()};
}

Rational carlitz_poly_eval(const DegenEulerNumbers& numbers, std::size_t n, const Rational& x) {
  if (n > numbers.n_max()) throw std::out_of_range("degree exceeds cached Carlitz numbers");
  Rational acc(0);
  for (std::size_t k = 0; k <= n; ++k)
    acc += Rational(binomial(unsigned(n), unsigned(k))) * numbers.values[k] *
           falling(x, numbers.lambda, static_cast<long>(n - k));
  return acc;
}

Rational carlitz_poly_eval(const Rational& lambda, std::size_t n, const Rational& x) {
  return carlitz_poly_eval(carlitz_numbers(lambda, n), n, x);
}

EgfSeries<Cyclotomic> character_exponential_sum(const DirichletCharacter& chi, const Rational& lambda,
                                                long w, std::size_t truncation_order) {
  EgfSeries<Cyclotomic> acc(truncation_order);
  for (unsigned a = 0; a < chi.modulus(); ++a) {
    const Cyclotomic& value = chi(a);
    if (value.is_zero()) continue;
    const Cyclotomic signed_value = (a % 2 == 0) ? value : -value;
    const auto e = degenerate_exponential(lambda, Rational(w * static_cast<long>(a)), truncation_order);
    for (std::size_t n = 0; n <= truncation_order; ++n) acc[n] += signed_value * e[n];
  }
  return acc;
}

GenDegenEulerNumbers generalized_numbers(const DirichletCharacter& chi, const Rational& lambda,
                                         std::size_t n_max) {
  const auto numerator = character_exponential_sum(chi, lambda, 1, n_max).scaled(Cyclotomic(2));
  auto denominator = degenerate_exponential(lambda, Rational(static_cast<long>(chi.modulus())), n_max);
  denominator[0] += Rational(1);
  // Denominator is rational with constant term 2, so invert over Q.
  const auto quotient = numerator * series_cast<Cyclotomic>(denominator.inverse());

  std::vector<Cyclotomic> values;
  values.reserve(n_max + 1);
  for (const auto& c : quotient.coefficients())
    values.push_back(c.order() == chi.order() ? c : c.embed(chi.order()));
  return {chi.modulus(), chi.index(), lambda, std::move(values)};
}

Cyclotomic generalized_poly_eval(const GenDegenEulerNumbers& numbers, std::size_t n, const Rational& x) {
  if (n > numbers.n_max()) throw std::out_of_range("degree exceeds cached generalized numbers");
  Cyclotomic acc = Cyclotomic::zero(numbers.values[0].order());
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational weight =
        Rational(binomial(unsigned(n), unsigned(k))) * falling(x, numbers.lambda, static_cast<long>(n - k));
    if (weight.is_zero()) continue;
    acc += numbers.values[k] * weight;
  }
  return acc;
}

Cyclotomic generalized_poly_eval(const DirichletCharacter& chi, const Rational& lambda, std::size_t n,
                                 const Rational& x) {
  return generalized_poly_eval(generalized_numbers(chi, lambda, n), n, x);
}

Cyclotomic r_sum(std::size_t k, std::size_t n, const Rational& lambda, const DirichletCharacter& chi) {
  Cyclotomic acc = Cyclotomic::zero(chi.order());
  for (std::size_t l = 0; l <= n; ++l) {
    const Cyclotomic& value = chi(static_cast<long>(l));
    if (value.is_zero()) continue;
    const Rational term = falling(Rational(static_cast<long>(l)), lambda, static_cast<long>(k));
    acc += value * (l % 2 == 0 ? term : -term);
  }
  return acc * Rational(2);
}

}  // namespace degen
