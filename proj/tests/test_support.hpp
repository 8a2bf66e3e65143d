#pragma once

#include <random>
#include <vector>

#include "degen/cyclotomic.hpp"
#include "degen/int_polynomial.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"

namespace degen::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20261017);
  return engine;
}

inline Rational random_rational(long max_abs = 40) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long> den(1, max_abs);
  return Rational(num(rng()), den(rng()));
}

inline Rational random_nonzero_rational(long max_abs = 40) {
  Rational r;
  do r = random_rational(max_abs);
  while (r.is_zero());
  return r;
}

inline Cyclotomic random_cyclotomic(unsigned m) {
  std::vector<Rational> c(euler_phi(m));
  for (auto& x : c) x = random_rational(9);
  return Cyclotomic::from_coefficients(m, std::move(c));
}

template <class Ring, class Gen>
EgfSeries<Ring> random_series(std::size_t order, Gen&& gen) {
  std::vector<Ring> c;
  for (std::size_t i = 0; i <= order; ++i) c.push_back(gen());
  return EgfSeries<Ring>(std::move(c));
}

}  // namespace degen::testing
