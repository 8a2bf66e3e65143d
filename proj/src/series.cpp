#include "degen/series.hpp"

namespace degen {

EgfSeries<Rational> degenerate_exponential(const Rational& lambda, const Rational& y,
                                           std::size_t truncation_order) {
  EgfSeries<Rational> s(truncation_order);
  Rational acc(1);
  s[0] = acc;
  for (std::size_t n = 1; n <= truncation_order; ++n) {
    acc *= y - lambda * Rational(static_cast<long>(n - 1));
    s[n] = acc;
  }
  return s;
}

}  // namespace degen
