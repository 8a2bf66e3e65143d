#include <doctest.h>

#include <stdexcept>

#include "degen/degenerate.hpp"
#include "degen/fermionic.hpp"

using namespace degen;

namespace {

Cyclotomic gauss(long re, long im) {  // re + im*i in Q(zeta_4)
  return Cyclotomic::from_coefficients(4, {Rational(re), Rational(im)});
}

// Coefficients (lowest first) of the degree <= n polynomial through (xs[i], ys[i]).
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t m = xs.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    Rational p(1);
    for (std::size_t j = 0; j < m; ++j, p *= xs[i]) a[i][j] = p;
    a[i][m] = ys[i];
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (a[piv][c].is_zero()) ++piv;
    std::swap(a[c], a[piv]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Rational> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = a[i][m] / a[i][i];
  return out;
}

}  // namespace

TEST_CASE("Carlitz degenerate Euler numbers") {
  CHECK(carlitz_numbers(Rational(5, 7), 0).values == std::vector<Rational>{1});

  // lambda = 0 against the fermionic recurrence for classical Euler numbers
  CHECK(carlitz_numbers(Rational(0), 8).values == fermionic_moments(8));
  CHECK(carlitz_numbers(Rational(0), 3).values == std::vector<Rational>{1, Rational(-1, 2), 0, Rational(1, 4)});

  CHECK(carlitz_numbers(Rational(1), 1).values[1] == Rational(-1, 2));
  // sympy oracle: 2 / ((1+t) + 1)
  CHECK(carlitz_numbers(Rational(1), 4).values ==
        std::vector<Rational>{1, Rational(-1, 2), Rational(1, 2), Rational(-3, 4), Rational(3, 2)});
}

TEST_CASE("Carlitz polynomial evaluation") {
  for (const Rational lambda : {Rational(0), Rational(1, 2), Rational(-3)}) {
    CHECK(carlitz_poly_eval(lambda, 0, Rational(17, 3)) == Rational(1));
    for (const Rational x : {Rational(0), Rational(2), Rational(-5, 4)})
      CHECK(carlitz_poly_eval(lambda, 1, x) == x - Rational(1, 2));
  }
  CHECK(carlitz_poly_eval(Rational(0), 2, Rational(1)) == Rational(0));
  CHECK(carlitz_poly_eval(Rational(1, 2), 1, Rational(2)) == Rational(3, 2));

  // sympy oracle: E_n(1/2 | -2/3)
  const std::vector<Rational> expected{1, 0, Rational(-1, 4), Rational(-1, 2), Rational(-131, 144),
                                       Rational(-175, 108)};
  const auto numbers = carlitz_numbers(Rational(-2, 3), 5);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(carlitz_poly_eval(numbers, n, Rational(1, 2)) == expected[n]);
  CHECK_THROWS_AS(carlitz_poly_eval(numbers, 6, Rational(0)), std::out_of_range);
}

TEST_CASE("classical limit as lambda -> 0") {
  const std::vector<Rational> xs{Rational(0), Rational(1), Rational(1, 2)};
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const Rational& x : xs) {
      const Rational classical = carlitz_poly_eval(Rational(0), n, x);
      // E_n(x|lambda) is a polynomial of degree <= n in lambda; recover it exactly.
      std::vector<Rational> lams, vals;
      for (long j = 1; j <= long(n) + 1; ++j) {
        lams.emplace_back(j);
        vals.push_back(carlitz_poly_eval(Rational(j), n, x));
      }
      const auto poly = interpolate(lams, vals);
      CHECK(poly[0] == classical);
      Rational bound(0);
      for (std::size_t k = 1; k < poly.size(); ++k) bound += poly[k].abs();

      for (long j = 1; j <= 4; ++j) {
        const Rational lambda(BigInt(1), ipow(BigInt(10), j));
        const Rational value = carlitz_poly_eval(lambda, n, x);
        Rational at(0), p(1);
        for (const auto& c : poly) {
          at += c * p;
          p *= lambda;
        }
        CHECK(value == at);
        // difference is lambda times a polynomial bounded by `bound` on |lambda| <= 1
        CHECK(((value - classical) / lambda).abs() <= bound);
      }
    }
  }
}

TEST_CASE("generalized degenerate Euler numbers") {
  for (const Rational lambda : {Rational(0), Rational(1, 2), Rational(-2, 3), Rational(3)}) {
    const auto gen = generalized_numbers(character(1, 0), lambda, 8);
    const auto car = carlitz_numbers(lambda, 8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(gen.values[n] == Cyclotomic(car.values[n]));
  }

  const auto& chi3 = character(3, 1);
  CHECK(generalized_numbers(chi3, Rational(1, 2), 0).values[0] == Cyclotomic(-2));

  // sympy oracle, chi mod 3, lambda = 1/2
  const std::vector<Rational> expected3{-2, 0, 4, -6, -33, 195, Rational(675, 2)};
  const auto g3 = generalized_numbers(chi3, Rational(1, 2), 6);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(g3.values[n] == Cyclotomic(expected3[n]));

  // sympy oracle, order-4 chi mod 5 (chi(2) = i), lambda = 1
  const auto& chi5 = character(5, 1);
  REQUIRE(chi5(2) == root_of_unity(4, 1));
  const auto g5 = generalized_numbers(chi5, Rational(1), 4);
  CHECK(g5.values[0] == gauss(-2, 2));
  CHECK(g5.values[1] == gauss(0, 0));
  CHECK(g5.values[2] == gauss(8, -12));
  CHECK(g5.values[3] == gauss(-24, 36));
  CHECK(g5.values[4] == gauss(-144, 240));
  for (const auto& v : g5.values) CHECK(v.order() == 4);

  // lambda = 0 equals the classical generalized Euler numbers, here from the
  // twisted moment recurrence (an independent route).
  for (unsigned d : {3u, 5u, 7u})
    for (const auto& chi : characters_mod(d))
      CHECK(generalized_numbers(chi, Rational(0), 6).values == twisted_fermionic_moments(chi, 6));
}

TEST_CASE("generalized polynomial evaluation") {
  const auto& chi3 = character(3, 1);
  const auto numbers = generalized_numbers(chi3, Rational(1, 2), 4);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(generalized_poly_eval(numbers, n, Rational(0)) == numbers.values[n]);

  const std::vector<Rational> expected{-2, Rational(-2, 3), Rational(37, 9), Rational(-56, 27),
                                       Rational(-3422, 81)};
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(generalized_poly_eval(numbers, n, Rational(1, 3)) == Cyclotomic(expected[n]));

  // (d=3, chi, lambda=1/2, n=2, x=1/3) against the twisted fermionic oracle
  const auto oracle =
      twisted_fermionic_integral(QPolynomial::shifted_falling(Rational(1, 3), Rational(1, 2), 2), chi3);
  CHECK(generalized_poly_eval(chi3, Rational(1, 2), 2, Rational(1, 3)) == oracle);

  for (std::size_t n = 0; n <= 5; ++n)
    CHECK(generalized_poly_eval(character(1, 0), Rational(2, 5), n, Rational(7, 2)) ==
          Cyclotomic(carlitz_poly_eval(Rational(2, 5), n, Rational(7, 2))));

  const auto g5 = generalized_numbers(character(5, 1), Rational(1, 2), 3);
  CHECK(generalized_poly_eval(g5, 0, Rational(1, 2)) == gauss(-2, 2));
  CHECK(generalized_poly_eval(g5, 1, Rational(1, 2)) == gauss(-1, 1));
  CHECK(generalized_poly_eval(g5, 2, Rational(1, 2)) == gauss(8, -12));
  CHECK(generalized_poly_eval(g5, 3, Rational(1, 2)).is_zero());
  CHECK_THROWS_AS(generalized_poly_eval(g5, 4, Rational(0)), std::out_of_range);
}

TEST_CASE("R_k sums") {
  CHECK(r_sum(0, 0, Rational(3), character(1, 0)) == Cyclotomic(2));
  CHECK(r_sum(0, 2, Rational(7), character(3, 1)) == Cyclotomic(-4));
  for (const Rational lambda : {Rational(0), Rational(1, 2), Rational(-9)})
    CHECK(r_sum(1, 2, lambda, character(3, 1)) == Cyclotomic(-6));
  // 2 sum_{l<=4} (-1)^l (l|1)_2 = 2 (0 - 0 + 2 - 6 + 12)
  CHECK(r_sum(2, 4, Rational(1), character(1, 0)) == Cyclotomic(16));
}
