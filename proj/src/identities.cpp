#include "degen/identities.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "degen/binomial.hpp"
#include "degen/degenerate.hpp"
#include "degen/fermionic.hpp"
#include "degen/polynomial.hpp"

namespace degen {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 9> kNames{{
    {IdentityId::thm1, "thm1"},
    {IdentityId::thm2, "thm2"},
    {IdentityId::eq18, "eq18"},
    {IdentityId::corollary_w2_1, "corollary_w2_1"},
    {IdentityId::corollary_x0, "corollary_x0"},
    {IdentityId::dual_oracle, "dual_oracle"},
    {IdentityId::distribution, "distribution"},
    {IdentityId::i_series_consistency, "i_series_consistency"},
    {IdentityId::padic_limit, "padic_limit"},
}};

Rational signed_term(unsigned l, const Rational& r) { return l % 2 == 0 ? r : -r; }

Rational power(unsigned base, std::size_t e) { return Rational(ipow(BigInt(base), e)); }

// Applies the negative-control fault, fills equality flags and the summary.
void finish(IdentityReport& report) {
  for (auto& row : report.rows) {
    if (report.params.fault_degree && *report.params.fault_degree == row.n) {
      row.rhs = row.rhs.is_zero() ? Cyclotomic(1) : -row.rhs;
      if (row.valuation) row.valuation = p_adic_valuation(row.lhs - row.rhs, report.params.p);
    }
    if (row.valuation) row.equal = *row.valuation >= static_cast<long>(row.n);
    else row.equal = (row.lhs == row.rhs) && (!row.aux || *row.aux == row.lhs);
    if (!row.equal && !report.first_failure) report.first_failure = row.n;
  }
  report.holds = !report.first_failure.has_value();
}

template <class Fn>
IdentityReport run(const IdentityParams& params, Fn&& fill) {
  validate(params);
  const auto start = std::chrono::steady_clock::now();
  IdentityReport report;
  report.params = params;
  fill(report);
  finish(report);
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& [k, name] : kNames)
    if (k == id) return name;
  return "unknown";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  if (name == "consistency") return IdentityId::i_series_consistency;
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& [k, name] : kNames) v.push_back(k);
    return v;
  }();
  return ids;
}

void validate(const IdentityParams& params) {
  if (params.d == 0 || params.d % 2 == 0)
    throw std::invalid_argument("d must be an odd positive integer, got " + std::to_string(params.d));
  if (params.w1 == 0 || params.w1 % 2 == 0 || params.w2 == 0 || params.w2 % 2 == 0)
    throw std::invalid_argument("w1 and w2 must be odd positive integers");
  if (params.id == IdentityId::eq18 && (params.n == 0 || params.n % 2 == 0))
    throw std::invalid_argument("eq18 needs an odd multiplier n, got " + std::to_string(params.n));
  if (params.id == IdentityId::padic_limit) {
    if (params.p % 2 == 0 || !is_prime(params.p))
      throw std::invalid_argument("p must be an odd prime, got " + std::to_string(params.p));
    if (params.d % params.p == 0) throw std::invalid_argument("padic_limit needs gcd(p, d) = 1");
    if (params.N < 1) throw std::invalid_argument("padic_limit needs N >= 1");
  }
  (void)character(params.d, params.chi);  // range check
}

EgfSeries<Cyclotomic> double_i_series(unsigned w1, unsigned w2, const Rational& lambda, const Rational& x,
                                      const DirichletCharacter& chi, std::size_t truncation_order) {
  if (w1 % 2 == 0 || w2 % 2 == 0) throw std::invalid_argument("double_i_series needs odd w1 and w2");
  const long d = chi.modulus();
  const auto T = truncation_order;
  auto plus_one = [&](long y) {
    auto s = degenerate_exponential(lambda, Rational(y), T);
    s[0] += Rational(1);
    return s;
  };
  const auto numerator = plus_one(d * w1 * w2) * degenerate_exponential(lambda, Rational(long(w1 * w2)) * x, T);
  const auto denominator = (plus_one(d * w1) * plus_one(d * w2)).inverse();
  const auto rational_part = series_cast<Cyclotomic>((numerator * denominator).scaled(Rational(4)));
  return rational_part * character_exponential_sum(chi, lambda, w1, T) *
         character_exponential_sum(chi, lambda, w2, T);
}

std::vector<Cyclotomic> cauchy_product_side(const DirichletCharacter& chi, const Rational& lambda, unsigned wa,
                                            unsigned wb, const Rational& x, std::size_t L) {
  const auto numbers = generalized_numbers(chi, lambda / Rational(long(wa)), L);
  const Rational point = Rational(long(wb)) * x;
  const std::size_t r_range = std::size_t(chi.modulus()) * wa - 1;
  std::vector<Cyclotomic> e_part, r_part;
  for (std::size_t i = 0; i <= L; ++i) {
    e_part.push_back(generalized_poly_eval(numbers, i, point) * power(wa, i));
    r_part.push_back(r_sum(i, r_range, lambda / Rational(long(wb)), chi) * power(wb, i));
  }
  std::vector<Cyclotomic> out;
  for (std::size_t l = 0; l <= L; ++l) {
    Cyclotomic acc = Cyclotomic::zero(chi.order());
    for (std::size_t i = 0; i <= l; ++i)
      acc += e_part[i] * r_part[l - i] * Rational(binomial(unsigned(l), unsigned(i)));
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<Cyclotomic> character_sum_side(const DirichletCharacter& chi, const Rational& lambda, unsigned wa,
                                           unsigned wb, const Rational& x, std::size_t L) {
  const auto numbers = generalized_numbers(chi, lambda / Rational(long(wa)), L);
  const Rational ratio{static_cast<long>(wb), static_cast<long>(wa)};
  const unsigned range = chi.modulus() * wa;
  std::vector<Cyclotomic> out;
  for (std::size_t n = 0; n <= L; ++n) {
    Cyclotomic acc = Cyclotomic::zero(chi.order());
    for (unsigned l = 0; l < range; ++l) {
      const Cyclotomic& value = chi(l);
      if (value.is_zero()) continue;
      const Cyclotomic e = generalized_poly_eval(numbers, n, Rational(long(wb)) * x + ratio * Rational(long(l)));
      acc += (l % 2 == 0 ? value : -value) * e;
    }
    out.push_back(acc * power(wa, n));
  }
  return out;
}

IdentityReport check_thm1(const IdentityParams& params) {
  return run(params, [](IdentityReport& r) {
    const auto& p = r.params;
    const auto& chi = character(p.d, p.chi);
    const auto lhs = cauchy_product_side(chi, p.lambda, p.w1, p.w2, p.x, p.L);
    const auto rhs = cauchy_product_side(chi, p.lambda, p.w2, p.w1, p.x, p.L);
    for (unsigned l = 0; l <= p.L; ++l) r.rows.push_back({l, lhs[l], rhs[l], false, {}, {}});
    r.note = "R factor indexed as R_{l-i}";
  });
}

IdentityReport check_thm2(const IdentityParams& params) {
  return run(params, [](IdentityReport& r) {
    const auto& p = r.params;
    const auto& chi = character(p.d, p.chi);
    const auto lhs = character_sum_side(chi, p.lambda, p.w2, p.w1, p.x, p.L);
    const auto rhs = character_sum_side(chi, p.lambda, p.w1, p.w2, p.x, p.L);
    for (unsigned n = 0; n <= p.L; ++n) r.rows.push_back({n, lhs[n], rhs[n], false, {}, {}});
  });
}

IdentityReport check_eq18(const IdentityParams& params) {
  return run(params, [](IdentityReport& r) {
    const auto& p = r.params;
    const auto& chi = character(p.d, p.chi);
    const auto numbers = generalized_numbers(chi, p.lambda, p.L);
    const Rational nd(long(p.n * p.d));
    for (unsigned k = 0; k <= p.L; ++k) {
      const Cyclotomic lhs = generalized_poly_eval(numbers, k, nd) + numbers.values[k];
      const Cyclotomic rhs = r_sum(k, std::size_t(p.n) * p.d - 1, p.lambda, chi);
      r.rows.push_back({k, lhs, rhs, false, {}, {}});
    }
  });
}

namespace {

// sum_{l<d} (-1)^l chi(l) E_{n,lambda,chi}(w1 x + w1 l)
//   = w1^n sum_{l<d w1} (-1)^l chi(l) E_{n,lambda/w1,chi}(x + l/w1)
void fill_w2_one_corollary(IdentityReport& r, const Rational& x) {
  const auto& p = r.params;
  const auto& chi = character(p.d, p.chi);
  const Rational w1(long(p.w1));
  const auto full = generalized_numbers(chi, p.lambda, p.L);
  const auto scaled = generalized_numbers(chi, p.lambda / w1, p.L);
  for (unsigned n = 0; n <= p.L; ++n) {
    Cyclotomic lhs = Cyclotomic::zero(chi.order());
    for (unsigned l = 0; l < p.d; ++l) {
      if (chi(l).is_zero()) continue;
      lhs += chi(l) * generalized_poly_eval(full, n, w1 * x + w1 * Rational(long(l))) * signed_term(l, 1);
    }
    Cyclotomic rhs = Cyclotomic::zero(chi.order());
    for (unsigned l = 0; l < p.d * p.w1; ++l) {
      if (chi(l).is_zero()) continue;
      rhs += chi(l) * generalized_poly_eval(scaled, n, x + Rational(long(l)) / w1) * signed_term(l, 1);
    }
    r.rows.push_back({n, lhs, rhs * power(p.w1, n), false, {}, {}});
  }
}

}  // namespace

IdentityReport check_corollary_w2_1(const IdentityParams& params) {
  IdentityParams p = params;
  p.w2 = 1;
  return run(p, [](IdentityReport& r) { fill_w2_one_corollary(r, r.params.x); });
}

IdentityReport check_corollary_x0(const IdentityParams& params) {
  IdentityParams p = params;
  p.w2 = 1;
  p.x = Rational(0);
  return run(p, [](IdentityReport& r) { fill_w2_one_corollary(r, Rational(0)); });
}

IdentityReport check_dual_oracle(const IdentityParams& params) {
  return run(params, [](IdentityReport& r) {
    const auto& p = r.params;
    const auto& chi = character(p.d, p.chi);
    const auto numbers = generalized_numbers(chi, p.lambda, p.L);
    for (unsigned n = 0; n <= p.L; ++n) {
      const Cyclotomic lhs = twisted_fermionic_integral(QPolynomial::shifted_falling(p.x, p.lambda, n), chi);
      r.rows.push_back({n, lhs, generalized_poly_eval(numbers, n, p.x), false, {}, {}});
    }
  });
}

IdentityReport check_distribution(const IdentityParams& params) {
  return run(params, [](IdentityReport& r) {
    const auto& p = r.params;
    const auto& chi = character(p.d, p.chi);
    const Rational d(long(p.d));
    const auto numbers = generalized_numbers(chi, p.lambda, p.L);
    const auto carlitz = carlitz_numbers(p.lambda / d, p.L);
    for (unsigned n = 0; n <= p.L; ++n) {
      Cyclotomic rhs = Cyclotomic::zero(chi.order());
      for (unsigned a = 0; a < p.d; ++a) {
        if (chi(a).is_zero()) continue;
        rhs += chi(a) * signed_term(a, carlitz_poly_eval(carlitz, n, (p.x + Rational(long(a))) / d));
      }
      r.rows.push_back({n, generalized_poly_eval(numbers, n, p.x), rhs * power(p.d, n), false, {}, {}});
    }
  });
}

IdentityReport check_consistency(const IdentityParams& params) {
  return run(params, [](IdentityReport& r) {
    const auto& p = r.params;
    const auto& chi = character(p.d, p.chi);
    const auto series = double_i_series(p.w1, p.w2, p.lambda, p.x, chi, p.L);
    const auto cauchy = cauchy_product_side(chi, p.lambda, p.w2, p.w1, p.x, p.L);
    const auto sums = character_sum_side(chi, p.lambda, p.w2, p.w1, p.x, p.L);
    for (unsigned n = 0; n <= p.L; ++n)
      r.rows.push_back({n, series[n], cauchy[n], false, sums[n] * Rational(2), {}});
    r.note = "lhs: closed-form series; rhs: Cauchy product with R_{l-i}; aux: 2 x character-sum route";
  });
}

IdentityReport check_padic_limit(const IdentityParams& params) {
  return run(params, [](IdentityReport& r) {
    const auto& p = r.params;
    std::vector<Rational> coeffs(p.f.begin(), p.f.end());
    const QPolynomial f(std::move(coeffs));
    const DirichletCharacter* chi = p.d == 1 ? nullptr : &character(p.d, p.chi);
    const Cyclotomic oracle = chi ? twisted_fermionic_integral(f, *chi) : Cyclotomic(fermionic_integral(f));
    for (unsigned level = 1; level <= p.N; ++level) {
      const Cyclotomic sum = finite_level_sum(f, chi, p.p, level);
      r.rows.push_back({level, sum, oracle, false, {}, p_adic_valuation(sum - oracle, p.p)});
    }
  });
}

IdentityReport check(const IdentityParams& params) {
  switch (params.id) {
    case IdentityId::thm1: return check_thm1(params);
    case IdentityId::thm2: return check_thm2(params);
    case IdentityId::eq18: return check_eq18(params);
    case IdentityId::corollary_w2_1: return check_corollary_w2_1(params);
    case IdentityId::corollary_x0: return check_corollary_x0(params);
    case IdentityId::dual_oracle: return check_dual_oracle(params);
    case IdentityId::distribution: return check_distribution(params);
    case IdentityId::i_series_consistency: return check_consistency(params);
    case IdentityId::padic_limit: return check_padic_limit(params);
  }
  throw std::invalid_argument("unknown identity id");
}

}  // namespace degen
