// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "degen/characters.hpp"
#include "degen/degenerate.hpp"
#include "degen/fermionic.hpp"
#include "degen/int_polynomial.hpp"
#include "degen/sweep.hpp"

using namespace degen;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

SweepGrid grid_for(std::vector<IdentityId> ids, unsigned L) {
  SweepGrid g = default_grid();
  g.identities = std::move(ids);
  g.L = L;
  return g;
}

Outcome sweep_outcome(const std::vector<IdentityReport>& reports) {
  const SweepSummary s = summarize(reports);
  std::string detail = std::to_string(s.total) + " tuples, " + std::to_string(s.failed) + " failed";
  if (!s.all_hold()) {
    const auto& bad = reports[*s.first_failed_report];
    detail += "; first: " + std::string(to_string(bad.params.id)) + " d=" + std::to_string(bad.params.d) +
              " chi=" + std::to_string(bad.params.chi) + " lambda=" + bad.params.lambda.str() +
              " degree=" + std::to_string(*bad.first_failure);
  }
  return {s.total > 0 && s.all_hold(), detail};
}

Outcome thm1() {
  const auto start = std::chrono::steady_clock::now();
  const auto reports = sweep_serial(expand(grid_for({IdentityId::thm1}, 8)));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o = sweep_outcome(reports);
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.2f s single-threaded", secs);
  o.detail += buf;
  o.pass = o.pass && secs < 60.0;
  return o;
}

Outcome thm2() {
  return sweep_outcome(
      sweep(grid_for({IdentityId::thm2, IdentityId::corollary_w2_1, IdentityId::corollary_x0}, 8)));
}

Outcome eq18() { return sweep_outcome(sweep(grid_for({IdentityId::eq18}, 8))); }

Outcome consistency() {
  const auto reports = sweep(grid_for({IdentityId::i_series_consistency}, 6));
  Outcome o = sweep_outcome(reports);
  for (const auto& r : reports)
    for (const auto& row : r.rows)
      if (!row.aux || !(*row.aux == row.lhs)) {
        o.pass = false;
        o.detail += "; third route disagrees";
        return o;
      }
  return o;
}

Outcome dual_oracle() { return sweep_outcome(sweep(grid_for({IdentityId::dual_oracle}, 8))); }

Outcome classical() {
  const auto recurrence = fermionic_moments(8);
  const auto numbers = carlitz_numbers(Rational(0), 8);
  const auto generalized = generalized_numbers(character(1, 0), Rational(0), 8);
  const std::vector<Rational> frozen{Rational(1), Rational(-1, 2), Rational(0), Rational(1, 4), Rational(0),
                                     Rational(-1, 2), Rational(0), Rational(17, 8), Rational(0)};
  std::string values;
  bool ok = true;
  for (std::size_t n = 0; n <= 8; ++n) {
    ok = ok && numbers.values[n] == recurrence[n] && generalized.values[n] == Cyclotomic(recurrence[n]) &&
         recurrence[n] == frozen[n];
    values += (n ? " " : "") + recurrence[n].str();
  }
  return {ok, "E_0..E_8 = " + values};
}

Outcome padic() {
  SweepGrid g = grid_for({IdentityId::padic_limit}, 8);
  g.d = {1};
  g.N = 4;
  const auto reports = sweep(g);
  Outcome o = sweep_outcome(reports);
  std::size_t rows = 0;
  for (const auto& r : reports) rows += r.rows.size();
  o.pass = o.pass && reports.size() == 8 && rows == 32;
  o.detail += ", " + std::to_string(rows) + " (f, p, N) valuation checks";
  return o;
}

Outcome characters() {
  std::size_t checked = 0;
  for (unsigned d = 1; d <= 15; d += 2) {
    const auto& chars = characters_mod(d);
    const unsigned phi = euler_phi(d);
    if (chars.size() != phi) return {false, "wrong count mod " + std::to_string(d)};
    for (const auto& chi : chars) {
      for (unsigned a = 0; a < d; ++a)
        for (unsigned b = 0; b < d; ++b)
          if (!(chi(long(a) * b) == chi(a) * chi(b)))
            return {false, "multiplicativity fails mod " + std::to_string(d)};
      for (const auto& psi : chars) {
        Cyclotomic sum;
        for (unsigned a = 0; a < d; ++a)
          if (std::gcd(a, d) == 1) sum += chi(a) * inverse(psi(a));
        const Rational expected(&chi == &psi ? long(phi) : 0L);
        if (!(sum == Cyclotomic(expected))) return {false, "row orthogonality fails mod " + std::to_string(d)};
        ++checked;
      }
    }
    for (unsigned a = 0; a < d; ++a) {
      for (unsigned b = 0; b < d; ++b) {
        if (std::gcd(a, d) != 1 || std::gcd(b, d) != 1) continue;
        Cyclotomic sum;
        for (const auto& chi : chars) sum += chi(a) * inverse(chi(b));
        const Rational expected(a == b ? long(phi) : 0L);
        if (!(sum == Cyclotomic(expected))) return {false, "column orthogonality fails mod " + std::to_string(d)};
      }
    }
  }
  return {true, "odd d <= 15, " + std::to_string(checked) + " character pairs"};
}

Outcome negative_control() {
  std::size_t located = 0, total = 0;
  for (IdentityId id : all_identities()) {
    IdentityParams p;
    p.id = id;
    p.d = 3;
    p.chi = 1;
    p.lambda = Rational(1, 2);
    p.w1 = 3;
    p.x = Rational(1, 2);
    p.L = 5;
    p.p = 5;
    p.N = 3;
    const unsigned degree = id == IdentityId::padic_limit ? 2 : 3;
    p.fault_degree = degree;
    const IdentityReport r = check(p);
    ++total;
    if (!r.holds && r.first_failure == degree) ++located;
  }
  return {located == total, std::to_string(located) + "/" + std::to_string(total) +
                                " corrupted fixtures rejected at the corrupted degree"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"thm1 symmetry sweep", thm1},
      {"thm2 sweep with w2=1 and x=0 corollaries", thm2},
      {"eq18 E(nd) + E = R_k(nd-1)", eq18},
      {"triple-route consistency of 2 I_chi", consistency},
      {"dual-oracle agreement", dual_oracle},
      {"classical reduction at lambda=0", classical},
      {"p-adic limit valuations", padic},
      {"character count, multiplicativity, orthogonality", characters},
      {"negative control", negative_control},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s [%zu] %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
